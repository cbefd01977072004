#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


import unittest

from pyqip.encoding import Metric
from pyqip.oracle import AMBIGUOUS, ClassScore
from pyqip.report import RunReport, SCHEMA_VERSION
from pyqip.statevector import Histogram


def _report(**kwargs):
    probabilities = {"00": 0.25, "01": 0.375, "10": 0.25, "11": 0.125}
    args = dict(
        metric=Metric.AIP, labels=["disease", "normal"], predicted="normal",
        oracle_class="normal", probabilities=probabilities)
    args.update(kwargs)
    return RunReport(**args)


class TestRunReport(unittest.TestCase):
    def testExact(self):
        report = _report()
        self.assertTrue(report.exact)
        self.assertTrue(report.agrees)
        self.assertFalse(report.ambiguous)
        self.assertEqual((report.rho10, report.rho11), (0.25, 0.125))
        self.assertEqual(report.ratio, 0.5)

    def testSampled(self):
        """Sampled rho values are the raw shot frequencies; the exact
           ones stay available next to them."""
        histogram = Histogram({"00": 30, "01": 40, "10": 20, "11": 10}, 100)
        report = _report(histogram=histogram, shots=100, seed=9)
        self.assertFalse(report.exact)
        self.assertEqual((report.rho10, report.rho11), (0.2, 0.1))
        self.assertEqual(report.exact_rho(0), 0.25)

        data = report.as_dict()
        self.assertEqual(data["mode"], "sampled")
        self.assertEqual(data["counts"]["01"], 40)
        self.assertEqual((data["rho10_exact"], data["rho11_exact"]), (0.25, 0.125))

    def testUndefinedRatio(self):
        report = _report(probabilities={"00": 0.5, "01": 0.25, "10": 0.0, "11": 0.25},
                         predicted="disease", oracle_class="disease")
        self.assertFalse(report.ratio_defined)
        self.assertIsNone(report.ratio)
        self.assertIsNone(report.as_dict()["ratio"])

    def testOracleOnly(self):
        report = _report(probabilities={}, quantum=False)
        self.assertIsNone(report.rho10)
        self.assertIsNone(report.ratio)
        self.assertFalse(report.as_dict()["quantum"])
        self.assertNotIn("rho10_exact", report.as_dict())

    def testAmbiguous(self):
        report = _report(predicted=AMBIGUOUS, oracle_class="normal")
        self.assertTrue(report.ambiguous)
        self.assertFalse(report.agrees)

        data = report.as_dict()
        self.assertIsNone(data["predicted"])
        self.assertTrue(data["ambiguous"])

    def testAsDict(self):
        scores = [ClassScore("disease", 0, 0, 1, 1, 2), ClassScore("normal", 0, 1, 1, 1, 2)]
        report = _report(scores=scores, etas={"disease": 1.0, "normal": 1.414},
                         members={"disease": 1, "normal": 1}, exclusion_map={0: 0, 1: 3},
                         warnings=["eta differs"])

        data = report.as_dict()
        self.assertEqual(data["schema_version"], SCHEMA_VERSION)
        self.assertEqual(data["metric"], "aip")
        self.assertEqual(data["labels"], ["disease", "normal"])
        self.assertEqual(data["oracle"][1]["sigma11"], 1)
        self.assertEqual(data["exclusion_map"], {"0": 0, "1": 3})
        self.assertEqual(data["eta"]["normal"], 1.414)
        self.assertEqual(data["warnings"], ["eta differs"])
        self.assertIsNone(data["counts"])

    def testReadOnly(self):
        report = _report()
        self.assertRaises(AttributeError, setattr, report, "predicted", "disease")

        # the returned dicts are copies
        report.probabilities["10"] = 1.0
        self.assertEqual(report.rho10, 0.25)


if __name__ == "__main__":
    unittest.main()
