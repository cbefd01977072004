#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


import json
import math
import unittest

from pyqip import errors, examples
from pyqip.formats import (
    format_circuit, format_dataset, format_graph, histogram_lines, parse_circuit,
    parse_dataset, parse_graph, report_json, score_lines)
from pyqip.gate import Gate
from pyqip.pipeline import Dataset
from pyqip.router import CouplingGraph

from test_base import TestBase


DATASET = """label,r1,r2,r3,r4
# two disease samples, one normal
disease,1,1,0,0
disease,1,0,0,0

normal,0,0,1,1
"""


class TestDatasetFiles(TestBase):
    def testParse(self):
        data = parse_dataset(DATASET)
        self.assertEqual(data.labels, ["disease", "normal"])
        self.assertEqual(data.num_features, 4)
        self.assertEqual(len(data.members("disease")), 2)

    def testFormat(self):
        data = parse_dataset(DATASET)
        text = format_dataset(data)
        self.assertTrue(text.startswith("label,r1,r2,r3,r4\ndisease,1,1,0,0\n"))
        self.assertEqual(parse_dataset(text), data)

    def testUnlabelledRows(self):
        rows = parse_dataset("label,r1,r2\n,1,0\nx,0,1\n", require_labels=False)
        self.assertEqual(rows, [("", (1, 0)), ("x", (0, 1))])

    def testErrors(self):
        cases = [
            ("", None),
            ("r1,r2\n1,0\n", 1),
            ("label,r1,r2\na,1\n", 2),
            ("label,r1,r2\na,1,0\n,0,1\n", 3),
            ("label,r1,r2\na,1,2\n", 2),
            ("label,r1,r2\n", None)]

        for text, line in cases:
            err = self.assertQipError(errors.QipParseError, "DATA", 43,
                                      parse_dataset, text, "data.csv")
            self.assertEqual(err.line, line, text)
            self.assertTrue(str(err).startswith("data.csv"))

        err = self.assertQipError(errors.QipParseError, "DATA", 43,
                                  parse_dataset, "label,r1,r2\na,1,x\n", "data.csv")
        self.assertIn("data.csv:2:", str(err))
        self.assertIn("r2", str(err))


class TestCircuitFiles(TestBase):
    def testParse(self):
        text = "# prep\nH 0\n\nCNOT 0 1   # entangle\nRY 2 -0.5\nRY 1 1\nCSWAP 3 1 2\n"
        self.assertEqual(parse_circuit(text), [
            Gate.h(0), Gate.cnot(0, 1), Gate.ry(2, -0.5), Gate.ry(1, 1.0), Gate.cswap(3, 1, 2)])
        self.assertEqual(parse_circuit("ry 0 1e-3\ntoffoli 0 1 2\n"),
                         [Gate.ry(0, 0.001), Gate.toffoli(0, 1, 2)])

    def testFormat(self):
        gates = [Gate.h(0), Gate.ry(1, math.pi / 3), Gate.swap(0, 1)]
        text = format_circuit(gates, ["swaps: 1"])
        self.assertEqual(text.splitlines()[0], "# swaps: 1")
        self.assertEqual(text.splitlines()[1], "H 0")
        self.assertEqual(parse_circuit(text), gates)

    def testErrors(self):
        cases = [
            "H\n",
            "H 0\nFOO 1\n",
            "H 0\nH 0 0.5\n",
            "RY 0\n",
            "CNOT 0\n",
            "CNOT 1 1\n",
            "H 0\nH 0\nSWAP x 1\n"]

        for text in cases:
            err = self.assertQipError(errors.QipParseError, "DATA", 43, parse_circuit, text, "c.txt")
            self.assertEqual(err.line, len(text.splitlines()), text)


class TestGraphFiles(TestBase):
    def testParse(self):
        graph = parse_graph('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        self.assertEqual(graph.num_qubits, 3)
        self.assertEqual(graph.edges, [(0, 1), (1, 2)])
        self.assertFalse(graph.directed)

        graph = CouplingGraph.ibmqx4()
        self.assertEqual(parse_graph(format_graph(graph)).edges, graph.edges)
        self.assertTrue(json.loads(format_graph(CouplingGraph(2, [(1, 0)], True)))["directed"])

    def testErrors(self):
        for text in ('{"n": 3', '[1, 2]', '{"n": 3}', '{"n": "x", "edges": []}',
                     '{"n": 2, "edges": [[0, 1, 2]]}'):
            self.assertQipError(errors.QipParseError, "DATA", 43, parse_graph, text)

        self.assertQipError(errors.QipRoutingError, "ROUTE", 30,
                            parse_graph, '{"n": 3, "edges": [[0, 1]]}')
        self.assertQipError(errors.QipRoutingError, "ROUTE", 33,
                            parse_graph, '{"n": 2, "edges": [[0, 5]]}')


class TestReports(TestBase):
    def testHistogram(self):
        lines = histogram_lines(examples.get("5q-ex1").run())
        self.assertEqual(lines[0], "  s m   probability")
        self.assertEqual(len(lines), 5)

        # 01 is the most likely outcome at 3/8
        self.assertTrue(lines[2].startswith("  0 1  0.375000 "))
        self.assertEqual(lines[2].count("#"), 50)
        self.assertIn("0.250000", lines[3])
        self.assertEqual(lines[4].count("#"), 17)

    def testSampledHistogram(self):
        report = examples.get("5q-ex1").run(shots=1000, seed=1)
        lines = histogram_lines(report)
        self.assertEqual(max(line.count("#") for line in lines), 50)
        self.assertIn("%.6f" % (report.histogram["10"] / 1000.0), lines[3])

    def testJson(self):
        data = json.loads(report_json(examples.get("14q-ex2").run()))
        self.assertEqual(data["schema_version"], 1)
        self.assertEqual(data["predicted"], "0")
        self.assertEqual(data["metric"], "sip")
        self.assertEqual(data["sign_precondition"], "mismatches")
        self.assertEqual(data["mode"], "exact")
        self.assertEqual([row["sigma"] for row in data["oracle"]], [0, -64])

    def testScoreLines(self):
        problem = examples.get("14q-ex2")
        report = problem.run()
        lines = score_lines(report.scores)
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[1].split(), ["0", "0", "32", "32", "1"])
        self.assertEqual(lines[2].split(), ["1", "-64", "0", "64", "1"])


if __name__ == "__main__":
    unittest.main()
