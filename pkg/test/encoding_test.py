#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


import math
import unittest

import numpy as np

from pyqip import errors
from pyqip.encoding import (
    FeatureVector, Metric, binomial_pattern_gates, encode, encode_aip, encode_sip, eta,
    fit_product_state, pad_to_power_of_two, pattern_pairs, signed_components,
    zero_coefficient_exclusion)
from pyqip.gate import Gate, SQRT1_2
from pyqip.oracle import match_counts
from pyqip.statevector import StateVector, run_circuit

from test_base import TestBase, random_bits, random_product_state


class TestEncode(TestBase):
    def testAip(self):
        state = encode_aip(FeatureVector.sample((1, 1, 1, 0)))
        np.testing.assert_allclose(state.amplitudes, np.array([1, 1, 1, 0]) / math.sqrt(3), atol=1e-12)

        # two identical samples summed
        doubled = FeatureVector.class_of([FeatureVector.sample((1, 1, 1, 0))] * 2)
        self.assertEqual(doubled.components, (2, 2, 2, 0))
        np.testing.assert_allclose(
            encode_aip(doubled).amplitudes, np.array([2, 2, 2, 0]) / math.sqrt(12), atol=1e-12)

        self.assertTrue(encode_aip(FeatureVector.sample((1, 0, 0, 0))).isclose(StateVector.from_label("00")))

    def testSip(self):
        state = encode_sip(FeatureVector.sample((1, 1, 1, 0)))
        np.testing.assert_allclose(state.amplitudes, [0.5, 0.5, 0.5, -0.5], atol=1e-12)

        state = encode(FeatureVector.sample((1, 1, 1, 1)), "sip")
        np.testing.assert_allclose(state.amplitudes, [0.5] * 4, atol=1e-12)

        cls = FeatureVector.class_of([FeatureVector.sample((1, 1, 1, 0)), FeatureVector.sample((1, 0, 1, 0))])
        self.assertEqual(list(signed_components(cls)), [2, 0, 2, -2])
        np.testing.assert_allclose(
            encode_sip(cls).amplitudes, np.array([2, 0, 2, -2]) / math.sqrt(12), atol=1e-12)

    def testEncodingErrors(self):
        self.assertQipError(errors.QipEncodingError, "ENCODE", 20,
                            encode_aip, FeatureVector.sample((1, 0, 1)))
        self.assertQipError(errors.QipEncodingError, "ENCODE", 21,
                            encode_aip, FeatureVector.sample((0, 0)))

        # one member with and one without a CNV cancel out under SIP
        even = FeatureVector.class_of([FeatureVector.sample((1, 0)), FeatureVector.sample((0, 1))])
        self.assertQipError(errors.QipEncodingError, "ENCODE", 22, encode_sip, even)

        self.assertQipError(errors.QipEncodingError, "ENCODE", 23, FeatureVector.sample, (2, 0))
        self.assertQipError(errors.QipInputError, "DATA", 40, FeatureVector.class_of,
                            [FeatureVector.sample((1, 0)), FeatureVector.sample((1, 0, 0, 0))])
        self.assertQipError(errors.QipPreconditionError, "PRECOND", 52, Metric.parse, "cosine")

    def testUnitNorm(self):
        for _ in range(200):
            v = FeatureVector.sample(random_bits(self.rng, 8))
            if any(v.components):
                self.assertAlmostEqual(encode_aip(v).norm(), 1.0, delta=1e-12)
            self.assertAlmostEqual(encode_sip(v).norm(), 1.0, delta=1e-12)

    def testSipInnerProductCountsMatches(self):
        """<sip(t)|sip(d)> eta_t eta_d = S11 + S00 - S01 - S10 for binary samples."""
        for _ in range(500):
            t = FeatureVector.sample(random_bits(self.rng, 8))
            d = FeatureVector.sample(random_bits(self.rng, 8))

            overlap = encode_sip(t).inner(encode_sip(d)).real
            recovered = overlap * eta(t, Metric.SIP) * eta(d, Metric.SIP)
            self.assertAlmostEqual(recovered, match_counts(t, d).sip, delta=1e-9)

            # eta of a +-1 vector is sqrt(F)
            self.assertAlmostEqual(eta(t, "sip"), math.sqrt(8), delta=1e-12)

    def testLinearity(self):
        """The unnormalized inner product with a class vector is the
           sum of the inner products with its members."""
        for _ in range(1000):
            test = FeatureVector.sample(random_bits(self.rng, 6))
            samples = [FeatureVector.sample(random_bits(self.rng, 6)) for _ in range(int(self.rng.integers(1, 5)))]
            cls = FeatureVector.class_of(samples)

            self.assertEqual(
                int(np.dot(test.array(), cls.array())),
                sum(int(np.dot(test.array(), s.array())) for s in samples))
            self.assertEqual(
                int(np.dot(signed_components(test), signed_components(cls))),
                sum(int(np.dot(signed_components(test), signed_components(s))) for s in samples))

    def testEta(self):
        self.assertAlmostEqual(eta(FeatureVector.sample((1, 1, 1, 0)), "aip"), math.sqrt(3))
        doubled = FeatureVector.class_of([FeatureVector.sample((1, 1, 1, 0))] * 2)
        self.assertAlmostEqual(eta(doubled, Metric.AIP), math.sqrt(12))

    def testPadding(self):
        padded, pad = pad_to_power_of_two(FeatureVector.sample((1, 0, 1)))
        self.assertEqual((padded.components, pad), ((1, 0, 1, 0), 1))

        padded, pad = pad_to_power_of_two(FeatureVector.sample((1, 1)))
        self.assertEqual(pad, 0)


class TestProductFit(TestBase):
    def testUniform(self):
        fit = fit_product_state(StateVector([0.5] * 4))
        self.assertLess(fit.residual, 1e-9)
        for pair in fit.pairs:
            np.testing.assert_allclose(pair, (SQRT1_2, SQRT1_2), atol=1e-9)

    def testBasisState(self):
        fit = fit_product_state(StateVector.from_label("01"))
        self.assertLess(fit.residual, 1e-9)
        np.testing.assert_allclose(fit.pairs, [(1, 0), (0, 1)], atol=1e-9)

    def testBellState(self):
        """Nothing unentangled gets closer to a Bell state than 1/sqrt(2);
           a grid search over both angles agrees."""
        fit = fit_product_state(StateVector([SQRT1_2, 0, 0, SQRT1_2]))
        self.assertAlmostEqual(fit.residual, 1 - SQRT1_2, delta=1e-3)
        self.assertTrue(fit.converged)

        angles = np.arange(0, 2 * np.pi, 0.01)
        a, b = np.meshgrid(angles, angles)
        overlap = np.abs(np.cos(a) * np.cos(b) + np.sin(a) * np.sin(b)) * SQRT1_2
        self.assertAlmostEqual(fit.residual, 1 - overlap.max(), delta=1e-3)

    def testRandomProductStates(self):
        for _ in range(100):
            target = random_product_state(self.rng, int(self.rng.integers(1, 7)))
            fit = fit_product_state(target)

            self.assertLess(fit.residual, 1e-9)
            self.assertTrue(fit.is_product(1e-9))
            for a, b in fit.pairs:
                self.assertAlmostEqual(a * a + b * b, 1.0, delta=1e-9)

            # the sign of the product is the target's, not minus it
            self.assertTrue(fit.state().isclose(target, atol=1e-6))

    def testNotConverged(self):
        """Running out of sweeps gives back the best pairs, flagged."""
        amps = self.rng.normal(size=8)
        fit = fit_product_state(StateVector(amps / np.linalg.norm(amps)), max_iter=1, restarts=1)
        self.assertGreaterEqual(fit.residual, 0.0)
        self.assertEqual(fit.iterations, 1)


class TestPatterns(TestBase):
    def testHadamardEquivalents(self):
        pairs = [(SQRT1_2, SQRT1_2)] * 5
        gates = binomial_pattern_gates(pairs)

        self.assertEqual(len(gates), 5)
        for q, gate in enumerate(gates):
            self.assertEqual(gate.kind, "RY")
            self.assertEqual(gate.qubits, (q,))
            self.assertAlmostEqual(gate.theta, math.pi / 2, delta=1e-12)

        uniform = StateVector(np.full(32, 1 / math.sqrt(32)))
        self.assertStatesClose(run_circuit(gates, 5), uniform, atol=1e-10)

    def testSignedPair(self):
        gates = binomial_pattern_gates([(SQRT1_2, -SQRT1_2)])
        self.assertEqual(len(gates), 1)
        self.assertAlmostEqual(gates[0].theta, -math.pi / 2, delta=1e-12)

        self.assertEqual(binomial_pattern_gates([(1, 0)]), [])
        self.assertQipError(errors.QipEncodingError, "ENCODE", 24, binomial_pattern_gates, [(0, 0)])

    def testUnnormalizedPattern(self):
        gates = binomial_pattern_gates([(2, 1)], [3])
        self.assertEqual(gates, [Gate.ry(3, 2 * math.atan2(1, 2))])

    def testBlockPatterns(self):
        """Zeroing a coefficient of the top qubit keeps one half of the regions."""
        second_half = run_circuit(binomial_pattern_gates(pattern_pairs(2, zeros={0: "a"})), 2)
        np.testing.assert_allclose(second_half.probabilities(), [0, 0, 0.5, 0.5], atol=1e-12)

        first_quarter = run_circuit(binomial_pattern_gates(pattern_pairs(2, zeros={0: "b", 1: "b"})), 2)
        self.assertTrue(first_quarter.isclose(StateVector.from_label("00")))


class TestZeroCoefficientExclusion(TestBase):
    def testReduction(self):
        test = FeatureVector.sample((1, 0, 1, 0))
        cls = FeatureVector((5, 4, 3, 2), "class", 5)
        reduced, classes, index_map = zero_coefficient_exclusion(test, [cls])

        self.assertEqual(reduced.components, (1, 1))
        self.assertEqual(classes[0].components, (5, 3))
        self.assertEqual(index_map, {0: 0, 1: 2})

        self.assertEqual(int(np.dot(reduced.array(), classes[0].array())), 8)
        self.assertEqual(int(np.dot(test.array(), cls.array())), 8)

    def testIdentity(self):
        test = FeatureVector.sample((1, 1, 1, 1))
        reduced, _, index_map = zero_coefficient_exclusion(test, [])
        self.assertEqual(reduced, test)
        self.assertEqual(index_map, {0: 0, 1: 1, 2: 2, 3: 3})

    def testPreservesAip(self):
        for _ in range(300):
            test = FeatureVector.sample(random_bits(self.rng, 8))
            if not any(test.components):
                continue
            cls = FeatureVector.class_of(
                [FeatureVector.sample(random_bits(self.rng, 8)) for _ in range(3)])
            reduced, (rcls,), index_map = zero_coefficient_exclusion(test, [cls])

            self.assertEqual(np.dot(reduced.array(), rcls.array()), np.dot(test.array(), cls.array()))
            self.assertEqual(len(set(index_map.values())), len(index_map))

    def testErrors(self):
        self.assertQipError(errors.QipEncodingError, "ENCODE", 26, zero_coefficient_exclusion,
                            FeatureVector.sample((0, 0)), [])
        self.assertQipError(errors.QipPreconditionError, "PRECOND", 52, zero_coefficient_exclusion,
                            FeatureVector.sample((1, 0)), [], Metric.SIP)


if __name__ == "__main__":
    unittest.main()
