#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


import unittest

from mox3 import mox

from pyqip import errors, examples
from pyqip.gate import Gate
from pyqip.router import CouplingGraph, Router, check_conformance, route, swap_count
from pyqip.statevector import run_circuit

from test_base import TestBase, random_circuit, random_state


def random_graph(rng, num_qubits):
    """A random spanning tree plus a few extra edges."""
    order = [int(q) for q in rng.permutation(num_qubits)]
    edges = [(order[i], order[int(rng.integers(i))]) for i in range(1, num_qubits)]
    for _ in range(int(rng.integers(0, num_qubits))):
        a, b = (int(q) for q in rng.choice(num_qubits, 2, replace=False))
        edges.append((a, b))
    return CouplingGraph(num_qubits, edges)


class TestCouplingGraph(TestBase):
    def testBuilders(self):
        self.assertEqual(CouplingGraph.path(3).edges, [(0, 1), (1, 2)])
        self.assertEqual(CouplingGraph.star(4, center=1).edges, [(0, 1), (1, 2), (1, 3)])
        self.assertEqual(CouplingGraph.ibmqx4().edges,
                         [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        self.assertEqual(CouplingGraph.from_edges([[0, 2], [2, 1]]).num_qubits, 3)

    def testInvalid(self):
        self.assertQipError(errors.QipRoutingError, "ROUTE", 30, CouplingGraph, 4, [(0, 1), (2, 3)])
        self.assertQipError(errors.QipRoutingError, "ROUTE", 33, CouplingGraph, 2, [(0, 0)])
        self.assertQipError(errors.QipRoutingError, "ROUTE", 33, CouplingGraph, 2, [(0, 2)])

    def testShortestPathTies(self):
        """Ties go to the lowest physical indices."""
        ring = CouplingGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        self.assertEqual(ring.shortest_path(0, 2), [0, 1, 2])


class TestRoute(TestBase):
    def testPathOfThree(self):
        routed, layout = route([Gate.cnot(0, 2)], CouplingGraph.path(3))
        self.assertEqual(routed, [Gate.swap(0, 1), Gate.cnot(1, 2)])
        self.assertEqual(layout, {0: 1, 1: 0, 2: 2})
        self.assertEqual(swap_count(routed), 1)

    def testPathOfFour(self):
        routed, _ = route([Gate.cnot(0, 3)], CouplingGraph.path(4))
        self.assertEqual(swap_count(routed), 2)

    def testConformant(self):
        gates = [Gate.h(0), Gate.cnot(0, 1), Gate.swap(1, 2), Gate.ry(2, 0.5)]
        routed, layout = route(gates, CouplingGraph.path(3))
        self.assertEqual(routed, gates)
        self.assertEqual(layout, {0: 0, 1: 1, 2: 2})

        # the SWAP was already there, so it doesn't count
        self.assertEqual(swap_count(routed), 0)

    def testTooWide(self):
        self.assertQipError(errors.QipRoutingError, "ROUTE", 31,
                            route, [Gate.cnot(0, 3)], CouplingGraph.path(3))
        self.assertQipError(errors.QipRoutingError, "ROUTE", 32,
                            route, [Gate.cnot(0, 1)], CouplingGraph.path(3), [1, 1])

    def _check(self, gates, graph, layout, num_logical):
        routed, final = route(gates, graph, layout)
        self.assertEqual(check_conformance(routed, graph), [])

        initial = random_state(self.rng, num_logical)
        expected = run_circuit(gates, initial).permuted(final, graph.num_qubits)
        actual = run_circuit(routed, initial.permuted(layout, graph.num_qubits))
        self.assertStatesClose(actual, expected, atol=1e-9)

    def testRandomCircuits(self):
        """Routed then permuted back, every circuit does what it did before."""
        for _ in range(500):
            n = int(self.rng.integers(1, 7))
            gates = random_circuit(self.rng, n, int(self.rng.integers(1, 26)))
            graph = random_graph(self.rng, n + int(self.rng.integers(0, 2)))
            layout = [int(p) for p in self.rng.permutation(graph.num_qubits)[:n]]
            self._check(gates, graph, layout, n)

    def testThreeQubitGates(self):
        gates = [Gate.cswap(0, 2, 4), Gate.toffoli(4, 0, 3)]
        graph = CouplingGraph.path(5)
        routed, _ = route(gates, graph)
        for gate in routed:
            if gate.arity == 3:
                self.assertTrue(graph.allows(gate), str(gate))
        self._check(gates, graph, list(range(5)), 5)

    def testDirected(self):
        """A CNOT against the arrow is turned round with Hadamards."""
        graph = CouplingGraph(2, [(0, 1)], directed=True)
        routed, _ = route([Gate.cnot(1, 0)], graph)
        self.assertEqual([g.kind for g in routed], ["H", "H", "CNOT", "H", "H"])
        self.assertEqual(check_conformance(routed, graph), [])
        self.assertEqual(check_conformance([Gate.cnot(1, 0)], graph), [Gate.cnot(1, 0)])
        self._check([Gate.h(1), Gate.cnot(1, 0)], graph, [0, 1], 2)

    def testFiveQubitExampleOnBowTie(self):
        """The example's decomposed circuit keeps its (s, m) probabilities."""
        plain = examples.get("5q-ex1").run()
        routed = examples.get("5q-ex1").run(graph=CouplingGraph.ibmqx4())
        for outcome, p in plain.probabilities.items():
            self.assertAlmostEqual(routed.probabilities[outcome], p, delta=1e-9)
        self.assertEqual(routed.predicted, "normal")

    def testLogging(self):
        logger = self.mocker.CreateMockAnything()
        logger(mox.IsA(Router), "SWAP 0 1", "traffic")
        logger(mox.IsA(Router), mox.StrContains("1 inserted swaps"), "debug")
        self.mocker.ReplayAll()

        Router(CouplingGraph.path(3), logger=logger).route([Gate.cnot(0, 2)])
        self.mocker.VerifyAll()


if __name__ == "__main__":
    unittest.main()
