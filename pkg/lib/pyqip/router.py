#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Adapts a gate list to a hardware coupling graph by inserting SWAPs.

   Routing is greedy and one gate at a time: when the operands of a
   two-qubit gate are not on an edge, the first operand walks the
   shortest path towards the second (lowest physical indices first when
   there is more than one) until they are adjacent. Three-qubit gates are
   routed until their operands form a connected set: the first two are
   made adjacent, then the third walks to whichever of them is nearer."""

import networkx as nx

from pyqip import errors
from pyqip.gate import Gate


class CouplingGraph(object):
    """Physical qubits 0..n-1 and the pairs of them that admit a two-qubit
       gate. For a directed graph an edge (a, b) allows CNOT(a, b) only;
       SWAPs and the three-qubit kinds only need the undirected edge."""

    def __init__(self, num_qubits, edges, directed=False):
        self._num_qubits = int(num_qubits)
        self._directed = bool(directed)
        self._arcs = set()

        graph = nx.Graph()
        graph.add_nodes_from(range(self._num_qubits))
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b or not (0 <= a < self._num_qubits and 0 <= b < self._num_qubits):
                raise errors.QipRoutingError("ROUTE", 33, "edge (%d, %d) on %d qubits" % (a, b, self._num_qubits))
            graph.add_edge(a, b)
            self._arcs.add((a, b))

        if self._num_qubits < 1 or not nx.is_connected(graph):
            raise errors.QipRoutingError(
                "ROUTE", 30, "%d components" % nx.number_connected_components(graph)
                if self._num_qubits else "no qubits")
        self._graph = graph

    @classmethod
    def from_edges(cls, edges, num_qubits=None, directed=False):
        edges = [tuple(e) for e in edges]
        if num_qubits is None:
            num_qubits = 1 + max(max(e) for e in edges) if edges else 1
        return cls(num_qubits, edges, directed)

    @classmethod
    def path(cls, num_qubits):
        return cls(num_qubits, [(i, i + 1) for i in range(num_qubits - 1)])

    @classmethod
    def star(cls, num_qubits, center=0):
        return cls(num_qubits, [(center, q) for q in range(num_qubits) if q != center])

    @classmethod
    def ibmqx4(cls):
        """The 5-qubit bow-tie: two triangles sharing qubit 2."""
        return cls(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])

    @property
    def num_qubits(self):
        return self._num_qubits

    @property
    def directed(self):
        return self._directed

    @property
    def edges(self):
        if self._directed:
            return sorted(self._arcs)
        return sorted(tuple(sorted(e)) for e in self._graph.edges())

    @property
    def graph(self):
        return self._graph

    def adjacent(self, a, b):
        return self._graph.has_edge(a, b)

    def allows(self, gate):
        """True if the (physical) gate can run as is."""
        q = gate.qubits
        if gate.arity == 1:
            return True
        if gate.arity == 3:
            return nx.is_connected(self._graph.subgraph(q))
        if not self.adjacent(*q):
            return False
        if self._directed and gate.kind == "CNOT":
            return q in self._arcs
        return True

    def distance(self, a, b):
        return nx.shortest_path_length(self._graph, a, b)

    def shortest_path(self, a, b):
        return min(nx.all_shortest_paths(self._graph, a, b))

    def __repr__(self):
        return "<pyqip.CouplingGraph %d qubits, %d edges%s>" % (
            self._num_qubits, len(self.edges), ", directed" if self._directed else "")


class Router(object):
    """Routes gate lists onto one CouplingGraph. Logging works the same way
       as for the Pipeline: pass a logger=callable(router, message, type)."""

    LOG_LEVELS = {
        "traffic": 4,
        "debug":   3,
        "warn":    2,
        "error":   1 }

    def __init__(self, graph, logger=None):
        self.graph = graph
        self.logger = logger

    def _log(self, str_, type_="debug"):
        if self.logger is not None:
            self.logger(self, str_, type_)

    def _layout(self, gates, initial_layout):
        width = 1 + max([q for g in gates for q in g.qubits] or [-1])
        if initial_layout is None:
            initial_layout = range(max(width, 1))
        if isinstance(initial_layout, dict):
            layout = dict((int(k), int(v)) for k, v in initial_layout.items())
        else:
            layout = dict(enumerate(int(p) for p in initial_layout))

        if max(width, len(layout)) > self.graph.num_qubits:
            raise errors.QipRoutingError(
                "ROUTE", 31, "%d logical qubits, %d physical" % (max(width, len(layout)), self.graph.num_qubits))

        physical = list(layout.values())
        if len(set(physical)) != len(physical) or not all(0 <= p < self.graph.num_qubits for p in physical):
            raise errors.QipRoutingError("ROUTE", 32, repr(layout))

        missing = [q for q in range(width) if q not in layout]
        if missing:
            raise errors.QipRoutingError("ROUTE", 32, "no position for qubits %r" % missing)
        return layout

    def _swap(self, out, layout, a, b):
        # exchange whatever lives on physical a and b
        occupants = dict((p, q) for q, p in layout.items())
        for p, other in ((a, b), (b, a)):
            if p in occupants:
                layout[occupants[p]] = other

        out.append(Gate("SWAP", (a, b), inserted=True))
        self._log("SWAP %d %d" % (a, b), "traffic")

    def _walk(self, out, layout, logical, destination):
        # move `logical` along the path until it sits next to destination
        path = self.graph.shortest_path(layout[logical], destination)
        for hop in path[1:-1]:
            self._swap(out, layout, layout[logical], hop)

    def _emit(self, out, gate, layout):
        physical = gate.remapped(layout)
        if self.graph.directed and gate.kind == "CNOT" and not self.graph.allows(physical):
            c, t = physical.qubits
            self._log("reversing %s" % physical, "traffic")
            out += [Gate.h(c), Gate.h(t), Gate.cnot(t, c), Gate.h(c), Gate.h(t)]
        else:
            out.append(physical)

    def route(self, gates, initial_layout=None):
        """Returns (routed gates, final layout). The routed gates act on
           physical qubits; `final layout` maps each logical qubit to the
           physical qubit holding it once the circuit has run."""

        gates = list(gates)
        layout = self._layout(gates, initial_layout)
        out = []

        for gate in gates:
            q = gate.qubits
            if gate.arity >= 2 and not self.graph.adjacent(layout[q[0]], layout[q[1]]):
                self._walk(out, layout, q[0], layout[q[1]])

            if gate.arity == 3:
                a, b, c = layout[q[0]], layout[q[1]], layout[q[2]]
                if not (self.graph.adjacent(c, a) or self.graph.adjacent(c, b)):
                    da, db = self.graph.distance(c, a), self.graph.distance(c, b)
                    near = a if (da, a) < (db, b) else b
                    self._walk(out, layout, q[2], near)

            self._emit(out, gate, layout)

        self._log("routed %d gates with %d inserted swaps" % (len(gates), swap_count(out)))
        return out, layout


def route(gates, graph, initial_layout=None, logger=None):
    return Router(graph, logger).route(gates, initial_layout)


def swap_count(gates):
    """Number of SWAPs the router inserted; SWAPs from the input don't count."""
    return sum(1 for g in gates if g.kind == "SWAP" and g.inserted)


def check_conformance(gates, graph):
    """The gates (in physical indices) that the graph cannot run."""
    return [g for g in gates if not graph.allows(g)]
