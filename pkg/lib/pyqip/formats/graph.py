#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Coupling graph files: {"n": 5, "edges": [[0, 1], [0, 2], ...]},
   with an optional "directed": true."""

import json

from pyqip import errors
from pyqip.router import CouplingGraph


def parse_graph(text, filename=None):
    try:
        data = json.loads(text)
    except ValueError as err:
        raise errors.QipParseError(err.msg, getattr(err, "lineno", None), filename)

    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise errors.QipParseError('expected {"n": ..., "edges": [...]}', None, filename)

    try:
        n = int(data["n"])
        edges = [(int(a), int(b)) for a, b in data["edges"]]
    except (TypeError, ValueError):
        raise errors.QipParseError("n must be an integer, edges pairs of integers", None, filename)
    return CouplingGraph(n, edges, bool(data.get("directed", False)))


def read_graph(path):
    with open(path) as f:
        return parse_graph(f.read(), path)


def format_graph(graph):
    data = {"n": graph.num_qubits, "edges": [list(e) for e in graph.edges]}
    if graph.directed:
        data["directed"] = True
    return json.dumps(data)
