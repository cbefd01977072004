#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Circuit text files, one gate per line:

     H 0
     CNOT 0 1
     RY 0 1.5707963
     CSWAP 2 0 1

   Angles are decimal radians. Blank lines and # comments are skipped."""

import re

from pyqip import errors
from pyqip.gate import ARITY, Gate

GATE_MATCHER = re.compile(r"^([A-Za-z]+)((?:\s+\d+)+)(?:\s+([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?))?\s*$")


def parse_circuit(text, filename=None):
    gates = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        m = GATE_MATCHER.match(line)
        if m is None:
            raise errors.QipParseError("can't parse %r" % line, number, filename)

        kind = m.group(1).upper()
        qubits = [int(q) for q in m.group(2).split()]
        theta = m.group(3)

        # "RY 0 1" reads the angle as a qubit; the arity says which it is
        if kind == "RY" and theta is None and len(qubits) == 2:
            qubits, theta = qubits[:1], m.group(2).split()[1]
        if kind not in ARITY:
            raise errors.QipParseError("unknown gate %r" % m.group(1), number, filename)
        if (kind == "RY") != (theta is not None):
            raise errors.QipParseError("only RY takes an angle: %r" % line, number, filename)

        try:
            gates.append(Gate(kind, tuple(qubits), float(theta) if theta is not None else None))
        except errors.QipGateError as err:
            raise errors.QipParseError(str(err), number, filename)
    return gates


def read_circuit(path):
    with open(path) as f:
        return parse_circuit(f.read(), path)


def format_circuit(gates, comments=()):
    lines = ["# %s" % c for c in comments]
    lines += [str(g) for g in gates]
    return "\n".join(lines) + "\n"
