#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

import math
from dataclasses import dataclass, field, replace

import numpy as np

from pyqip import errors

# number of operands each gate kind acts on. for the controlled
# kinds, the control(s) come first: CNOT(c, t), CSWAP(c, a, b),
# TOFFOLI(c1, c2, t)
ARITY = {
    "H":       1,
    "X":       1,
    "RY":      1,
    "CNOT":    2,
    "SWAP":    2,
    "CSWAP":   3,
    "TOFFOLI": 3 }

SQRT1_2 = 1 / math.sqrt(2)

HADAMARD = np.array([[SQRT1_2, SQRT1_2],
                     [SQRT1_2, -SQRT1_2]], dtype=complex)

PAULI_X = np.array([[0, 1],
                    [1, 0]], dtype=complex)


def ry_matrix(theta):
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s],
                     [s, c]], dtype=complex)


def _permutation_matrix(size, swapped):
    m = np.eye(size, dtype=complex)
    i, j = swapped
    m[[i, j]] = m[[j, i]]
    return m


@dataclass(frozen=True)
class Gate:
    """One gate of a circuit: a kind from ARITY, the qubit indices it acts
       on and, for RY only, a rotation angle in radians. Gates inserted by
       the router are flagged with `inserted` so they can be told apart
       from SWAPs that were already present in the input; the flag takes
       no part in equality."""

    kind: str
    qubits: tuple
    theta: float = None
    inserted: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.kind not in ARITY:
            raise errors.QipGateError("GATE", 4, self.kind)

        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(self.qubits) != ARITY[self.kind]:
            raise errors.QipGateError("GATE", 3, "%s %r" % (self.kind, self.qubits))

        if len(set(self.qubits)) != len(self.qubits):
            raise errors.QipGateError("GATE", 2, "%s %r" % (self.kind, self.qubits))

        if self.kind == "RY":
            if self.theta is None or not math.isfinite(self.theta):
                raise errors.QipGateError("GATE", 5, repr(self.theta))
            object.__setattr__(self, "theta", float(self.theta))

    # constructors, named after the kinds
    @classmethod
    def h(cls, q):
        return cls("H", (q,))

    @classmethod
    def x(cls, q):
        return cls("X", (q,))

    @classmethod
    def ry(cls, q, theta):
        return cls("RY", (q,), theta)

    @classmethod
    def cnot(cls, control, target):
        return cls("CNOT", (control, target))

    @classmethod
    def swap(cls, a, b):
        return cls("SWAP", (a, b))

    @classmethod
    def cswap(cls, control, a, b):
        return cls("CSWAP", (control, a, b))

    @classmethod
    def toffoli(cls, c1, c2, target):
        return cls("TOFFOLI", (c1, c2, target))

    @property
    def arity(self):
        return len(self.qubits)

    def validate(self, num_qubits):
        """Raises QipGateError unless every operand
           is a valid index into a num_qubits register."""
        for q in self.qubits:
            if not 0 <= q < num_qubits:
                raise errors.QipGateError(
                    "GATE", 1, "%s: qubit %d, register of %d" % (self, q, num_qubits))

    def remapped(self, mapping, inserted=None):
        """Returns this gate acting on mapping[q] for each operand q."""
        return replace(
            self, qubits=tuple(mapping[q] for q in self.qubits),
            inserted=self.inserted if inserted is None else inserted)

    def matrix(self):
        """The 2^k x 2^k unitary of this gate over its own k operands, in
           operand order, first operand most significant."""
        if self.kind == "H":
            return HADAMARD.copy()
        if self.kind == "X":
            return PAULI_X.copy()
        if self.kind == "RY":
            return ry_matrix(self.theta)
        if self.kind == "CNOT":
            return _permutation_matrix(4, (2, 3))
        if self.kind == "SWAP":
            return _permutation_matrix(4, (1, 2))
        if self.kind == "CSWAP":
            return _permutation_matrix(8, (5, 6))
        return _permutation_matrix(8, (6, 7))

    def is_unitary(self, tol=1e-12):
        m = self.matrix()
        return np.allclose(m @ m.conj().T, np.eye(len(m)), rtol=0, atol=tol)

    def __str__(self):
        text = " ".join([self.kind] + [str(q) for q in self.qubits])
        if self.kind == "RY":
            text += " %s" % repr(self.theta)
        return text
