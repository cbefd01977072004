#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Exact complex-amplitude statevector simulation.

   Basis convention: qubit 0 carries the MOST significant bit of a basis
   label, so the amplitude of |q0 q1 ... q(n-1)> sits at the big-endian
   integer q0 q1 ... q(n-1). Preparing |q0=1, q1=0> therefore puts all of
   the amplitude at index 2 of a 2-qubit state. Every bit-position
   computation in the library goes through bit_mask() below."""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np

from pyqip import errors
from pyqip.gate import PAULI_X

# override these at module level if you need to. drift beyond
# NORM_TOLERANCE after a gate is treated as a bug, not rounding
NORM_TOLERANCE = 1e-10
PROBABILITY_TOLERANCE = 1e-10


def bit_mask(num_qubits, qubit):
    """The single place where the qubit -> bit place-value
       mapping lives: qubit 0 is the most significant bit."""
    return 1 << (num_qubits - 1 - qubit)


def basis_label(index, width):
    return format(index, "0%db" % width) if width else ""


@lru_cache(maxsize=32)
def _indices(dim):
    idx = np.arange(dim, dtype=np.int64)
    idx.setflags(write=False)
    return idx


class StateVector(object):
    """A normalized register of 2^n complex amplitudes. Instances are
       immutable once built (the amplitude array is read-only), so they
       can be shared between threads freely; gate application always
       returns a new StateVector."""

    def __init__(self, amplitudes, check=True):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        n = amps.size.bit_length() - 1
        if amps.size == 0 or (1 << n) != amps.size:
            raise errors.QipInputError("STATE", 10, "got %d amplitudes" % amps.size)

        if check:
            norm = np.linalg.norm(amps)
            if abs(norm - 1) > NORM_TOLERANCE:
                raise errors.QipNormError("STATE", 11, "norm %.12g" % norm)

        amps.setflags(write=False)
        self._amplitudes = amps
        self._num_qubits = n

    @classmethod
    def zeros(cls, num_qubits):
        amps = np.zeros(1 << num_qubits, dtype=complex)
        amps[0] = 1
        return cls(amps)

    @classmethod
    def from_label(cls, label):
        """Computational basis state from a bit string, qubit 0 first."""
        amps = np.zeros(1 << len(label), dtype=complex)
        amps[int(label, 2) if label else 0] = 1
        return cls(amps)

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize=False):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise errors.QipEncodingError("ENCODE", 21)
            amps = amps / norm
        return cls(amps)

    @property
    def num_qubits(self):
        return self._num_qubits

    @property
    def dim(self):
        return self._amplitudes.size

    @property
    def amplitudes(self):
        return self._amplitudes

    def norm(self):
        return float(np.linalg.norm(self._amplitudes))

    def probabilities(self):
        return np.abs(self._amplitudes) ** 2

    def inner(self, other):
        """<self|other>"""
        if other.num_qubits != self.num_qubits:
            raise errors.QipInputError(
                "STATE", 13, "%d vs %d" % (self.num_qubits, other.num_qubits))
        return complex(np.vdot(self._amplitudes, other.amplitudes))

    def fidelity(self, other):
        return abs(self.inner(other)) ** 2

    def tensor(self, other):
        """self (on the leading qubits) tensored with other (trailing)."""
        return StateVector(np.kron(self._amplitudes, other.amplitudes))

    def isclose(self, other, atol=1e-9):
        return (other.num_qubits == self.num_qubits and
                np.allclose(self._amplitudes, other.amplitudes, rtol=0, atol=atol))

    def permuted(self, layout, num_physical=None):
        """Moves logical qubit q to physical position layout[q]. When the
           physical register is wider than this state, the spare physical
           qubits are filled with |0> in ascending position order."""
        layout = _as_layout(layout)
        n = self._num_qubits
        width = num_physical or n
        if sorted(layout) != list(range(n)):
            raise errors.QipInputError("STATE", 13, "layout must cover qubits 0..%d" % (n - 1))
        if len(set(layout.values())) != n or not all(0 <= p < width for p in layout.values()):
            raise errors.QipRoutingError("ROUTE", 32, repr(layout))

        amps = self._amplitudes
        if width > n:
            amps = np.kron(amps, StateVector.zeros(width - n).amplitudes)

        source = [None] * width
        for logical, physical in layout.items():
            source[physical] = logical
        spare = iter(range(n, width))
        source = [next(spare) if s is None else s for s in source]

        tensor = amps.reshape((2,) * width).transpose(source)
        return StateVector(tensor.reshape(-1))

    def __repr__(self):
        terms = [
            "%s|%s>" % (_format_amplitude(a), basis_label(i, self._num_qubits))
            for i, a in enumerate(self._amplitudes)
            if abs(a) > 1e-12]
        return "<pyqip.StateVector %s>" % " + ".join(terms[:16] + (["..."] if len(terms) > 16 else []))


def _format_amplitude(a):
    if abs(a.imag) > 1e-12:
        return "(%.4g%+.4gj)" % (a.real, a.imag)
    return "%.4g" % a.real


def _as_layout(layout):
    if isinstance(layout, dict):
        return dict((int(k), int(v)) for k, v in layout.items())
    return dict(enumerate(int(p) for p in layout))


def _apply_single(amps, n, target, u, controls=()):
    idx = _indices(amps.size)
    mask = bit_mask(n, target)
    sel = (idx & mask) == 0
    for c in controls:
        sel &= (idx & bit_mask(n, c)) != 0

    i0 = idx[sel]
    i1 = i0 | mask
    a0, a1 = amps[i0], amps[i1]
    amps[i0] = u[0, 0] * a0 + u[0, 1] * a1
    amps[i1] = u[1, 0] * a0 + u[1, 1] * a1


def _apply_swap(amps, n, a, b, controls=()):
    idx = _indices(amps.size)
    ma, mb = bit_mask(n, a), bit_mask(n, b)

    # pair every |..1..0..> with its |..0..1..> partner
    sel = ((idx & ma) != 0) & ((idx & mb) == 0)
    for c in controls:
        sel &= (idx & bit_mask(n, c)) != 0

    i = idx[sel]
    j = i ^ ma ^ mb
    amps[i], amps[j] = amps[j], amps[i].copy()


def apply_gate(state, gate, renormalize=False):
    """Returns U|state> for a single gate, without ever building a
       2^n x 2^n matrix: amplitudes are updated pairwise, selected by
       bitmask. The norm is checked afterwards; drift beyond
       NORM_TOLERANCE raises QipNormError unless renormalize is set."""

    n = state.num_qubits
    gate.validate(n)
    amps = state.amplitudes.copy()
    q = gate.qubits

    if gate.kind in ("H", "X", "RY"):
        _apply_single(amps, n, q[0], gate.matrix())
    elif gate.kind == "CNOT":
        _apply_single(amps, n, q[1], PAULI_X, controls=q[:1])
    elif gate.kind == "TOFFOLI":
        _apply_single(amps, n, q[2], PAULI_X, controls=q[:2])
    elif gate.kind == "SWAP":
        _apply_swap(amps, n, q[0], q[1])
    elif gate.kind == "CSWAP":
        _apply_swap(amps, n, q[1], q[2], controls=q[:1])

    norm = np.linalg.norm(amps)
    if abs(norm - 1) > NORM_TOLERANCE:
        if not renormalize:
            raise errors.QipNormError("STATE", 12, "%.12g after %s" % (norm, gate))
        amps /= norm

    return StateVector(amps, check=False)


def run_circuit(gates, initial):
    """Folds apply_gate over gates, starting from a StateVector or,
       when given an int, from |0...0> on that many qubits."""
    state = StateVector.zeros(initial) if isinstance(initial, int) else initial
    for gate in gates:
        state = apply_gate(state, gate)
    return state


def _check_qubits(state, qubits):
    qubits = [int(q) for q in qubits]
    if not qubits or len(set(qubits)) != len(qubits):
        raise errors.QipInputError("STATE", 14, repr(qubits))
    for q in qubits:
        if not 0 <= q < state.num_qubits:
            raise errors.QipInputError(
                "STATE", 14, "qubit %d of %d" % (q, state.num_qubits))
    return qubits


def marginal(state, qubits):
    """Marginal probabilities over the listed qubits as a flat array,
       indexed by the outcome bits in the caller's qubit order."""
    qubits = _check_qubits(state, qubits)
    n = state.num_qubits
    probs = state.probabilities().reshape((2,) * n)
    others = tuple(q for q in range(n) if q not in qubits)
    probs = probs.sum(axis=others)

    # summing leaves the kept axes in ascending qubit
    # order; put them back in the order we were asked for
    kept = sorted(qubits)
    probs = probs.transpose([kept.index(q) for q in qubits])
    return probs.reshape(-1)


def exact_probabilities(state, qubits):
    """Returns {outcome bitstring: probability} for every outcome of
       measuring the listed qubits, bits in the order given."""
    probs = marginal(state, qubits)
    total = probs.sum()
    if abs(total - 1) > PROBABILITY_TOLERANCE:
        raise errors.QipNormError("STATE", 12, "marginal sums to %.12g" % total)

    width = len(qubits)
    return dict(
        (basis_label(i, width), float(p))
        for i, p in enumerate(probs))


class Histogram(object):
    """Shot counts over every outcome bitstring of a measurement."""

    def __init__(self, counts, shots):
        self._counts = dict(counts)
        self._shots = int(shots)

    @property
    def counts(self):
        return dict(self._counts)

    @property
    def shots(self):
        return self._shots

    def __getitem__(self, outcome):
        return self._counts.get(outcome, 0)

    def frequencies(self):
        return dict(
            (outcome, count / float(self._shots))
            for outcome, count in self._counts.items())

    def most_common(self):
        return sorted(self._counts.items(), key=lambda kv: (-kv[1], kv[0]))

    def __eq__(self, other):
        return (isinstance(other, Histogram) and
                self._shots == other.shots and self._counts == other.counts)

    def __repr__(self):
        return "<pyqip.Histogram %d shots: %r>" % (self._shots, self._counts)


def _stream_shares(shots, streams):
    base, extra = divmod(shots, streams)
    return [base + (1 if i < extra else 0) for i in range(streams)]


def sample_measurements(state, qubits, shots, seed=0, streams=1):
    """Samples `shots` measurements of the listed qubits. The shots are
       split over `streams` independent PRNG streams spawned from
       numpy's SeedSequence(seed); stream i takes shots // streams, plus
       one while i < shots % streams. Stream results are summed in stream
       index order, so running them on threads gives exactly what running
       them one after another would."""

    shots = int(shots)
    if shots < 1:
        raise errors.QipInputError("STATE", 15, "shots=%d" % shots)
    if streams < 1:
        raise errors.QipPreconditionError("PRECOND", 52, "streams=%d" % streams)

    probs = np.clip(marginal(state, qubits), 0, None)
    probs = probs / probs.sum()
    children = np.random.SeedSequence(seed).spawn(streams)
    shares = _stream_shares(shots, streams)

    def _draw(job):
        child, share = job
        return np.random.default_rng(child).multinomial(share, probs)

    jobs = list(zip(children, shares))
    if streams == 1:
        results = [_draw(jobs[0])]
    else:
        with ThreadPoolExecutor(max_workers=streams) as pool:
            results = list(pool.map(_draw, jobs))

    totals = np.zeros(len(probs), dtype=np.int64)
    for counts in results:
        totals += counts

    width = len(qubits)
    return Histogram(
        dict((basis_label(i, width), int(c)) for i, c in enumerate(totals)),
        shots)
