#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Encoding of binary per-region feature data (CNV present / absent in
   each ordered region) into computational-basis amplitudes.

   Region f is carried by the basis state |f>, so F regions need
   log2(F) qubits and the first region is |0...0>. Under AIP a region
   contributes its (summed) CNV count; under SIP a sample contributes +1
   for a CNV and -1 for none, and a class of W samples contributes
   (#members with a CNV) - (#members without)."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from pyqip import errors
from pyqip.gate import Gate
from pyqip.statevector import StateVector

# rotations smaller than this are dropped from generated gate lists
ANGLE_EPSILON = 1e-12


class Metric(enum.Enum):
    AIP = "aip"
    SIP = "sip"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise errors.QipPreconditionError("PRECOND", 52, "metric %r" % (value,))


@dataclass(frozen=True)
class FeatureVector:
    """Per-region CNV values. Sample vectors are binary; class vectors
       are componentwise sums of `members` sample vectors."""

    components: tuple
    kind: str = "sample"
    members: int = 1

    def __post_init__(self):
        comps = tuple(int(c) for c in self.components)
        object.__setattr__(self, "components", comps)

        if self.kind not in ("sample", "class"):
            raise errors.QipInputError("DATA", 43, "kind %r" % (self.kind,))
        if any(c < 0 for c in comps):
            raise errors.QipInputError("DATA", 43, "negative component in %r" % (comps,))
        if self.kind == "sample" and any(c > 1 for c in comps):
            raise errors.QipEncodingError("ENCODE", 23, repr(comps))
        if self.kind == "class" and any(c > self.members for c in comps):
            raise errors.QipInputError(
                "DATA", 43, "component exceeds member count %d" % self.members)

    @classmethod
    def sample(cls, components):
        return cls(tuple(components), "sample", 1)

    @classmethod
    def class_of(cls, samples):
        """Sums sample vectors into a class vector."""
        samples = list(samples)
        if not samples:
            raise errors.QipInputError("DATA", 41)
        _check_lengths(samples)
        total = np.sum([s.components for s in samples], axis=0)
        return cls(tuple(int(c) for c in total), "class", len(samples))

    @property
    def length(self):
        return len(self.components)

    def __len__(self):
        return len(self.components)

    def array(self):
        return np.array(self.components, dtype=np.int64)


def _check_lengths(vectors):
    lengths = set(len(v) for v in vectors)
    if len(lengths) > 1:
        raise errors.QipInputError("DATA", 40, "lengths %s" % sorted(lengths))


def num_qubits_for(num_features):
    n = int(num_features).bit_length() - 1
    if num_features < 1 or (1 << n) != num_features:
        raise errors.QipEncodingError("ENCODE", 20, "F=%d" % num_features)
    return n


def pad_to_power_of_two(v, size=None):
    """Pads v with "no CNV" regions up to the next power of two (or to
       `size`). Returns (padded vector, number of regions added)."""
    length = len(v)
    if size is None:
        size = 1 << max(0, (length - 1).bit_length())
    num_qubits_for(size)
    if size < length:
        raise errors.QipInputError("DATA", 40, "cannot pad %d regions to %d" % (length, size))

    pad = size - length
    padded = FeatureVector(v.components + (0,) * pad, v.kind, v.members)
    return padded, pad


def signed_components(v):
    """SIP form: 2c - W per region (for a sample, +1 / -1)."""
    return 2 * v.array() - v.members


def eta(v, metric):
    """Feature-basis normalization constant of v under the metric."""
    metric = Metric.parse(metric)
    values = v.array() if metric is Metric.AIP else signed_components(v)
    return float(np.linalg.norm(values))


def encode_aip(v):
    num_qubits_for(len(v))
    values = v.array().astype(float)
    norm = np.linalg.norm(values)
    if norm == 0:
        raise errors.QipEncodingError("ENCODE", 21, repr(v.components))
    return StateVector(values / norm)


def encode_sip(v):
    num_qubits_for(len(v))
    values = signed_components(v).astype(float)
    norm = np.linalg.norm(values)
    if norm == 0:
        raise errors.QipEncodingError("ENCODE", 22, repr(v.components))
    return StateVector(values / norm)


def encode(v, metric):
    if Metric.parse(metric) is Metric.AIP:
        return encode_aip(v)
    return encode_sip(v)


@dataclass(frozen=True)
class ProductFit:
    """Best unentangled approximation prod_i (a_i|0> + b_i|1>) of a
       target state, qubit 0 first. residual = 1 - |overlap|."""

    pairs: tuple
    residual: float
    overlap: complex
    iterations: int
    converged: bool

    def amplitudes(self):
        amps = np.ones(1)
        for a, b in self.pairs:
            amps = np.kron(amps, (a, b))
        return amps

    def state(self):
        return StateVector(self.amplitudes())

    def is_product(self, tol):
        return self.residual <= tol


def _environment(conj, pairs, skip):
    # contract every axis but `skip` with its qubit pair. going from
    # the last axis down keeps the remaining axis numbers stable
    t = conj
    for k in reversed(range(len(pairs))):
        if k != skip:
            t = np.tensordot(t, pairs[k], axes=([k], [0]))
    return t


def _marginal_pairs(psi, n):
    probs = np.abs(psi) ** 2
    pairs = np.empty((n, 2))
    for i in range(n):
        others = tuple(k for k in range(n) if k != i)
        p = probs.sum(axis=others)
        pairs[i] = np.sqrt(p / p.sum())
    return pairs


def fit_product_state(target, tol=1e-9, max_iter=10000, restarts=8, seed=0):
    """Fits real per-qubit pairs (a_i, b_i), a_i^2 + b_i^2 = 1, maximizing
       |<target|prod_i (a_i|0> + b_i|1>)>| by coordinate ascent: with all
       other qubits fixed, the overlap is linear in (a_i, b_i), so the
       best pair is the top eigenvector of a 2x2 real symmetric matrix.
       The first start uses the square roots of the single-qubit
       marginals, the remaining `restarts - 1` use random angles drawn
       from default_rng(seed). max_iter bounds the sweeps per start; a
       start that is still improving when it runs out is reported with
       converged=False, along with the best pairs found."""

    n = target.num_qubits
    psi = target.amplitudes.reshape((2,) * n) if n else target.amplitudes
    if n == 0:
        overlap = complex(np.conj(psi[0]))
        return ProductFit((), max(0.0, 1 - abs(overlap)), overlap, 0, True)

    conj = psi.conj()
    rng = np.random.default_rng(seed)
    best = None

    for start in range(max(1, restarts)):
        if start == 0:
            pairs = _marginal_pairs(psi, n)
        else:
            angles = rng.uniform(0, 2 * math.pi, n)
            pairs = np.stack([np.cos(angles), np.sin(angles)], axis=1)

        value, converged, sweeps = -1.0, False, 0
        while sweeps < max_iter:
            sweeps += 1
            for i in range(n):
                u = _environment(conj, pairs, i)
                m = np.real(np.outer(u.conj(), u))
                _, vectors = np.linalg.eigh(m)
                pairs[i] = vectors[:, -1]

            overlap = complex(np.dot(_environment(conj, pairs, 0), pairs[0]))
            previous, value = value, abs(overlap)
            if 1 - value <= tol or value - previous <= 1e-14:
                converged = True
                break

        if best is None or value > best[0] + 1e-15:
            best = (value, overlap, pairs.copy(), sweeps, converged)
        if 1 - value <= tol:
            break

    value, overlap, pairs, sweeps, converged = best

    # each pair leads with a non-negative component...
    for i in range(n):
        lead = pairs[i][0] if abs(pairs[i][0]) > 1e-12 else pairs[i][1]
        if lead < 0:
            pairs[i] = -pairs[i]
            overlap = -overlap

    # ...except that the fitted product should equal the target, not minus it
    if abs(overlap.imag) < 1e-12 and overlap.real < 0:
        pairs[0] = -pairs[0]
        overlap = -overlap

    return ProductFit(
        tuple((float(a), float(b)) for a, b in pairs),
        max(0.0, 1 - abs(overlap)), overlap, sweeps, converged)


def pair_angle(a, b):
    """Ry angle taking |0> to (a|0> + b|1>)/norm."""
    if math.hypot(a, b) == 0:
        raise errors.QipEncodingError("ENCODE", 24)
    return 2 * math.atan2(b, a)


def binomial_pattern_gates(pairs, qubits=None):
    """Ry gates preparing prod_i (a_i|0> + b_i|1>) from |0...0>, one
       per qubit whose pair is not already |0>. Pairs are normalized
       here, so unnormalized patterns such as (2, 1) are accepted."""
    gates = []
    for i, (a, b) in enumerate(pairs):
        theta = pair_angle(a, b)
        if abs(theta) > ANGLE_EPSILON:
            gates.append(Gate.ry(qubits[i] if qubits is not None else i, theta))
    return gates


def pattern_pairs(num_qubits, zeros=None, weights=None):
    """Per-qubit pairs for the binomial-series block patterns. Qubit 0 is
       the most significant, so zeros={0: "a"} keeps only the second half
       of all regions, zeros={0: "b", 1: "b"} only the first quarter, and
       weights={0: (2, 1)} makes the first half twice the second. Every
       other qubit is left uniform."""
    pairs = []
    for q in range(num_qubits):
        a, b = (weights or {}).get(q, (1.0, 1.0))
        zero = (zeros or {}).get(q)
        if zero == "a":
            a = 0.0
        elif zero == "b":
            b = 0.0
        norm = math.hypot(a, b)
        if norm == 0:
            raise errors.QipEncodingError("ENCODE", 24, "qubit %d" % q)
        pairs.append((a / norm, b / norm))
    return pairs


def zero_coefficient_exclusion(test, classes, metric=Metric.AIP):
    """Drops every region where the test vector is 0. Those regions add
       nothing to an AIP, so the AIP of the reduced vectors equals the
       original. Returns (reduced test, reduced classes, index map), the
       map taking each reduced index to its original region index. The
       reduced length is generally not a power of two; pad afterwards."""

    if Metric.parse(metric) is not Metric.AIP:
        raise errors.QipPreconditionError(
            "PRECOND", 52, "zero-coefficient exclusion is AIP only")
    _check_lengths([test] + list(classes))

    keep = [f for f, c in enumerate(test.components) if c != 0]
    if not keep:
        raise errors.QipEncodingError("ENCODE", 26)

    def _reduce(v):
        return FeatureVector(tuple(v.components[f] for f in keep), v.kind, v.members)

    index_map = dict(enumerate(keep))
    return _reduce(test), [_reduce(c) for c in classes], index_map
