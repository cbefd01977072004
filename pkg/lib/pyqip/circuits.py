#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Builders for the two-class swap-test classifier circuit.

   The register holds a swapper qubit s, a class index qubit m, the class
   vector qubits d and the test vector qubits t. State preparation takes
   |0...0> to

       |0>_s |t>_t (|0>_m |d0>_d + |1>_m |d1>_d) / sqrt(2)

   and the swap test (H on s, a CSWAP(s, d_i, t_i) per pair, H on s)
   leaves P(s=1, m=k) = (1 - |<t|d_k>|^2) / (2M) with M = 2."""

import math
from dataclasses import dataclass

import numpy as np

from pyqip import errors
from pyqip.encoding import (
    Metric, binomial_pattern_gates, fit_product_state, pair_angle)
from pyqip.gate import Gate, SQRT1_2
from pyqip.statevector import StateVector, exact_probabilities, run_circuit

# a state counts as a product state when its best product fit is this close
PRODUCT_TOLERANCE = 1e-9

# prepared states must reach this fidelity with the exact target
FIDELITY_FLOOR = 1 - 1e-6

# per-qubit overlaps within this of 1 are "like-valued" for elision
LIKE_VALUED_TOLERANCE = 1e-9

NUM_CLASSES = 2


@dataclass(frozen=True)
class QubitRoles:
    s: int
    m: int
    d: tuple
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(q) for q in self.d))
        object.__setattr__(self, "t", tuple(int(q) for q in self.t))
        if len(self.d) != len(self.t):
            raise errors.QipInputError(
                "DATA", 40, "%d class qubits, %d test qubits" % (len(self.d), len(self.t)))

        everything = self.all()
        if len(set(everything)) != len(everything):
            raise errors.QipGateError("GATE", 2, "roles %r" % (everything,))
        if sorted(everything) != list(range(len(everything))):
            raise errors.QipGateError("GATE", 1, "roles %r" % (everything,))

    @classmethod
    def default(cls, data_qubits):
        """m on q0, d on q1..qk, t on qk+1..q2k and s last."""
        k = data_qubits
        return cls(
            s=2 * k + 1, m=0,
            d=tuple(range(1, k + 1)),
            t=tuple(range(k + 1, 2 * k + 1)))

    def all(self):
        return (self.m,) + self.d + self.t + (self.s,)

    @property
    def num_qubits(self):
        return 2 + len(self.d) + len(self.t)

    @property
    def data_qubits(self):
        return len(self.d)

    def pairs(self):
        return list(zip(self.d, self.t))


@dataclass(frozen=True)
class ClassifierCircuit:
    """A finished classifier. When the initial state could not be
       synthesized from gates, `initial_state` holds the exact state to
       load into the simulator and `prepared` is False; `gates` then
       hold the swap test only."""

    gates: tuple
    roles: QubitRoles
    metric: Metric = Metric.AIP
    num_classes: int = NUM_CLASSES
    initial_state: StateVector = None
    swap_pairs: tuple = ()

    @property
    def prepared(self):
        return self.initial_state is None

    @property
    def num_qubits(self):
        return self.roles.num_qubits

    def cswap_count(self):
        return sum(1 for g in self.gates if g.kind == "CSWAP")

    def initial(self):
        if self.initial_state is not None:
            return self.initial_state
        return StateVector.zeros(self.num_qubits)

    def simulate(self):
        return run_circuit(self.gates, self.initial())

    def measured_qubits(self):
        """The (s, m) pair, in that order."""
        return [self.roles.s, self.roles.m]

    def rho(self, state=None):
        """{k: P(s=1, m=k)} from the exact final state."""
        probs = exact_probabilities(state or self.simulate(), self.measured_qubits())
        return dict((k, probs["1%d" % k]) for k in range(self.num_classes))


def _check_states(class_states, test_state, roles):
    if len(class_states) != NUM_CLASSES:
        raise errors.QipPreconditionError("PRECOND", 51, "%d class states" % len(class_states))
    k = roles.data_qubits
    for state in list(class_states) + [test_state]:
        if state.num_qubits != k:
            raise errors.QipInputError(
                "STATE", 13, "%d-qubit state for %d data qubits" % (state.num_qubits, k))


def initial_state(class_states, test_state, roles):
    """The exact pre-swap-test state, for direct loading."""
    _check_states(class_states, test_state, roles)
    zero, one = StateVector.from_label("0"), StateVector.from_label("1")
    branches = (zero.tensor(class_states[0]).amplitudes +
                one.tensor(class_states[1]).amplitudes) * SQRT1_2

    # canonical order is m, d..., t..., s; move it onto the roles
    canonical = StateVector(branches).tensor(test_state).tensor(zero)
    return canonical.permuted(list(roles.all()))


def controlled_ry(control, target, theta):
    """Ry(theta) on target when control is |1>, from CNOTs and Ry:
       X Ry(a) X = Ry(-a), so the two halves cancel for control |0>."""
    return [
        Gate.cnot(control, target),
        Gate.ry(target, -theta / 2),
        Gate.cnot(control, target),
        Gate.ry(target, theta / 2)]


def rotation_routine(ratio, m=0, d=1):
    """Prepares |01> + sin(th)|10> + cos(th)|11> (normalized) on (m, d)
       from |00>, with th = arctan(ratio): class 0 holds its CNV in the
       second region only, class 1 holds CNVs in both regions in the
       ratio first:second = ratio. ratio = 0 is the th = 0 limit."""
    if ratio < 0 or not math.isfinite(ratio):
        raise errors.QipPreconditionError("PRECOND", 52, "R_c=%r" % (ratio,))

    theta = math.atan(ratio)

    # Ry(-2 th)|1> = sin(th)|0> + cos(th)|1>
    return [Gate.h(m), Gate.x(d)] + controlled_ry(m, d, -2 * theta)


def _single_qubit_prep(qubit, pair):
    # on a fresh |0>, H and Ry(pi/2) agree; use the familiar one
    if np.allclose(pair, (SQRT1_2, SQRT1_2), rtol=0, atol=1e-12):
        return [Gate.h(qubit)]
    return binomial_pattern_gates([pair], [qubit])


def _rotation_ratio(pair0, pair1):
    # the rotation routine's shape: class 0 on |1>, class 1 on
    # non-negative (sin th, cos th) with cos th > 0
    if not np.allclose(pair0, (0.0, 1.0), rtol=0, atol=1e-12):
        return None
    a, b = pair1
    if a < -1e-12 or b <= 1e-12:
        return None
    return max(a, 0.0) / b


def _class_prep(fits, roles):
    m = roles.m
    if roles.data_qubits == 1:
        ratio = _rotation_ratio(fits[0].pairs[0], fits[1].pairs[0])
        if ratio is not None:
            return rotation_routine(ratio, m, roles.d[0])

    gates = [Gate.h(m)]
    for i, q in enumerate(roles.d):
        p0, p1 = fits[0].pairs[i], fits[1].pairs[i]
        theta0, theta1 = pair_angle(*p0), pair_angle(*p1)
        flipped = (-math.sin(theta0 / 2), math.cos(theta0 / 2))

        if np.allclose(p0, p1, rtol=0, atol=1e-12):
            gates += _single_qubit_prep(q, p0)

        # class 1 sits on Ry(th0)|1>: copy m onto q, then rotate
        elif np.allclose(p1, flipped, rtol=0, atol=1e-12):
            gates.append(Gate.cnot(m, q))
            gates += binomial_pattern_gates([p0], [q])

        else:
            gates += binomial_pattern_gates([p0], [q])
            gates += controlled_ry(m, q, theta1 - theta0)
    return gates


def build_initial_state_prep(class_states, test_state, roles, tol=PRODUCT_TOLERANCE):
    """Gate list taking |0...0> to the classifier's initial state. The
       class and test states must each be unentangled (up to `tol` in
       the product fit); each class qubit is then prepared directly when
       both classes agree on it, by CNOT from m when class 1 holds the
       flipped state of class 0, and by an m-controlled Ry otherwise.
       Raises QipEncodingError when the states cannot be prepared this
       way."""

    _check_states(class_states, test_state, roles)

    fits = [fit_product_state(s, tol=tol) for s in class_states]
    for k, fit in enumerate(fits):
        if not fit.is_product(tol):
            raise errors.QipEncodingError(
                "ENCODE", 25, "class %d state is entangled (residual %.3g)" % (k, fit.residual))

    test_fit = fit_product_state(test_state, tol=tol)
    if not test_fit.is_product(tol):
        raise errors.QipEncodingError(
            "ENCODE", 25, "test state is entangled (residual %.3g)" % test_fit.residual)

    gates = _class_prep(fits, roles)
    for q, pair in zip(roles.t, test_fit.pairs):
        gates += _single_qubit_prep(q, pair)

    target = initial_state(class_states, test_state, roles)
    fidelity = run_circuit(gates, roles.num_qubits).fidelity(target)
    if fidelity < FIDELITY_FLOOR:
        raise errors.QipEncodingError("ENCODE", 25, "prep fidelity %.9f" % fidelity)
    return gates


def append_swap_test(gates, roles, swap_pairs=None, metric=Metric.AIP, initial=None):
    """Appends H(s), CSWAP(s, d_i, t_i) for each pair, H(s)."""
    allowed = roles.pairs()
    pairs = allowed if swap_pairs is None else [tuple(p) for p in swap_pairs]
    for pair in pairs:
        if pair not in allowed:
            raise errors.QipInputError("DATA", 43, "swap pair %r is not a (d, t) pair" % (pair,))

    s = roles.s
    test = [Gate.h(s)] + [Gate.cswap(s, d, t) for d, t in pairs] + [Gate.h(s)]
    return ClassifierCircuit(
        tuple(gates) + tuple(test), roles, Metric.parse(metric),
        NUM_CLASSES, initial, tuple(pairs))


def elide_like_valued_pairs(class_states, test_state, roles, tol=PRODUCT_TOLERANCE):
    """Only the (d_i, t_i) pairs whose single-qubit states differ for
       some class. A pair whose qubits hold the same state in the test
       and in every class factors out of the register, and swapping two
       identical factors is the identity. States that are not product
       states give every pair back."""

    _check_states(class_states, test_state, roles)
    fits = [fit_product_state(s, tol=tol) for s in list(class_states) + [test_state]]
    if not all(f.is_product(tol) for f in fits):
        return roles.pairs()

    test_pairs = fits[-1].pairs
    keep = []
    for i, pair in enumerate(roles.pairs()):
        for fit in fits[:-1]:
            overlap = abs(np.dot(fit.pairs[i], test_pairs[i]))
            if overlap < 1 - LIKE_VALUED_TOLERANCE:
                keep.append(pair)
                break
    return keep


def decompose_cswap(gate):
    """CSWAP(c, a, b) = CNOT(b, a) TOFFOLI(c, a, b) CNOT(b, a)."""
    if gate.kind != "CSWAP":
        raise errors.QipGateError("GATE", 4, "expected CSWAP, got %s" % gate)
    c, a, b = gate.qubits
    return [Gate.cnot(b, a), Gate.toffoli(c, a, b), Gate.cnot(b, a)]


def decompose_all(gates):
    out = []
    for gate in gates:
        out += decompose_cswap(gate) if gate.kind == "CSWAP" else [gate]
    return out


def theoretical_rho(test_state, class_states):
    """{k: (1 - |<t|d_k>|^2) / (2M)} straight from the encodings."""
    m = len(class_states)
    return dict(
        (k, (1 - abs(test_state.inner(d)) ** 2) / (2 * m))
        for k, d in enumerate(class_states))


def build_classifier(class_states, test_state, roles=None, metric=Metric.AIP,
                     elide=True, allow_loading=True, tol=PRODUCT_TOLERANCE):
    """Prep plus swap test in one go. Falls back to loading the exact
       initial state when it cannot be synthesized, if allowed."""
    roles = roles or QubitRoles.default(test_state.num_qubits)
    try:
        prep = build_initial_state_prep(class_states, test_state, roles, tol)
        loaded = None
    except errors.QipEncodingError:
        if not allow_loading:
            raise
        prep = []
        loaded = initial_state(class_states, test_state, roles)

    pairs = None
    if elide:
        pairs = elide_like_valued_pairs(class_states, test_state, roles, tol)
    return append_swap_test(prep, roles, pairs, metric, loaded)
