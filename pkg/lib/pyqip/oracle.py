#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Classical ground truth for the swap-test classifiers.

   For a binary test vector B and a training vector D of length n, S11
   counts the positions where both are 1, S00 where both are 0, S01
   where B is 0 and D is 1, and S10 the other way round. Summed over the
   W members of a class:

       sigma11 = sum S11                       (AIP)
       sigma   = sum (S11 + S00 - S01 - S10)   (SIP)
       chi     = sum (S01 + S10)               (summed Hamming distance)

   and sigma = 2 sum(S11 + S00) - W n, -chi = sum(S11 + S00) - W n, so
   with equal W across classes the largest sigma has the smallest chi."""

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from pyqip import errors
from pyqip.encoding import Metric

# normalized dot products closer than this are a tie
TIE_TOLERANCE = 1e-12


class _Ambiguous(object):
    def __repr__(self):
        return "Ambiguous"

    def __str__(self):
        return "ambiguous"

# returned in place of a class when the decision rule ties
AMBIGUOUS = _Ambiguous()


class SignPrecondition(enum.Enum):
    """Which of matches and mismatches the caller knows to dominate. Only
       |sigma| is observable from the circuit, so a SIP decision needs it."""
    MATCHES = "matches"
    MISMATCHES = "mismatches"

    @classmethod
    def parse(cls, value):
        if value is None or isinstance(value, cls):
            return value
        aliases = {"matchesdominate": "matches", "mismatchesdominate": "mismatches"}
        text = str(value).lower().replace("_", "").replace("-", "")
        try:
            return cls(aliases.get(text, text))
        except ValueError:
            raise errors.QipPreconditionError("PRECOND", 52, "sign %r" % (value,))


@dataclass(frozen=True)
class OracleCounts:
    s11: int
    s00: int
    s01: int
    s10: int

    @property
    def n(self):
        return self.s11 + self.s00 + self.s01 + self.s10

    @property
    def matches(self):
        return self.s11 + self.s00

    @property
    def mismatches(self):
        return self.s01 + self.s10

    @property
    def sip(self):
        return self.matches - self.mismatches


@dataclass(frozen=True)
class ClassScore:
    label: object
    sigma: int
    sigma11: int
    chi: int
    members: int
    length: int


def _binary(v):
    values = np.asarray(getattr(v, "components", v), dtype=np.int64).reshape(-1)
    if np.any((values != 0) & (values != 1)):
        raise errors.QipEncodingError("ENCODE", 23, repr(tuple(values)))
    return values


def _pair(a, b):
    a, b = _binary(a), _binary(b)
    if a.size != b.size:
        raise errors.QipInputError("DATA", 40, "%d vs %d" % (a.size, b.size))
    return a, b


def _members(members):
    members = list(members)
    if not members:
        raise errors.QipInputError("DATA", 41)
    return members


def hamming(a, b):
    a, b = _pair(a, b)
    return int(np.sum(a != b))


def match_counts(test, training):
    t, d = _pair(test, training)
    return OracleCounts(
        s11=int(np.sum((t == 1) & (d == 1))),
        s00=int(np.sum((t == 0) & (d == 0))),
        s01=int(np.sum((t == 0) & (d == 1))),
        s10=int(np.sum((t == 1) & (d == 0))))


def aip(test, class_members):
    """sum of S11 over the class, i.e. dot(test, class vector)."""
    members = _members(class_members)
    t = _binary(test)
    total = np.zeros_like(t)
    for d in members:
        total += _pair(t, d)[1]
    return int(np.dot(t, total))


def sip(test, class_members):
    return sum(match_counts(test, d).sip for d in _members(class_members))


def class_score(label, test, class_members):
    members = _members(class_members)
    counts = [match_counts(test, d) for d in members]
    n = len(_binary(test))
    w = len(members)

    sigma = sum(c.sip for c in counts)
    chi = sum(c.mismatches for c in counts)
    matched = sum(c.matches for c in counts)

    if sigma != 2 * matched - w * n or -chi != matched - w * n:
        raise errors.QipInputError(
            "DATA", 44, "class %r: sigma=%d, chi=%d, matched=%d, W=%d, n=%d" % (
                label, sigma, chi, matched, w, n))

    return ClassScore(label, sigma, aip(test, members), chi, w, n)


def _labelled(classes):
    if isinstance(classes, dict):
        return list(classes.items())
    return list(enumerate(classes))


def score_table(test, classes):
    """ClassScore per class, in class order. `classes` maps labels
       to member lists; a plain list is labelled 0, 1, ..."""
    return [class_score(label, test, members) for label, members in _labelled(classes)]


def _pick(values, best, tol=0):
    """The label holding the single best value, or AMBIGUOUS on a tie."""
    target = best(v for _, v in values)
    winners = [label for label, v in values if abs(v - target) <= tol]
    return winners[0] if len(winners) == 1 else AMBIGUOUS


def classify(test, classes, metric=Metric.AIP, sign_precondition=None, magnitude_only=False):
    """Returns the predicted class label or AMBIGUOUS.

       AIP picks the largest sigma11. SIP needs to know which of matches
       and mismatches dominate: classically it picks the largest sigma
       either way; with `magnitude_only` (what the circuit can see) it
       picks the largest |sigma| when matches dominate and the smallest
       |sigma| when mismatches do."""

    labelled = _labelled(classes)
    if len(labelled) < 2:
        raise errors.QipInputError("DATA", 42, "%d classes" % len(labelled))

    table = [class_score(label, test, members) for label, members in labelled]
    if Metric.parse(metric) is Metric.AIP:
        return _pick([(s.label, s.sigma11) for s in table], max)

    sign = SignPrecondition.parse(sign_precondition)
    if sign is None:
        raise errors.QipPreconditionError("PRECOND", 50)

    if not magnitude_only:
        return _pick([(s.label, s.sigma) for s in table], max)
    if sign is SignPrecondition.MATCHES:
        return _pick([(s.label, abs(s.sigma)) for s in table], max)
    return _pick([(s.label, abs(s.sigma)) for s in table], min)


def _vector(v):
    return np.asarray(getattr(v, "components", v), dtype=float).reshape(-1)


def _normalized_scores(test, class_vectors):
    labelled = _labelled(class_vectors)
    t = _vector(test)
    scores = []
    for label, v in labelled:
        c = _vector(v)
        if c.size != t.size:
            raise errors.QipInputError("DATA", 40, "%d vs %d" % (c.size, t.size))
        norm = np.linalg.norm(c)
        if norm == 0:
            raise errors.QipEncodingError("ENCODE", 21, "class %r" % (label,))
        scores.append((label, float(np.dot(t, c) / norm)))
    return scores


def multiclass_region(test, class_vectors):
    """The class whose normalized class vector has the largest dot
       product with the test vector. That class sits on the test's side
       of every pairwise bisector plane it takes part in."""
    if len(_labelled(class_vectors)) < 2:
        raise errors.QipInputError("DATA", 42)
    return _pick(_normalized_scores(test, class_vectors), max, TIE_TOLERANCE)


def pairwise_preferences(test, class_vectors):
    """{(i, j): the preferred one of classes i and j, or AMBIGUOUS} for
       every pair, decided by which side of their bisector the test is on."""
    scores = _normalized_scores(test, class_vectors)
    prefs = {}
    for (a, sa), (b, sb) in itertools.combinations(scores, 2):
        prefs[(a, b)] = _pick([(a, sa), (b, sb)], max, TIE_TOLERANCE)
    return prefs


def universally_preferred(preferences):
    """The class preferred in every comparison it appears in, if any."""
    labels = []
    for pair in preferences:
        labels += [label for label in pair if label not in labels]
    for label in labels:
        if all(winner == label for pair, winner in preferences.items() if label in pair):
            return label
    return AMBIGUOUS


def eta_warning(etas, rel_tol=1e-9):
    """A warning message when the class normalization constants differ,
       or None when they agree within rel_tol."""
    values = list(etas.values()) if isinstance(etas, dict) else list(etas)
    if not values or max(values) - min(values) <= rel_tol * max(values):
        return None
    shown = ", ".join("%s: %.6g" % (label, eta) for label, eta in _labelled(etas))
    return "class normalization constants differ (%s); classification may not be valid" % shown
