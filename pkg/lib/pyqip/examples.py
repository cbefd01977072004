#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""The built-in example problems.

   5q-ex1   one data qubit per side. The disease class holds its CNV in
            the second of two regions, the normal class in both, and the
            test sample in the first only: rho10 = 1/4, rho11 = 1/8, and
            the sample is normal.
   14q-ex1  64 regions, six data qubits per side. Disease CNVs fill
            regions 1-32, normal CNVs 33-64, the test 1-16: rho10 = 1/8,
            rho11 = 1/4, and the sample is disease.
   14q-ex2  the same register under SIP, mismatches dominating. Class 0
            holds all 64 regions, class 1 the last 32 and the test the
            first 32: sigma = (0, -64), rho11 = 0, and the sample is
            class 0.
   schedule the three-slot warm-up: A = (1,0,0), B = (0,1,0), T = (0,1,1)
            under AIP. T shares a slot with B only, so T goes with B."""

from dataclasses import dataclass, field

from pyqip import errors
from pyqip.pipeline import Dataset, Pipeline, RunConfig


@dataclass(frozen=True)
class ExampleProblem:
    name: str
    dataset: Dataset
    test: tuple
    expected: object
    settings: dict = field(default_factory=dict)

    # rho11 / rho10 as published: closed form, simulator, real device.
    # the device figure includes noise we don't model; reference only
    reference: dict = None

    def config(self, **overrides):
        settings = dict(self.settings)
        settings.update(overrides)
        return RunConfig(**settings)

    def run(self, logger=None, **overrides):
        return Pipeline(logger=logger).run(self.dataset, self.test, self.config(**overrides))

    def circuit(self, **overrides):
        """The classifier circuit, without running it."""
        return Pipeline().encode(self.dataset, self.test, self.config(**overrides)).circuit


def _block(size, first, last):
    """1 in regions first..last (1-based, inclusive), 0 elsewhere."""
    return tuple(1 if first <= f <= last else 0 for f in range(1, size + 1))


PROBLEMS = dict((p.name, p) for p in [
    ExampleProblem(
        "5q-ex1",
        Dataset.from_rows([("disease", (0, 1)), ("normal", (1, 1))]),
        (1, 0), "normal",
        reference={"theory": 0.5, "simulator": 0.53, "hardware": 0.77}),

    ExampleProblem(
        "14q-ex1",
        Dataset.from_rows([("disease", _block(64, 1, 32)), ("normal", _block(64, 33, 64))]),
        _block(64, 1, 16), "disease",
        reference={"theory": 2.0, "simulator": 1.9, "hardware": 0.26}),

    ExampleProblem(
        "14q-ex2",
        Dataset.from_rows([("0", _block(64, 1, 64)), ("1", _block(64, 33, 64))]),
        _block(64, 1, 32), "0",
        settings={"metric": "sip", "sign_precondition": "mismatches"},
        reference={"theory": 0.0, "simulator": 0.0, "hardware": None}),

    ExampleProblem(
        "schedule",
        Dataset.from_rows([("A", (1, 0, 0)), ("B", (0, 1, 0))]),
        (0, 1, 1), "B",
        settings={"pad_to_pow2": True}),
])


def get(name):
    try:
        return PROBLEMS[name]
    except KeyError:
        raise errors.QipInputError(
            "DATA", 43, "unknown example %r (try %s)" % (name, ", ".join(sorted(PROBLEMS))))


def reference_table():
    """(name, theory, simulator, hardware) rows for the published ratios."""
    return [
        (name, p.reference["theory"], p.reference["simulator"], p.reference["hardware"])
        for name, p in sorted(PROBLEMS.items()) if p.reference]
