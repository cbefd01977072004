#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

import sys
from dataclasses import dataclass

from pyqip import errors
from pyqip.circuits import build_classifier, decompose_all
from pyqip.encoding import (
    FeatureVector, Metric, encode, eta, num_qubits_for, pad_to_power_of_two,
    zero_coefficient_exclusion)
from pyqip.oracle import (
    AMBIGUOUS, SignPrecondition, classify, eta_warning, multiclass_region, score_table)
from pyqip.report import RunReport
from pyqip.router import CouplingGraph, Router, swap_count
from pyqip.statevector import exact_probabilities, run_circuit, sample_measurements

# exact probabilities closer than this are a tie
RHO_TIE_TOLERANCE = 1e-12


class Dataset(object):
    """Labelled binary samples over F ordered regions. Labels keep the order
       in which they first appear, and that order gives each class its
       index: the first label is class 0."""

    def __init__(self, samples):
        self._samples = []
        for vector, label in samples:
            if not isinstance(vector, FeatureVector):
                vector = FeatureVector.sample(vector)
            if label is None or str(label) == "":
                raise errors.QipInputError("DATA", 43, "sample without a label")
            self._samples.append((vector, label))

        if not self._samples:
            raise errors.QipInputError("DATA", 41, "no samples")
        lengths = sorted(set(len(v) for v, _ in self._samples))
        if len(lengths) > 1:
            raise errors.QipInputError("DATA", 40, "lengths %s" % lengths)

    @classmethod
    def from_rows(cls, rows):
        """From (label, components) rows, the way a CSV file reads."""
        return cls([(FeatureVector.sample(comps), label) for label, comps in rows])

    @property
    def samples(self):
        return list(self._samples)

    @property
    def num_features(self):
        return len(self._samples[0][0])

    @property
    def labels(self):
        seen = []
        for _, label in self._samples:
            if label not in seen:
                seen.append(label)
        return seen

    def members(self, label):
        return [v for v, l in self._samples if l == label]

    def classes(self):
        """{label: member samples}, in label order."""
        return dict((label, self.members(label)) for label in self.labels)

    def __len__(self):
        return len(self._samples)

    def __eq__(self, other):
        return isinstance(other, Dataset) and self._samples == other.samples

    def __repr__(self):
        return "<pyqip.Dataset %d samples, %d regions, labels %r>" %\
            (len(self._samples), self.num_features, self.labels)


class RunConfig(object):
    """Settings for one run. Defaults live on the class; override them
       with kwargs, or on the instance after init. Values that arrive as
       strings (from a command line or an .ini file) are coerced."""

    metric = Metric.AIP
    shots = 0
    seed = 0
    sign_precondition = None
    graph = None
    pad_to_pow2 = False
    elide = True
    max_data_qubits = None
    streams = 1
    product_tolerance = 1e-9

    SETTINGS = (
        "metric", "shots", "seed", "sign_precondition", "graph", "pad_to_pow2",
        "elide", "max_data_qubits", "streams", "product_tolerance")
    INTEGERS = ("shots", "seed", "streams", "max_data_qubits")
    FLAGS = ("pad_to_pow2", "elide")

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            if key not in self.SETTINGS:
                raise TypeError("RunConfig() got an unexpected keyword argument %r" % key)
            setattr(self, key, self._coerce(key, value))

    def _coerce(self, key, value):
        if value is None:
            return value

        if key in self.INTEGERS:
            try:
                return int(value)
            except (TypeError, ValueError):
                raise errors.QipPreconditionError("PRECOND", 52, "%s=%r" % (key, value))

        if key in self.FLAGS and isinstance(value, str):
            return value.strip().lower() in ("1", "true", "yes", "on")

        if key == "product_tolerance":
            return float(value)
        if key == "metric":
            return Metric.parse(value)
        if key == "sign_precondition":
            return SignPrecondition.parse(value)
        return value

    def validate(self):
        """Raises QipPreconditionError for settings no run can use."""
        self.metric = Metric.parse(self.metric)
        self.sign_precondition = SignPrecondition.parse(self.sign_precondition)

        if self.metric is Metric.SIP and self.sign_precondition is None:
            raise errors.QipPreconditionError("PRECOND", 50)
        if self.shots < 0:
            raise errors.QipPreconditionError("PRECOND", 52, "shots=%d" % self.shots)
        if self.streams < 1:
            raise errors.QipPreconditionError("PRECOND", 52, "streams=%d" % self.streams)
        if self.max_data_qubits is not None and self.max_data_qubits < 1:
            raise errors.QipPreconditionError("PRECOND", 52, "max_data_qubits=%d" % self.max_data_qubits)
        if self.graph is not None and not isinstance(self.graph, CouplingGraph):
            raise errors.QipPreconditionError("PRECOND", 52, "graph must be a CouplingGraph")
        return self

    def __repr__(self):
        return "<pyqip.RunConfig %s shots=%d seed=%d>" % (self.metric, self.shots, self.seed)


@dataclass
class Encoded:
    """Everything Pipeline.encode works out before running a circuit."""
    circuit: object
    test: FeatureVector
    class_vectors: list
    pad_count: int = 0
    exclusion_map: dict = None


class Pipeline(object):
    """Runs two-class swap-test classifications end to end:

          >>> from pyqip.pipeline import Pipeline, Dataset
          >>> data = Dataset.from_rows([("disease", (0, 1)), ("normal", (1, 1))])
          >>> report = Pipeline().run(data, (1, 0))
          >>> report.predicted
          'normal'

       Warnings (unequal class sizes, unequal normalization constants, a
       loaded rather than prepared initial state) end up in the report
       and are sent to the logger."""

    LOG_LEVELS = {
        "traffic": 4,
        "debug":   3,
        "warn":    2,
        "error":   1 }

    def __init__(self, **kwargs):
        self.logger = kwargs.pop("logger", None)
        if kwargs:
            raise TypeError("Pipeline() got unexpected arguments: %s" % ", ".join(sorted(kwargs)))

    def _log(self, str_, type_="debug"):
        """Proxies a log message to this Pipeline's logger, if one has been
           set. The *logger* is a function of three arguments: the object
           logging (this Pipeline, or the Router it drives), the message,
           and one of the keys of LOG_LEVELS:

           >>> Pipeline(logger=Pipeline.logger)"""

        if self.logger is not None:
            self.logger(self, str_, type_)

    @staticmethod
    def logger(_source, message_, type_):
        print("%8s %s" % (type_, message_), file=sys.stderr)

    @classmethod
    def printer(cls, verbosity):
        """A stderr logger that drops messages above the given LOG_LEVELS
           verbosity (1 = errors only, 4 = everything)."""
        def _logger(source, message, type_):
            if cls.LOG_LEVELS.get(type_, 3) <= verbosity:
                cls.logger(source, message, type_)
        return _logger

    def build_class_vectors(self, dataset, metric=Metric.AIP, warnings=None):
        """Sums each class's samples into a class vector. Returns the class
           vectors in label order and {label: eta} under the metric."""
        vectors, etas = [], {}
        for label in dataset.labels:
            v = FeatureVector.class_of(dataset.members(label))
            vectors.append(v)
            etas[label] = eta(v, metric)
            self._log("class %r: W=%d, eta=%.6g" % (label, v.members, etas[label]))

        sizes = set(v.members for v in vectors)
        if len(sizes) > 1 and warnings is not None:
            self._warn(warnings, "classes have unequal training counts (%s)" % ", ".join(
                "%s: %d" % (label, v.members) for label, v in zip(dataset.labels, vectors)))
        return vectors, etas

    def _warn(self, warnings, message):
        warnings.append(message)
        self._log(message, "warn")

    def _fit_width(self, test, vectors, config, warnings):
        pad_count, exclusion_map = 0, None
        width = len(test)
        too_wide = config.max_data_qubits is not None and \
            width > (1 << config.max_data_qubits)

        if too_wide and config.metric is Metric.AIP:
            test, vectors, exclusion_map = zero_coefficient_exclusion(test, vectors, config.metric)
            self._log("zero-coefficient exclusion: %d regions down to %d" % (width, len(test)))
            width = len(test)

        # the circuit needs at least one data qubit
        if width < 2 or width & (width - 1):
            if not (config.pad_to_pow2 or exclusion_map is not None):
                raise errors.QipEncodingError("ENCODE", 20, "F=%d" % width)
            size = max(2, 1 << (width - 1).bit_length())
            test, pad_count = pad_to_power_of_two(test, size)
            vectors = [pad_to_power_of_two(v, size)[0] for v in vectors]
            self._log("padded %d regions with %d empty ones" % (width, pad_count))

        qubits = num_qubits_for(len(test))
        if config.max_data_qubits is not None and qubits > config.max_data_qubits:
            raise errors.QipPreconditionError(
                "PRECOND", 52, "%d data qubits needed, budget is %d" % (qubits, config.max_data_qubits))
        return test, vectors, pad_count, exclusion_map

    def encode(self, dataset, test, config=None, warnings=None):
        """Builds the classifier circuit for a two-class dataset."""
        config = (config or RunConfig()).validate()
        vectors, _ = self.build_class_vectors(dataset, config.metric)
        return self._encode(self._test_vector(dataset, test), vectors, config, warnings)

    def _encode(self, test, vectors, config, warnings=None):
        warnings = [] if warnings is None else warnings
        if len(vectors) != 2:
            raise errors.QipPreconditionError("PRECOND", 51, "%d classes" % len(vectors))

        test, vectors, pad_count, exclusion_map = self._fit_width(test, vectors, config, warnings)
        circuit = build_classifier(
            [encode(v, config.metric) for v in vectors],
            encode(test, config.metric),
            metric=config.metric, elide=config.elide, tol=config.product_tolerance)

        if not circuit.prepared:
            self._warn(warnings, "class or test state is entangled; initial state loaded directly")
        self._log("circuit: %d qubits, %d gates, %d CSWAPs" % (
            circuit.num_qubits, len(circuit.gates), circuit.cswap_count()))
        return Encoded(circuit, test, vectors, pad_count, exclusion_map)

    def _test_vector(self, dataset, test):
        if not isinstance(test, FeatureVector):
            test = FeatureVector.sample(test)
        if len(test) != dataset.num_features:
            raise errors.QipInputError(
                "DATA", 40, "test has %d regions, dataset %d" % (len(test), dataset.num_features))
        return test

    def _execute(self, circuit, config):
        """Returns (final state, measured physical qubits, inserted swaps)."""
        initial = circuit.initial()
        measured = circuit.measured_qubits()
        if config.graph is None:
            return run_circuit(circuit.gates, initial), measured, 0

        router = Router(config.graph, logger=self.logger)
        layout = list(range(circuit.num_qubits))
        routed, final_layout = router.route(decompose_all(circuit.gates), layout)
        state = run_circuit(routed, initial.permuted(layout, config.graph.num_qubits))
        return state, [final_layout[q] for q in measured], swap_count(routed)

    def _decide(self, rho, config, exact):
        """Class index the circuit picks: the smallest rho_1k unless
           mismatches are known to dominate a SIP, then the largest."""
        best = min
        if config.metric is Metric.SIP and config.sign_precondition is SignPrecondition.MISMATCHES:
            best = max
        target = best(rho.values())
        tol = RHO_TIE_TOLERANCE if exact else 0
        winners = [k for k, value in sorted(rho.items()) if abs(value - target) <= tol]
        return winners[0] if len(winners) == 1 else AMBIGUOUS

    def run(self, dataset, test, config=None, **kwargs):
        """Classifies one test sample against a dataset and returns a
           RunReport. `config` is a RunConfig; kwargs build one instead."""

        if config is None:
            config = RunConfig(**kwargs)
        elif kwargs:
            raise TypeError("run() takes either a config or kwargs, not both")
        config.validate()

        warnings = []
        test = self._test_vector(dataset, test)
        labels = dataset.labels
        if len(labels) < 2:
            raise errors.QipInputError("DATA", 42, "labels %r" % labels)

        vectors, etas = self.build_class_vectors(dataset, config.metric, warnings)
        message = eta_warning(etas)
        if message:
            self._warn(warnings, message)

        classes = dataset.classes()
        scores = score_table(test, classes)
        oracle_class = classify(test, classes, config.metric, config.sign_precondition)
        members = dict((label, v.members) for label, v in zip(labels, vectors))

        common = dict(
            shots=config.shots, seed=config.seed, sign_precondition=config.sign_precondition,
            etas=etas, members=members, scores=scores)

        if len(labels) > 2:
            self._warn(warnings, "%d classes: the circuit takes two, oracle-only run" % len(labels))
            predicted = oracle_class
            if config.metric is Metric.AIP:
                predicted = multiclass_region(test, dict(zip(labels, vectors)))
            return RunReport(
                config.metric, labels, predicted, oracle_class, {},
                quantum=False, warnings=warnings, **common)

        encoded = self._encode(test, vectors, config, warnings)
        circuit = encoded.circuit
        state, measured, swaps = self._execute(circuit, config)
        probabilities = exact_probabilities(state, measured)

        histogram = None
        if config.shots:
            histogram = sample_measurements(state, measured, config.shots, config.seed, config.streams)
            rho = dict((k, histogram["1%d" % k] / float(config.shots)) for k in (0, 1))
        else:
            rho = dict((k, probabilities["1%d" % k]) for k in (0, 1))

        index = self._decide(rho, config, histogram is None)
        predicted = AMBIGUOUS if index is AMBIGUOUS else labels[index]
        self._log("rho10=%.6f rho11=%.6f -> %s (oracle: %s)" % (rho[0], rho[1], predicted, oracle_class))
        if predicted != oracle_class:
            self._warn(warnings, "circuit picked %s, oracle picked %s" % (predicted, oracle_class))

        return RunReport(
            config.metric, labels, predicted, oracle_class, probabilities,
            histogram=histogram, swap_count=swaps, cswap_count=circuit.cswap_count(),
            pad_count=encoded.pad_count, exclusion_map=encoded.exclusion_map,
            data_qubits=circuit.roles.data_qubits, prepared=circuit.prepared,
            warnings=warnings, **common)


def run(dataset, test, config=None, logger=None, **kwargs):
    return Pipeline(logger=logger).run(dataset, test, config, **kwargs)
