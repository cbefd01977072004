#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


from pyqip.oracle import AMBIGUOUS

# bump whenever as_dict() changes shape
SCHEMA_VERSION = 1


class RunReport(object):
    """The outcome of one Pipeline.run. Everything is fixed at creation;
       the attributes live behind read-only properties."""

    def __init__(self, metric, labels, predicted, oracle_class, probabilities,
                 histogram=None, shots=0, seed=0, sign_precondition=None,
                 etas=None, members=None, scores=(), swap_count=0, cswap_count=0,
                 pad_count=0, exclusion_map=None, data_qubits=0, prepared=True,
                 quantum=True, warnings=()):

        # move the arguments into "private" attrs,
        # to try to prevent them from being modified
        self._metric            = metric
        self._labels            = tuple(labels)
        self._predicted         = predicted
        self._oracle_class      = oracle_class
        self._probabilities     = dict(probabilities or {})
        self._histogram         = histogram
        self._shots             = shots
        self._seed              = seed
        self._sign_precondition = sign_precondition
        self._etas              = dict(etas or {})
        self._members           = dict(members or {})
        self._scores            = tuple(scores)
        self._swap_count        = swap_count
        self._cswap_count       = cswap_count
        self._pad_count         = pad_count
        self._exclusion_map     = None if exclusion_map is None else dict(exclusion_map)
        self._data_qubits       = data_qubits
        self._prepared          = prepared
        self._quantum           = quantum
        self._warnings          = tuple(warnings)

    def __repr__(self):
        return "<pyqip.RunReport %s: %s (oracle: %s)>" %\
            (self._metric.value, self._predicted, self._oracle_class)

    @property
    def metric(self):
        return self._metric

    @property
    def labels(self):
        """Class labels, indexed by the value of the class index qubit."""
        return self._labels

    @property
    def predicted(self):
        """The label the circuit picked, or AMBIGUOUS."""
        return self._predicted

    @property
    def oracle_class(self):
        return self._oracle_class

    @property
    def agrees(self):
        return self._predicted == self._oracle_class

    @property
    def ambiguous(self):
        return self._predicted is AMBIGUOUS

    @property
    def exact(self):
        return self._histogram is None

    @property
    def probabilities(self):
        """Exact {"sm": P} over the four (swapper, class index) outcomes."""
        return dict(self._probabilities)

    @property
    def histogram(self):
        return self._histogram

    @property
    def shots(self):
        return self._shots

    @property
    def seed(self):
        return self._seed

    @property
    def sign_precondition(self):
        return self._sign_precondition

    def rho(self, k):
        """rho_1k: exact in exact mode, the raw shot frequency otherwise."""
        if not self._quantum:
            return None
        if self._histogram is not None:
            return self._histogram["1%d" % k] / float(self._shots)
        return self._probabilities["1%d" % k]

    def exact_rho(self, k):
        return self._probabilities.get("1%d" % k)

    @property
    def rho10(self):
        return self.rho(0)

    @property
    def rho11(self):
        return self.rho(1)

    @property
    def ratio(self):
        """rho11 / rho10, or None where rho10 is 0 (see ratio_defined)."""
        if not self.ratio_defined:
            return None
        return self.rho11 / self.rho10

    @property
    def ratio_defined(self):
        return self._quantum and self.rho10 != 0

    @property
    def etas(self):
        return dict(self._etas)

    @property
    def members(self):
        """W, the number of training samples per class."""
        return dict(self._members)

    @property
    def scores(self):
        return self._scores

    @property
    def swap_count(self):
        return self._swap_count

    @property
    def cswap_count(self):
        return self._cswap_count

    @property
    def pad_count(self):
        return self._pad_count

    @property
    def exclusion_map(self):
        return None if self._exclusion_map is None else dict(self._exclusion_map)

    @property
    def data_qubits(self):
        return self._data_qubits

    @property
    def prepared(self):
        """False when the initial state had to be loaded, not built from gates."""
        return self._prepared

    @property
    def quantum(self):
        """False for oracle-only runs (more than two classes)."""
        return self._quantum

    @property
    def warnings(self):
        return self._warnings

    def as_dict(self):
        def _label(value):
            return None if value is AMBIGUOUS else value

        data = {
            "schema_version": SCHEMA_VERSION,
            "metric": self._metric.value,
            "labels": list(self._labels),
            "predicted": _label(self._predicted),
            "ambiguous": self.ambiguous,
            "oracle_class": _label(self._oracle_class),
            "agrees": self.agrees,
            "quantum": self._quantum,
            "mode": "exact" if self.exact else "sampled",
            "shots": self._shots,
            "seed": self._seed,
            "sign_precondition": self._sign_precondition.value if self._sign_precondition else None,
            "rho10": self.rho10,
            "rho11": self.rho11,
            "ratio": self.ratio,
            "ratio_defined": self.ratio_defined,
            "probabilities": self.probabilities,
            "counts": self._histogram.counts if self._histogram is not None else None,
            "eta": dict((str(k), v) for k, v in self._etas.items()),
            "members": dict((str(k), v) for k, v in self._members.items()),
            "oracle": [
                {"label": s.label, "sigma": s.sigma, "sigma11": s.sigma11,
                 "chi": s.chi, "members": s.members}
                for s in self._scores],
            "swap_count": self._swap_count,
            "cswap_count": self._cswap_count,
            "pad_count": self._pad_count,
            "exclusion_map": None if self._exclusion_map is None else
                dict((str(k), v) for k, v in self._exclusion_map.items()),
            "data_qubits": self._data_qubits,
            "prepared": self._prepared,
            "warnings": list(self._warnings) }

        # sampled runs still carry the exact values for comparison
        if not self.exact and self._quantum:
            data["rho10_exact"], data["rho11_exact"] = self.exact_rho(0), self.exact_rho(1)
        return data
