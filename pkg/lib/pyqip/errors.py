#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


class QipError(Exception):
    """Root of every error raised by pyqip. Like the modem errors this was
       modelled on, an error may carry a (type, code) pair which is looked
       up in STRINGS to produce something a human can read, plus an
       optional free-form detail."""

    STRINGS = {
        "GATE": {
            1:  "Operand index out of range",
            2:  "Duplicate operands",
            3:  "Wrong number of operands for gate kind",
            4:  "Unknown gate kind",
            5:  "Rotation angle missing or not finite" },
        "STATE": {
            10: "Amplitude count is not a power of two",
            11: "State is not normalized",
            12: "Norm drifted beyond tolerance",
            13: "Qubit count mismatch",
            14: "Invalid measurement qubits",
            15: "Shot count must be at least 1" },
        "ENCODE": {
            20: "Feature count is not a power of two (pad explicitly)",
            21: "All-zero vector cannot be normalized",
            22: "Signed vector is identically zero",
            23: "Sample vectors must be binary",
            24: "Zero coefficient pair",
            25: "State not preparable by the supported gate set",
            26: "Test vector has no non-zero component to keep" },
        "ROUTE": {
            30: "Coupling graph is not connected",
            31: "Circuit is wider than the coupling graph",
            32: "Initial layout is not injective",
            33: "Coupling graph edge out of range or self-loop",
            34: "Routed gate not on a coupling edge" },
        "DATA": {
            40: "Vector length mismatch",
            41: "Empty class",
            42: "Fewer than two classes",
            43: "Malformed input",
            44: "Oracle count identity does not hold" },
        "PRECOND": {
            50: "SIP classification requires a sign precondition",
            51: "Quantum path supports exactly two classes",
            52: "Invalid configuration value" }}

    def __init__(self, type=None, code=None, detail=None):
        Exception.__init__(self, type, code, detail)
        self.type = type
        self.code = code
        self.detail = detail

    def __str__(self):
        if self.type and self.code:
            text = "%s ERROR %d: %s" % (
                self.type, self.code,
                self.STRINGS[self.type][self.code])

        # no type and/or code were provided
        else: text = "Unknown pyqip error"

        if self.detail:
            text += " (%s)" % self.detail
        return text


class QipInputError(QipError):
    pass


class QipParseError(QipInputError):
    def __init__(self, detail=None, line=None, filename=None):
        QipInputError.__init__(self, "DATA", 43, detail)
        self.line = line
        self.filename = filename

    def __str__(self):
        where = self.filename or "<input>"
        if self.line is not None:
            where = "%s:%d" % (where, self.line)
        return "%s: %s" % (where, QipInputError.__str__(self))


class QipGateError(QipInputError):
    pass


class QipNormError(QipError):
    pass


class QipEncodingError(QipError):
    pass


class QipRoutingError(QipError):
    pass


class QipPreconditionError(QipError):
    pass
