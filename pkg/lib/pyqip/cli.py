#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""pyqip command line:

     pyqip example 5q-ex1 [--shots 8192 --seed 1]
     pyqip example --reference
     pyqip classify DATASET TEST [--metric sip --sign mismatches]
     pyqip route CIRCUIT GRAPH [--layout 0,1,2]
     pyqip oracle DATASET TEST

   Reports go to stdout (or --out) as JSON; histograms, tables and log
   messages go to stderr."""

import sys
from argparse import ArgumentParser

from pyqip import errors, examples
from pyqip.circuits import decompose_all
from pyqip.encoding import Metric
from pyqip.formats import (
    format_circuit, histogram_lines, read_circuit, read_dataset, read_graph,
    report_json, score_lines)
from pyqip.oracle import AMBIGUOUS, SignPrecondition, classify, score_table
from pyqip.pipeline import Pipeline, RunConfig
from pyqip.router import Router, check_conformance, swap_count

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_AMBIGUOUS = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4


def _run_flags(parser):
    parser.add_argument("--shots", type=int, default=0, help="0 for exact probabilities")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--streams", type=int, default=1, help="independent sampling streams")
    parser.add_argument("--graph", help="coupling graph JSON to route onto")
    parser.add_argument("--out", help="write the JSON report here instead of stdout")


def _metric_flags(parser):
    parser.add_argument("--metric", choices=[m.value for m in Metric], default="aip")
    parser.add_argument("--sign", choices=[s.value for s in SignPrecondition],
                        help="whether matches or mismatches dominate (SIP only)")


class _Parser(ArgumentParser):
    """Usage errors are input errors; argparse's own exit status 2
       would read as EXIT_AMBIGUOUS."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise errors.QipInputError("DATA", 43, message)


def build_parser():
    parser = _Parser(prog="pyqip", description="Swap-test inner-product classifiers.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v warnings, -vv debug, -vvv every gate and swap")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    p = commands.add_parser("example", help="reproduce a built-in example problem")
    p.add_argument("name", nargs="?", help="one of %s" % ", ".join(sorted(examples.PROBLEMS)))
    p.add_argument("--reference", action="store_true",
                   help="print the published rho11/rho10 ratios and exit")
    _run_flags(p)

    p = commands.add_parser("classify", help="classify test samples against a dataset")
    p.add_argument("dataset")
    p.add_argument("test")
    _metric_flags(p)
    _run_flags(p)
    p.add_argument("--pad", action="store_true", help="pad regions up to a power of two")
    p.add_argument("--max-qubits", type=int, help="data qubit budget per side")
    p.add_argument("--no-elide", action="store_true", help="swap every data qubit pair")

    p = commands.add_parser("route", help="insert SWAPs so a circuit fits a coupling graph")
    p.add_argument("circuit")
    p.add_argument("graph")
    p.add_argument("--layout", help="initial physical qubit of each logical qubit, e.g. 2,0,1")
    p.add_argument("--decompose", action="store_true", help="split CSWAPs into CNOT/TOFFOLI first")
    p.add_argument("--out", help="write the routed circuit here instead of stdout")

    p = commands.add_parser("oracle", help="classical sigma, sigma11 and chi per class")
    p.add_argument("dataset")
    p.add_argument("test")
    _metric_flags(p)

    return parser


def _emit(text, out):
    if out:
        with open(out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def _show(lines):
    for line in lines:
        print(line, file=sys.stderr)


def _test_rows(path):
    return [cells for _, cells in read_dataset(path, require_labels=False)]


def _reference():
    _show(["%-10s %8s %10s %9s" % ("example", "theory", "simulator", "hardware")])
    for name, theory, simulator, hardware in examples.reference_table():
        _show(["%-10s %8.3g %10.3g %9s" % (
            name, theory, simulator, "n/a" if hardware is None else "%.3g" % hardware)])
    return EXIT_OK


def cmd_example(args, logger):
    if args.reference:
        return _reference()
    if args.name is None:
        raise errors.QipInputError("DATA", 43, "example name required")

    problem = examples.get(args.name)
    graph = read_graph(args.graph) if args.graph else None
    report = problem.run(
        logger=logger, shots=args.shots, seed=args.seed, streams=args.streams, graph=graph)

    _show(histogram_lines(report))
    _emit(report_json(report), args.out)

    if report.ambiguous:
        return EXIT_AMBIGUOUS
    return EXIT_OK if report.predicted == problem.expected else EXIT_MISMATCH


def _config(args, graph=None):
    return RunConfig(
        metric=args.metric, sign_precondition=args.sign, shots=args.shots,
        seed=args.seed, streams=args.streams, graph=graph, pad_to_pow2=args.pad,
        max_data_qubits=args.max_qubits, elide=not args.no_elide)


def cmd_classify(args, logger):
    dataset = read_dataset(args.dataset)
    tests = _test_rows(args.test)
    graph = read_graph(args.graph) if args.graph else None
    config = _config(args, graph).validate()

    pipeline = Pipeline(logger=logger)
    reports = [pipeline.run(dataset, cells, config) for cells in tests]
    for report in reports:
        _show(histogram_lines(report) if report.quantum else [])

    if len(reports) == 1:
        _emit(report_json(reports[0]), args.out)
    else:
        _emit("[\n%s\n]" % ",\n".join(report_json(r) for r in reports), args.out)

    return EXIT_AMBIGUOUS if any(r.ambiguous for r in reports) else EXIT_OK


def _layout(text):
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise errors.QipInputError("DATA", 43, "layout %r" % text)


def cmd_route(args, logger):
    gates = read_circuit(args.circuit)
    graph = read_graph(args.graph)
    if args.decompose:
        gates = decompose_all(gates)

    layout = _layout(args.layout) if args.layout else None
    routed, final = Router(graph, logger=logger).route(gates, layout)

    offending = check_conformance(routed, graph)
    if offending:
        raise errors.QipRoutingError("ROUTE", 34, str(offending[0]))

    count = swap_count(routed)
    _emit(format_circuit(routed, ["swaps: %d" % count]).rstrip("\n"), args.out)
    _show(["final layout: %s" % " ".join("%d->%d" % kv for kv in sorted(final.items()))])
    return EXIT_OK


def cmd_oracle(args, logger):
    dataset = read_dataset(args.dataset)
    classes = dataset.classes()
    ambiguous = False

    for cells in _test_rows(args.test):
        # class_score checks sigma and -chi against the match counts
        print("\n".join(score_lines(score_table(cells, classes))))

        if args.metric == "aip" or args.sign:
            winner = classify(cells, classes, args.metric, args.sign)
            ambiguous |= winner is AMBIGUOUS
            print("class: %s" % winner)

    return EXIT_AMBIGUOUS if ambiguous else EXIT_OK


COMMANDS = {
    "example":  cmd_example,
    "classify": cmd_classify,
    "route":    cmd_route,
    "oracle":   cmd_oracle }


def main(argv=None):
    # don't let exceptions escape to the shell as tracebacks;
    # each kind of failure gets its own exit code instead
    try:
        args = build_parser().parse_args(argv)
        logger = Pipeline.printer(1 + args.verbose) if args.verbose else None
        return COMMANDS[args.command](args, logger)

    except errors.QipPreconditionError as err:
        print("pyqip: %s" % err, file=sys.stderr)
        return EXIT_PRECONDITION

    except (errors.QipError, OSError) as err:
        print("pyqip: %s" % err, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
