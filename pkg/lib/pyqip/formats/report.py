#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

import json

# longest histogram bar
BAR_WIDTH = 50


def report_json(report):
    return json.dumps(report.as_dict(), indent=2, sort_keys=True)


def histogram_lines(report, width=BAR_WIDTH):
    """ASCII bars over the four (swapper, class index) outcomes, the
       largest one `width` columns long."""
    if report.histogram is not None:
        counts = report.histogram.counts
        values = dict((k, v / float(report.shots)) for k, v in counts.items())
    else:
        values = report.probabilities

    top = max(values.values()) or 1.0
    lines = ["  s m   probability"]
    for outcome in sorted(values):
        p = values[outcome]
        bar = "#" * int(round(width * p / top))
        lines.append("  %s %s  %.6f %s" % (outcome[0], outcome[1], p, bar))
    return lines


def score_lines(scores):
    """The oracle table: one row per class."""
    lines = ["%-12s %8s %8s %8s %4s" % ("class", "sigma", "sigma11", "chi", "W")]
    for s in scores:
        lines.append("%-12s %8d %8d %8d %4d" % (s.label, s.sigma, s.sigma11, s.chi, s.members))
    return lines
