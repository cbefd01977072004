#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


from pyqip.formats.dataset import parse_dataset, read_dataset, format_dataset
from pyqip.formats.circuit import parse_circuit, read_circuit, format_circuit
from pyqip.formats.graph import parse_graph, read_graph, format_graph
from pyqip.formats.report import report_json, histogram_lines, score_lines
