#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


from pyqip.report.runreport import RunReport, SCHEMA_VERSION
