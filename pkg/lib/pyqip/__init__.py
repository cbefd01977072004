#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4


from pyqip.pipeline import Pipeline, Dataset, RunConfig
__doc__ = Pipeline.__doc__
