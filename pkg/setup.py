#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4 encoding=utf-8

# pyqip setup.py

import os
import re
import subprocess
import sys
import traceback

from setuptools import setup
from setuptools.command.build_py import build_py as _build_py

# Compile the list of packages available by walking lib/, rather
# than keeping a list here in step with the source tree.
wd = os.getcwd()
os.chdir('lib')
packages = [
    dir
    for dir,dirs,files
    in os.walk('pyqip')
    if '__init__.py' in files
    ]
os.chdir(wd)

# Releases get shipped with the version stored in the git tag, and
# installations (whether from releases or not) are tagged with a
# reasonably exact git version.
sys.path = ["lib"] + sys.path

def get_version():
    try:
        # do we have a static version set from an install?
        from pyqip.__version__ import VERSION as version
    except ImportError:
        # if not, can we figure it out from the git tag?
        try:
            described = subprocess.check_output(
                ["git", "describe", "--tags"],
                stderr=subprocess.DEVNULL).decode().strip()

            # v1.2-3-gabc1234 -> 1.2+3.gabc1234
            m = re.match(r"^v?(\d+(?:\.\d+)*)(?:-(\d+)-(g[0-9a-f]+))?$", described)
            version = m.group(1) if m else "unknown"
            if m and m.group(2):
                version += "+%s.%s" % (m.group(2), m.group(3))
        except (OSError, subprocess.CalledProcessError):
            # otherwise, give up!
            version = "unknown"
    return version

version = get_version()

class build_py (_build_py):
    def run (self):
        _build_py.run(self)
        if version == "unknown":
            print("pyqip version unknown! Is git in your path?")
        else:
            vstring = "VERSION = '%s'" % version
            vfilename = os.path.join(self.build_lib,
                        "pyqip", "__version__.py")
            try:
                with open(vfilename, 'w') as f:
                    f.write(vstring)
            except OSError:
                traceback.print_exc()
            print("setting %s in %s" % (vstring, vfilename))

setup(
    name = "pyqip",
    version = version if version != "unknown" else "0.0.0",
    description = "Swap-test inner-product classifiers on a statevector simulator",
    package_dir = {'': 'lib'},
    packages = packages,
    scripts = ['pyqip'],
    python_requires = ">=3.8",
    install_requires = ["numpy>=1.17", "networkx>=2.4"],
    extras_require = {"test": ["scipy", "mox3"]},
    cmdclass={'build_py': build_py},
    long_description = """
pyqip simulates the swap-test classifier circuits that compare a binary
test sample against two summed classes of training samples (active and
symmetric inner products), routes them onto hardware coupling graphs,
and checks every answer against the classical Hamming/inner-product
oracles.
"""
)
