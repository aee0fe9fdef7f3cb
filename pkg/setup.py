#!/usr/bin/env python
# -*- encoding: utf-8 -*-
# flake8:  noqa
import os
import sys

from setuptools import setup, find_packages

try:
    execfile
except NameError:

    def execfile(filename):
        "To run in Python 3"
        import builtins

        exec_ = getattr(builtins, "exec")
        with open(filename, "rb") as f:
            code = compile(f.read().decode("utf-8"), filename, "exec")
            return exec_(code, globals())


# Import the version from the release module
project_name = os.environ.get("PROJECT_NAME", "xotl.kolmogorov")
_current_dir = os.path.dirname(os.path.abspath(__file__))
release = os.path.join(_current_dir, "xotl", "kolmogorov", "release.py")
execfile(release)  # Import the VERSION from the release module
version = VERSION  # noqa
dev_classifier = "Development Status :: 4 - Beta"

from setuptools.command.test import test as TestCommand


class PyTest(TestCommand):
    def finalize_options(self):
        TestCommand.finalize_options(self)
        self.test_args = []
        self.test_suite = True

    def run_tests(self):
        import pytest

        errno = pytest.main(self.test_args)
        sys.exit(errno)


setup(
    name=project_name,
    version=version,
    description="Extremal splines for the Kolmogorov problem and sharp inequalities",
    long_description=open(os.path.join(_current_dir, "README.rst")).read(),
    classifiers=[
        # Get from http://pypi.python.org/pypi?%3Aaction=list_classifiers
        dev_classifier,
        "Intended Audience :: Science/Research",
        (
            "License :: OSI Approved :: "
            "GNU General Public License v3 or later (GPLv3+)"
        ),
        "Operating System :: POSIX :: Linux",  # This is where we are
        # testing. Don't promise
        # anything else.
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="splines kolmogorov inequalities approximation",
    author="Merchise Autrement",
    author_email="project+kolmogorov@merchise.org",
    license="GPLv3+",
    tests_require=["pytest", "hypothesis"],
    namespace_packages=["xotl"],
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    zip_safe=False,
    python_requires=">=3.7",
    install_requires=[
        "typing-extensions>=3.7.4",
        "numpy>=1.17",
        "scipy>=1.3",
    ],
    entry_points={"console_scripts": ["kolmo = xotl.kolmogorov.cli.app:main"]},
    cmdclass={"test": PyTest},
)
