#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# PyHiggs - Refined Higgs sheaf invariants
#
# Copyright 2021 The pyhiggs authors
#
# Licensed under the Apache License, Version 2.0 (the 'License');
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an 'AS IS' BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
from setuptools import setup, find_packages
from pyhiggs import __version__
import io
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with io.open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='pyhiggs',
    version=__version__,
    description='PyHiggs - Refined Higgs sheaf invariants',
    long_description=long_description,
    long_description_content_type="text/markdown",
    author='The pyhiggs authors',
    license='Apache',
    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Development Status :: 3 - Alpha',
        'Operating System :: OS Independent',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],
    platforms=['any'],
    keywords='higgs bundles, hitchin pairs, donaldson-thomas, wallcrossing, hodge polynomials',
    packages=find_packages(exclude=['contrib', 'docs', 'tests', 'examples']),
    package_data={'pyhiggs': ['fixtures/tables.txt']},
    python_requires='>=3.8',
    install_requires=['pandas>=1.0.0', 'numpy>=1.18.1', 'sympy>=1.9'],
    extras_require={'tests': ['pytest>=6.0', 'hypothesis>=6.0']},
    entry_points={'console_scripts': ['pyhiggs = pyhiggs.cli:main']}
)
