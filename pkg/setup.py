# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import os

from setuptools import find_packages, setup

requirements = [
    # Exact primality, valuations and the reference discriminants in the tests.
    "sympy>=1.9",
    # For the text output templates.
    "jinja2>=2.10",
    # To enable the parallelized execution of scans across processes.
    "cloudpickle>=1.1.1",
    # Progress bars
    "tqdm>=4.60.0",
    # For schema validation
    "jsonschema>=3.0.0",
]

description = "Exact singularity tests for tropical polynomials and tropical discriminants."

try:
    this_path = os.path.dirname(os.path.abspath(__file__))
    fn_readme = os.path.join(this_path, "README.md")
    with open(fn_readme) as fh:
        long_description = fh.read()
except OSError:
    long_description = description

setup(
    name="tropsing",
    version="0.3.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    package_data={"tropsing": ["templates/*.txt"]},
    zip_safe=False,
    maintainer="tropsing Developers",
    description=description,
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="tropical geometry singularity discriminant valuation newton polytope",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    entry_points={
        "console_scripts": [
            "tropsing = tropsing.__main__:main",
        ],
    },
    install_requires=requirements,
    python_requires=">=3.8, <4",
)
