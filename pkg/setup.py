#!/usr/bin/env python3
"""
Setup script for hypsec
"""

from setuptools import setup, find_packages
import os

# Read the version from src/__init__.py
about = {}
with open(os.path.join("src", "__init__.py"), "r", encoding="utf-8") as f:
    exec(f.read(), about)

# Runtime requirements only; the dev tools section starts at the marker
with open("requirements.txt", "r", encoding="utf-8") as f:
    requirements = []
    for line in f:
        line = line.strip()
        if line.startswith("# Development"):
            break
        if line and not line.startswith("#"):
            requirements.append(line)

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="hypsec",
    version=about["__version__"],
    description="Exact graded Lie algebras of surfaces and configuration spaces, with section-obstruction checks",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["main"],
    include_package_data=True,
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "hypsec=main:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.9",
)
