# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Defines the API for the util subpackage."""
from . import cache, config, linalg, misc, simplex

__all__ = [
    "cache",
    "config",
    "linalg",
    "misc",
    "simplex",
]
