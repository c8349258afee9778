# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Define the tropsing version."""

__version__ = "0.3.0"

__all__ = ["__version__"]
