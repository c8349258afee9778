# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Versioned on-disk cache for exact integer polynomials.

Entries are JSON files named ``<kind>-<d1>-<d2>....json`` under the cache
directory, holding the sorted term list. Files written by another cache
version are ignored and overwritten.
"""
import errno
import json
import logging
import os

logger = logging.getLogger(__name__)

CACHE_VERSION = 1


class PolynomialCache:
    """Cache of :class:`~.SparseIntegerPolynomial` objects keyed by kind and degrees.

    Parameters
    ----------
    cache_dir : str
        Directory for the cache files. It is created on first write. A value
        of None disables the cache.

    """

    def __init__(self, cache_dir):
        self.cache_dir = cache_dir

    def __repr__(self):
        return f"{type(self).__name__}(cache_dir={self.cache_dir!r})"

    def _fn(self, kind, degrees):
        name = "-".join([kind] + [str(d) for d in degrees]) + ".json"
        return os.path.join(self.cache_dir, name)

    def load(self, kind, degrees):
        """Return the cached polynomial or None on a miss."""
        from ..disc_newton import SparseIntegerPolynomial

        if self.cache_dir is None:
            return None
        fn = self._fn(kind, degrees)
        try:
            with open(fn) as file:
                doc = json.load(file)
        except OSError as error:
            if error.errno != errno.ENOENT:
                logger.warning("Unable to read cache file '%s': %s", fn, error)
            return None
        except ValueError:
            logger.warning("Ignoring corrupt cache file '%s'.", fn)
            return None
        if doc.get("version") != CACHE_VERSION:
            logger.warning(
                "Ignoring cache file '%s' written by cache version %s (expected %d).",
                fn,
                doc.get("version"),
                CACHE_VERSION,
            )
            return None
        logger.debug("Cache hit for %s%s.", kind, tuple(degrees))
        return SparseIntegerPolynomial(
            doc["nvars"], {tuple(exp): int(coeff) for exp, coeff in doc["terms"]}
        )

    def store(self, kind, degrees, polynomial):
        """Write a polynomial to the cache; failures are logged and ignored."""
        if self.cache_dir is None:
            return
        fn = self._fn(kind, degrees)
        doc = {
            "version": CACHE_VERSION,
            "kind": kind,
            "degrees": list(degrees),
            "nvars": polynomial.nvars,
            "terms": [[list(exp), str(coeff)] for exp, coeff in sorted(polynomial.items())],
        }
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            tmp = fn + ".tmp"
            with open(tmp, "w") as file:
                json.dump(doc, file)
            os.replace(tmp, fn)
        except OSError as error:
            logger.warning("Unable to write cache file '%s': %s", fn, error)
        else:
            logger.debug("Cached %s%s in '%s'.", kind, tuple(degrees), fn)
