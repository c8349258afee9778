# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Output rendering for the command line interface.

Every command produces a JSON-compatible document. It is printed as JSON, as
CSV rows, or as text through the jinja2 templates in ``tropsing/templates``.
"""
import csv
import io
import json
import logging

import jinja2

from .util.misc import _format_rational

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "csv", "text")


def _join(items, separator=", "):
    """Join the string forms of the items."""
    return separator.join(str(item) for item in items)


def _monomials(exponents):
    """Format a list of exponent vectors, unwrapping univariate ones."""
    return "{" + _join(e[0] if len(e) == 1 else tuple(e) for e in exponents) + "}"


def template_environment():
    """Return the jinja2 environment for text output."""
    environment = jinja2.Environment(
        loader=jinja2.PackageLoader("tropsing", "templates"),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    environment.filters["rational"] = _format_rational
    environment.filters["join_items"] = _join
    environment.filters["monomials"] = _monomials
    return environment


def render_json(doc):
    """Render a document as indented JSON."""
    return json.dumps(doc, indent=2) + "\n"


def render_csv(header, rows):
    """Render rows (lists of scalars) with a header line as CSV."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_text(template, doc):
    """Render a document with the named template.

    Parameters
    ----------
    template : str
        Template file name in the package ``templates`` directory.
    doc : dict
        The document; its keys are the template context and the whole
        document is also available as ``doc``.

    """
    return template_environment().get_template(template).render(doc=doc, **doc)


def render(doc, output_format, template, table=None):
    """Render a command document in the requested format.

    Parameters
    ----------
    doc : dict
        The JSON-compatible document.
    output_format : str
        One of :data:`OUTPUT_FORMATS`.
    template : str
        Template used for text output.
    table : tuple
        ``(header, rows)`` used for CSV output. (Default value = None, which
        writes one ``key,value`` row per top-level entry)

    Returns
    -------
    str

    """
    if output_format == "json":
        return render_json(doc)
    if output_format == "csv":
        if table is None:
            table = (
                ["key", "value"],
                [
                    [key, value if isinstance(value, (str, int)) else json.dumps(value)]
                    for key, value in doc.items()
                ],
            )
        return render_csv(*table)
    if output_format == "text":
        return render_text(template, doc)
    raise ValueError(f"Unknown output format '{output_format}', expected one of {OUTPUT_FORMATS}.")
