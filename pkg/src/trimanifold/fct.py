"""Plain-text facet lists (FCT).

One facet per line as space-separated decimal vertex labels, ``#`` starts
a comment, blank lines are skipped.  Readers canonicalise through
:func:`~trimanifold.complexes.from_facets`; writers emit facets in
lexicographic order with no trailing whitespace, so equal complexes
serialise to identical bytes.
"""

from __future__ import annotations

import io
import os
from typing import TextIO

from .complexes import SimplicialComplex, from_facets
from .errors import EmptyComplexError, FctFormatError

__all__ = ["loads", "dumps", "read_fct", "write_fct"]


def loads(text: str) -> SimplicialComplex:
    """Parse facet-list text into a canonical complex."""
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        labels = []
        for token in body.split():
            try:
                v = int(token, 10)
            except ValueError:
                raise FctFormatError(lineno, f"bad vertex label {token!r}") from None
            if v < 0:
                raise FctFormatError(lineno, f"negative vertex label {v}")
            labels.append(v)
        facets.append(labels)
    if not facets:
        raise FctFormatError(0, "no facets in input")
    try:
        return from_facets(facets)
    except EmptyComplexError:
        raise FctFormatError(0, "no facets in input") from None


def dumps(x: SimplicialComplex) -> str:
    """Canonical text form, one facet per line."""
    return "".join(" ".join(str(v) for v in f) + "\n" for f in x.facets)


def read_fct(source: str | os.PathLike | TextIO) -> SimplicialComplex:
    """Read from a file path or an open text stream."""
    if isinstance(source, (str, bytes, os.PathLike)):
        with io.open(source, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    return loads(source.read())


def write_fct(x: SimplicialComplex, dest: str | os.PathLike | TextIO) -> None:
    """Write to a file path or an open text stream."""
    if isinstance(dest, (str, bytes, os.PathLike)):
        with io.open(dest, "w", encoding="utf-8") as fh:
            fh.write(dumps(x))
    else:
        dest.write(dumps(x))
