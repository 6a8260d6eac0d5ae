"""Text notation for cochains: ``2*(ab,a) - 1/2*(ba,@e) + (b,b)``.

Paths are concatenated arrow ids; ``@v`` is the trivial path (or vertex
shortcut) at ``v``.  A bare vertex id is accepted as a shortcut when it is
not also an arrow id.  Output always writes vertices with ``@``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from qhh.cochains import Cochain, cochain_space
from qhh.quiver import ParallelPair, Path, Quiver

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?"
    r"\(\s*(?P<path>[^,()\s]+)\s*,\s*(?P<x>[^,()\s]+)\s*\)\s*"
)


def _vertex_or_arrow(quiver: Quiver, token: str) -> Path:
    if token.startswith("@"):
        vertex = token[1:]
        if vertex not in quiver.vertices:
            raise ValueError(f"unknown vertex {vertex!r}")
        return Path.trivial(vertex)
    if token in quiver._by_id:
        return Path.of((quiver.arrow(token),))
    if token in quiver.vertices:
        return Path.trivial(token)
    raise ValueError(f"{token!r} is neither an arrow nor a vertex")


def _path(quiver: Quiver, token: str) -> Path:
    if token.startswith("@"):
        return _vertex_or_arrow(quiver, token)
    return quiver.path(token)


def parse_cochain(quiver: Quiver, text: str) -> Cochain:
    pos, terms, degree = 0, {}, None
    text = text.strip()
    if not text:
        raise ValueError("empty cochain expression")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or (pos > 0 and m.group("sign") is None):
            raise ValueError(f"cannot parse cochain near {text[pos:]!r}")
        coef = Fraction(m.group("coef") or 1)
        if m.group("sign") == "-":
            coef = -coef
        pair = ParallelPair(_path(quiver, m.group("path")), _vertex_or_arrow(quiver, m.group("x")))
        if degree is None:
            degree = pair.degree
        elif pair.degree != degree:
            raise ValueError(f"mixed degrees {degree} and {pair.degree} in one cochain")
        terms[pair] = terms.get(pair, Fraction(0)) + coef
        pos = m.end()
    return Cochain(degree, terms)


def format_cochain(quiver: Quiver, c: Cochain) -> str:
    if not c:
        return "0"
    index = cochain_space(quiver, c.degree).index
    out = []
    for pair, coef in sorted(c.items(), key=lambda item: index[item[0]]):
        mag = abs(coef)
        body = str(pair) if mag == 1 else f"{mag}*{pair}"
        if not out:
            out.append(body if coef > 0 else "-" + body)
        else:
            out.append(("+ " if coef > 0 else "- ") + body)
    return " ".join(out)
