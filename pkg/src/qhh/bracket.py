"""Combinatorial Gerstenhaber structure on the cochains of a quiver.

A degree-``n`` cochain has Lie degree ``n - 1``.  The elementary operation is

    (alpha, x) o_i (beta, y) = [a_i == y] * (alpha <>_i beta, x)

where ``alpha <>_i beta`` splices ``beta`` in place of the ``i``-th arrow of
``alpha``.  Pairs whose shortcut ``y`` is a vertex never contribute.
"""

from __future__ import annotations

from fractions import Fraction

from qhh.cochains import Cochain, _Accumulator, cohomology, coboundary
from qhh.quiver import ParallelPair, Quiver, substitute


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def circ_i(f: Cochain, g: Cochain, i: int) -> Cochain:
    n, m = f.degree, g.degree
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    by_arrow: dict = {}
    for (beta_pair, coef) in g.items():
        if not beta_pair.is_vertex:
            by_arrow.setdefault(beta_pair.x.arrows[0], []).append((beta_pair.gamma, coef))
    out = _Accumulator()
    for alpha_pair, a_coef in f.items():
        for beta, b_coef in by_arrow.get(alpha_pair.gamma.arrows[i - 1], ()):
            spliced = substitute(alpha_pair.gamma, i, beta)
            out.add(ParallelPair(spliced, alpha_pair.x), a_coef * b_coef)
    return Cochain(n + m - 1, out)


def circ(f: Cochain, g: Cochain) -> Cochain:
    """Signed sum of ``f o_i g`` over all positions ``i``."""
    n, m = f.degree, g.degree
    if n < 1:
        raise ValueError("the left argument must have degree >= 1")
    total = Cochain.zero(n + m - 1)
    for i in range(1, n + 1):
        term = circ_i(f, g, i)
        total = total + term if _sign((i - 1) * (m - 1)) > 0 else total - term
    return total


def bracket_q(f: Cochain, g: Cochain) -> Cochain:
    n, m = f.degree, g.degree
    if n < 1 or m < 1:
        raise ValueError("the bracket is defined on cochains of degree >= 1")
    return circ(f, g) - _sign((n - 1) * (m - 1)) * circ(g, f)


def induced_bracket(quiver: Quiver, c1: Cochain, c2: Cochain, budget: int | None = None) -> Cochain:
    """Bracket of two cohomology classes, returned as the canonical representative."""
    for c in (c1, c2):
        if coboundary(quiver, c):
            raise ValueError(f"degree-{c.degree} argument is not a cocycle")
    target = cohomology(quiver, c1.degree + c2.degree - 1, budget)
    return target.reduce(bracket_q(c1, c2))


def hh1_action(quiver: Quiver, x: Cochain, c: Cochain, budget: int | None = None) -> Cochain:
    """Action of a class in HH^1 on a class in HH^n."""
    if x.degree != 1:
        raise ValueError("the acting element must have degree 1")
    return induced_bracket(quiver, x, c, budget)


def act_on_pair(x: ParallelPair, target: ParallelPair) -> dict[ParallelPair, Fraction]:
    """Closed form of ``[(a, x), (alpha, y)]`` for a degree-one pair ``(a, x)``.

    ``(a,x).(alpha,y) = [a == y] (alpha, x) - sum_i [a_i == x] (alpha <>_i a, y)``
    """
    if x.degree != 1:
        raise ValueError("the acting pair must have degree 1")
    out = _Accumulator()
    a_path = x.gamma
    if not target.is_vertex and target.x == a_path:
        out.add(ParallelPair(target.gamma, x.x), Fraction(1))
    if not x.is_vertex:
        shortcut = x.x.arrows[0]
        for i, arrow in enumerate(target.gamma.arrows, start=1):
            if arrow == shortcut:
                out.add(ParallelPair(substitute(target.gamma, i, a_path), target.x), Fraction(-1))
    return {p: v for p, v in out.items() if v}
