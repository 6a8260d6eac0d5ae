"""Seeded verification suites: algebraic identities and the bar-complex cross-check.

Each suite returns a list of ``CheckResult``.  Random inputs come from a
``random.Random(seed)`` so a given seed always replays the same cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from qhh import bar
from qhh.bracket import bracket_q, induced_bracket
from qhh.cochains import Cochain, coboundary, cochain_space, cohomology
from qhh.quiver import Quiver
from qhh.sl2 import sl2_elements


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def random_cochain(quiver: Quiver, n: int, rng: random.Random, terms: int = 4) -> Cochain:
    """Up to ``terms`` basis pairs with small integer coefficients (may be zero)."""
    basis = cochain_space(quiver, n).basis
    if not basis:
        return Cochain.zero(n)
    out: dict = {}
    for _ in range(terms):
        p = rng.choice(basis)
        out[p] = out.get(p, 0) + rng.randint(-3, 3)
    return Cochain(n, out)


def random_coboundary(quiver: Quiver, n: int, rng: random.Random) -> Cochain:
    if n == 0:
        return Cochain.zero(0)
    return coboundary(quiver, random_cochain(quiver, n - 1, rng))


def random_cocycle(quiver: Quiver, n: int, rng: random.Random) -> Cochain:
    space = cochain_space(quiver, n)
    total: dict = {}
    for row in cohomology(quiver, n).kernel.sparse_basis():
        c = rng.randint(-2, 2)
        if c:
            for j, v in row.items():
                total[j] = total.get(j, 0) + c * v
    return space.from_vector(total) + random_coboundary(quiver, n, rng)


def random_reduced_map(algebra: bar.FiniteAlgebra, arity: int, rng: random.Random) -> bar.ReducedMap:
    table = {}
    for word in bar.reduced_words(algebra, arity):
        table[word] = tuple(
            Fraction(rng.randint(-2, 2)) if bar._compatible(algebra, word, k) else Fraction(0)
            for k in range(algebra.dim)
        )
    return bar.ReducedMap(algebra, arity, table)


# ---------------------------------------------------------------------------


def _count(name: str, cases: int, failures: list[str]) -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)}/{cases} failed, first: {failures[0]}")
    return CheckResult(name, True, f"{cases} cases")


def check_d_squared(quiver: Quiver, rng: random.Random, cases: int, max_degree: int) -> CheckResult:
    bad = []
    for _ in range(cases):
        n = rng.randint(0, max_degree)
        c = random_cochain(quiver, n, rng)
        if coboundary(quiver, coboundary(quiver, c)):
            bad.append(f"degree {n}")
    return _count("d^2 = 0", cases, bad)


def check_antisymmetry(quiver: Quiver, rng: random.Random, cases: int, max_degree: int) -> CheckResult:
    bad = []
    for _ in range(cases):
        n, m = rng.randint(1, max_degree), rng.randint(1, max_degree)
        f, g = random_cochain(quiver, n, rng), random_cochain(quiver, m, rng)
        if bracket_q(f, g) != bracket_q(g, f) * -_sign((n - 1) * (m - 1)):
            bad.append(f"degrees ({n},{m})")
    return _count("graded antisymmetry", cases, bad)


def check_jacobi(quiver: Quiver, rng: random.Random, cases: int, max_degree: int) -> CheckResult:
    bad = []
    for _ in range(cases):
        n, m, p = (rng.randint(1, max_degree) for _ in range(3))
        f, g, h = (random_cochain(quiver, k, rng) for k in (n, m, p))
        total = (
            bracket_q(f, bracket_q(g, h)) * _sign((n - 1) * (p - 1))
            + bracket_q(g, bracket_q(h, f)) * _sign((m - 1) * (n - 1))
            + bracket_q(h, bracket_q(f, g)) * _sign((p - 1) * (m - 1))
        )
        if total:
            bad.append(f"degrees ({n},{m},{p})")
    return _count("graded Jacobi", cases, bad)


def check_leibniz(quiver: Quiver, rng: random.Random, cases: int, max_degree: int) -> CheckResult:
    """``d[f,g] = (-1)^(m-1) [df, g] + [f, dg]`` for ``g`` of degree ``m``."""
    bad = []
    for _ in range(cases):
        n, m = rng.randint(1, max_degree), rng.randint(1, max_degree)
        f, g = random_cochain(quiver, n, rng), random_cochain(quiver, m, rng)
        lhs = coboundary(quiver, bracket_q(f, g))
        rhs = bracket_q(coboundary(quiver, f), g) * _sign(m - 1) + bracket_q(f, coboundary(quiver, g))
        if lhs != rhs:
            bad.append(f"degrees ({n},{m})")
    return _count("d-Leibniz", cases, bad)


def check_representative_independence(quiver: Quiver, rng: random.Random, cases: int, max_degree: int) -> CheckResult:
    bad = []
    for _ in range(cases):
        n, m = rng.randint(1, max_degree), rng.randint(1, max_degree)
        f, g = random_cocycle(quiver, n, rng), random_cocycle(quiver, m, rng)
        f2 = f + random_coboundary(quiver, n, rng)
        g2 = g + random_coboundary(quiver, m, rng)
        if induced_bracket(quiver, f, g) != induced_bracket(quiver, f2, g2):
            bad.append(f"degrees ({n},{m})")
    return _count("representative independence", cases, bad)


def check_sl2_relations(quiver: Quiver) -> CheckResult:
    el = sl2_elements(quiver)
    H, E, F, I = el["H"], el["E"], el["F"], el["I"]
    expected = [
        ("[H,E]", bracket_q(H, E), E * 2),
        ("[H,F]", bracket_q(H, F), F * -2),
        ("[E,F]", bracket_q(E, F), H),
        ("[I,H]", bracket_q(I, H), Cochain.zero(1)),
        ("[I,E]", bracket_q(I, E), Cochain.zero(1)),
        ("[I,F]", bracket_q(I, F), Cochain.zero(1)),
    ]
    wrong = [name for name, got, want in expected if got != want]
    return CheckResult("sl2 relations", not wrong, ", ".join(wrong) or "6 relations")


def _is_two_loops(quiver: Quiver) -> bool:
    return len(quiver.vertices) == 1 and len(quiver.arrows) == 2


def properties_suite(quiver: Quiver, seed: int = 0, cases: int = 200, max_degree: int = 5) -> list[CheckResult]:
    results = []
    for k, check in enumerate(
        (check_d_squared, check_antisymmetry, check_jacobi, check_leibniz, check_representative_independence)
    ):
        rng = random.Random(seed * 1000 + k)
        results.append(check(quiver, rng, cases, max_degree))
    if _is_two_loops(quiver):
        results.append(check_sl2_relations(quiver))
    return results


# ---------------------------------------------------------------------------


def default_oracle_degree(quiver: Quiver) -> int:
    """Largest ``n <= 4`` whose degree-``n`` bar kernel fits in 81-entry tables."""
    d = len(quiver.vertices) + len(quiver.arrows)
    n = 4
    while n > 0 and d ** (n + 1) > 81:
        n -= 1
    return n


def _reduced_arities(algebra: bar.FiniteAlgebra, budget: int) -> list[int]:
    return [k for k in range(0, 5) if algebra.dim**k <= budget]


def check_s_after_p(algebra: bar.FiniteAlgebra, rng: random.Random, cases: int, budget: int) -> CheckResult:
    arities = _reduced_arities(algebra, budget)
    bad = []
    for _ in range(cases):
        k = rng.choice(arities)
        f = random_reduced_map(algebra, k, rng)
        if bar.s_cochain(bar.p_cochain(f, budget)) != f:
            bad.append(f"arity {k}")
    return _count("s.p = id", cases, bad)


def check_chain_maps(algebra: bar.FiniteAlgebra, rng: random.Random, cases: int, budget: int) -> CheckResult:
    """``p`` and ``s`` commute with the coboundaries."""
    arities = [k for k in _reduced_arities(algebra, budget) if algebra.dim ** (k + 1) <= budget]
    bad = []
    for _ in range(cases):
        k = rng.choice(arities)
        f = random_reduced_map(algebra, k, rng)
        F = bar.p_cochain(f, budget)
        if bar.p_cochain(bar.reduced_delta(f), budget) != bar.hochschild_delta(F, budget):
            bad.append(f"p, arity {k}")
        if bar.s_cochain(bar.hochschild_delta(F, budget)) != bar.reduced_delta(bar.s_cochain(F)):
            bad.append(f"s, arity {k}")
    return _count("p and s are cochain maps", cases, bad)


def check_transport(algebra: bar.FiniteAlgebra, rng: random.Random, cases: int, budget: int) -> CheckResult:
    pairs = [
        (n, m)
        for n in range(1, 5)
        for m in range(1, 5)
        if algebra.dim ** max(n, m, n + m - 1) <= budget
    ]
    bad = []
    for _ in range(cases):
        n, m = rng.choice(pairs)
        f, g = random_reduced_map(algebra, n, rng), random_reduced_map(algebra, m, rng)
        if not bar.verify_transport(f, g, budget):
            bad.append(f"arities ({n},{m})")
    return _count("bracket transport", cases, bad)


def check_identification(quiver: Quiver, rng: random.Random, cases: int, max_degree: int) -> CheckResult:
    """The reduced coboundary and bracket agree with the combinatorial ones."""
    algebra = bar.build_algebra(quiver)
    bad = []
    for _ in range(cases):
        n, m = rng.randint(1, max_degree), rng.randint(1, max_degree)
        f, g = random_cochain(quiver, n, rng), random_cochain(quiver, m, rng)
        rf = bar.cochain_to_reduced(algebra, f)
        if bar.reduced_to_cochain(rf) != f:
            bad.append(f"round trip, degree {n}")
        if bar.reduced_to_cochain(bar.reduced_delta(rf)) != coboundary(quiver, f):
            bad.append(f"coboundary, degree {n}")
        rg = bar.cochain_to_reduced(algebra, g)
        if bar.reduced_to_cochain(bar.reduced_bracket(rf, rg)) != bracket_q(f, g):
            bad.append(f"bracket, degrees ({n},{m})")
    return _count("combinatorial = reduced", cases, bad)


def oracle_suite(
    quiver: Quiver,
    seed: int = 0,
    cases: int = 200,
    n_max: int | None = None,
    budget: int = bar.DEFAULT_TABLE_BUDGET,
) -> list[CheckResult]:
    n_max = default_oracle_degree(quiver) if n_max is None else n_max
    report = bar.oracle_crosscheck(quiver, n_max, budget)
    results = [
        CheckResult(
            f"HH^0..HH^{n_max} dims (bar vs combinatorial)",
            report.dims_match,
            "dims " + ",".join(map(str, report.combinatorial_dims))
            + ("" if report.dims_match else " vs bar " + ",".join(map(str, report.bar_dims))),
        ),
        CheckResult(
            "basis brackets (bar vs combinatorial)",
            not report.mismatches,
            f"{report.bracket_pairs_checked} pairs, {report.exact_matches} equal as tables"
            + (f"; {report.mismatches[0]}" if report.mismatches else ""),
        ),
    ]
    algebra = bar.build_algebra(quiver)
    for k, check in enumerate((check_s_after_p, check_chain_maps, check_transport)):
        results.append(check(algebra, random.Random(seed * 1000 + 100 + k), cases, budget))
    results.append(check_identification(quiver, random.Random(seed * 1000 + 200), cases, 3))
    return results
