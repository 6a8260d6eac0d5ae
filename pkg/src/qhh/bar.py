"""Brute-force reference: Hochschild cochains of ``A = kQ/<Q_2>`` as full tables.

Everything here works on structure constants and tables indexed by tuples of
basis elements of ``A``.  It is exponential in the arity and only meant to
referee the combinatorial engine on tiny cases.

Basis of ``A``: the trivial paths ``e_i`` in vertex order, then the arrows.
Products follow the quiver convention: ``e_i a`` is ``a`` when ``a`` starts
at ``i`` and ``a e_j`` is ``a`` when ``a`` ends at ``j``; arrows multiply to 0.

The reduced complex lives on tuples of arrows that compose (tensor products
over ``E = kQ_0``); a reduced cochain of arity ``n`` is a table on paths of
length ``n`` whose value on ``gamma`` lies in ``e_s A e_t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from qhh.cochains import Cochain, cochain_space, cohomology
from qhh.errors import BudgetExceeded
from qhh.bracket import bracket_q
from qhh.linalg import ONE, ZERO, Matrix, Subspace, image_subspace, rank
from qhh.quiver import ParallelPair, Path, Quiver, enumerate_paths

DEFAULT_TABLE_BUDGET = 243

Vector = tuple  # of Fraction, length dim A


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    quiver: Quiver
    labels: tuple[str, ...]
    mult: tuple  # mult[i][j] -> {k: coefficient}
    idempotents: tuple[int, ...]
    radical: tuple[int, ...]
    ends: tuple[tuple[str, str], ...]  # (source, target) of each basis element
    _arrow_index: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def unit(self) -> Vector:
        return tuple(ONE if i in self.idempotents else ZERO for i in range(self.dim))

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def zero(self) -> Vector:
        return (ZERO,) * self.dim

    def multiply(self, u: Sequence, v: Sequence) -> Vector:
        out = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                for k, c in self.mult[i][j].items():
                    out[k] += ui * vj * c
        return tuple(out)

    def left(self, i: int, v: Sequence) -> Vector:
        return self.multiply(self.basis_vector(i), v)

    def right(self, v: Sequence, j: int) -> Vector:
        return self.multiply(v, self.basis_vector(j))

    def project_radical(self, v: Sequence) -> Vector:
        rad = set(self.radical)
        return tuple(x if i in rad else ZERO for i, x in enumerate(v))

    def composable(self, word: Sequence[int]) -> bool:
        """Whether a tuple of radical basis elements is a nonzero tensor over E."""
        return all(self.ends[x][1] == self.ends[y][0] for x, y in zip(word, word[1:]))

    def arrow_index(self, arrow_id: str) -> int:
        return self._arrow_index[arrow_id]

    def vertex_index(self, vertex: str) -> int:
        return self.quiver.vertices.index(vertex)

    def word_of(self, path: Path) -> tuple[int, ...]:
        return tuple(self._arrow_index[a.id] for a in path.arrows)

    def element_of(self, x: Path) -> int:
        """Basis index of a vertex (trivial path) or an arrow."""
        if x.is_trivial:
            return self.vertex_index(x.source)
        (arrow,) = x.arrows
        return self._arrow_index[arrow.id]

    def check_axioms(self) -> bool:
        d = self.dim
        basis = [self.basis_vector(i) for i in range(d)]
        for x, y, z in product(basis, repeat=3):
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                return False
        one = self.unit
        for x in basis:
            if self.multiply(one, x) != x or self.multiply(x, one) != x:
                return False
        for i, j in product(self.idempotents, repeat=2):
            expected = basis[i] if i == j else self.zero()
            if self.multiply(basis[i], basis[j]) != expected:
                return False
        for i, j in product(self.radical, repeat=2):
            if any(self.multiply(basis[i], basis[j])):
                return False
        return True


def build_algebra(quiver: Quiver) -> FiniteAlgebra:
    nv = len(quiver.vertices)
    labels = tuple(quiver.vertices) + tuple(a.id for a in quiver.arrows)
    ends = tuple((v, v) for v in quiver.vertices) + tuple((a.source, a.target) for a in quiver.arrows)
    d = len(labels)
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for i in range(nv):
        mult[i][i] = {i: ONE}
    for k, a in enumerate(quiver.arrows, start=nv):
        mult[quiver.vertices.index(a.source)][k] = {k: ONE}
        mult[k][quiver.vertices.index(a.target)] = {k: ONE}
    arrow_index = {a.id: k for k, a in enumerate(quiver.arrows, start=nv)}
    return FiniteAlgebra(
        quiver,
        labels,
        tuple(tuple(r) for r in mult),
        tuple(range(nv)),
        tuple(range(nv, d)),
        ends,
        arrow_index,
    )


def _check_budget(algebra: FiniteAlgebra, arity: int, budget: int) -> None:
    size = algebra.dim**arity
    if size > budget:
        raise BudgetExceeded(f"table of an arity-{arity} cochain", size, budget)


def _add_scaled(acc: list, coef, v: Sequence) -> None:
    if coef:
        for k, x in enumerate(v):
            if x:
                acc[k] += coef * x


class MultilinearMap:
    """A Hochschild cochain ``A^{(x)n} -> A`` stored as a dense table."""

    __slots__ = ("algebra", "arity", "table")

    def __init__(self, algebra: FiniteAlgebra, arity: int, table: Sequence[Vector]):
        if len(table) != algebra.dim**arity:
            raise ValueError("table size must be (dim A)^arity")
        self.algebra = algebra
        self.arity = arity
        self.table = tuple(tuple(Fraction(x) for x in v) for v in table)

    @classmethod
    def from_function(cls, algebra: FiniteAlgebra, arity: int, fn: Callable, budget=DEFAULT_TABLE_BUDGET):
        _check_budget(algebra, arity, budget)
        return cls(algebra, arity, [fn(t) for t in product(range(algebra.dim), repeat=arity)])

    @classmethod
    def zero(cls, algebra: FiniteAlgebra, arity: int) -> MultilinearMap:
        return cls(algebra, arity, [algebra.zero()] * algebra.dim**arity)

    def _index(self, word: Sequence[int]) -> int:
        idx = 0
        for x in word:
            idx = idx * self.algebra.dim + x
        return idx

    def __call__(self, word: Sequence[int]) -> Vector:
        return self.table[self._index(word)]

    def evaluate(self, vectors: Sequence[Sequence]) -> Vector:
        """Multilinear extension to arbitrary arguments."""
        acc = [ZERO] * self.algebra.dim
        supports = [[(i, x) for i, x in enumerate(v) if x] for v in vectors]
        for choice in product(*supports):
            coef = ONE
            for _, x in choice:
                coef *= x
            _add_scaled(acc, coef, self(tuple(i for i, _ in choice)))
        return tuple(acc)

    def words(self) -> Iterable[tuple[int, ...]]:
        return product(range(self.algebra.dim), repeat=self.arity)

    def to_vector(self) -> tuple[Fraction, ...]:
        return tuple(x for v in self.table for x in v)

    def __add__(self, other: MultilinearMap) -> MultilinearMap:
        self._same(other)
        return MultilinearMap(
            self.algebra, self.arity, [tuple(x + y for x, y in zip(u, v)) for u, v in zip(self.table, other.table)]
        )

    def __sub__(self, other: MultilinearMap) -> MultilinearMap:
        return self + other * -1

    def __mul__(self, scalar) -> MultilinearMap:
        s = Fraction(scalar)
        return MultilinearMap(self.algebra, self.arity, [tuple(s * x for x in v) for v in self.table])

    __rmul__ = __mul__

    def _same(self, other: MultilinearMap) -> None:
        if other.arity != self.arity or other.algebra is not self.algebra:
            raise ValueError("maps of different arity or algebra")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        return self.arity == other.arity and self.table == other.table

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.table)

    def __repr__(self) -> str:
        return f"MultilinearMap(arity={self.arity}, dim={self.algebra.dim})"


class ReducedMap:
    """An E-bimodule cochain ``r^{(x)_E n} -> A``, stored on paths of length ``n``.

    For arity 0 the single value lives in ``A^E``.
    """

    __slots__ = ("algebra", "arity", "table")

    def __init__(self, algebra: FiniteAlgebra, arity: int, table: dict):
        self.algebra = algebra
        self.arity = arity
        words = reduced_words(algebra, arity)
        clean = {}
        for w in words:
            v = tuple(Fraction(x) for x in table.get(w, algebra.zero()))
            for k, x in enumerate(v):
                if x and not _compatible(algebra, w, k):
                    raise ValueError(f"value on {w} has a component {algebra.labels[k]} with the wrong ends")
            clean[w] = v
        extra = set(table) - set(words)
        if extra:
            raise ValueError(f"entries on words that are not paths: {sorted(extra)[:3]}")
        self.table = clean

    @classmethod
    def zero(cls, algebra: FiniteAlgebra, arity: int) -> ReducedMap:
        return cls(algebra, arity, {})

    def __call__(self, word: Sequence[int]) -> Vector:
        word = tuple(word)
        if word in self.table:
            return self.table[word]
        if all(x in self.algebra.radical for x in word) and len(word) == self.arity:
            return self.algebra.zero()  # not composable: zero in the tensor over E
        raise KeyError(word)

    def __add__(self, other: ReducedMap) -> ReducedMap:
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        return ReducedMap(
            self.algebra,
            self.arity,
            {w: tuple(x + y for x, y in zip(v, other.table[w])) for w, v in self.table.items()},
        )

    def __sub__(self, other: ReducedMap) -> ReducedMap:
        return self + other * -1

    def __mul__(self, scalar) -> ReducedMap:
        s = Fraction(scalar)
        return ReducedMap(self.algebra, self.arity, {w: tuple(s * x for x in v) for w, v in self.table.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReducedMap):
            return NotImplemented
        return self.arity == other.arity and self.table == other.table

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.table.values())

    def __repr__(self) -> str:
        return f"ReducedMap(arity={self.arity}, paths={len(self.table)})"


def reduced_words(algebra: FiniteAlgebra, arity: int) -> tuple[tuple[int, ...], ...]:
    if arity == 0:
        return ((),)
    return tuple(algebra.word_of(p) for p in enumerate_paths(algebra.quiver, arity))


def _compatible(algebra: FiniteAlgebra, word: Sequence[int], k: int) -> bool:
    """Whether basis element ``k`` may appear in the value on ``word``."""
    src, tgt = algebra.ends[k]
    if not word:
        return src == tgt  # A^E
    return (src, tgt) == (algebra.ends[word[0]][0], algebra.ends[word[-1]][1])


# ---------------------------------------------------------------------------
# Hochschild coboundary


def hochschild_delta(f: MultilinearMap, budget: int = DEFAULT_TABLE_BUDGET) -> MultilinearMap:
    """Coboundary of ``f`` evaluated on every basis tuple of length ``n + 1``."""
    A, n = f.algebra, f.arity
    _check_budget(A, n + 1, budget)

    def value(word):
        acc = [ZERO] * A.dim
        first = A.basis_vector(word[0])
        _add_scaled(acc, ONE, A.multiply(first, f(word[1:])))
        for i in range(1, n + 1):
            prod = A.multiply(A.basis_vector(word[i - 1]), A.basis_vector(word[i]))
            merged = [A.basis_vector(x) for x in word[: i - 1]] + [prod] + [
                A.basis_vector(x) for x in word[i + 1 :]
            ]
            _add_scaled(acc, (-1) ** i, f.evaluate(merged))
        _add_scaled(acc, (-1) ** (n + 1), A.multiply(f(word[:n]), A.basis_vector(word[n])))
        return tuple(acc)

    return MultilinearMap.from_function(A, n + 1, value, budget)


def delta_matrix(algebra: FiniteAlgebra, n: int, budget: int = DEFAULT_TABLE_BUDGET) -> Matrix:
    """Matrix of the coboundary from arity ``n`` to arity ``n + 1``.

    Coordinates flatten a table word-major, component-minor, matching
    ``MultilinearMap.to_vector``.
    """
    A = algebra
    d = A.dim
    _check_budget(A, n + 1, budget)

    def idx(word):
        i = 0
        for x in word:
            i = i * d + x
        return i

    rows = []
    for word in product(range(d), repeat=n + 1):
        out = [{} for _ in range(d)]  # output component -> {column: coef}

        def put(c, col, v):
            out[c][col] = out[c].get(col, ZERO) + v

        tail = idx(word[1:])
        for k in range(d):
            for c, v in A.mult[word[0]][k].items():
                put(c, tail * d + k, v)
        for i in range(1, n + 1):
            for c_prod, v in A.mult[word[i - 1]][word[i]].items():
                col_word = word[: i - 1] + (c_prod,) + word[i + 1 :]
                base = idx(col_word) * d
                for k in range(d):
                    put(k, base + k, (-1) ** i * v)
        head = idx(word[:n])
        sign = (-1) ** (n + 1)
        for k in range(d):
            for c, v in A.mult[k][word[n]].items():
                put(c, head * d + k, sign * v)
        rows.extend(out)
    return Matrix(d ** (n + 2), d ** (n + 1), rows)


def bar_cohomology(algebra: FiniteAlgebra, n: int, budget: int = DEFAULT_TABLE_BUDGET) -> int:
    """dim ker(delta_n) - dim im(delta_{n-1}) on the full Hochschild complex."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    kernel_dim = algebra.dim ** (n + 1) - rank(delta_matrix(algebra, n, budget))
    image_dim = rank(delta_matrix(algebra, n - 1, budget)) if n > 0 else 0
    return kernel_dim - image_dim


def bar_image(algebra: FiniteAlgebra, n: int, budget: int = DEFAULT_TABLE_BUDGET) -> Subspace:
    """Coboundaries of arity ``n`` (image of delta_{n-1}) as a subspace of flattened tables."""
    if n == 0:
        return Subspace.zero(algebra.dim)
    return image_subspace(delta_matrix(algebra, n - 1, budget))


# ---------------------------------------------------------------------------
# Gerstenhaber composition on full tables


def circ_i_bar(f: MultilinearMap, g: MultilinearMap, i: int, budget: int = DEFAULT_TABLE_BUDGET) -> MultilinearMap:
    n, m = f.arity, g.arity
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    A = f.algebra

    def value(word):
        inner = g(word[i - 1 : i - 1 + m])
        acc = [ZERO] * A.dim
        for k, c in enumerate(inner):
            if c:
                _add_scaled(acc, c, f(word[: i - 1] + (k,) + word[i - 1 + m :]))
        return tuple(acc)

    return MultilinearMap.from_function(A, n + m - 1, value, budget)


def circ_bar(f: MultilinearMap, g: MultilinearMap, budget: int = DEFAULT_TABLE_BUDGET) -> MultilinearMap:
    n, m = f.arity, g.arity
    total = MultilinearMap.zero(f.algebra, n + m - 1)
    for i in range(1, n + 1):
        total = total + circ_i_bar(f, g, i, budget) * (-1) ** ((i - 1) * (m - 1))
    return total


def gerstenhaber_bracket_bar(f: MultilinearMap, g: MultilinearMap, budget: int = DEFAULT_TABLE_BUDGET) -> MultilinearMap:
    n, m = f.arity, g.arity
    if n < 1 or m < 1:
        raise ValueError("arities must be >= 1")
    return circ_bar(f, g, budget) - circ_bar(g, f, budget) * (-1) ** ((n - 1) * (m - 1))


# ---------------------------------------------------------------------------
# Reduced complex and the comparison maps


def reduced_delta(f: ReducedMap) -> ReducedMap:
    A, n = f.algebra, f.arity
    table = {}
    for word in reduced_words(A, n + 1):
        acc = [ZERO] * A.dim
        _add_scaled(acc, ONE, A.left(word[0], f(word[1:])))
        for i in range(1, n + 1):
            for c, v in A.mult[word[i - 1]][word[i]].items():
                merged = word[: i - 1] + (c,) + word[i + 1 :]
                if A.composable(merged):
                    _add_scaled(acc, (-1) ** i * v, f(merged))
        _add_scaled(acc, (-1) ** (n + 1), A.right(f(word[:n]), word[n]))
        table[word] = tuple(acc)
    return ReducedMap(A, n + 1, table)


def reduced_circ_i(f: ReducedMap, g: ReducedMap, i: int) -> ReducedMap:
    n, m = f.arity, g.arity
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    A = f.algebra
    table = {}
    for word in reduced_words(A, n + m - 1):
        inner = A.project_radical(g(word[i - 1 : i - 1 + m]))
        acc = [ZERO] * A.dim
        for k, c in enumerate(inner):
            if c:
                _add_scaled(acc, c, f(word[: i - 1] + (k,) + word[i - 1 + m :]))
        table[word] = tuple(acc)
    return ReducedMap(A, n + m - 1, table)


def reduced_bracket(f: ReducedMap, g: ReducedMap) -> ReducedMap:
    n, m = f.arity, g.arity
    if n < 1 or m < 1:
        raise ValueError("arities must be >= 1")

    def composite(u, v):
        total = ReducedMap.zero(u.algebra, u.arity + v.arity - 1)
        for i in range(1, u.arity + 1):
            total = total + reduced_circ_i(u, v, i) * (-1) ** ((i - 1) * (v.arity - 1))
        return total

    return composite(f, g) - composite(g, f) * (-1) ** ((n - 1) * (m - 1))


def p_cochain(f: ReducedMap, budget: int = DEFAULT_TABLE_BUDGET) -> MultilinearMap:
    """Precompose with the projection onto the radical (inclusion in arity 0)."""
    A = f.algebra
    rad = set(A.radical)

    def value(word):
        if not all(x in rad for x in word) or not A.composable(word):
            return A.zero()
        return f(word)

    return MultilinearMap.from_function(A, f.arity, value, budget)


def s_cochain(F: MultilinearMap) -> ReducedMap:
    """Restrict to ``r`` over ``E``, summing ``e_j0 F(e_j0 x1 e_j1 (x) ...) e_jn`` over idempotents."""
    A, n = F.algebra, F.arity
    table = {}
    for word in reduced_words(A, n):
        acc = [ZERO] * A.dim
        if n == 0:
            x = F(())
            for e in A.idempotents:
                _add_scaled(acc, ONE, A.right(A.left(e, x), e))
        else:
            for js in product(A.idempotents, repeat=n + 1):
                args = [A.right(A.left(js[k], A.basis_vector(word[k])), js[k + 1]) for k in range(n)]
                if not all(any(a) for a in args):
                    continue
                val = F.evaluate(args)
                _add_scaled(acc, ONE, A.right(A.left(js[0], val), js[-1]))
        table[word] = tuple(acc)
    return ReducedMap(A, n, table)


def cochain_to_reduced(algebra: FiniteAlgebra, c: Cochain) -> ReducedMap:
    """The identification of combinatorial cochains with reduced cochains."""
    table: dict = {}
    for pair, coef in c.items():
        word = algebra.word_of(pair.gamma)
        v = list(table.get(word, algebra.zero()))
        v[algebra.element_of(pair.x)] += coef
        table[word] = tuple(v)
    return ReducedMap(algebra, c.degree, table)


def reduced_to_cochain(f: ReducedMap) -> Cochain:
    A = f.algebra
    q = A.quiver
    terms = {}
    nv = len(q.vertices)
    for word, v in f.table.items():
        if word:
            gamma = Path.of(q.arrows[x - nv] for x in word)
        for k, coef in enumerate(v):
            if not coef:
                continue
            if k < nv:
                x = Path.trivial(q.vertices[k])
            else:
                x = Path.of((q.arrows[k - nv],))
            g = gamma if word else Path.trivial(x.source)
            terms[ParallelPair(g, x)] = coef
    return Cochain(f.arity, terms)


def verify_transport(f: ReducedMap, g: ReducedMap, budget: int = DEFAULT_TABLE_BUDGET) -> bool:
    """Check both identities relating the reduced bracket to the Gerstenhaber bracket."""
    reduced = reduced_bracket(f, g)
    full = gerstenhaber_bracket_bar(p_cochain(f, budget), p_cochain(g, budget), budget)
    return reduced == s_cochain(full) and p_cochain(reduced, budget) == full


# ---------------------------------------------------------------------------


@dataclass
class OracleReport:
    n_max: int
    combinatorial_dims: list[int]
    bar_dims: list[int]
    bracket_pairs_checked: int = 0
    exact_matches: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def dims_match(self) -> bool:
        return self.combinatorial_dims == self.bar_dims

    @property
    def ok(self) -> bool:
        return self.dims_match and not self.mismatches

    def lines(self) -> list[str]:
        out = []
        for n, (c, b) in enumerate(zip(self.combinatorial_dims, self.bar_dims)):
            out.append(f"HH^{n}: combinatorial {c}, bar {b} {'ok' if c == b else 'MISMATCH'}")
        out.append(
            f"brackets: {self.bracket_pairs_checked} basis pairs, "
            f"{self.exact_matches} equal as tables, {len(self.mismatches)} mismatches"
        )
        out.extend(self.mismatches)
        return out


def oracle_crosscheck(quiver: Quiver, n_max: int, budget: int = DEFAULT_TABLE_BUDGET) -> OracleReport:
    A = build_algebra(quiver)
    report = OracleReport(
        n_max,
        [cohomology(quiver, n).dim for n in range(n_max + 1)],
        [bar_cohomology(A, n, budget) for n in range(n_max + 1)],
    )
    for n, m in product(range(1, n_max + 1), repeat=2):
        k = n + m - 1
        if k > n_max or A.dim**k > budget:
            continue
        image = None
        left = cochain_space(quiver, n).basis
        right = cochain_space(quiver, m).basis
        lifted_left = [p_cochain(cochain_to_reduced(A, Cochain.basis(u)), budget) for u in left]
        lifted_right = [p_cochain(cochain_to_reduced(A, Cochain.basis(v)), budget) for v in right]
        for u, pu in zip(left, lifted_left):
            for v, pv in zip(right, lifted_right):
                report.bracket_pairs_checked += 1
                comb = bracket_q(Cochain.basis(u), Cochain.basis(v))
                lhs = p_cochain(cochain_to_reduced(A, comb), budget)
                rhs = gerstenhaber_bracket_bar(pu, pv, budget)
                if lhs == rhs:
                    report.exact_matches += 1
                    continue
                if image is None:
                    image = bar_image(A, k, budget)
                if not image.contains((lhs - rhs).to_vector()):
                    report.mismatches.append(f"degree {k}: [{u}, {v}] differs beyond a coboundary")
    return report
