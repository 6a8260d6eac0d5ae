"""The combinatorial cochain complex of a quiver and its cohomology.

In degree ``n`` the cochains are spanned by the parallel pairs
``Q_n || Q_0`` (pointed cycles) followed by ``Q_n || Q_1`` (shortcuts).
The differential sends ``(gamma, e)`` to ``D_n(gamma, e)`` in the shortcut
block of degree ``n + 1`` and kills shortcut pairs, since a product of two
arrows vanishes in ``kQ/<Q_2>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from qhh.linalg import ONE, ZERO, Matrix, Subspace, image_subspace, kernel_basis
from qhh.quiver import ParallelPair, Path, Quiver, default_budget, parallel_pairs


class Cochain:
    """Finitely supported rational combination of parallel pairs of one degree."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[ParallelPair, object] | None = None):
        self.degree = degree
        clean = {}
        for pair, coef in (terms or {}).items():
            if pair.degree != degree:
                raise ValueError(f"pair {pair} does not have degree {degree}")
            coef = coef if isinstance(coef, Fraction) else Fraction(coef)
            if coef:
                clean[pair] = coef
        self._terms = clean

    @classmethod
    def _raw(cls, degree: int, terms: dict) -> Cochain:
        c = cls.__new__(cls)
        c.degree = degree
        c._terms = {p: v for p, v in terms.items() if v}
        return c

    @classmethod
    def basis(cls, pair: ParallelPair, coef=1) -> Cochain:
        return cls(pair.degree, {pair: coef})

    @classmethod
    def zero(cls, degree: int) -> Cochain:
        return cls._raw(degree, {})

    def items(self) -> Iterator[tuple[ParallelPair, Fraction]]:
        return iter(self._terms.items())

    def __getitem__(self, pair: ParallelPair) -> Fraction:
        return self._terms.get(pair, ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: Cochain) -> None:
        if not isinstance(other, Cochain):
            raise TypeError(f"cannot combine a cochain with {type(other).__name__}")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: Cochain) -> Cochain:
        self._check(other)
        out = dict(self._terms)
        for p, v in other._terms.items():
            out[p] = out.get(p, ZERO) + v
        return Cochain._raw(self.degree, out)

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def __neg__(self) -> Cochain:
        return Cochain._raw(self.degree, {p: -v for p, v in self._terms.items()})

    def __mul__(self, scalar) -> Cochain:
        s = scalar if isinstance(scalar, Fraction) else Fraction(scalar)
        return Cochain._raw(self.degree, {p: s * v for p, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terms:
            return f"Cochain({self.degree}, 0)"
        body = " + ".join(f"{v}*{p}" for p, v in self._terms.items())
        return f"Cochain({self.degree}, {body})"


class _Accumulator(dict):
    def add(self, pair: ParallelPair, coef: Fraction) -> None:
        self[pair] = self.get(pair, ZERO) + coef


class CochainSpace:
    """Ordered basis of degree-``n`` cochains: vertex pairs, then arrow pairs."""

    def __init__(self, quiver: Quiver, n: int, budget: int | None = None):
        self.quiver = quiver
        self.degree = n
        self.vertex_pairs = parallel_pairs(quiver, n, "vertex", budget)
        self.arrow_pairs = parallel_pairs(quiver, n, "arrow", budget)
        self.basis = self.vertex_pairs + self.arrow_pairs
        self.index = {p: i for i, p in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_dim(self) -> int:
        return len(self.vertex_pairs)

    def to_sparse(self, c: Cochain) -> dict[int, Fraction]:
        if c.degree != self.degree:
            raise ValueError(f"cochain of degree {c.degree} in a degree-{self.degree} space")
        try:
            return {self.index[p]: v for p, v in c.items()}
        except KeyError as exc:
            raise ValueError(f"pair {exc.args[0]} is not in this quiver's basis") from None

    def to_vector(self, c: Cochain) -> tuple[Fraction, ...]:
        sparse = self.to_sparse(c)
        return tuple(sparse.get(i, ZERO) for i in range(self.dim))

    def from_vector(self, v) -> Cochain:
        items = v.items() if isinstance(v, dict) else enumerate(v)
        return Cochain._raw(self.degree, {self.basis[i]: Fraction(x) for i, x in items if x})


@lru_cache(maxsize=64)
def cochain_space(quiver: Quiver, n: int, budget: int | None = None) -> CochainSpace:
    return CochainSpace(quiver, n, budget)


def d_image(quiver: Quiver, gamma: Path, vertex: str) -> dict[ParallelPair, Fraction]:
    """``D_n(gamma, e)`` as a map from shortcut pairs of degree ``n + 1`` to coefficients."""
    n = gamma.length
    sign = ONE if n % 2 == 1 else -ONE  # (-1)^(n+1)
    out = _Accumulator()
    for a in quiver.in_arrows(vertex):
        arrow = Path.of((a,))
        out.add(ParallelPair(arrow * gamma, arrow), ONE)
    for a in quiver.out_arrows(vertex):
        arrow = Path.of((a,))
        out.add(ParallelPair(gamma * arrow, arrow), sign)
    return {p: v for p, v in out.items() if v}


def d_map(quiver: Quiver, n: int, budget: int | None = None) -> Matrix:
    """Matrix of ``D_n : k(Q_n || Q_0) -> k(Q_{n+1} || Q_1)``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    domain = cochain_space(quiver, n, budget).vertex_pairs
    target = cochain_space(quiver, n + 1, budget)
    row_of = {p: i for i, p in enumerate(target.arrow_pairs)}
    columns = [
        {row_of[p]: v for p, v in d_image(quiver, pair.gamma, pair.x.source).items()}
        for pair in domain
    ]
    return Matrix.from_columns(len(target.arrow_pairs), columns)


def full_differential(quiver: Quiver, n: int, budget: int | None = None) -> Matrix:
    """Degree-``n`` differential on the whole cochain space."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    src = cochain_space(quiver, n, budget)
    dst = cochain_space(quiver, n + 1, budget)
    columns = []
    for pair in src.basis:
        if pair.is_vertex:
            col = {dst.index[p]: v for p, v in d_image(quiver, pair.gamma, pair.x.source).items()}
        else:
            col = {}
        columns.append(col)
    return Matrix.from_columns(dst.dim, columns)


def coboundary(quiver: Quiver, c: Cochain) -> Cochain:
    """Apply the differential to a cochain directly, without building a matrix."""
    out = _Accumulator()
    for pair, coef in c.items():
        if pair.is_vertex:
            for p, v in d_image(quiver, pair.gamma, pair.x.source).items():
                out.add(p, coef * v)
    return Cochain(c.degree + 1, out)


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    degree: int
    dim: int
    representatives: tuple[Cochain, ...]
    image: Subspace
    kernel: Subspace
    space: CochainSpace

    def is_cocycle(self, c: Cochain) -> bool:
        return self.kernel.contains(self.space.to_sparse(c))

    def reduce(self, c: Cochain) -> Cochain:
        """Canonical representative of the class of ``c`` (coset of the image)."""
        return self.space.from_vector(self.image.reduce_sparse(self.space.to_sparse(c)))

    def coordinates(self, c: Cochain) -> tuple[Fraction, ...]:
        """Coordinates of the class of the cocycle ``c`` in the representative basis."""
        if not self.is_cocycle(c):
            raise ValueError("not a cocycle")
        reduced = self.image.reduce_sparse(self.space.to_sparse(c))
        return tuple(reduced.get(p, ZERO) for p in self._rep_pivots)

    @property
    def _rep_pivots(self) -> tuple[int, ...]:
        return tuple(min(self.space.to_sparse(r)) for r in self.representatives)


def cohomology(quiver: Quiver, n: int, budget: int | None = None) -> CohomologyGroup:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _cohomology(quiver, n, default_budget() if budget is None else budget)


@lru_cache(maxsize=64)
def _cohomology(quiver: Quiver, n: int, budget: int) -> CohomologyGroup:
    # The differential is block shaped, so the kernel is ker D_n plus the
    # whole shortcut block and the image is Im D_{n-1} inside that block.
    space = cochain_space(quiver, n, budget)
    offset = space.vertex_dim
    ker_d = kernel_basis(d_map(quiver, n, budget))
    shortcut_units = [(j, {j: ONE}) for j in range(offset, space.dim)]
    kernel = Subspace(space.dim, list(zip(ker_d.pivots, ker_d.sparse_basis())) + shortcut_units)

    if n == 0:
        image = Subspace.zero(space.dim)
    else:
        im_d = image_subspace(d_map(quiver, n - 1, budget))
        image = Subspace(
            space.dim,
            [
                (p + offset, {j + offset: v for j, v in row.items()})
                for p, row in zip(im_d.pivots, im_d.sparse_basis())
            ],
        )

    image_pivots = set(image.pivots)
    reps = [space.from_vector(row) for row in ker_d.sparse_basis()]
    reps += [
        Cochain._raw(n, {space.basis[j]: ONE}) for j, _ in shortcut_units if j not in image_pivots
    ]
    return CohomologyGroup(n, kernel.dim - image.dim, tuple(reps), image, kernel, space)


def hh_dim_table(quiver: Quiver, n_max: int, n_min: int = 0, budget: int | None = None) -> list[int]:
    if n_max < n_min:
        raise ValueError("empty degree range")
    return [cohomology(quiver, n, budget).dim for n in range(n_min, n_max + 1)]


def pair(quiver: Quiver, gamma: str | Iterable[str], x: str) -> ParallelPair:
    """Convenience constructor: ``pair(Q, "ab", "a")`` or ``pair(Q, "aa", "@e")``."""
    if x.startswith("@"):
        shortcut = Path.trivial(x[1:])
    else:
        shortcut = Path.of((quiver.arrow(x),))
    if isinstance(gamma, str) and gamma.startswith("@"):
        path = Path.trivial(gamma[1:])
    else:
        path = quiver.path(gamma)
    return ParallelPair(path, shortcut)
