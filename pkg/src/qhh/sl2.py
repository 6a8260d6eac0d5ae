"""sl2 weight spaces and multiplicities for the two-loops quiver.

With loops ``a`` and ``b`` the degree-one classes

    H = (b,b) - (a,a),   E = (a,b),   F = (b,a),   I = (a,a) + (b,b)

span HH^1 = gl2 (sl2 plus the center ``I``).  ``H`` is diagonal on parallel
pairs: ``(gamma, a)`` has weight ``v(gamma) - 1`` and ``(gamma, b)`` weight
``v(gamma) + 1`` where ``v`` counts ``a``'s minus ``b``'s.  Multiplicities of
irreducibles ``V(t)`` follow from weight-space dimensions by highest-weight
counting, ``q = dim W(t) - dim W(t + 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from qhh.cochains import Cochain, cochain_space, d_image
from qhh.linalg import Matrix, rank
from qhh.quiver import ParallelPair, Path, Quiver, two_loops


def top_index(n: int) -> int:
    """``h(n)``: the largest ``l`` with ``n + 1 - 2l >= 0``."""
    return (n + 1) // 2


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def loop_ids(quiver: Quiver) -> tuple[str, str]:
    """Arrow ids playing ``a`` and ``b``; rejects anything but two loops at one vertex."""
    if len(quiver.vertices) != 1 or len(quiver.arrows) != 2:
        raise ValueError("sl2 analysis needs the two-loops quiver (one vertex, two loops)")
    a, b = quiver.arrows
    return a.id, b.id


def weight(gamma: Path, a: str = "a", b: str = "b") -> int:
    count = 0
    for arrow in gamma.arrows:
        if arrow.id == a:
            count += 1
        elif arrow.id == b:
            count -= 1
        else:
            raise ValueError(f"arrow {arrow.id!r} is neither {a!r} nor {b!r}")
    return count


def pair_weight(pair: ParallelPair, a: str = "a", b: str = "b") -> int:
    """H-eigenvalue of a basis pair."""
    v = weight(pair.gamma, a, b)
    if pair.is_vertex:
        return v
    return v - 1 if pair.x.arrows[0].id == a else v + 1


def sl2_elements(quiver: Quiver | None = None) -> dict[str, Cochain]:
    quiver = quiver or two_loops()
    a_id, b_id = loop_ids(quiver)
    a = Path.of((quiver.arrow(a_id),))
    b = Path.of((quiver.arrow(b_id),))

    def unit(gamma, x):
        return Cochain.basis(ParallelPair(gamma, x))

    return {
        "H": unit(b, b) - unit(a, a),
        "E": unit(a, b),
        "F": unit(b, a),
        "I": unit(a, a) + unit(b, b),
    }


@dataclass(frozen=True)
class WeightProfile:
    degree: int
    space: str
    dims: dict = field(default_factory=dict)  # weight -> dimension (nonzero only)

    def __post_init__(self):
        bound = self.degree + 1
        for t, d in self.dims.items():
            if abs(t) > bound or (t - bound) % 2:
                raise ValueError(f"weight {t} impossible in degree {self.degree}")
            if d <= 0:
                raise ValueError("profiles store positive dimensions only")

    def __getitem__(self, t: int) -> int:
        return self.dims.get(t, 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())


def _rank_by_weight(columns: list[tuple[int, dict]], rows: int) -> dict[int, int]:
    groups: dict[int, list] = {}
    for w, col in columns:
        groups.setdefault(w, []).append(col)
    return {w: rank(Matrix.from_columns(rows, cols)) for w, cols in groups.items()}


def _d_columns(quiver: Quiver, n: int, a: str, b: str) -> tuple[list, int]:
    """Weight-tagged columns of ``D_n`` after checking each is weight homogeneous."""
    target = cochain_space(quiver, n + 1)
    row_of = {p: i for i, p in enumerate(target.arrow_pairs)}
    columns = []
    for pair in cochain_space(quiver, n).vertex_pairs:
        w = weight(pair.gamma, a, b)
        image = d_image(quiver, pair.gamma, pair.x.source)
        if any(pair_weight(p, a, b) != w for p in image):
            raise ArithmeticError(f"D_{n}{pair} is not an H-eigenvector")
        columns.append((w, {row_of[p]: v for p, v in image.items()}))
    return columns, len(target.arrow_pairs)


def weight_profile(space: str, n: int, quiver: Quiver | None = None) -> WeightProfile:
    """Weight-space dimensions of ``total`` (k(Q_n || Q_1)), ``image`` (Im D_{n-1}) or ``cohomology`` (HH^n)."""
    if n < 1:
        raise ValueError("weight profiles are defined for n >= 1")
    quiver = quiver or two_loops()
    a, b = loop_ids(quiver)
    if space == "total":
        dims: dict[int, int] = {}
        for p in cochain_space(quiver, n).arrow_pairs:
            t = pair_weight(p, a, b)
            dims[t] = dims.get(t, 0) + 1
    elif space == "image":
        cols, rows = _d_columns(quiver, n - 1, a, b)
        dims = _rank_by_weight(cols, rows)
    elif space == "cohomology":
        # HH^n = ker D_n (+) k(Q_n || Q_1) / Im D_{n-1}, each weight by weight
        dims = dict(weight_profile("total", n, quiver).dims)
        for t, d in weight_profile("image", n, quiver).dims.items():
            dims[t] = dims.get(t, 0) - d
        cols, rows = _d_columns(quiver, n, a, b)
        vertex_counts: dict[int, int] = {}
        for w, _ in cols:
            vertex_counts[w] = vertex_counts.get(w, 0) + 1
        for w, r in _rank_by_weight(cols, rows).items():
            dims[w] = dims.get(w, 0) + vertex_counts[w] - r
    else:
        raise ValueError(f"unknown space {space!r}; use total, image or cohomology")
    return WeightProfile(n, space, {t: d for t, d in sorted(dims.items(), reverse=True) if d})


def multiplicities(n: int, quiver: Quiver | None = None) -> list[int]:
    """``[q(n, 0), ..., q(n, h(n))]``: copies of ``V(n + 1 - 2l)`` in HH^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    profile = weight_profile("cohomology", n, quiver)
    out = []
    for l in range(top_index(n) + 1):
        t = n + 1 - 2 * l
        q = profile[t] - profile[t + 2]
        if q < 0:
            raise ArithmeticError(f"negative multiplicity for V({t}) in HH^{n}")
        out.append(q)
    return out


def closed_form_q(n: int, l: int) -> int:
    # valid from n = 2 on: D_0 vanishes, so Im D_0 is not C(0, l)-dimensional
    if n < 2:
        raise ValueError("the closed form holds for n >= 2")
    if not 0 <= l <= top_index(n):
        raise ValueError(f"l={l} outside 0..{top_index(n)}")
    return (_binom(n + 1, l) - _binom(n + 1, l - 1)) - (_binom(n - 1, l - 1) - _binom(n - 1, l - 2))


@dataclass(frozen=True)
class MultiplicityTable:
    """Rows ``n -> (q(n,0), ..., q(n,h(n)))``."""

    rows: dict

    def __post_init__(self):
        for n, row in self.rows.items():
            if len(row) != top_index(n) + 1:
                raise ValueError(f"row {n} must have {top_index(n) + 1} entries")

    @property
    def degrees(self) -> list[int]:
        return sorted(self.rows)

    def get(self, n: int, t: int) -> int:
        """Copies of ``V(t)`` in HH^n (0 when ``t`` has the wrong parity or size)."""
        l, odd = divmod(n + 1 - t, 2)
        if odd or t < 0 or not 0 <= l <= top_index(n):
            return 0
        return self.rows[n][l]

    def by_weight(self, n: int) -> dict[int, int]:
        return {n + 1 - 2 * l: q for l, q in enumerate(self.rows[n])}

    def dimension(self, n: int) -> int:
        return sum((n + 2 - 2 * l) * q for l, q in enumerate(self.rows[n]))

    @property
    def max_weight(self) -> int:
        return max(n + 1 for n in self.rows) if self.rows else 0


def multiplicity_table(n_min: int, n_max: int, quiver: Quiver | None = None) -> MultiplicityTable:
    if n_max < n_min:
        raise ValueError("empty degree range")
    return MultiplicityTable({n: tuple(multiplicities(n, quiver)) for n in range(n_min, n_max + 1)})


def pascal_table(n_max: int) -> MultiplicityTable:
    """Rows 2..n_max grown from HH^2 = V(1) + V(3) by the add-left-and-right rule."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    row = {1: 1, 3: 1}  # weight -> copies
    rows = {}
    for n in range(2, n_max + 1):
        rows[n] = tuple(row.get(n + 1 - 2 * l, 0) for l in range(top_index(n) + 1))
        # a zero column sits left of V(0), so V(-1) reads as 0
        row = {t: row.get(t - 1, 0) + row.get(t + 1, 0) for t in range(n + 3)}
    return MultiplicityTable(rows)


def column_property_check(n_max: int, quiver: Quiver | None = None) -> bool:
    """Copies of V(1) in HH^n equal copies of V(0) in HH^{n+1}, for 2 <= n < n_max."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if n_max == 2:
        return True
    table = multiplicity_table(2, n_max, quiver)
    return all(table.get(n, 1) == table.get(n + 1, 0) for n in range(2, n_max))
