"""Finite quivers, their paths, and parallel pairs.

Composition convention: in a word ``a1 a2 ... an`` the arrow ``a1`` comes
first, so ``target(a_i) == source(a_{i+1})``.  A path runs from the source
of its first arrow to the target of its last one.

All orderings follow input order: vertices and arrows as declared, paths
lexicographically by arrow position, pairs by (path, then vertex/arrow).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal

from qhh.errors import BudgetExceeded, PathError, QuiverError

DEFAULT_BUDGET = 2**20


def default_budget() -> int:
    """Basis budget, taken from ``QHH_BUDGET`` when set."""
    raw = os.environ.get("QHH_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"QHH_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError("QHH_BUDGET must be positive")
    return value


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


class Path:
    """A trivial path at a vertex, or a composable nonempty word of arrows."""

    __slots__ = ("source", "target", "arrows", "_key", "_hash")

    def __init__(self, source: str, target: str, arrows: tuple[Arrow, ...] = ()):
        arrows = tuple(arrows)
        if arrows:
            if arrows[0].source != source or arrows[-1].target != target:
                raise PathError("path endpoints disagree with its arrows")
            for left, right in zip(arrows, arrows[1:]):
                if left.target != right.source:
                    raise PathError(f"arrows {left.id} and {right.id} do not compose")
        elif source != target:
            raise PathError("a trivial path has equal source and target")
        self.source = source
        self.target = target
        self.arrows = arrows
        self._key = (source, target, tuple(a.id for a in arrows))
        self._hash = hash(self._key)

    @classmethod
    def trivial(cls, vertex: str) -> Path:
        return cls(vertex, vertex, ())

    @classmethod
    def of(cls, arrows: Iterable[Arrow]) -> Path:
        arrows = tuple(arrows)
        if not arrows:
            raise PathError("use Path.trivial for length-zero paths")
        return cls(arrows[0].source, arrows[-1].target, arrows)

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def word(self) -> tuple[str, ...]:
        return self._key[2]

    def parallel(self, other: Path) -> bool:
        return self.source == other.source and self.target == other.target

    def __mul__(self, other: Path) -> Path:
        # concatenation: self first, then other
        if self.target != other.source:
            raise PathError(f"cannot compose {self} with {other}")
        if self.is_trivial:
            return other
        if other.is_trivial:
            return self
        return Path(self.source, other.target, self.arrows + other.arrows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Path):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if self.is_trivial:
            return "@" + self.source
        return "".join(self.word)

    def __repr__(self) -> str:
        return f"Path({self})"


@dataclass(frozen=True)
class ParallelPair:
    """Basis element ``(gamma, x)`` with ``x`` a vertex or an arrow parallel to ``gamma``."""

    gamma: Path
    x: Path

    def __post_init__(self):
        if self.x.length > 1:
            raise PathError("the second member of a pair is a vertex or an arrow")
        if not self.gamma.parallel(self.x):
            raise PathError(f"{self.gamma} is not parallel to {self.x}")

    @property
    def degree(self) -> int:
        return self.gamma.length

    @property
    def is_vertex(self) -> bool:
        return self.x.is_trivial

    def __str__(self) -> str:
        return f"({self.gamma},{self.x})"


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _by_id: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        known = set(self.vertices)
        by_id = {}
        for arrow in self.arrows:
            if arrow.id in by_id:
                raise QuiverError(f"duplicate arrow id {arrow.id!r}")
            for end in (arrow.source, arrow.target):
                if end not in known:
                    raise QuiverError(f"arrow {arrow.id!r} refers to unknown vertex {end!r}")
            by_id[arrow.id] = arrow
        object.__setattr__(self, "_by_id", by_id)

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise PathError(f"unknown arrow {arrow_id!r}") from None

    def path(self, word: str | Iterable[str]) -> Path:
        """Build a path from arrow ids; a string is split into known ids greedily."""
        ids = self.split_word(word) if isinstance(word, str) else list(word)
        return Path.of(self.arrow(i) for i in ids)

    def split_word(self, word: str) -> list[str]:
        ids = sorted(self._by_id, key=len, reverse=True)
        out, pos = [], 0
        while pos < len(word):
            for arrow_id in ids:
                if word.startswith(arrow_id, pos):
                    out.append(arrow_id)
                    pos += len(arrow_id)
                    break
            else:
                raise PathError(f"cannot read {word[pos:]!r} as arrow ids")
        return out

    def out_arrows(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def in_arrows(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == vertex]

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": list(self.vertices),
                "arrows": [{"id": a.id, "src": a.source, "tgt": a.target} for a in self.arrows],
            }
        )


def one_loop() -> Quiver:
    return Quiver(("e",), (Arrow("a", "e", "e"),))


def two_loops() -> Quiver:
    return Quiver(("e",), (Arrow("a", "e", "e"), Arrow("b", "e", "e")))


def parse_quiver(text: str) -> Quiver:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict) or set(data) != {"vertices", "arrows"}:
        raise QuiverError('expected an object with exactly the keys "vertices" and "arrows"')
    vertices, arrows = data["vertices"], data["arrows"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) and v for v in vertices):
        raise QuiverError('"vertices" must be a list of nonempty strings')
    if not isinstance(arrows, list):
        raise QuiverError('"arrows" must be a list')
    parsed = []
    for item in arrows:
        if not isinstance(item, dict) or set(item) != {"id", "src", "tgt"}:
            raise QuiverError('each arrow must have exactly the keys "id", "src", "tgt"')
        if not all(isinstance(item[k], str) and item[k] for k in ("id", "src", "tgt")):
            raise QuiverError("arrow fields must be nonempty strings")
        parsed.append(Arrow(item["id"], item["src"], item["tgt"]))
    return Quiver(tuple(vertices), tuple(parsed))


def enumerate_paths(quiver: Quiver, n: int, budget: int | None = None) -> tuple[Path, ...]:
    if n < 0:
        raise ValueError("path length must be nonnegative")
    return _paths(quiver, n, default_budget() if budget is None else budget)


@lru_cache(maxsize=64)
def _paths(quiver: Quiver, n: int, budget: int) -> tuple[Path, ...]:
    if n == 0:
        layer = tuple(Path.trivial(v) for v in quiver.vertices)
    elif n == 1:
        layer = tuple(Path.of((a,)) for a in quiver.arrows)
    else:
        outgoing = {v: quiver.out_arrows(v) for v in quiver.vertices}
        prev = _paths(quiver, n - 1, budget)
        size = sum(len(outgoing[p.target]) for p in prev)
        if size > budget:
            raise BudgetExceeded(f"paths of length {n}", size, budget)
        layer = tuple(
            Path(p.source, arrow.target, p.arrows + (arrow,))
            for p in prev
            for arrow in outgoing[p.target]
        )
    if len(layer) > budget:
        raise BudgetExceeded(f"paths of length {n}", len(layer), budget)
    return layer


def parallel_pairs(
    quiver: Quiver, n: int, kind: Literal["vertex", "arrow"], budget: int | None = None
) -> tuple[ParallelPair, ...]:
    if kind not in ("vertex", "arrow"):
        raise ValueError(f"kind must be 'vertex' or 'arrow', not {kind!r}")
    return _pairs(quiver, n, kind, default_budget() if budget is None else budget)


@lru_cache(maxsize=128)
def _pairs(quiver: Quiver, n: int, kind: str, budget: int) -> tuple[ParallelPair, ...]:
    paths = _paths(quiver, n, budget)
    if kind == "vertex":
        shortcuts = [Path.trivial(v) for v in quiver.vertices]
    else:
        shortcuts = [Path.of((a,)) for a in quiver.arrows]
    pairs = tuple(ParallelPair(p, x) for p in paths for x in shortcuts if p.parallel(x))
    if len(pairs) > budget:
        raise BudgetExceeded(f"{kind} pairs of degree {n}", len(pairs), budget)
    return pairs


def substitute(alpha: Path, i: int, beta: Path) -> Path:
    """Replace the ``i``-th arrow of ``alpha`` (1-based) by the path ``beta``."""
    if not 1 <= i <= alpha.length:
        raise PathError(f"index {i} out of range for a path of length {alpha.length}")
    replaced = alpha.arrows[i - 1]
    if replaced.source != beta.source or replaced.target != beta.target:
        raise PathError(f"arrow {replaced.id} is not parallel to {beta}")
    arrows = alpha.arrows[: i - 1] + beta.arrows + alpha.arrows[i:]
    if not arrows:
        return Path.trivial(beta.source)
    return Path(alpha.source, alpha.target, arrows)
