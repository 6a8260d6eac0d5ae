import pytest
from hypothesis import given, strategies as st

from qhh import (
    BudgetExceeded,
    ParallelPair,
    Path,
    PathError,
    QuiverError,
    enumerate_paths,
    one_loop,
    parallel_pairs,
    parse_quiver,
    substitute,
    two_loops,
)

Q2 = two_loops()


def test_builtin_quivers():
    assert one_loop().vertices == ("e",)
    assert [a.id for a in Q2.arrows] == ["a", "b"]


def test_path_composition_first_arrow_first(a2):
    x = a2.arrow("x")
    p = Path.of([x])
    assert (p.source, p.target) == ("u", "v")
    assert Path.trivial("u") * p == p
    assert p * Path.trivial("v") == p
    with pytest.raises(PathError):
        p * p


def test_trivial_path_prints_with_at():
    assert str(Path.trivial("e")) == "@e"
    assert str(ParallelPair(Path.trivial("e"), Path.trivial("e"))) == "(@e,@e)"


@pytest.mark.parametrize("n", range(0, 8))
def test_two_loops_path_counts(n):
    assert len(enumerate_paths(Q2, n)) == 2**n


def test_enumeration_is_lexicographic():
    assert [str(p) for p in enumerate_paths(Q2, 2)] == ["aa", "ab", "ba", "bb"]


def test_pairs_on_a2(a2):
    # x is parallel to itself only; there are no cycles
    assert [str(p) for p in parallel_pairs(a2, 1, "arrow")] == ["(x,x)"]
    assert parallel_pairs(a2, 1, "vertex") == ()
    assert [str(p) for p in parallel_pairs(a2, 0, "vertex")] == ["(@u,@u)", "(@v,@v)"]
    assert parallel_pairs(a2, 2, "arrow") == ()


def test_pairs_two_loops():
    assert len(parallel_pairs(Q2, 3, "vertex")) == 8
    assert len(parallel_pairs(Q2, 3, "arrow")) == 16


def test_shortcut_pairs(kronecker_shortcut):
    assert [str(p) for p in parallel_pairs(kronecker_shortcut, 2, "arrow")] == ["(xy,z)", "(xy,t)"]


def test_pair_must_be_parallel(a2):
    x = Path.of([a2.arrow("x")])
    with pytest.raises(ValueError):
        ParallelPair(x, Path.trivial("u"))


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        enumerate_paths(Q2, 12, budget=1000)
    assert len(enumerate_paths(Q2, 9, budget=512)) == 512


def test_substitute():
    ab = Q2.path("ab")
    assert substitute(ab, 1, Q2.path("bb")) == Q2.path("bbb")
    assert substitute(ab, 2, Q2.path("aa")) == Q2.path("aaa")
    with pytest.raises(PathError):
        substitute(ab, 3, Q2.path("a"))


def test_substitute_rejects_non_parallel(a2):
    with pytest.raises(PathError):
        substitute(a2.path("x"), 1, Path.trivial("u"))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"vertices": ["e"]}',
        '{"vertices": ["e", "e"], "arrows": []}',
        '{"vertices": ["e"], "arrows": [{"id": "a", "src": "e", "tgt": "f"}]}',
        '{"vertices": ["e"], "arrows": [{"id": "a", "src": "e"}]}',
        '{"vertices": ["e"], "arrows": [{"id": "a", "src": "e", "tgt": "e"}, {"id": "a", "src": "e", "tgt": "e"}]}',
        '{"vertices": ["e"], "arrows": [], "extra": 1}',
    ],
)
def test_parse_rejects(text):
    with pytest.raises((QuiverError, ValueError)):
        parse_quiver(text)


def test_json_round_trip(kronecker_shortcut):
    assert parse_quiver(kronecker_shortcut.to_json()) == kronecker_shortcut


words = st.text(alphabet="ab", max_size=8)


@given(words, words, words)
def test_concatenation_associative(u, v, w):
    p, q, r = (Q2.path(x) if x else Path.trivial("e") for x in (u, v, w))
    assert (p * q) * r == p * (q * r)
    assert str(p * q * r).replace("@e", "") == u + v + w


@given(st.text(alphabet="ab", min_size=1, max_size=8), st.data())
def test_substitute_length(word, data):
    alpha = Q2.path(word)
    i = data.draw(st.integers(1, len(word)))
    beta = data.draw(words)
    beta_path = Q2.path(beta) if beta else Path.trivial("e")
    out = substitute(alpha, i, beta_path)
    assert out.length == len(word) - 1 + len(beta)
    assert str(out).replace("@e", "") == word[: i - 1] + beta + word[i:]
