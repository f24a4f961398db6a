from __future__ import annotations

from fractions import Fraction

import pytest

from boundquiver.algebra import (
    FIXTURE_TAGS, Arrow, Path, QuiverPresentation, all_fixtures, compute_algebra, disjoint_union,
    is_connected, linear_quiver, named_fixture, opposite_algebra,
)
from boundquiver.errors import AdmissibilityError, NotFiniteDimensional, PresentationError, UnknownTag
from support import cycle_quiver, nakayama_sweep

ONE = Fraction(1)


def _basis_words(a):
    return {str(p) for p in a.basis}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_canonical_dimension(n):
    a = compute_algebra(named_fixture(f"A{n}"))
    assert a.dimension == 2 * n + 1
    assert a.max_basis_length == 1


def test_a2_basis():
    a = compute_algebra(named_fixture("A2"))
    assert _basis_words(a) == {"e1", "e2", "e3", "b1", "b2"}


def test_e66_basis():
    a = compute_algebra(named_fixture("E66"))
    # beta*alpha (2 -> 1 -> 2) is killed, alpha*beta (1 -> 2 -> 1) survives
    assert _basis_words(a) == {"e1", "e2", "alpha", "beta", "alpha*beta"}
    assert a.nilpotency_degree == 3


def test_fixture_shapes():
    a3 = named_fixture("A3")
    assert a3.vertex_count == 4
    assert [x.name for x in a3.arrows] == ["b1", "b2", "b3"]
    assert {r[0][1] for r in a3.relations} == {("b1", "b2"), ("b2", "b3")}
    e = named_fixture("E410-2")
    assert e.vertex_count == 5
    assert {r[0][1] for r in e.relations} == {("b1", "b2"), ("b3", "b4")}
    assert named_fixture("E64") == e
    rem = named_fixture("REM")
    assert rem.vertex_count == 5
    assert rem.relations == (((ONE, ("a1", "a2", "a3", "a4")),),)
    e65 = named_fixture("E65")
    assert sorted(len(r) for r in e65.relations) == [1, 1, 2]
    assert named_fixture("A[3]") == a3 == named_fixture("fixture:A3")


def test_unknown_tag():
    with pytest.raises(UnknownTag):
        named_fixture("B7")
    with pytest.raises(UnknownTag):
        named_fixture("A1")


def test_admissibility():
    with pytest.raises(AdmissibilityError):
        QuiverPresentation(2, (Arrow("a", 1, 2),), (((ONE, ("a",)),),))


def test_invalid_presentations():
    with pytest.raises(PresentationError):
        QuiverPresentation(2, (Arrow("a", 1, 3),), ())
    with pytest.raises(PresentationError):
        QuiverPresentation(2, (Arrow("a", 1, 2), Arrow("a", 2, 1)), ())
    # not composable: b1 ends at 1, b2 starts at 3
    with pytest.raises(PresentationError):
        QuiverPresentation(3, (Arrow("b1", 2, 1), Arrow("b2", 3, 2)), (((ONE, ("b2", "b1")),),))


def test_not_finite_dimensional():
    loop = QuiverPresentation(1, (Arrow("x", 1, 1),), ())
    with pytest.raises(NotFiniteDimensional):
        compute_algebra(loop)


@pytest.mark.parametrize("tag", FIXTURE_TAGS)
def test_associativity_and_units(tag):
    a = compute_algebra(named_fixture(tag))
    assert a.check_associativity()
    for i, p in enumerate(a.basis):
        assert a.product(a.trivial(p.target), i) == {i: 1}
        assert a.product(i, a.trivial(p.source)) == {i: 1}


@pytest.mark.parametrize("tag", FIXTURE_TAGS)
def test_opposite(tag):
    a = compute_algebra(named_fixture(tag))
    op = opposite_algebra(a)
    assert op.dimension == a.dimension
    assert op.opposite is a
    assert compute_algebra(a.presentation.opposite()).dimension == a.dimension
    assert a.presentation.opposite().opposite() == a.presentation
    for i in range(a.dimension):
        for j in range(a.dimension):
            assert op.product(j, i) == a.product(i, j)


def test_e66_opposite_swaps_roles():
    a = compute_algebra(named_fixture("E66"))
    op = compute_algebra(a.presentation.opposite())
    assert op.dimension == 5
    # reversal keeps the surviving loop at vertex 1 but swaps the word
    long = [p for p in op.basis if p.length == 2]
    assert [str(p) for p in long] == ["beta*alpha"]
    assert long[0].source == long[0].target == 1


def _monomial_basis(p: QuiverPresentation) -> set[Path]:
    """Independent oracle: paths without a relation word as a consecutive subword."""
    bad = [r[0][1] for r in p.relations]
    out = {Path(v, v) for v in range(1, p.vertex_count + 1)}
    frontier = [Path(x.source, x.target, (x.name,)) for x in p.arrows]
    while frontier:
        nxt = []
        for path in frontier:
            w = path.arrows
            if any(w[i:i + len(b)] == b for b in bad for i in range(len(w) - len(b) + 1)):
                continue
            out.add(path)
            for x in p.arrows:
                if x.source == path.target:
                    nxt.append(Path(path.source, x.target, (x.name,) + w))
        frontier = nxt
    return out


@pytest.mark.parametrize("tag", ["A2", "A3", "E410-2", "E410-3", "E66", "REM"])
def test_monomial_basis_oracle(tag):
    p = named_fixture(tag)
    assert set(compute_algebra(p).basis) == _monomial_basis(p)


def test_monomial_oracle_on_sweep():
    for _, _, _, p in nakayama_sweep(4):
        assert set(compute_algebra(p).basis) == _monomial_basis(p)


def test_commutativity_relation_identifies_paths():
    a = compute_algebra(named_fixture("E65"))
    # beta*alpha = delta*gamma leaves one path 6 -> 3
    assert len([p for p in a.basis if p.source == 6 and p.target == 3]) == 1


def test_cycle_dimension():
    # K[x]/(x^2)
    assert compute_algebra(cycle_quiver(1, [1])).dimension == 2
    # two-cycle with one zero relation: E66 up to renaming
    assert compute_algebra(cycle_quiver(2, [1])).dimension == 5


def test_connectivity():
    assert is_connected(compute_algebra(named_fixture("A3")))
    assert is_connected(compute_algebra(named_fixture("E65")))
    single = QuiverPresentation(1, (), ())
    assert not is_connected(disjoint_union(named_fixture("A2"), single))
    assert is_connected(linear_quiver(1))


def test_all_fixtures():
    tags = [f.tag for f in all_fixtures()]
    assert tags == list(FIXTURE_TAGS)
