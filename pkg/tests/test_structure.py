from __future__ import annotations

import math

import pytest

from boundquiver.algebra import QuiverPresentation, compute_algebra, disjoint_union, named_fixture
from boundquiver.errors import PreconditionUnmet
from boundquiver.homological import global_dimension
from boundquiver.structure import (
    admits_trivial_mos, analyze, auslander_order, auslander_witness, blocks, gorenstein_orders,
    injective_term_pds, is_canonical_shape, is_n_auslander, is_n_gorenstein, is_nakayama, mos_existence,
)
from support import cycle_quiver, nakayama_sweep

_ALG = {}


def alg(tag):
    if tag not in _ALG:
        _ALG[tag] = compute_algebra(named_fixture(tag))
    return _ALG[tag]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_canonical_report(n):
    r = analyze(alg(f"A{n}"))
    assert r.gl_dim == n and r.auslander_order == n - 1
    assert r.is_nakayama and r.is_connected
    assert r.admits_trivial_mos.holds and r.admits_trivial_mos.hypothesis_met
    assert r.dimension == 2 * n + 1
    assert r.tilted_finite_type == (n == 2)


@pytest.mark.parametrize("tag, witness", [("E410-2", 3), ("E410-3", 4), ("E65", 4), ("E66", 2)])
def test_criterion_witnesses(tag, witness):
    r = analyze(alg(tag))
    assert not r.admits_trivial_mos.holds
    assert r.admits_trivial_mos.witness == witness


def test_e65_not_nakayama():
    assert not is_nakayama(alg("E65"))
    assert is_nakayama(alg("E66"))


def test_remark_fixture():
    a = alg("REM")
    assert global_dimension(a) == 2
    assert auslander_order(a) is None
    assert auslander_witness(a, 1) == (1, 2)
    assert injective_term_pds(a, 2) == [0, 2, 2]
    c = admits_trivial_mos(a)
    assert c.holds and not c.hypothesis_met
    with pytest.raises(PreconditionUnmet):
        admits_trivial_mos(a, strict=True)
    with pytest.raises(PreconditionUnmet):
        mos_existence(a)


def test_mos_existence():
    for tag in ("E64", "E65", "E66"):
        assert mos_existence(alg(tag))["any_possible"] is False
    assert mos_existence(alg("A2"))["trivial_exists"] is True
    with pytest.raises(PreconditionUnmet):
        mos_existence(alg("A3"))


def test_auslander_order_edge_cases():
    point = compute_algebra(QuiverPresentation(1, (), ()))
    assert auslander_order(point) == math.inf
    dual_numbers = compute_algebra(cycle_quiver(1, [1]))
    assert auslander_order(dual_numbers) is None
    with pytest.raises(ValueError):
        is_n_auslander(point, 0)


def test_gorenstein():
    a = alg("A3")
    assert gorenstein_orders(a) == [1, 2, 3]
    assert is_n_gorenstein(a, 3)
    rem = alg("REM")
    assert is_n_gorenstein(rem, 1) and not is_n_gorenstein(rem, 2)


def test_blocks():
    a = compute_algebra(disjoint_union(named_fixture("A2"), QuiverPresentation(1, (), ())))
    assert blocks(a) == [[1, 2, 3], [4]]
    assert not analyze(a).is_connected


def test_canonical_shape():
    assert is_canonical_shape(alg("A3"))
    assert not is_canonical_shape(alg("REM"))
    assert not is_canonical_shape(alg("E66"))


def test_report_json_is_plain():
    # self-injective two-cycle with rad^2 = 0 has infinite global dimension
    data = analyze(compute_algebra(cycle_quiver(2, [1, 2]))).to_json()
    assert data["gl_dim"] == "inf"
    assert data["auslander_order"] is None
    assert isinstance(data["simples"], list)


def test_left_right_symmetry_on_sweep():
    # gl.dim, the Auslander condition and n-Gorenstein are left-right symmetric,
    # so computing over the opposite algebra is an independent route
    for _, _, _, p in nakayama_sweep(4):
        a = compute_algebra(p)
        op = compute_algebra(p.opposite())
        g = global_dimension(a)
        assert g == global_dimension(op)
        if g not in (0, math.inf):
            for n in range(1, g + 1):
                assert is_n_auslander(a, n) == is_n_auslander(op, n)
        assert gorenstein_orders(a) == gorenstein_orders(op)
