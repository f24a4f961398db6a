"""Mechanical verification of structural statements about (n-1)-Auslander
algebras of global dimension n that admit a trivial maximal
(n-1)-orthogonal subcategory, and about Auslander algebras of global
dimension 2.

Each verifier checks its hypotheses first (HypothesisUnmet names the one
that fails) and returns a :class:`Verdict` with itemized evidence.  A FAIL on
an input inside the hypotheses means a bug somewhere and is logged loudly.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .algebra import AlgebraTable, is_connected
from .errors import HypothesisUnmet, IndecomposablesUnavailable
from .homological import (
    id_, min_injective_coresolution, min_projective_resolution, pd, projective_cover, syzygy,
)
from .modules import is_isomorphic, kernel, projective, radical, simple
from .orthogonal import IndecomposableAtlas, almost_split_check, enumerate_mos, nakayama_atlas
from .structure import (
    admits_trivial_mos, classify_simples, is_canonical_shape, is_n_auslander, is_nakayama, jsonable,
)

log = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class Verdict:
    theorem: str
    status: str
    evidence: list[dict]
    caveats: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return jsonable({"theorem": self.theorem, "status": self.status,
                         "evidence": self.evidence, "caveats": self.caveats})

    def lines(self) -> list[str]:
        out = [f"{self.theorem}: {self.status}"]
        for row in self.evidence:
            out.append("  " + ", ".join(f"{k}={_fmt(v)}" for k, v in row.items()))
        out += [f"  note: {c}" for c in self.caveats]
        return out


def _fmt(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return str(v)


class _Setting:
    """Shared data: gl.dim n, the simple classification, hypothesis flags."""

    def __init__(self, a: AlgebraTable):
        self.a = a
        self.simples = classify_simples(a)
        self.n = max(c.pd for c in self.simples)
        finite = self.n != math.inf
        self.auslander = finite and self.n >= 2 and is_n_auslander(a, self.n - 1)
        self.criterion = admits_trivial_mos(a).holds

    @property
    def top_simples(self) -> list[int]:
        return [c.vertex for c in self.simples if c.pd == self.n]

    def require_trivial_mos_setting(self) -> None:
        if self.n == math.inf or self.n < 2:
            raise HypothesisUnmet(f"gl.dim n >= 2 (gl.dim is {_fmt(self.n)})")
        if not self.auslander:
            raise HypothesisUnmet(f"(n-1)-Auslander algebra with n = gl.dim = {self.n}")
        if not self.criterion:
            raise HypothesisUnmet("admits a trivial maximal (n-1)-orthogonal subcategory")

    def require_auslander_gl2(self) -> None:
        if self.n != 2:
            raise HypothesisUnmet(f"gl.dim = 2 (gl.dim is {_fmt(self.n)})")
        if not is_n_auslander(self.a, 1):
            raise HypothesisUnmet("Auslander algebra (1-Auslander)")


def _atlas(a: AlgebraTable, atlas: IndecomposableAtlas | None) -> tuple[IndecomposableAtlas, list[str]]:
    if atlas is None:
        if not is_nakayama(a):
            raise IndecomposablesUnavailable(
                "statement quantifies over all indecomposables; the algebra is not Nakayama "
                "and no complete list was supplied")
        atlas = nakayama_atlas(a)
    caveats = ["atlas completeness attested by user"] if atlas.attested else []
    return atlas, caveats


def _verdict(name: str, ok: bool, evidence: list[dict], caveats=()) -> Verdict:
    v = Verdict(name, PASS if ok else FAIL, evidence, list(caveats))
    if not ok:
        log.error("verification of %s FAILED inside its hypotheses: %s", name, evidence)
    return v


def _non_proj_inj(atlas: IndecomposableAtlas, k: int) -> bool:
    return not (k in atlas.projective_indices and k in atlas.injective_indices)


# ---------------------------------------------------------------- verifiers

def _pd_id_sum(s: _Setting, atlas):
    s.require_trivial_mos_setting()
    atlas, caveats = _atlas(s.a, atlas)
    rows, ok = [], True
    for k, m in enumerate(atlas.modules):
        p, q = pd(m), id_(m)
        sum_ok = not _non_proj_inj(atlas, k) or p + q == s.n
        bound_ok = p <= s.n - 1 or q <= s.n - 1
        ok = ok and sum_ok and bound_ok
        rows.append({"module": atlas.label(k), "pd": p, "id": q, "sum": p + q,
                     "projective_injective": not _non_proj_inj(atlas, k),
                     "ok": sum_ok and bound_ok})
    return ok, rows, caveats


def _syzygy_of_top_simple(s: _Setting, atlas):
    s.require_trivial_mos_setting()
    atlas, caveats = _atlas(s.a, atlas)
    syz = {v: [syzygy(simple(s.a, v), k) for k in range(s.n + 1)] for v in s.top_simples}
    rows, ok = [], True
    for k, m in enumerate(atlas.modules):
        if not _non_proj_inj(atlas, k):
            continue
        p = pd(m)
        step = s.n - p
        witness = next((f"S({v})" for v in s.top_simples
                        if 0 <= step <= s.n and is_isomorphic(syz[v][step], m)), None)
        ok = ok and witness is not None
        rows.append({"module": atlas.label(k), "pd": p, "k": step, "witness": witness})
    return ok, rows, caveats


def _simple_syzygies(s: _Setting, atlas):
    s.require_trivial_mos_setting()
    rows, ok = [], True
    for v in s.top_simples:
        res = min_projective_resolution(simple(s.a, v), s.n)
        for i in range(s.n + 1):
            simple_ok = res.syzygies[i].dim == 1
            indec_ok = len(res.generators[i]) == 1
            ok = ok and simple_ok and indec_ok
            rows.append({"simple": f"S({v})", "i": i, "syzygy_dims": list(res.syzygies[i].dims),
                         "syzygy_simple": simple_ok, "term": res.term_label(i),
                         "term_indecomposable": indec_ok})
    return ok, rows, []


def _simple_vertex(m) -> int | None:
    if m.dim != 1:
        return None
    return m.dims.index(1) + 1


def _syzygy_bijection(s: _Setting, atlas):
    s.require_trivial_mos_setting()
    rows, ok = [], True
    for i in range(s.n + 1):
        images = [_simple_vertex(syzygy(simple(s.a, v), i)) for v in s.top_simples]
        target = sorted(c.vertex for c in s.simples
                        if c.pd == s.n - i and not (c.is_projective and c.is_injective))
        bij = None not in images and len(set(images)) == len(images) and sorted(images) == target
        ok = ok and bij
        rows.append({"i": i, "domain": [f"S({v})" for v in s.top_simples],
                     "images": [f"S({v})" if v else None for v in images],
                     "target": [f"S({v})" for v in target], "bijective": bij})
    return ok, rows, []


def _projective_or_radical_simple(s: _Setting, atlas):
    s.require_trivial_mos_setting()
    rows, ok = [], True
    for v in s.a.vertices:
        p = projective(s.a, v)
        r = radical(p)[0]
        good = p.dim == 1 or r.dim == 1
        ok = ok and good
        rows.append({"projective": f"P({v})", "dim": p.dim, "radical_dim": r.dim, "ok": good})
    return ok, rows, []


def _nakayama(s: _Setting, atlas):
    s.require_trivial_mos_setting()
    nak = is_nakayama(s.a)
    return nak, [{"is_nakayama": nak}], []


def _unique_top_simple(s: _Setting, atlas):
    if not is_connected(s.a):
        raise HypothesisUnmet("connected algebra")
    s.require_trivial_mos_setting()
    tops = s.top_simples
    return len(tops) == 1, [{"pd_n_simples": [f"S({v})" for v in tops], "n": s.n}], []


def _canonical_shape(s: _Setting, atlas):
    finite = s.n != math.inf
    lhs = is_connected(s.a) and finite and s.n >= 2 and s.auslander and s.criterion
    rhs = is_canonical_shape(s.a)
    row = {"connected": is_connected(s.a), "gl_dim": s.n, "auslander": s.auslander,
           "trivial_mos": s.criterion, "canonical_presentation": rhs}
    return lhs == rhs, [row], []


def _almost_split(s: _Setting, atlas):
    s.require_trivial_mos_setting()
    atlas, caveats = _atlas(s.a, atlas)
    rows, ok = [], True
    for v in s.top_simples:
        for i in range(s.n):
            end = syzygy(simple(s.a, v), i)
            cover, epi = projective_cover(end)
            _, incl = kernel(epi)
            verdict = almost_split_check(incl, epi, atlas)
            ok = ok and verdict.holds
            rows.append({"simple": f"S({v})", "i": i,
                         "sequence": f"0 -> Omega^{i + 1} -> P_{i} -> Omega^{i} -> 0",
                         "non_split": verdict.non_split,
                         "right_almost_split": verdict.right_almost_split,
                         "holds": verdict.holds})
    caveats.append("middle term is the projective cover P_i(S) of Omega^i S")
    return ok, rows, caveats


def _injective_resolution_of_simple(s: _Setting, atlas):
    s.require_auslander_gl2()
    rows, ok = [], True
    for c in s.simples:
        if c.id != 2:
            continue
        res = min_injective_coresolution(simple(s.a, c.vertex), 2)
        indec = len(res.generators[2]) == 1
        distinct = not is_isomorphic(res.terms[0], res.terms[1])
        ok = ok and indec and distinct
        rows.append({"simple": f"S({c.vertex})", "I2": res.term_label(2), "I2_indecomposable": indec,
                     "I0": res.term_label(0), "I1": res.term_label(1), "I0_not_iso_I1": distinct})
    return ok, rows, []


def _pd2_conditions(s: _Setting) -> tuple[bool, bool, list[int]]:
    pd2 = [c for c in s.simples if c.pd == 2]
    cond1 = any(c.id == 2 for c in pd2)
    cond2 = sum(1 for c in pd2 if not c.is_injective) >= 2
    return cond1, cond2, [c.vertex for c in pd2]


def _nontrivial_mos_necessary(s: _Setting, atlas):
    s.require_auslander_gl2()
    atlas, caveats = _atlas(s.a, atlas)
    cond1, cond2, pd2 = _pd2_conditions(s)
    cands = enumerate_mos(atlas, 1)
    nontrivial = [c for c in cands if not c.is_trivial]
    ok = not nontrivial or (cond1 and cond2)
    row = {"pd2_simples": [f"S({v})" for v in pd2], "simple_with_pd_id_2": cond1,
           "two_non_injective_pd2_simples": cond2, "trivial_candidates": len(cands) - len(nontrivial),
           "nontrivial_candidates": len(nontrivial),
           "nontrivial_excluded_by_conditions": not (cond1 and cond2),
           "trivial_excluded_by_criterion": not s.criterion}
    return ok, [row], caveats


def _mos_triviality(s: _Setting, atlas):
    s.require_auslander_gl2()
    atlas, caveats = _atlas(s.a, atlas)
    pd2 = [c for c in s.simples if c.pd == 2]
    cond = len(pd2) == 1 or (len(pd2) == 2 and any(c.is_injective for c in pd2))
    cands = enumerate_mos(atlas, 1)
    ok = not cond or all(c.is_trivial for c in cands)
    row = {"pd2_simples": [f"S({c.vertex})" for c in pd2], "condition_holds": cond,
           "candidates": [c.labels for c in cands], "all_trivial": all(c.is_trivial for c in cands)}
    return ok, [row], caveats


THEOREMS = {
    "pd-id-sum": _pd_id_sum,
    "syzygy-of-top-simple": _syzygy_of_top_simple,
    "simple-syzygies": _simple_syzygies,
    "syzygy-bijection": _syzygy_bijection,
    "projective-or-radical-simple": _projective_or_radical_simple,
    "nakayama": _nakayama,
    "unique-top-simple": _unique_top_simple,
    "canonical-shape": _canonical_shape,
    "almost-split": _almost_split,
    "injective-resolution-of-simple": _injective_resolution_of_simple,
    "nontrivial-mos-necessary": _nontrivial_mos_necessary,
    "mos-triviality": _mos_triviality,
}


def verify_theorem(a: AlgebraTable, theorem_id: str,
                   atlas: IndecomposableAtlas | None = None) -> Verdict:
    """Run one verifier from :data:`THEOREMS`."""
    try:
        check = THEOREMS[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem_id!r}; choose from {sorted(THEOREMS)}") from None
    ok, evidence, caveats = check(_Setting(a), atlas)
    return _verdict(theorem_id, ok, evidence, caveats)
