"""Minimal resolutions, syzygies, homological dimensions and Ext."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg as la
from .algebra import AlgebraTable
from .errors import BudgetExceeded, DimensionMismatch, Unresolved
from .modules import (
    ModuleMorphism, Representation, cokernel, direct_sum, dual, dual_morphism, hom_space,
    is_isomorphic, kernel, projective, projective_basis, radical, regular_module, simple,
    socle, top_with_lifts, zero_module,
)

INF = math.inf

PROJECTIVE = "minimal-projective"
INJECTIVE = "minimal-injective"


# ---------------------------------------------------------------- covers

def _free_module(a: AlgebraTable, gens: list[int]) -> Representation:
    if not gens:
        return zero_module(a)
    return direct_sum([projective(a, v) for v in gens])[0]


def _cover(m: Representation):
    """Projective cover with the vertex of each generator."""
    a = m.algebra
    _, _, lifts = top_with_lifts(m)
    gens, columns = [], []
    for v in a.vertices:
        for c in range(lifts[v].shape[1]):
            gens.append(v)
            columns.append(lifts[v][:, c: c + 1])
    p = _free_module(a, gens)
    blocks = {w: [] for w in a.vertices}
    for v, x in zip(gens, columns):
        layout = projective_basis(a, v)
        for w in a.vertices:
            cols = [la.matmul(m.path_matrix(a.basis[k].arrows, source=v), x) for k in layout[w]]
            blocks[w].append(la.hstack(cols, m.dim_at(w)))
    epi = ModuleMorphism(p, m, {w: la.hstack(blocks[w], m.dim_at(w)) for w in a.vertices}, check=False)
    return p, epi, gens


def projective_cover(m: Representation):
    """``(P, epimorphism P -> M)`` with P a direct sum of P(i), one per top summand."""
    p, epi, _ = _cover(m)
    return p, epi


def _envelope(m: Representation):
    p, epi, gens = _cover(dual(m))
    d = dual_morphism(epi)
    env = d.target
    mono = ModuleMorphism(m, env, d.blocks, check=False)
    return env, mono, gens


def injective_envelope(m: Representation):
    """``(I, monomorphism M -> I)``, dual to the projective cover over the opposite algebra."""
    env, mono, _ = _envelope(m)
    return env, mono


def syzygy(m: Representation, i: int = 1) -> Representation:
    if i < 0:
        raise ValueError("syzygy index must be non-negative")
    for _ in range(i):
        if m.dim == 0:
            break
        m = kernel(projective_cover(m)[1])[0]
    return m


def cosyzygy(m: Representation, i: int = 1) -> Representation:
    if i < 0:
        raise ValueError("cosyzygy index must be non-negative")
    for _ in range(i):
        if m.dim == 0:
            break
        m = cokernel(injective_envelope(m)[1])[0]
    return m


# ---------------------------------------------------------------- resolutions

def _term_label(kind: str, gens: list[int]) -> str:
    if not gens:
        return "0"
    letter = "P" if kind == PROJECTIVE else "I"
    counts: dict[int, int] = {}
    for v in gens:
        counts[v] = counts.get(v, 0) + 1
    return " ⊕ ".join(f"{letter}({v})" + (f"^{k}" if k > 1 else "") for v, k in sorted(counts.items()))


@dataclass
class Resolution:
    """A minimal projective resolution or injective coresolution.

    For ``kind == PROJECTIVE``, ``maps[0]`` is ``P_0 -> M`` and ``maps[k]`` is
    ``P_k -> P_{k-1}``.  For ``kind == INJECTIVE``, ``maps[0]`` is
    ``M -> I^0`` and ``maps[k]`` is ``I^{k-1} -> I^k``.  ``generators[k]``
    lists the vertex of each indecomposable summand of the k-th term, and
    ``syzygies[k]`` is Omega^k M (or Omega^{-k} M).
    """

    kind: str
    base: Representation
    terms: list[Representation]
    maps: list[ModuleMorphism]
    generators: list[list[int]]
    syzygies: list[Representation]
    exhausted: bool

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def term_label(self, k: int) -> str:
        return _term_label(self.kind, self.generators[k])

    def lines(self) -> list[str]:
        if self.kind == PROJECTIVE:
            names = [f"P_{k}" for k in range(len(self.terms))]
        else:
            names = [f"I^{k}" for k in range(len(self.terms))]
        out = [f"{name} = {self.term_label(k)}" for k, name in enumerate(names)]
        if not self.exhausted:
            out.append("(truncated)")
        return out

    def __str__(self):
        return "\n".join(self.lines())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "exhausted": self.exhausted,
            "base_dims": list(self.base.dims),
            "terms": [
                {"label": self.term_label(k), "generators": list(g), "dims": list(t.dims)}
                for k, (t, g) in enumerate(zip(self.terms, self.generators))
            ],
            "maps": [
                {str(v): la.to_strings(b) for v, b in sorted(f.blocks.items())} for f in self.maps
            ],
        }


def min_projective_resolution(m: Representation, max_len: int, allow_partial: bool = False) -> Resolution:
    """Terms ``P_0 .. P_k`` with ``k <= max_len``.

    Raises BudgetExceeded when ``Omega^{max_len+1} M`` is nonzero, unless
    ``allow_partial`` is set.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    terms, maps, gens, syz = [], [], [], [m]
    cur, incl = m, None
    for k in range(max_len + 1):
        if cur.dim == 0:
            break
        p, epi, g = _cover(cur)
        terms.append(p)
        gens.append(g)
        maps.append(epi if incl is None else incl @ epi)
        cur, incl = kernel(epi)
        syz.append(cur)
    exhausted = cur.dim == 0
    if not terms:
        terms, gens = [zero_module(m.algebra)], [[]]
        maps = [ModuleMorphism(terms[0], m, {}, check=False)]
    if not exhausted and not allow_partial:
        raise BudgetExceeded(f"projective resolution not exhausted within {max_len} steps")
    return Resolution(PROJECTIVE, m, terms, maps, gens, syz, exhausted)


def min_injective_coresolution(m: Representation, max_len: int, allow_partial: bool = False) -> Resolution:
    """Terms ``I^0 .. I^k`` with ``k <= max_len``; dual to the projective case."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    terms, maps, gens, syz = [], [], [], [m]
    cur, proj = m, None
    for k in range(max_len + 1):
        if cur.dim == 0:
            break
        env, mono, g = _envelope(cur)
        terms.append(env)
        gens.append(g)
        maps.append(mono if proj is None else mono @ proj)
        cur, proj = cokernel(mono)
        syz.append(cur)
    exhausted = cur.dim == 0
    if not terms:
        terms, gens = [zero_module(m.algebra)], [[]]
        maps = [ModuleMorphism(m, terms[0], {}, check=False)]
    if not exhausted and not allow_partial:
        raise BudgetExceeded(f"injective coresolution not exhausted within {max_len} steps")
    return Resolution(INJECTIVE, m, terms, maps, gens, syz, exhausted)


def is_minimal(res: Resolution) -> bool:
    """Audit: each syzygy sits in the radical of its cover (dually, each
    cosyzygy's image contains the socle of its envelope)."""
    for k, t in enumerate(res.terms):
        if t.dim == 0:
            continue
        if res.kind == PROJECTIVE:
            nxt = res.maps[k + 1] if k + 1 < len(res.maps) else None
            if nxt is None:
                continue
            sub = {v: la.column_basis(b) for v, b in nxt.blocks.items()}
            big = radical(t)[1].blocks
        else:
            into = res.maps[k]
            big = {v: la.column_basis(b) for v, b in into.blocks.items()}
            sub = socle(t)[1].blocks
        for v in t.algebra.vertices:
            span = la.hstack([big[v], sub[v]], t.dim_at(v))
            if la.rank(span) != la.rank(big[v]):
                return False
    return True


# ---------------------------------------------------------------- dimensions

def _default_budget(a: AlgebraTable) -> int:
    return 2 * a.dimension


def _dimension(m: Representation, step, budget: int):
    if m.dim == 0:
        return 0
    seen = [m]
    cur = m
    for k in range(budget + 1):
        nxt = step(cur)
        if nxt.dim == 0:
            return k
        if any(x.dims == nxt.dims and is_isomorphic(x, nxt) for x in seen):
            return INF
        seen.append(nxt)
        cur = nxt
    raise Unresolved(f"no exhaustion or repetition within {budget} steps")


def pd(m: Representation, budget: int | None = None):
    """Projective dimension; ``math.inf`` when a syzygy repeats.

    The zero module is given dimension 0.
    """
    budget = _default_budget(m.algebra) if budget is None else budget
    return _dimension(m, lambda x: kernel(projective_cover(x)[1])[0], budget)


def id_(m: Representation, budget: int | None = None):
    """Injective dimension, computed from cosyzygies."""
    budget = _default_budget(m.algebra) if budget is None else budget
    return _dimension(m, lambda x: cokernel(injective_envelope(x)[1])[0], budget)


# ``id`` is the conventional name; keep the builtin reachable inside this module
injective_dimension = id_
projective_dimension = pd


def global_dimension(a: AlgebraTable, budget: int | None = None):
    return max(pd(simple(a, i), budget) for i in a.vertices)


def is_projective(m: Representation) -> bool:
    return projective_cover(m)[0].dim == m.dim


def is_injective(m: Representation) -> bool:
    return injective_envelope(m)[0].dim == m.dim


# ---------------------------------------------------------------- Ext

def _offsets(a: AlgebraTable, gens: list[int]) -> list[dict[int, int]]:
    """Row offset of each summand of ``P(g_1) + ... + P(g_r)`` at each vertex."""
    running = {w: 0 for w in a.vertices}
    out = []
    for v in gens:
        out.append(dict(running))
        layout = projective_basis(a, v)
        for w in a.vertices:
            running[w] += len(layout[w])
    return out


def generator_images(res: Resolution, k: int) -> list[dict[tuple[int, int], Fraction]]:
    """Image of each generator of ``P_k`` in ``P_{k-1}`` (``k >= 1``).

    Each image is a dict ``{(h, path index): coefficient}``: the generator
    maps to the sum of ``coefficient * path`` applied to the h-th generator.
    """
    a = res.base.algebra
    src, tgt = res.generators[k], res.generators[k - 1]
    src_off, tgt_off = _offsets(a, src), _offsets(a, tgt)
    d = res.maps[k]
    out = []
    for g, v in enumerate(src):
        col = src_off[g][v] + projective_basis(a, v)[v].index(a.trivial(v))
        column = d.blocks[v][:, col]
        img = {}
        for h, w in enumerate(tgt):
            layout = projective_basis(a, w)[v]
            for r, kk in enumerate(layout):
                c = column[tgt_off[h][v] + r]
                if c:
                    img[(h, kk)] = c
        out.append(img)
    return out


def _hom_differential(res: Resolution, k: int, n: Representation) -> np.ndarray:
    """Matrix of ``Hom(P_{k-1}, N) -> Hom(P_k, N)`` in the generator coordinates
    ``Hom(P_j, N) = sum over generators g of N_{v_g}``."""
    a = n.algebra
    src, tgt = res.generators[k], res.generators[k - 1]
    rows = sum(n.dim_at(v) for v in src)
    cols = sum(n.dim_at(w) for w in tgt)
    out = la.zeros(rows, cols)
    roff = np.cumsum([0] + [n.dim_at(v) for v in src])
    coff = np.cumsum([0] + [n.dim_at(w) for w in tgt])
    for g, img in enumerate(generator_images(res, k)):
        for (h, kk), c in img.items():
            path = a.basis[kk]
            block = n.path_matrix(path.arrows, source=path.source) * c
            out[roff[g]: roff[g + 1], coff[h]: coff[h + 1]] += block
    return out


def ext_dims(m: Representation, n: Representation, top: int,
             resolution: Resolution | None = None) -> list[int]:
    """``[dim Ext^0(M, N), ..., dim Ext^top(M, N)]`` from the projective resolution of M.

    ``resolution`` may be a precomputed projective resolution of M with at
    least ``top + 2`` terms (or exhausted earlier).
    """
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    res = resolution or min_projective_resolution(m, top + 1, allow_partial=True)
    cochain = [sum(n.dim_at(v) for v in g) for g in res.generators]
    ranks = []
    for k in range(1, top + 2):
        if k < len(res.terms) and cochain[k] and cochain[k - 1]:
            ranks.append(la.rank(_hom_differential(res, k, n)))
        else:
            ranks.append(0)
    out = []
    for i in range(top + 1):
        c = cochain[i] if i < len(cochain) else 0
        # delta_i: Hom(P_i, N) -> Hom(P_{i+1}, N) has rank ranks[i]
        out.append(c - ranks[i] - (ranks[i - 1] if i else 0))
    return out


def ext_dim(m: Representation, n: Representation, i: int) -> int:
    """``dim Ext^i(M, N)``, the i-th cohomology of ``Hom(P_*(M), N)``."""
    if i < 0:
        raise ValueError("Ext degree must be non-negative")
    return ext_dims(m, n, i)[i]


def ext_dim_injective(m: Representation, n: Representation, i: int) -> int:
    """``dim Ext^i(M, N)`` from ``Hom(M, I^*(N))``; an independent route."""
    res = min_injective_coresolution(n, i + 1, allow_partial=True)
    terms = res.terms + [zero_module(n.algebra)] * (i + 2 - len(res.terms))
    homs = [hom_space(m, t) for t in terms[: i + 2]]

    def rank_of(k):  # delta_k: Hom(M, I^k) -> Hom(M, I^{k+1})
        if k + 1 >= len(res.maps) or not homs[k] or not homs[k + 1]:
            return 0
        d = res.maps[k + 1]
        vecs = [(d @ f).vector() for f in homs[k]]
        return la.rank(la.qarray(vecs, (len(vecs), len(vecs[0]))))

    return len(homs[i]) - rank_of(i) - (rank_of(i - 1) if i else 0)


def grade(m: Representation, budget: int | None = None):
    """Least i with ``Ext^i(M, Lambda) != 0``; ``math.inf`` if none is found."""
    a = m.algebra
    if m.dim == 0:
        return INF
    p = pd(m, budget)
    limit = p if p != INF else (_default_budget(a) if budget is None else budget)
    dims = ext_dims(m, regular_module(a), int(limit))
    for i, d in enumerate(dims):
        if d:
            return i
    return INF


def projective_morphism(b: AlgebraTable, src: list[int], tgt: list[int],
                        images: list[dict[tuple[int, int], Fraction]]) -> ModuleMorphism:
    """Morphism between sums of indecomposable projectives given by generator images."""
    source, target = _free_module(b, src), _free_module(b, tgt)
    src_off, tgt_off = _offsets(b, src), _offsets(b, tgt)
    blocks = {w: la.zeros(target.dim_at(w), source.dim_at(w)) for w in b.vertices}
    tpos = {h: {kk: r for w in b.vertices for r, kk in enumerate(projective_basis(b, tv)[w])}
            for h, tv in enumerate(tgt)}
    for g, v in enumerate(src):
        layout = projective_basis(b, v)
        for w in b.vertices:
            for col, q in enumerate(layout[w]):
                for (h, kk), c in images[g].items():
                    for k2, d in b.product(q, kk).items():
                        blocks[w][tgt_off[h][w] + tpos[h][k2], src_off[g][w] + col] += c * d
    return ModuleMorphism(source, target, blocks, check=False)


def ext_transpose_module(m: Representation, n: int) -> Representation:
    """``Ext^n(M, Lambda)`` as a left module over the opposite algebra.

    Computed as the cokernel of ``P_{n-1}^* -> P_n^*`` where ``P(v)^*`` is
    the projective of the opposite algebra at ``v``.
    """
    p = pd(m)
    if p != n:
        raise DimensionMismatch(f"pd M = {p}, not {n}")
    a = m.algebra
    op = a.opposite
    res = min_projective_resolution(m, n)
    if n == 0:
        return _free_module(op, res.generators[0])
    images = generator_images(res, n)
    # transpose: generator h of P_{n-1}^* goes to sum over g of path^op applied to g
    dual_images: list[dict] = [dict() for _ in res.generators[n - 1]]
    for g, img in enumerate(images):
        for (h, kk), c in img.items():
            dual_images[h][(g, kk)] = dual_images[h].get((g, kk), 0) + c
    f = projective_morphism(op, res.generators[n - 1], res.generators[n], dual_images)
    return cokernel(f)[0]
