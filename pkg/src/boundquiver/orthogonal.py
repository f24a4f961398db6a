"""Indecomposable atlases, Ext tables, maximal n-orthogonal subcategories
and almost split sequences."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx
import numpy as np

from . import linalg as la
from .algebra import AlgebraTable
from .errors import AtlasIncomplete, NotExact, NotNakayama
from .homological import ext_dims, min_projective_resolution
from .modules import (
    ModuleMorphism, Representation, cokernel, combine, end_ring, hom_space, identity_morphism, injective,
    is_indecomposable, is_isomorphic, length, projective, quotient, radical_series,
)
from .structure import is_nakayama

NAKAYAMA = "nakayama-enumeration"
USER = "user-supplied"

FF_NOTE = "functorial finiteness assumed (finite additive closure over a representation-finite algebra)"


@dataclass
class IndecomposableAtlas:
    """Pairwise non-isomorphic indecomposables, each with all the names it
    is known by (``P(i)/rad^l``, ``S(i)``, ``P(i)``, ``I(j)``)."""

    algebra: AlgebraTable
    modules: list[Representation]
    names: list[list[str]]
    origin: str
    projective_indices: list[int]
    injective_indices: list[int]

    @property
    def attested(self) -> bool:
        """True when completeness rests on the user's word."""
        return self.origin == USER

    def __len__(self):
        return len(self.modules)

    def label(self, k: int) -> str:
        """Preferred display name: ``P(i)``, else ``I(j)``, else the first name."""
        names = self.names[k]
        for prefix in ("P(", "I("):
            hit = next((x for x in names if x.startswith(prefix) and "/" not in x), None)
            if hit:
                return hit
        return names[0]

    def index_of(self, m: Representation) -> int | None:
        for k, x in enumerate(self.modules):
            if x.dims == m.dims and is_isomorphic(x, m):
                return k
        return None

    def to_json(self) -> dict:
        return {
            "origin": self.origin,
            "modules": [{"names": n, "dims": list(m.dims)} for m, n in zip(self.modules, self.names)],
            "projective_indices": self.projective_indices,
            "injective_indices": self.injective_indices,
        }


def _identify(a: AlgebraTable, modules: list[Representation], names: list[list[str]]):
    proj, inj = [], []
    for i in a.vertices:
        for kind, m, bucket in (("P", projective(a, i), proj), ("I", injective(a, i), inj)):
            hit = next((k for k, x in enumerate(modules) if x.dims == m.dims and is_isomorphic(x, m)), None)
            if hit is None:
                raise AtlasIncomplete(f"{kind}({i}) is missing from the atlas")
            bucket.append(hit)
            if f"{kind}({i})" not in names[hit]:
                names[hit].append(f"{kind}({i})")
    return sorted(set(proj)), sorted(set(inj))


def nakayama_atlas(a: AlgebraTable) -> IndecomposableAtlas:
    """All quotients ``P(i)/rad^l P(i)``, deduplicated; complete for Nakayama algebras."""
    if not is_nakayama(a):
        raise NotNakayama("the algebra is not Nakayama; supply the indecomposables explicitly")
    modules, names = [], []
    for i in a.vertices:
        p = projective(a, i)
        series = radical_series(p)
        for l in range(1, length(p) + 1):
            if l == length(p):
                m, name = p, f"P({i})"
            else:
                m = quotient(p, series[l])[0]
                name = f"P({i})/rad^{l}"
            if l == 1:
                name = f"S({i})"
            if any(x.dims == m.dims and is_isomorphic(x, m) for x in modules):
                continue
            m.label = name
            modules.append(m)
            names.append([name])
    proj, inj = _identify(a, modules, names)
    return IndecomposableAtlas(a, modules, names, NAKAYAMA, proj, inj)


def user_atlas(a: AlgebraTable, modules: list[Representation],
               labels: list[str] | None = None) -> IndecomposableAtlas:
    """Atlas from a user-supplied list attested to be complete."""
    labels = labels or [m.label or f"M{k}" for k, m in enumerate(modules, 1)]
    for m, name in zip(modules, labels):
        if m.algebra is not a:
            raise ValueError(f"module {name} is over a different algebra")
        if m.dim == 0 or not is_indecomposable(m):
            raise ValueError(f"module {name} is not indecomposable")
    for (j, x), (k, y) in combinations(enumerate(modules), 2):
        if x.dims == y.dims and is_isomorphic(x, y):
            raise ValueError(f"modules {labels[j]} and {labels[k]} are isomorphic")
    names = [[n] for n in labels]
    proj, inj = _identify(a, modules, names)
    return IndecomposableAtlas(a, list(modules), names, USER, proj, inj)


def _require_complete(atlas: IndecomposableAtlas) -> None:
    if atlas.origin not in (NAKAYAMA, USER):
        raise AtlasIncomplete(f"atlas origin {atlas.origin!r} does not certify completeness")


@dataclass
class ExtTable:
    """``cells[k-1, i, j] = dim Ext^k(M_i, M_j)`` for ``1 <= k <= n``."""

    atlas: IndecomposableAtlas
    n: int
    cells: np.ndarray

    def vanishes(self, i: int, j: int) -> bool:
        return not self.cells[:, i, j].any()

    def orthogonal(self, members) -> bool:
        return all(self.vanishes(i, j) for i in members for j in members)

    def left_perp(self, members) -> set[int]:
        """Atlas members X with ``Ext^k(X, C) = 0`` for all C in ``members``."""
        return {x for x in range(len(self.atlas)) if all(self.vanishes(x, c) for c in members)}

    def right_perp(self, members) -> set[int]:
        """Atlas members X with ``Ext^k(C, X) = 0`` for all C in ``members``."""
        return {x for x in range(len(self.atlas)) if all(self.vanishes(c, x) for c in members)}

    def to_json(self) -> list:
        return self.cells.tolist()


def ext_table(atlas: IndecomposableAtlas, n: int) -> ExtTable:
    if n < 1:
        raise ValueError("n must be at least 1")
    m = len(atlas)
    cells = np.zeros((n, m, m), dtype=int)
    for i, x in enumerate(atlas.modules):
        res = min_projective_resolution(x, n + 1, allow_partial=True)
        for j, y in enumerate(atlas.modules):
            dims = ext_dims(x, y, n, resolution=res)
            cells[:, i, j] = dims[1:]
    return ExtTable(atlas, n, cells)


@dataclass
class SubcategoryCandidate:
    members: tuple[int, ...]
    labels: list[str]
    is_n_orthogonal: bool
    is_maximal: bool
    is_trivial: bool
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "members": list(self.members),
            "labels": self.labels,
            "is_n_orthogonal": self.is_n_orthogonal,
            "is_maximal": self.is_maximal,
            "is_trivial": self.is_trivial,
            "notes": self.notes,
        }


def is_fixed_point(table: ExtTable, members) -> bool:
    """``C = {X : Ext(X, C) = 0} = {X : Ext(C, X) = 0}`` inside the atlas."""
    c = set(members)
    return table.left_perp(c) == c == table.right_perp(c)


def enumerate_mos(atlas: IndecomposableAtlas, n: int, table: ExtTable | None = None
                  ) -> list[SubcategoryCandidate]:
    """All maximal n-orthogonal subcategories, each given by its indecomposables.

    Every such subcategory contains the projectives and injectives and is a
    maximal clique of the Ext-compatibility graph on the rest, so only those
    cliques are tested against the defining fixed-point equalities.
    """
    _require_complete(atlas)
    table = table or ext_table(atlas, n)
    seed = set(atlas.projective_indices) | set(atlas.injective_indices)
    if not table.orthogonal(seed):
        return []
    rest = [x for x in range(len(atlas)) if x not in seed
            and table.vanishes(x, x)
            and all(table.vanishes(x, s) and table.vanishes(s, x) for s in seed)]
    g = nx.Graph()
    g.add_nodes_from(rest)
    g.add_edges_from((x, y) for x, y in combinations(rest, 2)
                     if table.vanishes(x, y) and table.vanishes(y, x))
    cliques = list(nx.find_cliques(g)) if rest else [[]]
    notes = [FF_NOTE]
    if atlas.attested:
        notes.append("atlas completeness attested by user")
    out = []
    for clique in cliques:
        members = tuple(sorted(seed | set(clique)))
        if is_fixed_point(table, members):
            out.append(SubcategoryCandidate(
                members, [atlas.label(k) for k in members], True, True,
                set(members) == seed, list(notes)))
    out.sort(key=lambda c: c.members)
    return out


# ---------------------------------------------------------------- almost split

@dataclass
class AlmostSplitVerdict:
    holds: bool
    non_split: bool
    right_almost_split: bool
    failures: list[str]
    notes: list[str] = field(default_factory=list)


def _span_contains(vectors: list[list], targets: list[list]) -> bool:
    if not targets:
        return True
    width = len(targets[0])
    base = la.qarray(vectors, (len(vectors), width)) if vectors else la.zeros(0, width)
    r = la.rank(base)
    both = la.vstack([base, la.qarray(targets, (len(targets), width))], width)
    return la.rank(both) == r


def _splits(g: ModuleMorphism) -> bool:
    """Is there ``s`` with ``g s = id``?"""
    c, b = g.target, g.source
    sections = hom_space(c, b)
    ident = identity_morphism(c).vector()
    if not ident:
        return True
    return _span_contains([(g @ s).vector() for s in sections], [ident])


def almost_split_check(f: ModuleMorphism, g: ModuleMorphism,
                       atlas: IndecomposableAtlas) -> AlmostSplitVerdict:
    """Check that ``0 -> A -f-> B -g-> C -> 0`` is almost split.

    Non-split: no section of ``g``.  Right almost split: for each atlas
    member M, every non-retraction ``M -> C`` factors through ``g``; for
    ``M != C`` that is all of ``Hom(M, C)``, for ``M = C`` it is the
    radical of ``End(C)``.
    """
    _require_complete(atlas)
    if f.target is not g.source and f.target != g.source:
        raise NotExact("maps are not composable")
    a_mod, b_mod, c_mod = f.source, f.target, g.target
    if not (f.is_mono() and g.is_epi() and (g @ f).is_zero()
            and b_mod.dim == a_mod.dim + c_mod.dim):
        raise NotExact("the sequence is not short exact")
    if a_mod.dim == 0 or c_mod.dim == 0 or not (is_indecomposable(a_mod) and is_indecomposable(c_mod)):
        raise ValueError("end terms must be nonzero indecomposables")

    failures = []
    non_split = not _splits(g)
    if not non_split:
        failures.append("the sequence splits")
    right = True
    for k, m in enumerate(atlas.modules):
        if m.dims == c_mod.dims and is_isomorphic(m, c_mod):
            ring = end_ring(c_mod)
            rad = ring.radical_basis
            targets = [combine(ring.basis, list(rad[:, col])).vector() for col in range(rad.shape[1])]
            source = c_mod
        else:
            targets = [h.vector() for h in hom_space(m, c_mod)]
            source = m
        lifted = [(g @ h).vector() for h in hom_space(source, b_mod)]
        if not _span_contains(lifted, targets):
            right = False
            failures.append(f"a non-retraction {atlas.label(k)} -> C does not factor through B")
    notes = ["atlas completeness attested by user"] if atlas.attested else []
    return AlmostSplitVerdict(non_split and right, non_split, right, failures, notes)


def sequence_from_mono(f: ModuleMorphism):
    """Complete a monomorphism to a short exact sequence ``(f, cokernel map)``."""
    return f, cokernel(f)[1]
