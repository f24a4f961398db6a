"""Left modules over a bound quiver algebra, given as representations.

An arrow ``a: s -> t`` acts by a matrix of shape ``dims[t] x dims[s]``.
All matrices are exact rational object arrays (see :mod:`.linalg`).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg as la
from .algebra import AlgebraTable
from .errors import DecompositionInconclusive


class Representation:
    """A finite-dimensional left module over ``algebra``.

    Args:
        algebra: the algebra the module lives over.
        dims: dimension of the vector space at each vertex (vertex 1 first).
        action: arrow name -> matrix; missing arrows act by zero.
        check: verify shapes and that every relation acts by zero.
        label: optional display name, ignored by equality.
    """

    def __init__(self, algebra: AlgebraTable, dims, action=None, check: bool = True,
                 label: str | None = None):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.label = label
        if len(self.dims) != algebra.vertex_count or min(self.dims, default=0) < 0:
            raise ValueError(f"dims {self.dims} do not fit {algebra.vertex_count} vertices")
        action = dict(action or {})
        unknown = set(action) - set(algebra.presentation.arrow_map)
        if unknown:
            raise ValueError(f"unknown arrows {sorted(unknown)}")
        self.action: dict[str, np.ndarray] = {}
        for arr in algebra.arrows:
            shape = (self.dims[arr.target - 1], self.dims[arr.source - 1])
            if arr.name in action:
                m = la.qarray(action[arr.name], shape) if not isinstance(action[arr.name], np.ndarray) \
                    else action[arr.name]
                if m.shape != shape:
                    raise ValueError(f"arrow {arr.name}: matrix shape {m.shape}, expected {shape}")
            else:
                m = la.zeros(*shape)
            self.action[arr.name] = m
        self._paths: dict[tuple[str, ...], np.ndarray] = {}
        if check:
            self.check_relations()

    def dim_at(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def path_matrix(self, arrows: tuple[str, ...], source: int | None = None) -> np.ndarray:
        """Matrix of a path written right to left; trivial paths need ``source``."""
        if not arrows:
            return la.identity(self.dim_at(source))
        if arrows not in self._paths:
            m = self.action[arrows[-1]]
            for name in reversed(arrows[:-1]):
                m = la.matmul(self.action[name], m)
            self._paths[arrows] = m
        return self._paths[arrows]

    def check_relations(self) -> None:
        pres = self.algebra.presentation
        for rel in pres.relations:
            src, tgt = pres.endpoints(rel[0][1])
            total = la.zeros(self.dim_at(tgt), self.dim_at(src))
            for c, path in rel:
                total = total + c * self.path_matrix(path)
            if not la.is_zero(total):
                raise ValueError("representation violates a relation of the algebra")

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra is other.algebra and self.dims == other.dims
                and all(la.equal(self.action[k], other.action[k]) for k in self.action))

    __hash__ = None

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return f"<Representation{name} dims={self.dims}>"

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "action": {k: la.to_strings(v) for k, v in sorted(self.action.items())},
        }


class ModuleMorphism:
    """A module homomorphism given by one matrix per vertex."""

    def __init__(self, source: Representation, target: Representation, blocks, check: bool = True):
        if source.algebra is not target.algebra:
            raise ValueError("morphism between modules over different algebras")
        self.source = source
        self.target = target
        self.blocks: dict[int, np.ndarray] = {}
        for v in source.algebra.vertices:
            shape = (target.dim_at(v), source.dim_at(v))
            b = blocks.get(v) if isinstance(blocks, dict) else blocks[v - 1]
            b = la.zeros(*shape) if b is None else b
            if b.shape != shape:
                raise ValueError(f"block at vertex {v} has shape {b.shape}, expected {shape}")
            self.blocks[v] = b
        if check and not self.intertwines():
            raise ValueError("blocks do not commute with the arrow actions")

    @property
    def algebra(self) -> AlgebraTable:
        return self.source.algebra

    def intertwines(self) -> bool:
        for arr in self.algebra.arrows:
            left = la.matmul(self.target.action[arr.name], self.blocks[arr.source])
            right = la.matmul(self.blocks[arr.target], self.source.action[arr.name])
            if not la.equal(left, right):
                return False
        return True

    def __matmul__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """``g @ f`` is the composite "first f, then g"."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("morphisms are not composable")
        return ModuleMorphism(other.source, self.target,
                              {v: la.matmul(self.blocks[v], other.blocks[v]) for v in self.blocks},
                              check=False)

    def __add__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target,
                              {v: self.blocks[v] + other.blocks[v] for v in self.blocks}, check=False)

    def scale(self, c) -> "ModuleMorphism":
        c = la.frac(c)
        return ModuleMorphism(self.source, self.target,
                              {v: b * c for v, b in self.blocks.items()}, check=False)

    def rank(self) -> int:
        return sum(la.rank(b) for b in self.blocks.values())

    def is_zero(self) -> bool:
        return all(la.is_zero(b) for b in self.blocks.values())

    def is_mono(self) -> bool:
        return self.rank() == self.source.dim

    def is_epi(self) -> bool:
        return self.rank() == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_mono()

    def vector(self) -> list[Fraction]:
        """Entries of all blocks, vertex by vertex, row-major."""
        return [x for v in sorted(self.blocks) for x in self.blocks[v].flat]

    def __repr__(self):
        return f"<ModuleMorphism {self.source.dims} -> {self.target.dims} rank={self.rank()}>"


def identity_morphism(m: Representation) -> ModuleMorphism:
    return ModuleMorphism(m, m, {v: la.identity(m.dim_at(v)) for v in m.algebra.vertices}, check=False)


def zero_morphism(m: Representation, n: Representation) -> ModuleMorphism:
    return ModuleMorphism(m, n, {}, check=False)


def zero_module(a: AlgebraTable) -> Representation:
    return Representation(a, [0] * a.vertex_count, check=False, label="0")


def _check_vertex(a: AlgebraTable, i: int) -> None:
    if not 1 <= i <= a.vertex_count:
        raise IndexError(f"vertex {i} outside 1..{a.vertex_count}")


def simple(a: AlgebraTable, i: int) -> Representation:
    _check_vertex(a, i)
    dims = [0] * a.vertex_count
    dims[i - 1] = 1
    return Representation(a, dims, check=False, label=f"S({i})")


@lru_cache(maxsize=None)
def _projective(a: AlgebraTable, i: int) -> Representation:
    layout = {w: [k for k in a.paths_from(i) if a.basis[k].target == w] for w in a.vertices}
    pos = {k: r for w in a.vertices for r, k in enumerate(layout[w])}
    action = {}
    for arr in a.arrows:
        idx = a.arrow_index(arr.name)
        m = la.zeros(len(layout[arr.target]), len(layout[arr.source]))
        for col, k in enumerate(layout[arr.source]):
            for k2, c in a.product(idx, k).items():
                m[pos[k2], col] += c
        action[arr.name] = m
    return Representation(a, [len(layout[w]) for w in a.vertices], action, check=False, label=f"P({i})")


def projective(a: AlgebraTable, i: int) -> Representation:
    """P(i): basis the reduced paths starting at ``i``, acted on from the left."""
    _check_vertex(a, i)
    return _projective(a, i)


def projective_basis(a: AlgebraTable, i: int) -> dict[int, list[int]]:
    """Basis indices of P(i) at each vertex, in the order used by :func:`projective`."""
    return {w: [k for k in a.paths_from(i) if a.basis[k].target == w] for w in a.vertices}


@lru_cache(maxsize=None)
def _injective(a: AlgebraTable, i: int) -> Representation:
    m = dual(_projective(a.opposite, i))
    m.label = f"I({i})"
    return m


def injective(a: AlgebraTable, i: int) -> Representation:
    """I(i) = D(P(i) over the opposite algebra)."""
    _check_vertex(a, i)
    return _injective(a, i)


def regular_module(a: AlgebraTable) -> Representation:
    return direct_sum([projective(a, i) for i in a.vertices])[0]


def dual_regular_module(a: AlgebraTable) -> Representation:
    return direct_sum([injective(a, i) for i in a.vertices])[0]


def direct_sum(mods: list[Representation]):
    """Direct sum with its injections and projections.

    Returns ``(M, injections, projections)``.
    """
    if not mods:
        raise ValueError("direct sum of an empty list; use zero_module")
    a = mods[0].algebra
    dims = [sum(m.dim_at(v) for m in mods) for v in a.vertices]
    action = {arr.name: la.block_diag(m.action[arr.name] for m in mods) for arr in a.arrows}
    total = Representation(a, dims, action, check=False)
    labels = [m.label for m in mods]
    if all(labels):
        total.label = " + ".join(labels)
    injections, projections = [], []
    offsets = {v: 0 for v in a.vertices}
    for m in mods:
        inj, proj = {}, {}
        for v in a.vertices:
            d, o = m.dim_at(v), offsets[v]
            e = la.zeros(dims[v - 1], d)
            for r in range(d):
                e[o + r, r] = la.ONE
            inj[v] = e
            proj[v] = np.array(e.T)
            offsets[v] += d
        injections.append(ModuleMorphism(m, total, inj, check=False))
        projections.append(ModuleMorphism(total, m, proj, check=False))
    return total, injections, projections


def morphism_from_sum(source: Representation, target: Representation,
                      components: list[ModuleMorphism]) -> ModuleMorphism:
    """The map ``source = X_1 + ... + X_k -> target`` with the given components."""
    blocks = {v: la.hstack([f.blocks[v] for f in components], target.dim_at(v))
              for v in source.algebra.vertices}
    return ModuleMorphism(source, target, blocks, check=False)


def morphism_to_sum(source: Representation, target: Representation,
                    components: list[ModuleMorphism]) -> ModuleMorphism:
    """The map ``source -> target = Y_1 + ... + Y_k`` with the given components."""
    blocks = {v: la.vstack([f.blocks[v] for f in components], source.dim_at(v))
              for v in source.algebra.vertices}
    return ModuleMorphism(source, target, blocks, check=False)


# ---------------------------------------------------------------- sub and quotient

def submodule(m: Representation, bases: dict[int, np.ndarray]):
    """Submodule spanned at each vertex by the columns of ``bases[v]``.

    The columns must be independent and the span must be invariant under
    the arrows.  Returns ``(S, inclusion)``.
    """
    a = m.algebra
    action = {}
    for arr in a.arrows:
        bs, bt = bases[arr.source], bases[arr.target]
        x = la.solve(bt, la.matmul(m.action[arr.name], bs))
        if x is None:
            raise ValueError(f"subspace is not invariant under {arr.name}")
        action[arr.name] = x
    sub = Representation(a, [bases[v].shape[1] for v in a.vertices], action, check=False)
    return sub, ModuleMorphism(sub, m, dict(bases), check=False)


def _quotient(m: Representation, bases: dict[int, np.ndarray]):
    a = m.algebra
    proj, sect = {}, {}
    for v in a.vertices:
        c = bases[v]
        comp = la.complement_columns(c)
        e = la.zeros(m.dim_at(v), len(comp))
        for k, idx in enumerate(comp):
            e[idx, k] = la.ONE
        if m.dim_at(v):
            full = la.hstack([c, e], m.dim_at(v))
            proj[v] = la.inverse(full)[c.shape[1]:, :]
        else:
            proj[v] = la.zeros(0, 0)
        sect[v] = e
    action = {arr.name: la.matmul(la.matmul(proj[arr.target], m.action[arr.name]), sect[arr.source])
              for arr in a.arrows}
    q = Representation(a, [sect[v].shape[1] for v in a.vertices], action, check=False)
    return q, ModuleMorphism(m, q, proj, check=False), sect


def quotient(m: Representation, bases: dict[int, np.ndarray]):
    """``M / U`` for the submodule ``U`` spanned by ``bases``; returns ``(Q, projection)``."""
    q, p, _ = _quotient(m, bases)
    return q, p


def kernel(f: ModuleMorphism):
    """``(ker f, inclusion)``."""
    return submodule(f.source, {v: la.nullspace(b) for v, b in f.blocks.items()})


def image(f: ModuleMorphism):
    """``(im f, inclusion into the target)``."""
    return submodule(f.target, {v: la.column_basis(b) for v, b in f.blocks.items()})


def cokernel(f: ModuleMorphism):
    """``(coker f, projection from the target)``."""
    return quotient(f.target, {v: la.column_basis(b) for v, b in f.blocks.items()})


def dual(m: Representation) -> Representation:
    """``D M = Hom_K(M, K)``, a module over the opposite algebra."""
    op = m.algebra.opposite
    return Representation(op, m.dims, {k: np.array(v.T) for k, v in m.action.items()}, check=False)


def dual_morphism(f: ModuleMorphism) -> ModuleMorphism:
    """``D f: D(target) -> D(source)``."""
    return ModuleMorphism(dual(f.target), dual(f.source),
                          {v: np.array(b.T) for v, b in f.blocks.items()}, check=False)


# ---------------------------------------------------------------- radical structure

def _radical_bases(m: Representation, within: dict[int, np.ndarray]) -> dict[int, np.ndarray]:
    out = {}
    for v in m.algebra.vertices:
        parts = [la.matmul(m.action[arr.name], within[arr.source])
                 for arr in m.algebra.arrows if arr.target == v]
        out[v] = la.column_basis(la.hstack(parts, m.dim_at(v))) if parts else la.zeros(m.dim_at(v), 0)
    return out


def radical(m: Representation):
    """``(rad M, inclusion)``: the sum of the images of all arrows."""
    full = {v: la.identity(m.dim_at(v)) for v in m.algebra.vertices}
    return submodule(m, _radical_bases(m, full))


def socle(m: Representation):
    """``(soc M, inclusion)``: the joint kernel of all arrows."""
    bases = {}
    for v in m.algebra.vertices:
        outgoing = [m.action[arr.name] for arr in m.algebra.arrows if arr.source == v]
        if outgoing:
            bases[v] = la.nullspace(la.vstack(outgoing, m.dim_at(v)))
        else:
            bases[v] = la.identity(m.dim_at(v))
    return submodule(m, bases)


def top(m: Representation):
    """``(top M, projection)`` with ``top M = M / rad M``."""
    full = {v: la.identity(m.dim_at(v)) for v in m.algebra.vertices}
    return quotient(m, _radical_bases(m, full))


def top_with_lifts(m: Representation):
    """``top M`` together with, per vertex, a matrix whose columns lift its basis to M."""
    full = {v: la.identity(m.dim_at(v)) for v in m.algebra.vertices}
    q, p, sect = _quotient(m, _radical_bases(m, full))
    return q, p, sect


def radical_series(m: Representation) -> list[dict[int, np.ndarray]]:
    """Bases of ``rad^k M`` for k = 0, 1, ... down to the zero module."""
    cur = {v: la.identity(m.dim_at(v)) for v in m.algebra.vertices}
    out = [cur]
    while any(b.shape[1] for b in cur.values()):
        cur = _radical_bases(m, cur)
        out.append(cur)
    return out


def radical_layers(m: Representation) -> list[tuple[int, ...]]:
    """Dimension vectors of ``rad^k M / rad^{k+1} M``."""
    series = radical_series(m)
    return [tuple(series[k][v].shape[1] - series[k + 1][v].shape[1] for v in m.algebra.vertices)
            for k in range(len(series) - 1)]


def socle_dims(m: Representation) -> tuple[int, ...]:
    return socle(m)[0].dims


def length(m: Representation) -> int:
    """Composition length; every simple module is one-dimensional here."""
    return m.dim


def is_uniserial(m: Representation) -> bool:
    return all(sum(layer) <= 1 for layer in radical_layers(m))


def is_simple(m: Representation) -> bool:
    return m.dim == 1


# ---------------------------------------------------------------- Hom

def hom_space(m: Representation, n: Representation) -> list[ModuleMorphism]:
    """Basis of ``Hom(M, N)`` from the intertwining equations."""
    a = m.algebra
    if n.algebra is not a:
        raise ValueError("modules over different algebras")
    offset, off = {}, 0
    for v in a.vertices:
        offset[v] = off
        off += n.dim_at(v) * m.dim_at(v)
    ncols = off
    if ncols == 0:
        return []

    def var(v, r, c):  # entry (r, c) of the block X_v
        return offset[v] + r * m.dim_at(v) + c

    ech = la.SparseEchelon()
    for arr in a.arrows:
        s, t = arr.source, arr.target
        na, ma = n.action[arr.name], m.action[arr.name]
        # N_a X_s - X_t M_a = 0
        for r in range(n.dim_at(t)):
            for c in range(m.dim_at(s)):
                row: dict[int, Fraction] = {}
                for k in range(n.dim_at(s)):
                    x = na[r, k]
                    if x:
                        key = var(s, k, c)
                        row[key] = row.get(key, 0) + x
                for k in range(m.dim_at(t)):
                    x = ma[k, c]
                    if x:
                        key = var(t, r, k)
                        row[key] = row.get(key, 0) - x
                if row:
                    ech.add(row)
    out = []
    for vec in ech.nullspace(ncols):
        blocks = {}
        for v in a.vertices:
            b = la.zeros(n.dim_at(v), m.dim_at(v))
            for r in range(n.dim_at(v)):
                for c in range(m.dim_at(v)):
                    x = vec.get(var(v, r, c))
                    if x:
                        b[r, c] = x
            blocks[v] = b
        out.append(ModuleMorphism(m, n, blocks, check=False))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_space(m, n))


def combine(basis: list[ModuleMorphism], coeffs) -> ModuleMorphism:
    """Linear combination of morphisms sharing source and target."""
    out = None
    for f, c in zip(basis, coeffs):
        if c:
            out = f.scale(c) if out is None else out + f.scale(c)
    if out is None:
        return zero_morphism(basis[0].source, basis[0].target)
    return out


def coordinates(basis: list[ModuleMorphism], f: ModuleMorphism) -> list[Fraction] | None:
    """Coordinates of ``f`` in ``basis``, or ``None`` when ``f`` lies outside the span."""
    if not basis:
        return [] if f.is_zero() else None
    mat = la.qarray([g.vector() for g in basis], (len(basis), len(f.vector()))).T
    rhs = la.qarray([[x] for x in f.vector()], (mat.shape[0], 1))
    x = la.solve(mat, rhs)
    return None if x is None else list(x[:, 0])


# ---------------------------------------------------------------- endomorphisms

def _global(f: ModuleMorphism) -> np.ndarray:
    return la.block_diag(f.blocks[v] for v in sorted(f.blocks))


@dataclass
class EndomorphismRing:
    """``End(M)`` with basis, structure constants and radical.

    The radical is the kernel of the trace form ``(x, y) -> tr_M(x y)``; in
    characteristic zero this is the largest nilpotent ideal of the image of
    End(M) in End_K(M), which is End(M) itself.
    """

    module: Representation
    basis: list[ModuleMorphism]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def product(self, i: int, j: int) -> dict[int, Fraction]:
        """``basis[i] * basis[j]`` (first j, then i) in the basis."""
        coords = coordinates(self.basis, self.basis[i] @ self.basis[j])
        return {k: c for k, c in enumerate(coords) if c}

    def trace_form(self) -> np.ndarray:
        mats = [_global(f) for f in self.basis]
        g = la.zeros(len(mats), len(mats))
        for i, x in enumerate(mats):
            for j in range(i, len(mats)):
                g[i, j] = g[j, i] = la.trace(la.matmul(x, mats[j]))
        return g

    @property
    def radical_basis(self) -> np.ndarray:
        if not hasattr(self, "_rad"):
            self._rad = la.nullspace(self.trace_form()) if self.basis else la.zeros(0, 0)
        return self._rad

    @property
    def radical_dimension(self) -> int:
        return self.radical_basis.shape[1]

    @property
    def top_dimension(self) -> int:
        return self.dimension - self.radical_dimension

    def is_local(self) -> bool:
        return self.top_dimension == 1


def end_ring(m: Representation) -> EndomorphismRing:
    return EndomorphismRing(m, hom_space(m, m))


def _is_nilpotent_endo(f: ModuleMorphism) -> bool:
    return all(la.is_zero(la.matrix_power(b, b.shape[0])) for b in f.blocks.values())


def _candidates(basis: list[ModuleMorphism]):
    """Basis elements, then 0/+-1 combinations of two and three of them."""
    yield from basis
    for size in (2, 3):
        for idx in itertools.combinations(range(len(basis)), size):
            for signs in itertools.product((1, -1), repeat=size - 1):
                coeffs = [0] * len(basis)
                coeffs[idx[0]] = 1
                for k, s in zip(idx[1:], signs):
                    coeffs[k] = s
                yield combine(basis, coeffs)


def _fitting_pair(m: Representation, phi: ModuleMorphism, shift=0):
    """Fitting decomposition of ``phi - shift`` if it is proper, else None."""
    d = m.dim
    powers = {}
    for v, b in phi.blocks.items():
        if shift:
            b = b - shift * la.identity(b.shape[0])
        powers[v] = la.matrix_power(b, d)
    total = sum(m.dim_at(v) - la.rank(p) for v, p in powers.items())
    if 0 < total < d:
        return ({v: la.nullspace(p) for v, p in powers.items()},
                {v: la.column_basis(p) for v, p in powers.items()})
    return None


def _eigenvalues(phi: ModuleMorphism) -> list:
    roots = []
    for b in phi.blocks.values():
        if b.shape[0]:
            roots += [r for r in la.rational_roots(la.charpoly(b)) if r not in roots]
    return sorted(r for r in roots if r != 0)


def _fitting_split(m: Representation, basis: list[ModuleMorphism]):
    """Search for an endomorphism ``phi`` and a rational ``c`` such that
    ``phi - c`` is neither nilpotent nor invertible.

    Candidates are tried with ``c = 0`` first, then shifted by their rational
    eigenvalues.  Returns the Fitting pair ``(kernel bases, image bases)`` of
    ``(phi - c)^dim M``, or ``None`` when the candidate budget is exhausted.
    """
    for phi in _candidates(basis):
        split = _fitting_pair(m, phi)
        if split is not None:
            return split
    for phi in _candidates(basis):
        for c in _eigenvalues(phi):
            split = _fitting_pair(m, phi, c)
            if split is not None:
                return split
    return None


def is_indecomposable(m: Representation) -> bool:
    if m.dim == 0:
        raise ValueError("the zero module is neither decomposable nor indecomposable")
    ring = end_ring(m)
    if ring.is_local():
        return True
    if _fitting_split(m, ring.basis) is not None:
        return False
    raise DecompositionInconclusive(
        f"End(M)/rad has dimension {ring.top_dimension} but no splitting endomorphism was found"
    )


@dataclass
class DecompositionReport:
    summands: list[tuple[Representation, int]]
    certified: bool = True

    def pieces(self) -> list[Representation]:
        return [m for m, k in self.summands for _ in range(k)]


def _split_into_indecomposables(m: Representation) -> list[Representation]:
    done, stack = [], [m]
    while stack:
        x = stack.pop()
        if x.dim == 0:
            continue
        ring = end_ring(x)
        if ring.is_local():
            done.append(x)
            continue
        split = _fitting_split(x, ring.basis)
        if split is None:
            partial = DecompositionReport([(y, 1) for y in done + stack + [x]], certified=False)
            raise DecompositionInconclusive(
                f"no splitting endomorphism found for a summand of dims {x.dims}", partial)
        kb, ib = split
        stack.append(submodule(x, ib)[0])
        stack.append(submodule(x, kb)[0])
    return done


def decompose(m: Representation) -> DecompositionReport:
    """Krull-Schmidt decomposition, isomorphic summands grouped."""
    groups: list[list] = []
    for piece in _split_into_indecomposables(m):
        for g in groups:
            if _iso_indecomposables(g[0], piece):
                g[1] += 1
                break
        else:
            groups.append([piece, 1])
    groups.sort(key=lambda g: (g[0].dim, g[0].dims, radical_layers(g[0])))
    return DecompositionReport([(x, k) for x, k in groups], certified=True)


# ---------------------------------------------------------------- isomorphism

def _grid(k: int):
    """A few deterministic coefficient vectors for a quick invertibility probe."""
    yield [1] * k
    yield list(range(1, k + 1))
    yield [(i + 1) ** 2 for i in range(k)]
    yield [(-1) ** i * (i + 2) for i in range(k)]


def _iso_indecomposables(m: Representation, n: Representation) -> bool:
    """For M, N with local endomorphism rings: M = N iff some g f is invertible."""
    if m.dims != n.dims:
        return False
    forward = hom_space(m, n)
    if not forward:
        return False
    backward = hom_space(n, m)
    for f in forward:
        for g in backward:
            if not _is_nilpotent_endo(g @ f):
                return True
    return False


def is_isomorphic(m: Representation, n: Representation) -> bool:
    if m.algebra is not n.algebra:
        return False
    if m.dims != n.dims:
        return False
    if m.dim == 0:
        return True
    if radical_layers(m) != radical_layers(n) or socle_dims(m) != socle_dims(n):
        return False
    forward = hom_space(m, n)
    if not forward:
        return False
    for coeffs in _grid(len(forward)):
        if combine(forward, coeffs).is_iso():
            return True
    pm = _split_into_indecomposables(m)
    pn = _split_into_indecomposables(n)
    if len(pm) != len(pn):
        return False
    unmatched = list(pn)
    for x in pm:
        for k, y in enumerate(unmatched):
            if _iso_indecomposables(x, y):
                del unmatched[k]
                break
        else:
            return False
    return True
