"""Bound quiver algebras KQ/I: presentations, reduced path bases, products.

Composition is written right to left: the word ``b1*b2`` means "first b2,
then b1" and requires ``target(b2) == source(b1)``.  A path is stored as the
tuple of arrow names in written order, so its source is the source of the
last arrow and its target the target of the first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import networkx as nx

from .errors import AdmissibilityError, NotFiniteDimensional, PresentationError, UnknownTag
from .linalg import SparseEchelon, frac

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Term = tuple[Fraction, tuple[str, ...]]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True, order=True)
class Path:
    source: int
    target: int
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def reversed(self) -> "Path":
        return Path(self.target, self.source, self.arrows[::-1])

    def __str__(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e{self.source}"


@dataclass(frozen=True)
class QuiverPresentation:
    """A quiver with relations.

    ``relations`` is a tuple of linear combinations; each combination is a
    tuple of ``(coefficient, path)`` terms where ``path`` is a tuple of arrow
    names in written (right-to-left) order.
    """

    vertex_count: int
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[Term, ...], ...] = ()
    max_path_length: int | None = None

    def __post_init__(self):
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        relations = tuple(
            tuple((frac(c), tuple(path)) for c, path in rel) for rel in self.relations
        )
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "relations", relations)
        self._validate()

    def _validate(self) -> None:
        if not isinstance(self.vertex_count, int) or self.vertex_count < 1:
            raise PresentationError(f"vertex_count must be a positive integer, got {self.vertex_count!r}")
        if self.max_path_length is not None and self.max_path_length < 1:
            raise PresentationError("max_path_length must be positive")
        seen = set()
        for a in self.arrows:
            if not IDENTIFIER.match(a.name):
                raise PresentationError(f"invalid arrow name {a.name!r}")
            if a.name in seen:
                raise PresentationError(f"duplicate arrow name {a.name!r}")
            seen.add(a.name)
            for v in (a.source, a.target):
                if not 1 <= v <= self.vertex_count:
                    raise PresentationError(f"arrow {a.name!r} uses vertex {v} outside 1..{self.vertex_count}")
        for rel in self.relations:
            if not rel:
                raise PresentationError("empty relation")
            ends = set()
            for c, path in rel:
                if c == 0:
                    raise PresentationError("relation term with zero coefficient")
                if len(path) < 2:
                    raise AdmissibilityError(
                        f"relation path {'*'.join(path) or '(trivial)'} has length {len(path)} < 2"
                    )
                ends.add(self.endpoints(path))
            if len(ends) != 1:
                raise PresentationError(f"relation {format_relation(rel)} mixes non-parallel paths")

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def endpoints(self, path: tuple[str, ...]) -> tuple[int, int]:
        """(source, target) of a nonempty arrow word; checks composability."""
        amap = self.arrow_map
        for name in path:
            if name not in amap:
                raise PresentationError(f"unknown arrow {name!r}")
        for left, right in zip(path, path[1:]):
            if amap[right].target != amap[left].source:
                raise PresentationError(
                    f"path {'*'.join(path)} is not composable: {right} ends at "
                    f"{amap[right].target} but {left} starts at {amap[left].source}"
                )
        return amap[path[-1]].source, amap[path[0]].target

    def opposite(self) -> "QuiverPresentation":
        return QuiverPresentation(
            self.vertex_count,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
            tuple(tuple((c, p[::-1]) for c, p in rel) for rel in self.relations),
            self.max_path_length,
        )

    @property
    def default_bound(self) -> int:
        total = sum(len(p) for rel in self.relations for _, p in rel)
        return self.vertex_count + total + 2


def format_relation(rel: Iterable[Term]) -> str:
    parts = []
    for c, p in rel:
        parts.append(f"{c}*{'*'.join(p)}")
    return " + ".join(parts)


class AlgebraTable:
    """Reduced path basis of KQ/I with a full multiplication table.

    ``product(i, j)`` is the product ``basis[i] * basis[j]`` (first
    ``basis[j]``, then ``basis[i]``) as a dict ``{basis index: coefficient}``.
    """

    def __init__(self, presentation: QuiverPresentation, basis: tuple[Path, ...],
                 products: dict[tuple[int, int], dict[int, Fraction]],
                 reducer, nilpotency_degree: int):
        self.presentation = presentation
        self.basis = basis
        self._products = products
        self._reducer = reducer
        self.nilpotency_degree = nilpotency_degree
        self._opposite: AlgebraTable | None = None
        self.index = {p: i for i, p in enumerate(basis)}

    def __repr__(self):
        return f"<AlgebraTable vertices={self.vertex_count} dim={self.dimension}>"

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return self.presentation.vertex_count

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.presentation.arrows

    def product(self, i: int, j: int) -> dict[int, Fraction]:
        return self._products.get((i, j), {})

    def reduce(self, path: Path) -> dict[int, Fraction]:
        """Normal form of an arbitrary path in the basis."""
        return self._reducer(path)

    def trivial(self, v: int) -> int:
        return self.index[Path(v, v)]

    def arrow_index(self, name: str) -> int:
        a = self.presentation.arrow_map[name]
        return self.index[Path(a.source, a.target, (name,))]

    @cached_property
    def _by_source(self) -> dict[int, list[int]]:
        out = {v: [] for v in self.vertices}
        for i, p in enumerate(self.basis):
            out[p.source].append(i)
        return out

    @cached_property
    def _by_target(self) -> dict[int, list[int]]:
        out = {v: [] for v in self.vertices}
        for i, p in enumerate(self.basis):
            out[p.target].append(i)
        return out

    def paths_from(self, v: int) -> list[int]:
        return self._by_source[v]

    def paths_to(self, v: int) -> list[int]:
        return self._by_target[v]

    @property
    def max_basis_length(self) -> int:
        return max(p.length for p in self.basis)

    @property
    def opposite(self) -> "AlgebraTable":
        if self._opposite is None:
            op = AlgebraTable(
                self.presentation.opposite(),
                tuple(p.reversed() for p in self.basis),
                {(j, i): v for (i, j), v in self._products.items()},
                lambda path: self._reducer(path.reversed()),
                self.nilpotency_degree,
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def check_associativity(self) -> bool:
        """Exhaustive check of (xy)z == x(yz) on basis triples."""
        n = self.dimension
        for i in range(n):
            for j in range(n):
                ij = self.product(i, j)
                for k in range(n):
                    left: dict[int, Fraction] = {}
                    for m, c in ij.items():
                        for q, d in self.product(m, k).items():
                            left[q] = left.get(q, 0) + c * d
                    right: dict[int, Fraction] = {}
                    for m, c in self.product(j, k).items():
                        for q, d in self.product(i, m).items():
                            right[q] = right.get(q, 0) + c * d
                    if {q: v for q, v in left.items() if v} != {q: v for q, v in right.items() if v}:
                        return False
        return True


def _enumerate_paths(p: QuiverPresentation, bound: int) -> list[list[Path]]:
    by_len = [[Path(v, v) for v in range(1, p.vertex_count + 1)]]
    for _ in range(bound):
        nxt = []
        for q in by_len[-1]:
            for a in p.arrows:
                if a.source == q.target:
                    nxt.append(Path(q.source, a.target, (a.name,) + q.arrows))
        by_len.append(nxt)
    return by_len


def compute_algebra(p: QuiverPresentation) -> AlgebraTable:
    """Reduced basis and multiplication table of KQ/I.

    The ideal is spanned, up to the path-length bound, by the products
    ``u * r * w`` of each relation with paths on both sides; elimination on
    that span (longest paths pivoted first) leaves a normal-word basis.
    Raises NotFiniteDimensional if some path of the bound length survives.
    """
    bound = p.max_path_length or p.default_bound
    by_len = _enumerate_paths(p, bound)
    ordered = [q for length in range(bound, -1, -1) for q in by_len[length]]
    col = {q: i for i, q in enumerate(ordered)}
    starting_at: dict[int, list[Path]] = {}
    ending_at: dict[int, list[Path]] = {}
    for length in range(bound + 1):
        for q in by_len[length]:
            starting_at.setdefault(q.source, []).append(q)
            ending_at.setdefault(q.target, []).append(q)

    ech = SparseEchelon()
    for rel in p.relations:
        src, tgt = p.endpoints(rel[0][1])
        shortest = min(len(path) for _, path in rel)
        for u in starting_at.get(tgt, []):
            for w in ending_at.get(src, []):
                if u.length + w.length + shortest > bound:
                    continue
                row: dict[int, Fraction] = {}
                for c, path in rel:
                    full = u.arrows + path + w.arrows
                    if len(full) <= bound:
                        key = col[Path(w.source, u.target, full)]
                        row[key] = row.get(key, 0) + c
                ech.add(row)

    for q in by_len[bound]:
        if ech.rows.get(col[q]) != {col[q]: 1}:
            raise NotFiniteDimensional(
                f"path {q} of length {bound} survives reduction; the relations do not "
                f"bound the algebra within max_path_length={bound}"
            )

    basis_paths = [q for length in range(bound) for q in by_len[length] if col[q] not in ech.rows]
    # trivial paths, then arrows in presentation order, then longer paths
    arrow_pos = {a.name: i for i, a in enumerate(p.arrows)}
    basis_paths.sort(key=lambda q: (q.length, [arrow_pos[x] for x in q.arrows], q.source))
    basis = tuple(basis_paths)
    bindex = {q: i for i, q in enumerate(basis)}
    col_to_basis = {col[q]: i for q, i in bindex.items()}

    def reducer(path: Path) -> dict[int, Fraction]:
        if path.length >= bound:
            return {}
        c = col[path]
        if c in col_to_basis:
            return {col_to_basis[c]: Fraction(1)}
        row = ech.rows[c]
        return {col_to_basis[k]: -v for k, v in row.items() if k != c}

    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if y.target != x.source:
                continue
            prod = reducer(Path(y.source, x.target, x.arrows + y.arrows))
            if prod:
                products[(i, j)] = prod

    nilpotency = bound
    for length in range(1, bound + 1):
        if all(not reducer(q) for q in by_len[length]):
            nilpotency = length
            break
    return AlgebraTable(p, basis, products, reducer, nilpotency)


def opposite_algebra(a: AlgebraTable) -> AlgebraTable:
    return a.opposite


def is_connected(a: AlgebraTable | QuiverPresentation) -> bool:
    p = a.presentation if isinstance(a, AlgebraTable) else a
    return nx.is_connected(quiver_graph(p))


def quiver_graph(p: QuiverPresentation) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(1, p.vertex_count + 1))
    g.add_edges_from((a.source, a.target) for a in p.arrows)
    return g


def disjoint_union(*presentations: QuiverPresentation) -> QuiverPresentation:
    """Presentation of the product algebra; arrows of the k-th factor get a
    ``_k`` suffix when names would clash."""
    names = [a.name for p in presentations for a in p.arrows]
    clash = len(names) != len(set(names))
    arrows, relations = [], []
    offset = 0
    for k, p in enumerate(presentations, start=1):
        rename = (lambda s, k=k: f"{s}_{k}") if clash else (lambda s: s)
        arrows += [Arrow(rename(a.name), a.source + offset, a.target + offset) for a in p.arrows]
        relations += [tuple((c, tuple(rename(x) for x in path)) for c, path in rel) for rel in p.relations]
        offset += p.vertex_count
    return QuiverPresentation(offset, tuple(arrows), tuple(relations))


# ---------------------------------------------------------------- fixtures

def linear_quiver(n: int, prefix: str = "b", zero_pairs: Iterable[int] = ()) -> QuiverPresentation:
    """Quiver 1 <- 2 <- ... <- n+1 with arrows ``b_i: i+1 -> i`` and the
    zero relations ``b_i * b_{i+1}`` for each ``i`` in ``zero_pairs``."""
    arrows = tuple(Arrow(f"{prefix}{i}", i + 1, i) for i in range(1, n + 1))
    rels = tuple(((Fraction(1), (f"{prefix}{i}", f"{prefix}{i + 1}")),) for i in zero_pairs)
    return QuiverPresentation(n + 1, arrows, rels)


@dataclass(frozen=True)
class NamedFixture:
    tag: str
    presentation: QuiverPresentation = field(repr=False)


_TAG = re.compile(r"(A|E410)(?:\[(\d+)\]|-?(\d+))?\Z")


def named_fixture(tag: str, n: int | None = None) -> QuiverPresentation:
    """Built-in presentations.

    ``A[n]``: the linear quiver on n+1 vertices with every length-two path
    killed.  ``E410[n]``: the linear quiver on 2n+1 vertices with every
    length-two path killed except ``b_n * b_{n+1}``.  ``E64`` is ``E410[2]``.
    ``E65``: a commutative square with two tails.  ``E66``: the two-cycle
    1 -> 2 -> 1 with the path 2 -> 1 -> 2 killed.  ``REM``: the linear
    quiver on 5 vertices with the single relation ``a1*a2*a3*a4``.
    """
    tag = tag.strip()
    if tag.startswith("fixture:"):
        tag = tag[len("fixture:"):]
    if tag == "E64":
        tag, n = "E410", 2
    m = _TAG.match(tag)
    if m:
        family = m.group(1)
        if m.group(2) or m.group(3):
            n = int(m.group(2) or m.group(3))
        if n is None or n < 2:
            raise UnknownTag(f"{family}[n] needs n >= 2")
        if family == "A":
            return linear_quiver(n, "b", range(1, n))
        return linear_quiver(2 * n, "b", [i for i in range(1, 2 * n) if i != n])
    if tag == "E65":
        arrows = (
            Arrow("alpha", 6, 4), Arrow("gamma", 6, 5), Arrow("beta", 4, 3),
            Arrow("delta", 5, 3), Arrow("lambda", 3, 1), Arrow("mu", 3, 2),
        )
        one = Fraction(1)
        rels = (
            ((one, ("beta", "alpha")), (-one, ("delta", "gamma"))),
            ((one, ("mu", "delta")),),
            ((one, ("lambda", "beta")),),
        )
        return QuiverPresentation(6, arrows, rels)
    if tag == "E66":
        return QuiverPresentation(
            2, (Arrow("beta", 1, 2), Arrow("alpha", 2, 1)), (((Fraction(1), ("beta", "alpha")),),)
        )
    if tag == "REM":
        return QuiverPresentation(
            5,
            tuple(Arrow(f"a{i}", i + 1, i) for i in range(1, 5)),
            (((Fraction(1), ("a1", "a2", "a3", "a4")),),),
        )
    raise UnknownTag(f"unknown fixture tag {tag!r}")


FIXTURE_TAGS = ("A2", "A3", "A4", "E410-2", "E410-3", "E64", "E65", "E66", "REM")


def all_fixtures() -> list[NamedFixture]:
    return [NamedFixture(t, named_fixture(t)) for t in FIXTURE_TAGS]
