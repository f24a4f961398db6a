"""Structural detectors: Auslander and Gorenstein conditions, blocks,
Nakayama classification and the trivial-MOS criterion."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import networkx as nx

from .algebra import AlgebraTable, is_connected, quiver_graph
from .errors import PreconditionUnmet
from .homological import (
    Resolution, ext_dim, global_dimension, id_, is_projective, min_injective_coresolution, pd,
)
from .modules import injective, is_uniserial, projective, regular_module, simple


def jsonable(x):
    """Replace infinities by the string ``"inf"`` for JSON output."""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class SimpleClassification:
    vertex: int
    pd: float
    id: float
    is_projective: bool
    is_injective: bool


@lru_cache(maxsize=None)
def classify_simples(a: AlgebraTable) -> tuple[SimpleClassification, ...]:
    out = []
    for i in a.vertices:
        s = simple(a, i)
        p, q = pd(s), id_(s)
        out.append(SimpleClassification(i, p, q, p == 0, q == 0))
    return tuple(out)


@lru_cache(maxsize=None)
def regular_coresolution(a: AlgebraTable, max_len: int) -> Resolution:
    """Minimal injective coresolution of the regular module, possibly truncated."""
    return min_injective_coresolution(regular_module(a), max_len, allow_partial=True)


def _term(res: Resolution, i: int):
    return res.terms[i] if i < len(res.terms) else None


def injective_term_pds(a: AlgebraTable, upto: int) -> list[float]:
    """``pd I^i(Lambda)`` for ``0 <= i <= upto`` (zero terms have pd 0)."""
    res = regular_coresolution(a, upto)
    return [pd(t) if (t := _term(res, i)) is not None else 0 for i in range(upto + 1)]


def is_n_auslander(a: AlgebraTable, n: int) -> bool:
    """gl.dim <= n+1 and ``I^0(Lambda) .. I^n(Lambda)`` are projective."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if global_dimension(a) > n + 1:
        return False
    return auslander_witness(a, n) is None


def auslander_witness(a: AlgebraTable, n: int) -> tuple[int, float] | None:
    """First ``(i, pd I^i(Lambda))`` with ``i <= n`` and ``I^i`` not projective."""
    res = regular_coresolution(a, n)
    for i in range(n + 1):
        t = _term(res, i)
        if t is not None and t.dim and not is_projective(t):
            return i, pd(t)
    return None


def auslander_order(a: AlgebraTable, gl_dim=None):
    """Largest n >= 1 for which the algebra is n-Auslander.

    Semisimple algebras satisfy the condition for every n (``math.inf``);
    ``None`` means no n qualifies.
    """
    gl_dim = global_dimension(a) if gl_dim is None else gl_dim
    if gl_dim == 0:
        return math.inf
    if gl_dim == math.inf:
        return None
    best = None
    # n-Auslander forces gl.dim <= n+1 and dominant dimension >= n+1 >= gl.dim
    for n in range(max(1, gl_dim - 1), gl_dim + 1):
        if is_n_auslander(a, n):
            best = n
    return best


def is_n_gorenstein(a: AlgebraTable, n: int) -> bool:
    """``pd I^i(Lambda) <= i`` for ``0 <= i <= n-1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return all(p <= i for i, p in enumerate(injective_term_pds(a, n - 1)))


def gorenstein_orders(a: AlgebraTable, gl_dim=None) -> list[int]:
    """All n in ``1..gl.dim`` (or ``1..vertex_count`` if gl.dim is infinite)
    for which the algebra is n-Gorenstein."""
    gl_dim = global_dimension(a) if gl_dim is None else gl_dim
    limit = max(1, gl_dim if gl_dim != math.inf else a.vertex_count)
    pds = injective_term_pds(a, limit - 1)
    out = []
    for n in range(1, limit + 1):
        if pds[n - 1] > n - 1:
            break
        out.append(n)
    return out


@dataclass
class MosCriterion:
    """Outcome of the simple-module criterion for a trivial maximal
    (n-1)-orthogonal subcategory (n = gl.dim)."""

    holds: bool
    witness: int | None
    hypothesis_met: bool
    gl_dim: float
    classification: tuple[SimpleClassification, ...] = field(repr=False)

    @property
    def note(self) -> str:
        if self.hypothesis_met:
            return "criterion applies"
        return "criterion not asserted outside (n-1)-Auslander algebras with gl.dim n >= 2"

    def to_json(self) -> dict:
        return jsonable({"holds": self.holds, "witness": self.witness,
                         "hypothesis_met": self.hypothesis_met, "note": self.note})


def admits_trivial_mos(a: AlgebraTable, strict: bool = False) -> MosCriterion:
    """Every simple of projective dimension gl.dim must be injective.

    With ``strict`` a failed hypothesis raises PreconditionUnmet instead of
    returning an unasserted result.
    """
    cls = classify_simples(a)
    n = max(c.pd for c in cls)
    hyp = n != math.inf and n >= 2 and is_n_auslander(a, n - 1)
    witness = next((c.vertex for c in cls if c.pd == n and not c.is_injective), None)
    result = MosCriterion(witness is None, witness, hyp, n, cls)
    if strict and not hyp:
        raise PreconditionUnmet(
            f"not an (n-1)-Auslander algebra with gl.dim n >= 2 (gl.dim = {n})", cls)
    return result


def blocks(a: AlgebraTable) -> list[list[int]]:
    """Vertices grouped by the equivalence generated by ``Ext^1(S, T) != 0``."""
    g = nx.Graph()
    g.add_nodes_from(a.vertices)
    for i in a.vertices:
        for j in a.vertices:
            if i != j and ext_dim(simple(a, i), simple(a, j), 1):
                g.add_edge(i, j)
    return sorted(sorted(c) for c in nx.connected_components(g))


def quiver_components(a: AlgebraTable) -> list[list[int]]:
    return sorted(sorted(c) for c in nx.connected_components(quiver_graph(a.presentation)))


def has_nakayama_shape(a: AlgebraTable) -> bool:
    """Every vertex has at most one incoming and one outgoing arrow, so each
    component of the quiver is a linearly oriented line or an oriented cycle."""
    ins = {v: 0 for v in a.vertices}
    outs = {v: 0 for v in a.vertices}
    for arr in a.arrows:
        outs[arr.source] += 1
        ins[arr.target] += 1
    return all(ins[v] <= 1 and outs[v] <= 1 for v in a.vertices)


def is_nakayama(a: AlgebraTable) -> bool:
    """All indecomposable projectives and injectives are uniserial."""
    uniserial = all(is_uniserial(projective(a, i)) and is_uniserial(injective(a, i))
                    for i in a.vertices)
    if uniserial != has_nakayama_shape(a):
        raise RuntimeError("uniseriality test disagrees with the quiver-shape test")
    return uniserial


def is_canonical_shape(a: AlgebraTable) -> bool:
    """Linearly oriented line on at least three vertices with rad^2 = 0."""
    m = a.vertex_count
    return (m >= 3 and is_connected(a) and len(a.arrows) == m - 1
            and has_nakayama_shape(a) and a.max_basis_length <= 1)


@dataclass
class StructureReport:
    is_connected: bool
    blocks: list[list[int]]
    gl_dim: float
    auslander_order: float | None
    is_nakayama: bool
    admits_trivial_mos: MosCriterion
    gorenstein_orders: list[int]
    tilted_finite_type: bool
    simples: tuple[SimpleClassification, ...]
    dimension: int

    def to_json(self) -> dict:
        return jsonable({
            "dimension": self.dimension,
            "is_connected": self.is_connected,
            "blocks": self.blocks,
            "gl_dim": self.gl_dim,
            "auslander_order": self.auslander_order,
            "is_nakayama": self.is_nakayama,
            "admits_trivial_mos": self.admits_trivial_mos.to_json(),
            "gorenstein_orders": self.gorenstein_orders,
            "tilted_finite_type": self.tilted_finite_type,
            "simples": [asdict(s) for s in self.simples],
        })

    def lines(self) -> list[str]:
        fmt = lambda x: "inf" if x == math.inf else str(x)
        mos = self.admits_trivial_mos
        out = [
            f"dimension: {self.dimension}",
            f"connected: {self.is_connected}",
            f"blocks: {self.blocks}",
            f"gl.dim: {fmt(self.gl_dim)}",
            f"auslander order: {fmt(self.auslander_order) if self.auslander_order is not None else 'none'}",
            f"nakayama: {self.is_nakayama}",
            f"admits trivial MOS: {mos.holds}"
            + (f" (witness S({mos.witness}))" if mos.witness else "") + f" [{mos.note}]",
            f"gorenstein orders: {self.gorenstein_orders}",
            f"tilted of finite representation type: {self.tilted_finite_type}",
            "simples:",
        ]
        for s in self.simples:
            out.append(f"  S({s.vertex}): pd {fmt(s.pd)}, id {fmt(s.id)}"
                       + (", projective" if s.is_projective else "")
                       + (", injective" if s.is_injective else ""))
        return out


def analyze(a: AlgebraTable) -> StructureReport:
    gl = global_dimension(a)
    mos = admits_trivial_mos(a)
    order = auslander_order(a, gl)
    tilted = gl == 2 and order == 1 and mos.holds
    return StructureReport(
        is_connected=is_connected(a),
        blocks=blocks(a),
        gl_dim=gl,
        auslander_order=order,
        is_nakayama=is_nakayama(a),
        admits_trivial_mos=mos,
        gorenstein_orders=gorenstein_orders(a, gl),
        tilted_finite_type=tilted,
        simples=classify_simples(a),
        dimension=a.dimension,
    )


def mos_existence(a: AlgebraTable) -> dict:
    """Deduce from simple-module data whether a maximal 1-orthogonal
    subcategory can exist over an Auslander algebra of global dimension 2.

    A trivial one exists iff every pd-2 simple is injective; a non-trivial
    one can only exist given a simple with pd = id = 2 and at least two non-injective pd-2
    simples.  Raises PreconditionUnmet outside that class of algebras.
    """
    cls = classify_simples(a)
    gl = max(c.pd for c in cls)
    if gl != 2 or not is_n_auslander(a, 1):
        raise PreconditionUnmet("requires an Auslander algebra of global dimension 2", cls)
    pd2 = [c for c in cls if c.pd == 2]
    both = [c.vertex for c in pd2 if c.id == 2]
    non_inj = [c.vertex for c in pd2 if not c.is_injective]
    trivial = not non_inj
    nontrivial = bool(both) and len(non_inj) >= 2
    return {
        "pd2_simples": [c.vertex for c in pd2],
        "pd2_id2_simples": both,
        "pd2_non_injective_simples": non_inj,
        "trivial_exists": trivial,
        "nontrivial_possible": nontrivial,
        "any_possible": trivial or nontrivial,
    }
