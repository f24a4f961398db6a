"""Homological algebra over bound quiver algebras KQ/I with exact rational
arithmetic: representations, minimal resolutions, Ext, Auslander-type
conditions and maximal n-orthogonal subcategories."""
from __future__ import annotations

from .algebra import (
    FIXTURE_TAGS, AlgebraTable, Arrow, Path, QuiverPresentation, compute_algebra, is_connected,
    named_fixture, opposite_algebra,
)
from .errors import (
    AdmissibilityError, AtlasIncomplete, BoundQuiverError, BudgetExceeded, ComputationError,
    DecompositionInconclusive, DimensionMismatch, HypothesisUnmet, IndecomposablesUnavailable, InputError,
    NotExact, NotFiniteDimensional, NotNakayama, ParseError, PreconditionUnmet, PresentationError,
    UnknownTag, Unresolved,
)
from .fileformat import parse_document, parse_file, parse_text, serialize
from .homological import (
    cosyzygy, ext_dim, ext_dims, global_dimension, grade, id_, injective_envelope,
    min_injective_coresolution, min_projective_resolution, pd, projective_cover, syzygy,
)
from .modules import (
    ModuleMorphism, Representation, decompose, dual, end_ring, hom_dim, hom_space, injective,
    is_indecomposable, is_isomorphic, projective, simple,
)
from .orthogonal import (
    IndecomposableAtlas, almost_split_check, enumerate_mos, ext_table, nakayama_atlas, user_atlas,
)
from .structure import (
    admits_trivial_mos, analyze, auslander_order, is_n_auslander, is_n_gorenstein, is_nakayama,
)
from .theorems import THEOREMS, Verdict, verify_theorem

__version__ = "0.1.0"
