"""Exact computation with one-generator left braces satisfying ``A^3 = 0``."""

from .core import (
    Brace,
    BraceDomainError,
    CheckReport,
    Exhaustive,
    Sampled,
    UnsupportedStrategy,
    check_A3_identities,
    check_brace_axioms,
    check_lemma_identities,
    lambda_map,
    multiple,
    replay,
    star,
)
from .finite import (
    AxiomViolation,
    CayleyBrace,
    Decomposition,
    IllegalModulus,
    NotInSubbrace,
    QuotientSpec,
    build_quotient,
    build_trivial_cyclic,
    decompose,
    ingest_table,
    load_brace,
)
from .free import (
    D2,
    D3,
    D2Element,
    D3Element,
    d2_mul,
    d3_inv,
    d3_mul,
    d3_star,
    epimorphism_to,
    generator_sequence,
    power,
)
from .kernels import BACKEND
from .series import (
    AdditiveSubgroup,
    SeriesReport,
    classify_NS,
    is_ideal,
    is_left_ideal,
    left_series,
    star_series,
    star_subgroup,
    subbrace_closure,
)
from .ybe import YbeMap, check_braid, check_involutive, check_nondegenerate, derive_solution

__version__ = "0.1.0"
