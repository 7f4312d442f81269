"""Exact invariants of hyperelliptic directed broken Lefschetz fibrations.

The package computes the signature, Euler characteristic, and (for simply
connected total spaces) the homeomorphism type of these fibrations from
combinatorial monodromy data, entirely in exact rational arithmetic.  The
layers, bottom up: ``ratlin`` (exact linear algebra), ``words`` and
``surface`` (mapping-class words and their symplectic representation),
``meyer`` (the signature cocycle and its cobounding function), ``locsig``
(local signatures and the fold homomorphism), ``fibration`` (the data
model and the two signature pipelines), and ``cli``.
"""

from .fibration import (
    ConsistencyError,
    FibrationSpec,
    LefschetzDatum,
    RoundRegion,
    abelianization,
    chain_twist_datum,
    compute_report,
    euler_characteristic,
    family_spec,
    homeomorphism_report,
    load_spec,
    separating_torsion,
    signature_meyer_path,
    spec_from_json,
    spec_to_json,
    total_signature,
    validate,
)
from .locsig import (
    ContextError,
    CycleContext,
    decomposition_check,
    h_generator,
    h_word,
    s_generator,
    s_word,
    sigma_loc,
)
from .meyer import PhiTable, meyer_form, phi, phi_base, phi_table, tau, tau_of_words
from .ratlin import (
    ShapeError,
    kernel_basis,
    rank,
    signature_of_symmetric,
    smith_normal_form,
)
from .surface import (
    TypeI,
    TypeII,
    chain_class,
    curve_action,
    intersection_matrix,
    twist_matrix,
    word_to_matrix,
)
from .words import (
    IOTA,
    ChainTwist,
    Iota,
    SeparatingTwist,
    Word,
    WordError,
    chain_word,
    format_word,
    gen_word,
    parse_word,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
