"""Exact computations on numerical semigroups and their dilatations ``S + a``."""

__version__ = "0.1.0"

from .core import (
    InvariantRecord,
    NumericalSemigroup,
    apery_set,
    contains,
    enumerate_by_genus,
    from_gaps,
    from_generators,
    hilbert_function,
    invariants,
    predicates,
)
from .relative_ideal import CofiniteSet, difference, multiple, sumset
from .dilatation import (
    TransferReport,
    apery_of_dilatation,
    contract,
    contraction_candidates,
    dilatation_domain,
    dilate,
    generators_of_dilatation,
    transfer_report,
    two_gen_apery_closed_form,
    two_gen_dilatation_generators,
)
from .classify import (
    canonical_reduction_data,
    is_almost_symmetric,
    is_nearly_gorenstein,
    is_two_agl,
    trace_ideal,
    verify_section3,
    wilf_holds,
)
from .presentation import PresentationProfile, betti_contributions, question_2_8_gap
