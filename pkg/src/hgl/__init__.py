"""Exact growth of lengths of Ext and Tor modules over polynomial rings and hypersurfaces."""

from .groebner import (
    FreeModuleElement,
    GroebnerBasis,
    ModuleOrder,
    buchberger,
    is_groebner,
    normal_form,
    syzygies,
)
from .growth import (
    NO_FIT,
    FitError,
    GrowthReport,
    LengthSequence,
    NoFit,
    audit_degree_bound,
    fit_polynomial,
    fit_quasipolynomial,
)
from .homology import (
    FreeResolution,
    FunctorSpec,
    ext,
    free_resolution,
    length_sequence,
    local_cohomology_h0,
    symbolic_power,
    tor,
)
from .ideals import (
    INFINITE,
    Ideal,
    Module,
    annihilator,
    artin_rees_index,
    colon,
    hilbert_function,
    intersect,
    krull_dim,
    length,
    saturate,
    subquotient,
)
from .ring import (
    DEFAULT_PRIME,
    MonomialOrder,
    Polynomial,
    PolynomialSyntaxError,
    Ring,
    RingError,
    monomial_compare,
    parse_polynomial,
    weighted_degree,
)
from .spread import analytic_spread, fiber_cone, rees_presentation

__version__ = "0.1.0"
