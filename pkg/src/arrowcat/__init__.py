"""arrowcat: finite categories as arrow-only data.

A category is a finite set of morphism names with a partial composition
table; identities, domains, and codomains are computed, never declared.
The package validates such data, converts to and from the conventional
objects-and-arrows presentation, and computes skeletons, equivalences,
finite limits, and adjunctions, all exposed over the catspec text format
and the ``arrowcat`` command-line tool.
"""
from .adjunction import (
    AdjunctionCandidate,
    AdjunctionReport,
    AdmissibilityReport,
    check_adjunction,
    galois_oracle,
    galois_violations,
    is_admissible,
    poset_adjunction,
    poset_functor,
)
from .catspec import CatspecDocument, CatspecError, Diagnostic, Span, parse, serialize
from .core import (
    CompositionProfile,
    ObjlessCategory,
    infer_identities,
    validate_objectless,
)
from .equivalence import (
    EquivalenceWitness,
    NatTransf,
    SkeletonResult,
    are_equivalent,
    brute_force_equivalence,
    find_category_isomorphism,
    identity_nat,
    is_isomorphism,
    is_natural_isomorphism,
    is_skeletal,
    iso_classes,
    skeleton,
    validate_nat,
)
from .errors import (
    ArrowCatError,
    CapacityError,
    GeneratorError,
    InapplicableScopeError,
    InvalidCategoryError,
    MalformedNameError,
    NameNotFoundError,
    NotAnIdentityError,
    NotMonotoneError,
    WiringError,
)
from .functors import (
    FunctorMap,
    functor_cod,
    functor_compose,
    functor_dom,
    functor_identity,
    validate_functor,
)
from .generators import (
    Poset,
    disjoint_union,
    gen_cyclic,
    gen_discrete,
    gen_finset,
    gen_monoid,
    gen_poset,
    gen_random,
    gen_walking_iso,
)
from .limits import (
    LimitCone,
    LimitsReport,
    binary_product,
    equalizer,
    generalized_elements,
    preserves_finite_limits,
    terminal_objects,
)
from .report import ValidationReport, Violation
from .standard import StdCategory, equal_up_to_renaming, to_objectless, to_standard, validate_standard

__version__ = "0.1.0"
