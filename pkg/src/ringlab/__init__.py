"""Exact workbench for Drazin-type and Zhou-type generalized inverses in
finite rings and rational matrix algebras."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CardinalityError,
    HypothesisViolation,
    NotAUnitError,
    ParseError,
    RingMismatchError,
    SingularMatrixError,
    TheoremViolation,
    UniquenessViolation,
)
from .expr import parse_ring_expr  # noqa: E402
from .ring import (  # noqa: E402
    Element,
    FiniteRing,
    PowerOrbit,
    build_ring,
    format_element,
    parse_element,
    power,
    power_orbit,
    ring_arith,
)
from .inverses import (  # noqa: E402
    InverseCertificate,
    InverseKind,
    characterization_n,
    gzhou_constructive,
    inverse_bruteforce,
    lift_idempotent_binomial,
    verify_certificate,
)
from .rational import RationalMatrix, gzhou_matrix  # noqa: E402
from .identities import ClineQuadruple, SweepReport, run_sweep  # noqa: E402
