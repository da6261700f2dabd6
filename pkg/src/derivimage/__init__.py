"""Exact images of ideals of Q[x] under derivations and E-derivations.

All arithmetic is exact: scalars are `fractions.Fraction`, polynomials are
dense rational-coefficient vectors, and the linear solver is fraction-free
Gaussian elimination.  A compiled kernel accelerates the hot loops when
available; `kernel_backend()` reports which kernel is live.
"""

from ._backend import KERNEL_NAME as _KERNEL_NAME
from .bernoulli import (
    bernoulli_number,
    bernoulli_poly,
    clausen_staudt_defect,
    d_poly,
    in_v01,
    v01_coords,
)
from .derivations import (
    Derivation,
    derivation_ideal_member,
    derivative_ideal_member,
    derivative_ideal_shape,
)
from .ederivations import (
    CaseKind,
    CaseTag,
    EDerivation,
    classify_case,
    decompose_by_w,
    ideal_image_member,
    image_member,
    normalize_affine,
    outside_degree,
)
from .images import ImageShape, Membership, ShapeKind
from .linsolve import LinearSolveResult, solve_linear
from .mathieu import (
    ExponentSet,
    MSClause,
    MSVerdict,
    classify_homogeneous,
    radical_scan,
    smallest_ray,
    truncated_ms_check,
)
from .numthy import is_prime, vp
from .poly import (
    LinearPower,
    Polynomial,
    PolynomialSyntaxError,
    as_linear_power,
    format_polynomial,
    gcd,
    has_repeated_root,
    parse_polynomial,
    parse_rational,
)
from .translation import (
    QuadraticCriterion,
    TranslationDelta,
    forward_difference,
    preimage_in_linear_ideal,
    quadratic_criterion,
    quadratic_member,
    quadratic_shape,
    quantum_derivative,
    rational_rooted_member,
    reduce_mod_quadratic,
)
from .verify import Limits, VerifyReport, run_verify

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active arithmetic kernel: "c" or "py"."""
    return _KERNEL_NAME
