"""Special and exceptional Jordan dialgebras: exact computer algebra."""

from .diassoc import (
    AssocPoly, Dimonomial, Dipoly, bar, involution, jordan_left, jordan_right,
    mul_left, mul_right, psi_as, symmetrize,
)
from .diterm import J, J_di, TermPoly, full_linearization, linearize, psi_alg
from .errors import (
    DegreeBoundError, DialgebraError, IdentityFailure, NotLinearError,
    NotMultilinearError, ParseError,
)
from .grassmann import sigma
from .membership import (
    herm_decompose, holds_in_special_dialgebras, is_jordan_dipolynomial,
    is_jordan_polynomial, jordan_span, macdonald_check,
)
from .parsing import parse, parse_assoc, parse_dipoly, parse_term_poly
from .speciality import GradedIdeal, quotient_speciality_check, verify_theorem3

__version__ = "0.1.0"

__all__ = [
    "AssocPoly", "Dimonomial", "Dipoly", "bar", "involution", "jordan_left", "jordan_right",
    "mul_left", "mul_right", "psi_as", "symmetrize",
    "J", "J_di", "TermPoly", "full_linearization", "linearize", "psi_alg",
    "DegreeBoundError", "DialgebraError", "IdentityFailure", "NotLinearError",
    "NotMultilinearError", "ParseError",
    "sigma",
    "herm_decompose", "holds_in_special_dialgebras", "is_jordan_dipolynomial",
    "is_jordan_polynomial", "jordan_span", "macdonald_check",
    "parse", "parse_assoc", "parse_dipoly", "parse_term_poly",
    "GradedIdeal", "quotient_speciality_check", "verify_theorem3",
]
