"""so(p,q), its root data, and element-level structure."""
from lorentzhom.lie.algebra import (
    ClosureCertificate,
    ClosureFailure,
    LieAlg,
    NotInAlgebraError,
    is_subalgebra,
    make_so,
    parse_algebra,
)
from lorentzhom.lie.roots import (
    IwasawaData,
    RootDecomp,
    iwasawa,
    killing_form,
    root_decomposition,
    standard_a_basis,
)

__all__ = [
    "ClosureCertificate",
    "ClosureFailure",
    "IwasawaData",
    "LieAlg",
    "NotInAlgebraError",
    "RootDecomp",
    "is_subalgebra",
    "iwasawa",
    "killing_form",
    "make_so",
    "parse_algebra",
    "root_decomposition",
    "standard_a_basis",
]
