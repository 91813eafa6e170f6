"""Exact checks for invariant Lorentz metrics on quotients of so(1,n) and so(2,n).

Subpackages:

* :mod:`lorentzhom.exact`   rational matrices, subspaces, signatures, polynomials
* :mod:`lorentzhom.lie`     so(p,q), root decompositions, element classes
* :mod:`lorentzhom.forms`   isotropy representations and invariant forms
* :mod:`lorentzhom.catalog` standard subalgebras
* :mod:`lorentzhom.verification` check suites
"""

__version__ = "0.1.0"

from lorentzhom.exact import BACKEND, Mat, SignatureTriple, signature  # noqa: E402

__all__ = ["BACKEND", "Mat", "SignatureTriple", "__version__", "signature"]
