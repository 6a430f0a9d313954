"""Computational checks around the rank <= 1 locus of sl_{n+1} meeting n+ + n-.

Submodules: ``polyring`` (exact polynomials, degrevlex, Buchberger),
``rootsys`` (type C_n almost positive roots and compatibility), ``detideal``
(2x2 minors of matrices with zero patterns), ``simplicial``, ``cluster``,
``orderposet`` (complexes and their Stanley-Reisner ideals), ``hilbert``
(Hilbert series) and ``cli``.
"""
from .errors import BudgetError, InputError

__all__ = ["BudgetError", "InputError"]
__version__ = "0.1.0"
