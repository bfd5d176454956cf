"""schubflex: exact Schubert-class combinatorics on cominuscule flag varieties.

Subpackages by capability:

* :mod:`schubflex.weyl` -- Cartan matrices, reflections, words, root counts.
* :mod:`schubflex.poset` -- parabolic-quotient Hasse diagrams, degrees, duals.
* :mod:`schubflex.classical` -- index arithmetic for Grassmannian, Lagrangian,
  orthogonal and quadric Schubert classes.
* :mod:`schubflex.rigidity` -- multi-rigidity classifiers for all families.
* :mod:`schubflex.witnesses` -- flexibility constructions (Bertini-type,
  moduli of curves, cone embeddings) producing checkable certificates.
* :mod:`schubflex.tits` -- incidence-variety transforms between quotients.
* :mod:`schubflex.verify` -- decoration and transform-table verification.
* :mod:`schubflex.cli` -- command-line front end (``schubflex``).
"""

__version__ = "0.1.0"

from .weyl import CartanDatum, build_cartan  # noqa: F401
