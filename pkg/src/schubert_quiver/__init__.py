"""Tableau combinatorics, quiver-indexed bases of Λ⊗Λ and two-step flag Schubert calculus."""

__version__ = "0.1.0"
