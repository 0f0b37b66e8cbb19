"""Exact coset, conjugation and Mackey-pair computations in fusion rings of semisimple Hopf algebras."""

__version__ = "0.1.0"
