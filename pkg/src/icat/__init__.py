"""Finite-instance engine for reflexive graphs, precategories and the
classification of split epimorphisms over pointed sets, abelian groups,
groups and unital magmas."""

__version__ = "0.1.0"
