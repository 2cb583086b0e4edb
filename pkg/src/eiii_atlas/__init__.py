"""Exact computations on the EIII symmetric space: Clifford algebras, Fierz tables,
octonions, exceptional Lie algebras, the 27 of e6, Plücker charts and the Albert algebra."""

__version__ = "0.1.0"
