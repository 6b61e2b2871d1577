"""Special functions, quadrature and an identity-verification engine."""

__version__ = "0.1.0"
