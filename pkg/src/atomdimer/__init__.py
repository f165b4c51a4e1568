"""Second-order dispersion coefficients for an atom and a rotating diatomic molecule."""

__version__ = "0.1.0"
