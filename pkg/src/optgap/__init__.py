"""optgap: exact optimization families, oracle optimizers, and a fooling harness."""

__version__ = "0.1.0"
