"""Exact homological invariants of finite dimensional algebras and wildness verdicts."""

__version__ = "0.1.0"
