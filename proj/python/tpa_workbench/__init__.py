"""Exact computations in tensor product algebras (C++ core)."""

from ._core import ConfigError, IntegrityError, Workbench, hecke_check, hecke_dim

__all__ = ["ConfigError", "IntegrityError", "Workbench", "hecke_check", "hecke_dim"]
