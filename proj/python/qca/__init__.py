"""Exact quantum cluster algebra kernel: seeds, transport, relation suites."""

from ._qca import QcaError, build, count, kappa, mutate, transport, trop_mutate, verify

__all__ = ["QcaError", "build", "count", "kappa", "mutate", "transport", "trop_mutate", "verify"]
