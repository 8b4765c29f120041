"""Exact invariants of surface singularities and lattice models of rational surfaces."""
