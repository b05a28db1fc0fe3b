"""Exact-arithmetic engine for Quillen-type stratifications of prime spectra
attached to finite groups: per-subgroup strata, Weyl quotients, orbit-category
gluing, and the assembled spectra as labeled posets."""

__version__ = "0.1.0"
