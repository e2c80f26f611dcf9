"""Exact computations around Cox rings of K3 surfaces and their quotients."""

__version__ = "0.1.0"
