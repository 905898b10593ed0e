"""Exact chromatic, LLT and forest quasisymmetric functions of interval graphs."""

__version__ = "0.1.0"
