"""Exact verification tools for hopfish structures, hypergroupoids and
their Morita transport, over the rationals."""

__version__ = "0.1.0"
