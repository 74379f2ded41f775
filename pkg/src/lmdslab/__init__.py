"""Exact laboratory for list-decodability and higher-order MDS codes."""

__version__ = "0.1.0"
