"""Sampling helpers and JSON document I/O."""
