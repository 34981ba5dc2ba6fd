"""Logging, input validation and integer arithmetic helpers."""
