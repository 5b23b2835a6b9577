"""
Shared utilities: tracing helpers.
"""
