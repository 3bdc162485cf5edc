"""Hybrid structural/semantic detection, explanation and repair of code smells and vulnerabilities."""

__version__ = "0.1.0"
