"""Presentations of linear monoidal categories and their endomorphism algebras."""

__version__ = "0.1.0"
