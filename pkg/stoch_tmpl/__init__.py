"""Permissive strategy templates for stochastic games: synthesis, extraction, adaptation and verification."""
