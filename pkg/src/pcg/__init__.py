"""Divisibility and conjugacy in free partially commutative groups."""
