"""Exact rational tangle calculus and n-trivial rational knots."""
