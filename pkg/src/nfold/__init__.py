"""Iterated monoidal poset categories and n-fold operads."""
