"""Partition theory over Q and real quadratic fields."""
