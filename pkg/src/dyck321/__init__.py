"""Bijections between Dyck paths, 321-avoiding permutations and path pairs."""
