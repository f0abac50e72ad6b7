"""Curved dg modules, curved BGG and support computations over QQ."""
