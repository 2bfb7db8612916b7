"""Abelianization of the type-B inverse braid monoid"""
