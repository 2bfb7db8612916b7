"""Strand diagrams of partial signed permutations"""
