"""Evaluation of words as partial signed permutations"""
