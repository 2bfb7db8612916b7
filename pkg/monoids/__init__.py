"""Concrete finite monoids: signed and unsigned partial permutations"""
