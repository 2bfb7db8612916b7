"""Partial conjugating isomorphisms of a free group"""
