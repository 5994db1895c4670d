"""
Tests package for HarmoniTree
"""
