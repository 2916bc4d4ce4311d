"""
Command-line surface for deskcalc
"""
