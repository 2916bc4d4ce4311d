"""
Numerical models: expressions, calculus, finance and statistics
"""
