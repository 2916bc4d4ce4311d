"""
deskcalc
Spreadsheet-style numerical toolkit: expressions, Goal Seek, Riemann sums,
compound interest, Welch t-tests, ANOVA and box plots
"""
__version__ = "1.0.0"
__author__ = "deskcalc maintainers"
__license__ = "MIT"
