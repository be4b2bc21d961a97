"""
Logarithmic-size counter gadgets for trains and balls.
"""
