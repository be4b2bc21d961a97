"""
Single-train ARRIVAL simulation with exact divergence detection.
"""
