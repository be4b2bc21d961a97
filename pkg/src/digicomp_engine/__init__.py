"""
Multi-ball Digicomp simulation: naive ball dropping and the arbitrary-precision evaluator.
"""
