"""
Instance compilers between DAG path counting, Digicomp and ARRIVAL.
"""
