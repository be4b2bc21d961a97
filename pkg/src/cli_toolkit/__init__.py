"""
Command-line frontend, random instance generators and verification suites.
"""
