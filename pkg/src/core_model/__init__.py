"""
Switch graphs, problem instances, the instance text format and DOT export.
"""
