"""
Utilities package: command-line parsing and run configuration.
"""
