"""
Data package: readers and writers for formula, proof, poset, frame and
pipeline files, plus sample inputs under data/samples.
"""
