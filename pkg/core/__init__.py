"""
Core package: formulas, fragments, truth-table semantics, finite preorders,
Kripke frames, reports and drawings.
"""
