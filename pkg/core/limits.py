"""Default resource caps. Library functions take these as keyword defaults."""

# Largest mu for which 2^mu valuations are swept.
DEFAULT_MAX_MU = 20

# Largest preorder (element count) built or searched.
DEFAULT_MAX_POSET = 256

# Largest Kripke frame built.
DEFAULT_MAX_WORLDS = 256

# Letters allowed in the propositional skeleton of an A1 candidate.
DEFAULT_LETTER_CAP = 20

# Exhaustive S4.2 labeling sweeps.
S42_MAX_WORLDS = 6
S42_MAX_LETTERS = 3

DEFAULT_FRAGMENT_SIZE_CAP = 256
