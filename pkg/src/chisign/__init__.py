"""Sign of the Euler characteristic of S-arithmetic groups from local data.

Submodules: ``core`` (domain types), ``tables`` (census of local forms),
``duality`` (realizability of families of local invariants), ``sign`` (parity
invariant, sign classifier), ``permgrp`` (permutation group engine for the
almost-conjugate subgroup search), ``cli`` (batch front end).
"""

__version__ = "0.1.0"
