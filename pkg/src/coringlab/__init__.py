"""coringlab: exact computations with corings and comodules over GF(p).

Constructs and verifies corings, translates comodules to modules over the
dual rings, decides semisimplicity and simplicity, decomposes semisimple
corings into their simple components, and runs the grouplike/coinvariant/
Galois machinery.  All arithmetic is exact, over a prime field.
"""

from coringlab.backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
