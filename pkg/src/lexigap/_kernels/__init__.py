"""Edit-distance kernels with a compiled fast path.

The Cython extension is used when it built; otherwise (or when
``LEXIGAP_PURE_PYTHON=1`` is set) the pure-Python fallback takes over.
``IMPLEMENTATION`` says which one is live.
"""

import os

if os.environ.get("LEXIGAP_PURE_PYTHON"):
    from lexigap._kernels._pyfallback import (damerau_levenshtein,
                                              damerau_levenshtein_many)
    IMPLEMENTATION = "python"
else:
    try:
        from lexigap._kernels._speedups import (damerau_levenshtein,
                                                damerau_levenshtein_many)
        IMPLEMENTATION = "cython"
    except ImportError:
        from lexigap._kernels._pyfallback import (damerau_levenshtein,
                                                  damerau_levenshtein_many)
        IMPLEMENTATION = "python"

__all__ = ["damerau_levenshtein", "damerau_levenshtein_many", "IMPLEMENTATION"]
