"""Kernel selection at import time.

The compiled kernel is preferred when present.  Set DERIVIMAGE_BACKEND=py
to force the pure-Python twin (useful for benchmarking and debugging) or
DERIVIMAGE_BACKEND=c to insist on the compiled one.
"""

import os

_choice = os.environ.get("DERIVIMAGE_BACKEND", "auto").strip().lower() or "auto"

if _choice == "auto":
    try:
        from . import _kernel_c as kernel

        KERNEL_NAME = "c"
    except ImportError:
        from . import _kernel_py as kernel

        KERNEL_NAME = "py"
elif _choice == "c":
    from . import _kernel_c as kernel

    KERNEL_NAME = "c"
elif _choice == "py":
    from . import _kernel_py as kernel

    KERNEL_NAME = "py"
else:
    raise RuntimeError("unknown DERIVIMAGE_BACKEND value: %r" % (_choice,))

SOLVE_UNIQUE = kernel.SOLVE_UNIQUE
SOLVE_INCONSISTENT = kernel.SOLVE_INCONSISTENT
SOLVE_UNDERDETERMINED = kernel.SOLVE_UNDERDETERMINED

poly_mul = kernel.poly_mul
solve_augmented = kernel.solve_augmented
