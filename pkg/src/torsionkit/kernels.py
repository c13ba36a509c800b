"""Backend selection for the table kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin takes over.  Set ``TORSIONKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("TORSIONKIT_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as backend
else:
    try:
        from . import _ckernels as backend
    except ImportError:
        from . import _pykernels as backend

BACKEND = backend.NAME

prepare_table = backend.prepare_table
prepare_vec = backend.prepare_vec
to_tuple = backend.to_tuple
unassigned = backend.unassigned
ring_violation = backend.ring_violation
module_violation = backend.module_violation
left_module_violation = backend.left_module_violation
derivation_violation = backend.derivation_violation
left_derivation_violation = backend.left_derivation_violation
close_ring = backend.close_ring
close_module = backend.close_module
gcd_degree_mod_p = backend.gcd_degree_mod_p
