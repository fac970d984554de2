"""Special relativity in the geometric algebras of space and spacetime.

`kernel` holds the signature-generic blade engine, `aps` the algebra of
physical space Cl(3), `sta` the spacetime algebra Cl(1,3) with observer
frames, `bridge` the observer-dependent isomorphism between Cl(3) and the
even subalgebra of Cl(1,3), and `transforms` the passive/active/both
transformation laws for measurable quantities.  `service` and `cli`
expose everything over JSON.
"""

__version__ = "0.1.0"

from . import aps, bridge, documents, kernel, sta, transforms

__all__ = ["aps", "bridge", "documents", "kernel", "sta", "transforms", "__version__"]
