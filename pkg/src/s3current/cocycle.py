"""The three 2-cocycles on sphere spinors and their matrix-trace extension.

c_k(phi, psi) is the normalized sphere integral of tr(Theta_k phi . psi).
The integrand u + u~ is real-valued, so every cocycle value is real; the
Leibniz rule for Theta_k together with the vanishing of sphere means of
theta_k-derivatives gives antisymmetry and both cyclic identities exactly,
for arbitrary smooth arguments.

On matrices over the spinor algebra the extension is the trace rule

    c_k(A, B) = sum_ij c_k(A_ij, B_ji),

which is basis-free, agrees with (X|Y) c_k(phi, psi) on pure tensors with
real matrices, and inherits antisymmetry and the cyclic identities from
the scalar case.  (The pure-tensor formula alone is not well defined over
the complex tensor product because c_k is only R-bilinear.)
"""

from __future__ import annotations

from .poly import integrate_raw
from .scalars import GaussianRational, ZERO
from .spinor import Spinor, theta_action

__all__ = ["cocycle", "cocycle_matrix"]


def cocycle(k: int, phi: Spinor, psi: Spinor) -> GaussianRational:
    """Exact value of c_k on two sphere spinors; always real."""
    if phi.space != "sphere" or psi.space != "sphere":
        raise ValueError("cocycle requires sphere spinors")
    tk = theta_action(k, phi)
    # only the u-component of the product contributes to the trace
    u = tk.u * psi.u - tk.v.conjugate() * psi.v
    half = integrate_raw(u)
    return half + half.conjugate()


def cocycle_matrix(k: int, a, b) -> GaussianRational:
    """Trace extension of c_k to current elements (matrices of spinors).

    Ambient entries are restricted to the sphere before integrating;
    restriction is an algebra map, so all cocycle identities persist.
    """
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")
    acc = ZERO
    for (i, j), phi in a.entries.items():
        psi = b.entries.get((j, i))
        if psi is not None:
            acc = acc + cocycle(k, phi.restrict(), psi.restrict())
    return acc
