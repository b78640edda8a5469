"""Floating-point oracle for the exact kernel.

Pointwise evaluation on the unit sphere, Monte Carlo integration against
the closed-form monomial integral, and finite differences along the
one-parameter flows of the tangential fields.

Coordinate convention: a sphere point (x1, x2, x3, x4) with |x| = 1 maps
to z1 = x1 + i x2, z2 = x3 + i x4.  The symbolic partials are formal
(dz1 z1 = 1 with z1~ held fixed), so the partials are checked by
perturbing one variable slot at a time; the rotation fields are checked
geometrically along their flows, which also validates the coordinate
expressions against the group action.
"""

from __future__ import annotations

import numpy as np

from .poly import Poly
from .spinor import Spinor

__all__ = [
    "PointS3",
    "random_points",
    "eval_poly",
    "eval_at",
    "mc_integral",
    "fd_check",
    "tangential_residual",
]


class PointS3:
    """Unit vector in R^4; z1 = x1 + i x2, z2 = x3 + i x4."""

    __slots__ = ("x",)

    def __init__(self, x1, x2, x3, x4):
        x = np.array([x1, x2, x3, x4], dtype=float)
        n = float(np.linalg.norm(x))
        if abs(n - 1.0) > 1e-12:
            raise ValueError(f"not on the unit sphere: |x| = {n}")
        object.__setattr__(self, "x", x)

    def __setattr__(self, name, value):
        raise AttributeError("PointS3 is immutable")

    @property
    def z(self):
        x = self.x
        return complex(x[0], x[1]), complex(x[2], x[3])


def random_points(n: int, seed: int):
    """n uniform points via normalized 4-dimensional Gaussian draws."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((n, 4))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    return [PointS3(*row) for row in x]


def eval_poly(p: Poly, z1, z2, w1=None, w2=None) -> complex:
    """Evaluate with independent conjugate slots; w1, w2 default to the
    honest conjugates.  |z|^(2s) uses |z1|^2 + |z2|^2 ... evaluated as
    z1 w1 + z2 w2, so slot perturbations stay consistent."""
    if w1 is None:
        w1 = np.conjugate(z1)
    if w2 is None:
        w2 = np.conjugate(z2)
    r2 = z1 * w1 + z2 * w2
    acc = 0j
    for (a, b, c, d, s), coeff in p.terms.items():
        val = (z1 ** a) * (w1 ** b) * (z2 ** c) * (w2 ** d)
        if s:
            val = val * r2 ** s
        acc = acc + complex(float(coeff.re), float(coeff.im)) * val
    return acc


def eval_at(phi: Spinor, pt: PointS3):
    z1, z2 = pt.z
    return eval_poly(phi.u, z1, z2), eval_poly(phi.v, z1, z2)


def mc_integral(p: Poly, samples: int, seed: int):
    """Sample mean and standard error of p over uniform sphere points;
    comparable to the exact normalized integral."""
    if samples < 1000:
        raise ValueError("use at least 1000 samples")
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((samples, 4))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    z1 = x[:, 0] + 1j * x[:, 1]
    z2 = x[:, 2] + 1j * x[:, 3]
    w1 = np.conjugate(z1)
    w2 = np.conjugate(z2)
    vals = np.zeros(samples, dtype=complex)
    for (a, b, c, d, s), coeff in p.terms.items():
        term = (z1 ** a) * (w1 ** b) * (z2 ** c) * (w2 ** d)
        if s:
            term = term * (np.abs(z1) ** 2 + np.abs(z2) ** 2) ** s
        vals += complex(float(coeff.re), float(coeff.im)) * term
    est = complex(vals.mean())
    var = float(np.var(vals.real) + np.var(vals.imag))
    err = (var / samples) ** 0.5
    return est, err


# -- finite differences ----------------------------------------------------------

_H = 1e-5


def _rotation_flow(k: int, z1, z2, t):
    """Flows of the three rotation fields; differentiating at t = 0 gives
    theta0, theta1, theta2."""
    if k == 0:
        ph = np.exp(1j * t)
        return ph * z1, ph * z2
    c, s = np.cos(t), np.sin(t)
    if k == 1:
        return c * z1 - s * np.conjugate(z2), c * z2 + s * np.conjugate(z1)
    return c * z1 + 1j * s * np.conjugate(z2), c * z2 - 1j * s * np.conjugate(z1)


def _flow_derivative(k: int, p: Poly, z1, z2) -> complex:
    zp = _rotation_flow(k, z1, z2, _H)
    zm = _rotation_flow(k, z1, z2, -_H)
    return (eval_poly(p, *zp) - eval_poly(p, *zm)) / (2 * _H)


def _slot_derivative(slot: int, p: Poly, z1, z2) -> complex:
    """Formal partial in one of the four variable slots (z1, z1~, z2, z2~)."""
    w1, w2 = np.conjugate(z1), np.conjugate(z2)
    args_p = [z1, z2, w1, w2]
    args_m = [z1, z2, w1, w2]
    order = {0: 0, 1: 2, 2: 1, 3: 3}[slot]
    args_p[order] = args_p[order] + _H
    args_m[order] = args_m[order] - _H
    fp = eval_poly(p, args_p[0], args_p[1], args_p[2], args_p[3])
    fm = eval_poly(p, args_m[0], args_m[1], args_m[2], args_m[3])
    return (fp - fm) / (2 * _H)


def _radial_derivative(p: Poly, z1, z2) -> complex:
    h = _H
    fp = eval_poly(p, z1 * np.exp(h), z2 * np.exp(h))
    fm = eval_poly(p, z1 * np.exp(-h), z2 * np.exp(-h))
    return 0.5 * (fp - fm) / (2 * h)


def numeric_field(tag: str, p: Poly, z1, z2) -> complex:
    """Finite-difference value of a coordinate field at one point."""
    if tag == "theta0":
        return _flow_derivative(0, p, z1, z2)
    if tag == "theta1":
        return _flow_derivative(1, p, z1, z2)
    if tag == "theta2":
        return _flow_derivative(2, p, z1, z2)
    if tag == "theta":
        return -1j * _flow_derivative(0, p, z1, z2)
    if tag == "eplus":
        return 0.5 * (_flow_derivative(1, p, z1, z2) - 1j * _flow_derivative(2, p, z1, z2))
    if tag == "eminus":
        return 0.5 * (_flow_derivative(1, p, z1, z2) + 1j * _flow_derivative(2, p, z1, z2))
    if tag == "dz1":
        return _slot_derivative(0, p, z1, z2)
    if tag == "dz1bar":
        return _slot_derivative(1, p, z1, z2)
    if tag == "dz2":
        return _slot_derivative(2, p, z1, z2)
    if tag == "dz2bar":
        return _slot_derivative(3, p, z1, z2)
    if tag == "nrad":
        return _radial_derivative(p, z1, z2)
    if tag == "nu":
        return _radial_derivative(p, z1, z2) + 0.5 * (-1j) * _flow_derivative(0, p, z1, z2)
    if tag == "nubar":
        return _radial_derivative(p, z1, z2) - 0.5 * (-1j) * _flow_derivative(0, p, z1, z2)
    raise ValueError(f"no finite-difference rule for field {tag!r}")


def fd_check(tag: str, p: Poly, points) -> float:
    """Worst relative error of the symbolic field against central finite
    differences over the given points."""
    from .poly import apply_field

    sym = apply_field(tag, p)
    worst = 0.0
    for pt in points:
        z1, z2 = pt.z
        num = numeric_field(tag, p, z1, z2)
        exact = eval_poly(sym, z1, z2)
        scale = max(abs(exact), abs(num), 1.0)
        worst = max(worst, abs(num - exact) / scale)
    return worst


def tangential_residual(phi: Spinor, eigenvalue: float, points) -> float:
    """Max pointwise residual of the tangential eigen-equation, with the
    operator applied by finite differences on each component."""
    worst = 0.0
    for pt in points:
        z1, z2 = pt.z
        du = -0.5 * numeric_field("theta", phi.u, z1, z2) + numeric_field("eplus", phi.v, z1, z2)
        dv = -numeric_field("eminus", phi.u, z1, z2) + 0.5 * numeric_field("theta", phi.v, z1, z2)
        uval = eval_poly(phi.u, z1, z2)
        vval = eval_poly(phi.v, z1, z2)
        worst = max(worst, abs(du - eigenvalue * uval), abs(dv - eigenvalue * vval))
    return worst
