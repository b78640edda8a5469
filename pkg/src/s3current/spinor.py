"""Quaternionic spinor algebra on the 3-sphere.

A spinor is a pair (u, v) of polynomials identified with the quaternion
function u + j v.  Multiplication is the quaternion rule

    (u1 + j v1)(u2 + j v2) = (u1 u2 - v1~ v2) + j (v1 u2 + u1~ v2),

which makes smooth spinors an associative real algebra.  Elements carry a
space tag: "ambient" values live on punctured C^2 and may hold radial
powers |z|^(2s); "sphere" values are restrictions to |z| = 1 and are kept
in normal form, where equality is structural.

The distinguished basis family is indexed by (sign, m, l, k) with
0 <= l <= m and 0 <= k <= m+1.  The "+" spinors are harmonic polynomials
of degree m; the "-" spinors carry the radial power |z|^(-2(m+2)) and are
harmonic away from the origin.  This module builds them unnormalized, so
that every coefficient stays a Gaussian rational; the squared norm of each
basis spinor is the exact rational k! l! (m-l)! / (m+1-k)!.

Restrictions of finite basis combinations form the algebra L; expand()
recovers the (unique) basis coefficients of any element of L by exact
integration and certifies the reconstruction.
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Tuple

from .poly import Poly, apply_field, integrate_raw, normal_form
from .scalars import GaussianRational, Q, ZERO, gq, parse_gq

__all__ = [
    "BasisIndex",
    "Spinor",
    "Expansion",
    "ExpansionError",
    "basis_v",
    "basis_phi",
    "basis_indices",
    "involution",
    "trace",
    "theta_action",
    "dirac",
    "radial_n",
    "expand",
    "homogeneous_parts",
    "k_split",
    "subspace_class",
    "inner_product",
    "gram_norm",
    "clifford_generators",
    "SPINOR_I",
    "SPINOR_J",
    "kappa",
    "kappa_star",
    "mu",
    "lambda_star",
]

_ONE = GaussianRational(1)
_I = GaussianRational(0, 1)


class BasisIndex(NamedTuple):
    sign: str  # "+" or "-"
    m: int
    l: int
    k: int

    def validate(self) -> "BasisIndex":
        if self.sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        if not (0 <= self.l <= self.m):
            raise ValueError(f"need 0 <= l <= m, got l={self.l}, m={self.m}")
        if not (0 <= self.k <= self.m + 1):
            raise ValueError(f"need 0 <= k <= m+1, got k={self.k}, m={self.m}")
        return self

    @property
    def radial_degree(self) -> int:
        """Homogeneity degree: m for the "+" family, -(m+3) for "-"."""
        return self.m if self.sign == "+" else -(self.m + 3)

    @property
    def eigenvalue(self) -> Q:
        """Radial grading eigenvalue, radial_degree / 2."""
        return Q(self.radial_degree, 2)


class Spinor:
    """Pair (u, v) of Poly with a space tag."""

    __slots__ = ("u", "v", "space")

    def __init__(self, u: Poly, v: Poly, space: str = "sphere"):
        if space not in ("ambient", "sphere"):
            raise ValueError(f"space must be 'ambient' or 'sphere', got {space!r}")
        if space == "sphere":
            u = u if u.is_normal_form() else normal_form(u)
            v = v if v.is_normal_form() else normal_form(v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "space", space)

    def __setattr__(self, name, value):
        raise AttributeError("Spinor is immutable")

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "Spinor") -> "Spinor":
        self._same_space(other)
        return Spinor(self.u + other.u, self.v + other.v, self.space)

    def __sub__(self, other: "Spinor") -> "Spinor":
        self._same_space(other)
        return Spinor(self.u - other.u, self.v - other.v, self.space)

    def __neg__(self) -> "Spinor":
        return Spinor(-self.u, -self.v, self.space)

    def scale(self, c) -> "Spinor":
        """Componentwise complex scaling (the module structure)."""
        c = gq(c)
        return Spinor(self.u.scale(c), self.v.scale(c), self.space)

    # -- quaternion multiplication -------------------------------------------

    def __mul__(self, other: "Spinor") -> "Spinor":
        self._same_space(other)
        u = self.u * other.u - self.v.conjugate() * other.v
        v = self.v * other.u + self.u.conjugate() * other.v
        return Spinor(u, v, self.space)

    def bracket(self, other: "Spinor") -> "Spinor":
        """Commutator; computed both as mul difference and in the closed
        form (v1 v2~ - v1~ v2 | (u2 - u2~) v1 - (u1 - u1~) v2), which must
        agree exactly."""
        self._same_space(other)
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        closed = Spinor(
            v1 * v2.conjugate() - v1.conjugate() * v2,
            (u2 - u2.conjugate()) * v1 - (u1 - u1.conjugate()) * v2,
            self.space,
        )
        direct = self * other - other * self
        if self.space == "sphere":
            agree = direct == closed
        else:
            agree = direct.ambient_equal(closed)
        if not agree:
            raise AssertionError("bracket closed form disagrees with commutator")
        return closed

    def _same_space(self, other):
        if self.space != other.space:
            raise ValueError(f"mixed spinor spaces: {self.space} vs {other.space}")

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def ambient_is_zero(self) -> bool:
        return self.u.ambient_is_zero() and self.v.ambient_is_zero()

    def ambient_equal(self, other: "Spinor") -> bool:
        return self.u.ambient_equal(other.u) and self.v.ambient_equal(other.v)

    def __eq__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return self.space == other.space and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.space, self.u, self.v))

    def __bool__(self):
        return not self.is_zero()

    # -- space changes -----------------------------------------------------------

    def restrict(self) -> "Spinor":
        """Restriction to the unit sphere (identity on sphere values)."""
        if self.space == "sphere":
            return self
        return Spinor(normal_form(self.u), normal_form(self.v), "sphere")

    def total_degree(self) -> int:
        return max(self.u.total_degree(), self.v.total_degree())

    def to_json(self):
        return {"space": self.space, "u": self.u.to_json(), "v": self.v.to_json()}

    @staticmethod
    def from_json(data) -> "Spinor":
        return Spinor(Poly.from_json(data["u"]), Poly.from_json(data["v"]), data["space"])

    def __repr__(self):
        return f"Spinor({self.space}; u={self.u!r}, v={self.v!r})"


SPINOR_I = Spinor(Poly.const(1), Poly.zero())
SPINOR_J = Spinor(Poly.zero(), Poly.const(1))


def involution(which: str, phi: Spinor) -> Spinor:
    """sigma: (u|v) -> (u|-v);  tau: componentwise conjugation."""
    if which == "sigma":
        return Spinor(phi.u, -phi.v, phi.space)
    if which == "tau":
        return Spinor(phi.u.conjugate(), phi.v.conjugate(), phi.space)
    raise ValueError(f"unknown involution {which!r}")


def trace(phi: Spinor) -> Poly:
    """u + u~, a real-valued function."""
    return phi.u + phi.u.conjugate()


def theta_action(k: int, phi: Spinor) -> Spinor:
    """Theta_k phi = (theta_k u, theta_k v) / 2 on sphere spinors."""
    if phi.space != "sphere":
        raise ValueError("theta_action requires a sphere spinor")
    if k not in (0, 1, 2):
        raise ValueError("theta index must be 0, 1 or 2")
    tag = f"theta{k}"
    half = Q(1, 2)
    return Spinor(apply_field(tag, phi.u).scale(half), apply_field(tag, phi.v).scale(half), "sphere")


def dirac(which: str, phi: Spinor) -> Spinor:
    """The half Dirac operators on ambient spinors and the tangential
    operator on sphere spinors:

        D    = (dz1 u - dz2~ v | dz2 u + dz1~ v)
        D+   = (dz1~ u + dz2~ v | -dz2 u + dz1 v)
        slash = (-theta u / 2 + e+ v | -e- u + theta v / 2)
    """
    if which in ("D", "Ddag"):
        if phi.space != "ambient":
            raise ValueError(f"dirac {which} requires an ambient spinor")
        if which == "D":
            u = apply_field("dz1", phi.u) - apply_field("dz2bar", phi.v)
            v = apply_field("dz2", phi.u) + apply_field("dz1bar", phi.v)
        else:
            u = apply_field("dz1bar", phi.u) + apply_field("dz2bar", phi.v)
            v = -apply_field("dz2", phi.u) + apply_field("dz1", phi.v)
        return Spinor(u, v, "ambient")
    if which == "tangential":
        if phi.space != "sphere":
            raise ValueError("tangential dirac requires a sphere spinor")
        half = Q(1, 2)
        u = -apply_field("theta", phi.u).scale(half) + apply_field("eplus", phi.v)
        v = -apply_field("eminus", phi.u) + apply_field("theta", phi.v).scale(half)
        return Spinor(u, v, "sphere")
    raise ValueError(f"unknown dirac operator {which!r}")


# -- basis families ---------------------------------------------------------------

_v_cache: Dict[Tuple[int, int, int], Poly] = {}
_phi_cache: Dict[BasisIndex, Spinor] = {}
_phi_sphere_cache: Dict[BasisIndex, Spinor] = {}
_gram_cache: Dict[BasisIndex, GaussianRational] = {}


def basis_v(k: int, l: int, j: int) -> Poly:
    """k-fold eminus applied to z1^l z2^j; zero once k exceeds l + j."""
    if k < 0 or l < 0 or j < 0:
        raise ValueError("basis_v indices must be nonnegative")
    key = (k, l, j)
    p = _v_cache.get(key)
    if p is None:
        if k == 0:
            p = Poly.monomial(l, 0, j, 0, 0)
        else:
            p = apply_field("eminus", basis_v(k - 1, l, j))
        _v_cache[key] = p
    return p


def _w(k: int, a: int, b: int) -> Poly:
    """(-1)^k a!/(a+b-k)! v(b; k, a+b-k), the degree-(a+b) partner ladder
    obtained from the left group action."""
    from math import factorial

    m = a + b
    if k > m:
        return Poly.zero()
    coeff = Q(factorial(a), factorial(m - k))
    if k % 2:
        coeff = -coeff
    return basis_v(b, k, m - k).scale(coeff)


def basis_phi(idx: BasisIndex) -> Spinor:
    """Unnormalized basis spinor, ambient space.

    "+" family: (k v(k-1; l, m-l) | -v(k; l, m-l)), a degree-m polynomial
    spinor.  "-" family: |z|^(-2(m+2)) (w(k; m+1-l, l) | w(k; m-l, l+1)),
    degree m+1 over the radial power.
    """
    idx = BasisIndex(*idx).validate()
    phi = _phi_cache.get(idx)
    if phi is not None:
        return phi
    sign, m, l, k = idx
    if sign == "+":
        u = basis_v(k - 1, l, m - l).scale(k) if k > 0 else Poly.zero()
        v = -basis_v(k, l, m - l)
        phi = Spinor(u, v, "ambient")
    else:
        u = _w(k, m + 1 - l, l)
        v = _w(k, m - l, l + 1)
        shift = -(m + 2)
        u = Poly({(a, b, c, d, s + shift): co for (a, b, c, d, s), co in u.terms.items()})
        v = Poly({(a, b, c, d, s + shift): co for (a, b, c, d, s), co in v.terms.items()})
        phi = Spinor(u, v, "ambient")
    _phi_cache[idx] = phi
    return phi


def basis_phi_sphere(idx: BasisIndex) -> Spinor:
    idx = BasisIndex(*idx)
    phi = _phi_sphere_cache.get(idx)
    if phi is None:
        phi = basis_phi(idx).restrict()
        _phi_sphere_cache[idx] = phi
    return phi


def basis_indices(sign: str, m: int):
    """All (l, k) indices of one family at fixed m."""
    return [BasisIndex(sign, m, l, k) for l in range(m + 1) for k in range(m + 2)]


kappa = basis_phi_sphere(BasisIndex("+", 1, 0, 1))
mu = basis_phi_sphere(BasisIndex("-", 0, 0, 0))
kappa_star = Spinor(Poly.variable("z2~").scale(_I), Poly.variable("z1~").scale(_I))
lambda_star = Spinor(Poly.variable("z2~").scale(_I), Poly.variable("z1~").scale(-_I))


# -- inner products and expansion ----------------------------------------------------


def inner_product(phi: Spinor, psi: Spinor) -> GaussianRational:
    """Normalized integral of u1 u2~ + v1 v2~ over the sphere."""
    phi = phi.restrict()
    psi = psi.restrict()
    return integrate_raw(phi.u * psi.u.conjugate() + phi.v * psi.v.conjugate())


def gram_norm(idx: BasisIndex) -> GaussianRational:
    idx = BasisIndex(*idx)
    g = _gram_cache.get(idx)
    if g is None:
        b = basis_phi_sphere(idx)
        g = inner_product(b, b)
        _gram_cache[idx] = g
    return g


class ExpansionError(ValueError):
    """Raised when a spinor fails to re-expand in the basis family; this
    would contradict the closure of the restricted algebra."""


class Expansion:
    """Finite map from BasisIndex to GaussianRational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[BasisIndex, GaussianRational]):
        object.__setattr__(
            self, "coeffs", {BasisIndex(*i): gq(c) for i, c in coeffs.items() if gq(c)}
        )

    def __setattr__(self, name, value):
        raise AttributeError("Expansion is immutable")

    def __eq__(self, other):
        return isinstance(other, Expansion) and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(sorted(self.coeffs.items()))

    def __getitem__(self, idx) -> GaussianRational:
        return self.coeffs.get(BasisIndex(*idx), ZERO)

    def reconstruct(self, space: str = "sphere") -> Spinor:
        build = basis_phi_sphere if space == "sphere" else basis_phi
        acc_u, acc_v = Poly.zero(), Poly.zero()
        for idx, c in self.coeffs.items():
            b = build(idx)
            acc_u = acc_u + b.u.scale(c)
            acc_v = acc_v + b.v.scale(c)
        return Spinor(acc_u, acc_v, space)

    def harmonic_extension(self) -> Spinor:
        """The ambient harmonic representative with these coefficients."""
        return self.reconstruct("ambient")

    def degrees(self) -> set:
        return {idx.radial_degree for idx in self.coeffs}

    def to_json(self):
        return [
            [[i.sign, i.m, i.l, i.k], str(c)]
            for i, c in sorted(self.coeffs.items())
        ]

    @staticmethod
    def from_json(data) -> "Expansion":
        acc = {}
        for (sign, m, l, k), cs in data:
            acc[BasisIndex(sign, m, l, k)] = parse_gq(cs)
        return Expansion(acc)

    def __repr__(self):
        return "Expansion{" + ", ".join(f"{i}: {c}" for i, c in self) + "}"


def _weight_buckets(p: Poly):
    buckets = {}
    for mon, c in p.terms.items():
        key = (mon[0] - mon[1], mon[2] - mon[3])
        buckets.setdefault(key, []).append((mon, c))
    return buckets


def _bucket_inner(buckets, basis_poly: Poly) -> GaussianRational:
    """Integral of p * conj(basis_poly) using only balanced monomial pairs."""
    from .poly import _monomial_integral

    acc = ZERO
    for (a2, b2, c2, d2, _s), coeff2 in basis_poly.terms.items():
        hits = buckets.get((a2 - b2, c2 - d2))
        if not hits:
            continue
        cc2 = coeff2.conjugate()
        for (a1, b1, c1, d1, _s1), coeff1 in hits:
            v = _monomial_integral(a1 + b2, b1 + a2, c1 + d2, d1 + c2)
            acc = acc + coeff1 * cc2 * v
    return acc


def _candidates(max_plus_m: int, max_minus_m: int):
    out = []
    for m in range(max_plus_m + 1):
        out.extend(basis_indices("+", m))
    for m in range(max_minus_m + 1):
        out.extend(basis_indices("-", m))
    return out


def expand(phi: Spinor) -> Expansion:
    """Exact basis expansion of a sphere spinor.

    Coefficients are Gram projections <phi, b>/<b, b>.  Candidates are all
    indices whose sphere restriction has degree at most the input degree;
    on a nonzero residual the bound escalates by 2, at most twice, before
    failing loudly.
    """
    phi = phi.restrict()
    if phi.is_zero():
        return Expansion({})
    d = phi.total_degree()
    for extra in (0, 2, 4):
        bound = d + extra
        exp = _expand_with_bound(phi, bound)
        if exp is not None:
            return exp
    raise ExpansionError("expansion failed: nonzero residual at escalated degree bounds")


def _expand_with_bound(phi: Spinor, bound: int):
    u_buckets = _weight_buckets(phi.u)
    v_buckets = _weight_buckets(phi.v)
    coeffs = {}
    for idx in _candidates(bound, bound - 1 if bound >= 1 else -1):
        b = basis_phi_sphere(idx)
        num = _bucket_inner(u_buckets, b.u) + _bucket_inner(v_buckets, b.v)
        if num:
            coeffs[idx] = num / gram_norm(idx)
    exp = Expansion(coeffs)
    residual_u, residual_v = phi.u, phi.v
    for idx, c in exp.coeffs.items():
        b = basis_phi_sphere(idx)
        residual_u = residual_u - b.u.scale(c)
        residual_v = residual_v - b.v.scale(c)
    if residual_u.is_zero() and residual_v.is_zero():
        return exp
    return None


# -- grading ------------------------------------------------------------------------


def radial_n(phi: Spinor) -> Spinor:
    """The radial grading derivation.

    Ambient spinors: the monomial (a,b,c,d,s) scales by (a+b+c+d)/2 + s in
    each component, an exact derivation of the ambient algebra.  Sphere
    spinors: basis coefficients scale by m/2 ("+") and -(m+3)/2 ("-")
    through the expansion.
    """
    if phi.space == "ambient":
        return Spinor(apply_field("nrad", phi.u), apply_field("nrad", phi.v), "ambient")
    exp = expand(phi)
    scaled = {idx: c * idx.eigenvalue for idx, c in exp.coeffs.items()}
    return Expansion(scaled).reconstruct("sphere")


def homogeneous_parts(phi: Spinor) -> Dict[int, Spinor]:
    """Split into |z|-homogeneity components.

    Ambient spinors split monomial-wise by a+b+c+d+2s (products of
    homogeneous spinors land at the degree sum).  Sphere spinors split by
    the basis classes m / -(m+3) of their expansion.  Parts sum to the
    input exactly.
    """
    if phi.space == "ambient":
        degs = phi.u.homogeneity_degrees() | phi.v.homogeneity_degrees()
        return {
            n: Spinor(phi.u.homogeneous_part(n), phi.v.homogeneous_part(n), "ambient")
            for n in sorted(degs)
        }
    exp = expand(phi)
    by_degree: Dict[int, Dict[BasisIndex, GaussianRational]] = {}
    for idx, c in exp.coeffs.items():
        by_degree.setdefault(idx.radial_degree, {})[idx] = c
    return {
        n: Expansion(sub).reconstruct("sphere") for n, sub in sorted(by_degree.items())
    }


# -- real-part decomposition -----------------------------------------------------


def k_split(phi: Spinor) -> Tuple[Spinor, Spinor]:
    """Split into the commutative real part ((u+u~)/2 | 0) and the
    complementary ideal part ((u-u~)/2 | v)."""
    phi = phi.restrict()
    half = Q(1, 2)
    real_u = (phi.u + phi.u.conjugate()).scale(half)
    return (
        Spinor(real_u, Poly.zero(), "sphere"),
        Spinor(phi.u - real_u, phi.v, "sphere"),
    )


def subspace_class(phi: Spinor) -> set:
    """Membership flags among the involution eigenspaces.

    Lr0: u real, v = 0 (this is K).  L0r: u = 0, v real.  Li0: u pure
    imaginary, v = 0.  L0i: u = 0, v pure imaginary.  Kbot: u pure
    imaginary with arbitrary v, the complement ideal.
    """
    phi = phi.restrict()
    flags = set()
    u, v = phi.u, phi.v
    if v.is_zero():
        if u.is_self_conjugate():
            flags |= {"Lr0", "K"}
        if u.is_anti_self_conjugate() and not u.is_zero():
            flags.add("Li0")
    if u.is_zero():
        if v.is_self_conjugate() and not v.is_zero():
            flags.add("L0r")
        if v.is_anti_self_conjugate() and not v.is_zero():
            flags.add("L0i")
    if u.is_anti_self_conjugate():
        flags.add("Kbot")
    if phi.is_zero():
        flags |= {"Lr0", "K", "Kbot"}
    return flags


# -- Clifford generators -------------------------------------------------------------


def clifford_generators():
    """The four 4x4 generator matrices; gamma_p gamma_q + gamma_q gamma_p
    equals 2 delta_pq times the identity."""
    i = _I
    z = ZERO
    o = _ONE
    s1 = ((z, o), (o, z))
    s2 = ((z, -i), (i, z))
    s3 = ((o, z), (z, -o))
    ident = ((o, z), (z, o))

    def block(top_right, bottom_left):
        rows = []
        for r in range(2):
            rows.append(tuple([z, z]) + tuple(top_right[r]))
        for r in range(2):
            rows.append(tuple(bottom_left[r]) + tuple([z, z]))
        return tuple(rows)

    def neg(mat2):
        return tuple(tuple(-x for x in row) for row in mat2)

    def imul(mat2):
        return tuple(tuple(i * x for x in row) for row in mat2)

    gammas = []
    for sk in (s1, s2, s3):
        gammas.append(block(neg(imul(sk)), imul(sk)))
    gammas.append(block(neg(ident), neg(ident)))
    return tuple(gammas)
