"""Sparse polynomials in z1, z1~, z2, z2~ with an integer power of |z|^2.

A monomial is the exponent tuple (a, b, c, d, s) standing for
z1^a * z1~^b * z2^c * z2~^d * |z|^(2s); a..d are nonnegative, s is any
integer.  A Poly maps monomials to nonzero GaussianRational coefficients,
so equality is structural.

Restriction to the unit sphere drops |z|^(2s) and rewrites z2*z2~ into
1 - z1*z1~ until every monomial has min(c, d) = 0; that normal form is
unique.  The tangential vector fields, the radial grading operator, the
ambient Laplacian and the exact normalized sphere integral all act on this
representation.
"""

from __future__ import annotations

from math import factorial

from .scalars import GaussianRational, Q, ZERO, gq, parse_gq

__all__ = [
    "Poly",
    "FIELD_TAGS",
    "apply_field",
    "laplacian",
    "normal_form",
    "integrate_s3",
    "integrate_monomial",
]

FIELD_TAGS = (
    "dz1", "dz1bar", "dz2", "dz2bar",
    "eplus", "eminus", "theta",
    "theta0", "theta1", "theta2",
    "nu", "nubar", "nrad",
)

_I = GaussianRational(0, 1)


class Poly:
    """Immutable sparse polynomial over GaussianRational."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mon, coeff in terms.items():
                coeff = gq(coeff)
                if coeff:
                    clean[mon] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO_POLY

    @staticmethod
    def const(c) -> "Poly":
        c = gq(c)
        return Poly({(0, 0, 0, 0, 0): c}) if c else _ZERO_POLY

    @staticmethod
    def variable(name: str) -> "Poly":
        return Poly({_VAR_MONOMIAL[name]: GaussianRational(1)})

    @staticmethod
    def monomial(a, b, c, d, s=0, coeff=1) -> "Poly":
        return Poly({(a, b, c, d, s): gq(coeff)})

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        acc = dict(self.terms)
        for mon, coeff in other.terms.items():
            cur = acc.get(mon)
            if cur is None:
                acc[mon] = coeff
            else:
                tot = cur + coeff
                if tot:
                    acc[mon] = tot
                else:
                    del acc[mon]
        return _raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        acc = {}
        for (a1, b1, c1, d1, s1), x in self.terms.items():
            for (a2, b2, c2, d2, s2), y in other.terms.items():
                mon = (a1 + a2, b1 + b2, c1 + c2, d1 + d2, s1 + s2)
                prod = x * y
                cur = acc.get(mon)
                if cur is None:
                    acc[mon] = prod
                else:
                    tot = cur + prod
                    if tot:
                        acc[mon] = tot
                    else:
                        del acc[mon]
        return _raw(acc)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = gq(c)
        if not c:
            return _ZERO_POLY
        return _raw({m: x * c for m, x in self.terms.items()})

    def conjugate(self) -> "Poly":
        """Swap z with z~ in both variables and conjugate coefficients."""
        return _raw(
            {(b, a, d, c, s): x.conjugate() for (a, b, c, d, s), x in self.terms.items()}
        )

    # -- predicates and views -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, GaussianRational)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_self_conjugate(self) -> bool:
        return self == self.conjugate()

    def is_anti_self_conjugate(self) -> bool:
        return self == -self.conjugate()

    def total_degree(self) -> int:
        """Max of a+b+c+d over monomials (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return max(a + b + c + d for (a, b, c, d, _s) in self.terms)

    def homogeneity_degrees(self) -> set:
        """Set of a+b+c+d+2s over monomials, the |z|-scaling degrees."""
        return {a + b + c + d + 2 * s for (a, b, c, d, s) in self.terms}

    def homogeneous_part(self, n: int) -> "Poly":
        return _raw(
            {m: c for m, c in self.terms.items() if m[0] + m[1] + m[2] + m[3] + 2 * m[4] == n}
        )

    def is_normal_form(self) -> bool:
        return all(s == 0 and (c == 0 or d == 0) for (_a, _b, c, d, s) in self.terms)

    # -- the sphere relation ---------------------------------------------------

    def expand_radial(self) -> "Poly":
        """Multiply by |z|^(2T) to clear negative radial powers, then expand
        every |z|^2 into z1 z1~ + z2 z2~.  The result is zero iff the value
        is zero as a function on the punctured ambient space."""
        if not self.terms:
            return self
        shift = -min(s for (*_span, s) in self.terms)
        if shift < 0:
            shift = 0
        acc = Poly.zero()
        for (a, b, c, d, s), x in self.terms.items():
            p = Poly.monomial(a, b, c, d, 0, x)
            acc = acc + p * _R2_POW(s + shift)
        return acc

    def ambient_is_zero(self) -> bool:
        return self.expand_radial().is_zero()

    def ambient_equal(self, other: "Poly") -> bool:
        return (self - other).ambient_is_zero()

    # -- serialization -----------------------------------------------------------

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda kv: _render_key(kv[0]))
        return [[str(c), list(m)] for m, c in items]

    @staticmethod
    def from_json(data) -> "Poly":
        acc = {}
        for coeff_str, exps in data:
            mon = tuple(int(e) for e in exps)
            if len(mon) != 5 or any(e < 0 for e in mon[:4]):
                raise ValueError(f"bad monomial {exps}")
            acc[mon] = acc.get(mon, ZERO) + parse_gq(coeff_str)
        return Poly(acc)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for mon, c in sorted(self.terms.items(), key=lambda kv: _render_key(kv[0])):
            bits.append(f"({c})*{mon}")
        return "Poly[" + " + ".join(bits) + "]"


def _raw(terms: dict) -> Poly:
    p = Poly.__new__(Poly)
    object.__setattr__(p, "terms", terms)
    return p


def _render_key(mon):
    a, b, c, d, s = mon
    return (a + b + c + d, (a, b, c, d, s))


_ZERO_POLY = _raw({})
_VAR_MONOMIAL = {
    "z1": (1, 0, 0, 0, 0),
    "z1~": (0, 1, 0, 0, 0),
    "z2": (0, 0, 1, 0, 0),
    "z2~": (0, 0, 0, 1, 0),
}

_R2 = Poly({(1, 1, 0, 0, 0): 1, (0, 0, 1, 1, 0): 1})  # |z|^2 expanded
_r2_cache = {0: Poly.const(1), 1: _R2}


def _R2_POW(n: int) -> Poly:
    if n < 0:
        raise ValueError("expand_radial shift must make all powers nonnegative")
    p = _r2_cache.get(n)
    if p is None:
        p = _R2_POW(n - 1) * _R2
        _r2_cache[n] = p
    return p


# -- derivations ---------------------------------------------------------------
#
# The four partials treat |z|^(2s) by the product rule; the tangential fields
# eplus, eminus, theta annihilate |z|^2, so radial powers pass through them.


def _diff_terms(p: Poly, rules) -> Poly:
    acc = {}
    for mon, coeff in p.terms.items():
        for factor, delta in rules(mon):
            if factor == 0:
                continue
            new = tuple(e + de for e, de in zip(mon, delta))
            add = coeff * factor
            cur = acc.get(new)
            if cur is None:
                acc[new] = add
            else:
                tot = cur + add
                if tot:
                    acc[new] = tot
                else:
                    del acc[new]
    return _raw(acc)


def _dz1(p):
    return _diff_terms(p, lambda m: ((m[0], (-1, 0, 0, 0, 0)), (m[4], (0, 1, 0, 0, -1))))


def _dz1bar(p):
    return _diff_terms(p, lambda m: ((m[1], (0, -1, 0, 0, 0)), (m[4], (1, 0, 0, 0, -1))))


def _dz2(p):
    return _diff_terms(p, lambda m: ((m[2], (0, 0, -1, 0, 0)), (m[4], (0, 0, 0, 1, -1))))


def _dz2bar(p):
    return _diff_terms(p, lambda m: ((m[3], (0, 0, 0, -1, 0)), (m[4], (0, 0, 1, 0, -1))))


def _eplus(p):
    # -z2 d/dz1~ + z1 d/dz2~ ; the |z|^2 contributions cancel exactly
    return _diff_terms(p, lambda m: ((-m[1], (0, -1, 1, 0, 0)), (m[3], (1, 0, 0, -1, 0))))


def _eminus(p):
    # -z2~ d/dz1 + z1~ d/dz2
    return _diff_terms(p, lambda m: ((-m[0], (-1, 0, 0, 1, 0)), (m[2], (0, 1, -1, 0, 0))))


def _theta(p):
    return _raw(
        {m: c * (m[0] - m[1] + m[2] - m[3]) for m, c in p.terms.items() if m[0] - m[1] + m[2] - m[3]}
    )


def _nu(p):
    return _raw({m: c * (m[0] + m[2] + m[4]) for m, c in p.terms.items() if m[0] + m[2] + m[4]})


def _nubar(p):
    return _raw({m: c * (m[1] + m[3] + m[4]) for m, c in p.terms.items() if m[1] + m[3] + m[4]})


def _nrad(p):
    acc = {}
    for m, c in p.terms.items():
        w = Q(m[0] + m[1] + m[2] + m[3] + 2 * m[4], 2)
        if w:
            acc[m] = c * w
    return _raw(acc)


_FIELD_FUNCS = {
    "dz1": _dz1,
    "dz1bar": _dz1bar,
    "dz2": _dz2,
    "dz2bar": _dz2bar,
    "eplus": _eplus,
    "eminus": _eminus,
    "theta": _theta,
    "theta0": lambda p: _theta(p).scale(_I),
    "theta1": lambda p: _eplus(p) + _eminus(p),
    "theta2": lambda p: (_eplus(p) - _eminus(p)).scale(_I),
    "nu": _nu,
    "nubar": _nubar,
    "nrad": _nrad,
}

_RENORMALIZED = {"theta0", "theta1", "theta2", "nrad"}


def apply_field(tag: str, p: Poly) -> Poly:
    """Apply a coordinate vector field.  On sphere normal-form input the
    tangential combinations theta0/1/2 and nrad return normal-form output."""
    func = _FIELD_FUNCS.get(tag)
    if func is None:
        raise ValueError(f"unknown field {tag!r}; expected one of {FIELD_TAGS}")
    out = func(p)
    if tag in _RENORMALIZED and p.is_normal_form():
        return normal_form(out)
    return out


def laplacian(p: Poly) -> Poly:
    """d^2/dz1 dz1~ + d^2/dz2 dz2~ on honest ambient polynomials."""
    if any(s != 0 for (*_e, s) in p.terms):
        raise ValueError("ambient polynomial required")
    acc = {}
    for (a, b, c, d, s), coeff in p.terms.items():
        if a and b:
            m = (a - 1, b - 1, c, d, 0)
            acc[m] = acc.get(m, ZERO) + coeff * (a * b)
        if c and d:
            m = (a, b, c - 1, d - 1, 0)
            acc[m] = acc.get(m, ZERO) + coeff * (c * d)
    return Poly(acc)


# -- normal form --------------------------------------------------------------

_binom_cache = {}


def _reduce_cd(t: int) -> Poly:
    """(1 - z1 z1~)^t expanded."""
    p = _binom_cache.get(t)
    if p is None:
        acc = {}
        for j in range(t + 1):
            sign = -1 if j % 2 else 1
            acc[(j, j, 0, 0, 0)] = gq(sign * (factorial(t) // (factorial(j) * factorial(t - j))))
        p = Poly(acc)
        _binom_cache[t] = p
    return p


def normal_form(p: Poly) -> Poly:
    """Restriction to the unit sphere: drop |z|^(2s) and eliminate z2*z2~.

    The rewrite z2 z2~ -> 1 - z1 z1~ is applied until min(c, d) = 0 in every
    monomial; the result is unique and the map is idempotent.
    """
    acc = Poly.zero()
    plain = {}
    for (a, b, c, d, _s), coeff in p.terms.items():
        t = c if c < d else d
        if t == 0:
            m = (a, b, c, d, 0)
            cur = plain.get(m)
            plain[m] = coeff if cur is None else cur + coeff
        else:
            acc = acc + _reduce_cd(t) * Poly.monomial(a, b, c - t, d - t, 0, coeff)
    return acc + Poly(plain)


# -- exact integration ---------------------------------------------------------

_fact_q = {}


def _monomial_integral(a: int, b: int, c: int, d: int):
    """Normalized sphere integral of z1^a z1~^b z2^c z2~^d (any monomial)."""
    if a != b or c != d:
        return None
    key = (a, c)
    v = _fact_q.get(key)
    if v is None:
        v = Q(factorial(a) * factorial(c), factorial(a + c + 1))
        _fact_q[key] = v
    return v


def integrate_monomial(mon) -> GaussianRational:
    a, b, c, d, s = mon
    if s != 0:
        raise ValueError("monomial with radial power has no sphere integral")
    v = _monomial_integral(a, b, c, d)
    return GaussianRational(v) if v is not None else ZERO


def integrate_s3(p: Poly) -> GaussianRational:
    """Exact (1/2pi^2)-normalized integral over the unit sphere.

    Input must be in sphere normal form; per monomial the value is zero
    unless a == b and c == d, and a!c!/(a+c+1)! otherwise.
    """
    if not p.is_normal_form():
        raise ValueError("integrate_s3 requires sphere normal form")
    acc = ZERO
    for (a, b, c, d, _s), coeff in p.terms.items():
        v = _monomial_integral(a, b, c, d)
        if v is not None:
            acc = acc + coeff * v
    return acc


def integrate_raw(p: Poly) -> GaussianRational:
    """Sphere integral for any s = 0 polynomial, not only normal forms.

    The per-monomial rule is valid before rewriting, since it is the honest
    integral of the monomial itself.
    """
    acc = ZERO
    for (a, b, c, d, s), coeff in p.terms.items():
        if s != 0:
            raise ValueError("integrate_raw requires s = 0")
        v = _monomial_integral(a, b, c, d)
        if v is not None:
            acc = acc + coeff * v
    return acc
