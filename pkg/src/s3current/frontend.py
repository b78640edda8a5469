"""Expression language and renderer for the kernel.

Grammar (whitespace insignificant):

    expr    := term (("+"|"-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | scalar atom? | atom power?
    atom    := "I" | "J" | "kappa" | "kappastar" | "mu" | "lambdastar"
             | "z1" | "z1~" | "z2" | "z2~"
             | "phi" ("+"|"-") "(" int "," int "," int ")"
             | "v" "(" int ";" int "," int ")"
             | "[" expr "," expr "]"
             | func "(" expr ")"
             | "(" expr ")" | "(" expr "|" expr ")"
             | "tensor" "(" expr "," mat ")"
             | "ak" "(" int ")" | "nder"
    power   := "^" int
    func    := "sigma"|"tau"|"tr"|"Theta0"|"Theta1"|"Theta2"|"n"|"Dslash"
    mat     := "E" "(" int "," int ")" | "H" "(" int ")"
    scalar  := rational "i"? | "i"

The monomial atoms, the spinor literal "(u | v)", powers and bare scalars
extend the core basis-reference language so that rendered spinor values
parse back to themselves.

Scalar factors act on spinor-valued factors by multiplication with the
constant spinor (c | 0); for real c this is componentwise scaling, for
complex c it is the left quaternion action.  Componentwise complex
scaling is available in the library as Spinor.scale.

Basis references evaluate to sphere restrictions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .current import (
    CurrentElement,
    ExtendedElement,
    current_bracket,
    ghat_bracket,
    make_sl,
    tensor,
)
from .poly import Poly
from .scalars import GaussianRational, Q, gq
from .spinor import (
    SPINOR_I,
    SPINOR_J,
    BasisIndex,
    Expansion,
    Spinor,
    basis_phi_sphere,
    basis_v,
    dirac,
    involution,
    kappa,
    kappa_star,
    lambda_star,
    mu,
    radial_n,
    theta_action,
    trace,
)

__all__ = ["parse", "evaluate", "render", "ParseError", "EvalError"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        suffix = f" at {line}:{col}"
        if expected:
            suffix += " (expected " + " | ".join(expected) + ")"
        super().__init__(message + suffix)


class EvalError(ValueError):
    pass


# -- tokens ---------------------------------------------------------------------


@dataclass
class Token:
    kind: str  # INT, NAME, SYM, END
    text: str
    line: int
    col: int


_SYMBOLS = set("+-*/()[],;|^")


def _lex(text: str) -> List[Token]:
    out = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            if j < n and text[j] == "~":
                j += 1
            out.append(Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            out.append(Token("SYM", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(Token("END", "", line, col))
    return out


# -- syntax tree -------------------------------------------------------------------


@dataclass
class Num:
    value: GaussianRational


@dataclass
class Atom:
    name: str


@dataclass
class BasisRef:
    sign: str
    m: int
    l: int
    k: int


@dataclass
class VRef:
    k: int
    l: int
    j: int


@dataclass
class Neg:
    arg: object


@dataclass
class Mul:
    lhs: object
    rhs: object


@dataclass
class Add:
    lhs: object
    rhs: object
    sign: int


@dataclass
class BracketNode:
    lhs: object
    rhs: object


@dataclass
class Func:
    name: str
    arg: object


@dataclass
class TensorNode:
    arg: object
    mat: Tuple


@dataclass
class AK:
    k: int


@dataclass
class SpinorLit:
    u: object
    v: object


_FUNCS = ("sigma", "tau", "tr", "Theta0", "Theta1", "Theta2", "n", "Dslash")
_PLAIN_ATOMS = ("I", "J", "kappa", "kappastar", "mu", "lambdastar",
                "z1", "z1~", "z2", "z2~", "nder")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, expected=()):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col, expected)

    def expect_sym(self, sym):
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == sym:
            return self.next()
        if sym in ")]" and tok.kind == "END":
            self.error("unbalanced brackets", expected=(sym,))
        self.error(f"got {tok.text!r}", expected=(sym,))

    def parse(self):
        node = self.parse_expr()
        tok = self.peek()
        if tok.kind != "END":
            if tok.kind == "SYM" and tok.text in ")]":
                self.error("unbalanced brackets")
            self.error(f"trailing input {tok.text!r}", expected=("end of input",))
        return node

    def parse_expr(self):
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == "SYM" and tok.text in "+-":
                self.next()
                rhs = self.parse_term()
                node = Add(node, rhs, 1 if tok.text == "+" else -1)
            else:
                return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "SYM" and tok.text == "*":
                self.next()
                node = Mul(node, self.parse_factor())
            else:
                return node

    def parse_factor(self):
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == "-":
            self.next()
            return Neg(self.parse_factor())
        if tok.kind == "INT":
            scal = self.parse_scalar()
            nxt = self.peek()
            if nxt.kind == "NAME" or (nxt.kind == "SYM" and nxt.text in "(["):
                return Mul(scal, self.parse_atom())
            return scal
        if tok.kind == "NAME" and tok.text == "i":
            self.next()
            return Num(GaussianRational(0, 1))
        return self.parse_atom()

    def parse_scalar(self):
        tok = self.next()  # INT
        num = int(tok.text)
        den = 1
        nxt = self.peek()
        if nxt.kind == "SYM" and nxt.text == "/":
            self.next()
            dtok = self.peek()
            if dtok.kind != "INT":
                self.error("denominator must be an integer", expected=("int",))
            den = int(self.next().text)
            if den == 0:
                self.error("zero denominator")
        value = GaussianRational(Q(num, den))
        nxt = self.peek()
        if nxt.kind == "NAME" and nxt.text == "i":
            self.next()
            value = value * GaussianRational(0, 1)
        return Num(value)

    def parse_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == "-":
            self.next()
            sign = -1
        tok = self.peek()
        if tok.kind != "INT":
            self.error(f"got {tok.text!r}", expected=("int",))
        return sign * int(self.next().text)

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == "[":
            self.next()
            lhs = self.parse_expr()
            self.expect_sym(",")
            rhs = self.parse_expr()
            self.expect_sym("]")
            return self.maybe_power(BracketNode(lhs, rhs))
        if tok.kind == "SYM" and tok.text == "(":
            self.next()
            inner = self.parse_expr()
            nxt = self.peek()
            if nxt.kind == "SYM" and nxt.text == "|":
                self.next()
                v = self.parse_expr()
                self.expect_sym(")")
                return self.maybe_power(SpinorLit(inner, v))
            self.expect_sym(")")
            return self.maybe_power(inner)
        if tok.kind == "NAME":
            name = tok.text
            if name == "phi":
                self.next()
                sgn_tok = self.peek()
                if sgn_tok.kind != "SYM" or sgn_tok.text not in "+-":
                    self.error("basis reference needs a sign", expected=("+", "-"))
                sign = self.next().text
                self.expect_sym("(")
                m = self.parse_int()
                self.expect_sym(",")
                l = self.parse_int()
                self.expect_sym(",")
                k = self.parse_int()
                self.expect_sym(")")
                return self.maybe_power(BasisRef(sign, m, l, k))
            if name == "v":
                self.next()
                self.expect_sym("(")
                k = self.parse_int()
                self.expect_sym(";")
                l = self.parse_int()
                self.expect_sym(",")
                j = self.parse_int()
                self.expect_sym(")")
                return self.maybe_power(VRef(k, l, j))
            if name == "tensor":
                self.next()
                self.expect_sym("(")
                arg = self.parse_expr()
                self.expect_sym(",")
                mat = self.parse_mat()
                self.expect_sym(")")
                return self.maybe_power(TensorNode(arg, mat))
            if name == "ak":
                self.next()
                self.expect_sym("(")
                k = self.parse_int()
                self.expect_sym(")")
                if k not in (0, 1, 2):
                    self.error("central index must be 0, 1 or 2")
                return AK(k)
            if name in _FUNCS:
                self.next()
                self.expect_sym("(")
                arg = self.parse_expr()
                self.expect_sym(")")
                return self.maybe_power(Func(name, arg))
            if name == "i":
                self.next()
                return Num(GaussianRational(0, 1))
            if name in _PLAIN_ATOMS:
                self.next()
                return self.maybe_power(Atom(name))
            self.error(f"unknown name {name!r}", expected=_PLAIN_ATOMS + ("phi", "v", "tensor", "ak") + _FUNCS)
        self.error(f"got {tok.text or 'end of input'!r}", expected=("atom",))

    def parse_mat(self):
        tok = self.peek()
        if tok.kind == "NAME" and tok.text == "E":
            self.next()
            self.expect_sym("(")
            i = self.parse_int()
            self.expect_sym(",")
            j = self.parse_int()
            self.expect_sym(")")
            return ("E", i, j)
        if tok.kind == "NAME" and tok.text == "H":
            self.next()
            self.expect_sym("(")
            i = self.parse_int()
            self.expect_sym(")")
            return ("H", i)
        self.error("matrix must be E(i,j) or H(i)", expected=("E", "H"))

    def maybe_power(self, node):
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == "^":
            self.next()
            exp = self.parse_int()
            if exp < 0:
                self.error("powers must be nonnegative")
            return ("POW", node, exp)
        return node


def parse(text: str):
    """Parse an expression; raises ParseError with position and expected
    tokens on malformed input."""
    if not isinstance(text, str):
        raise ParseError("input must be text", 0, 0)
    return _Parser(text).parse()


# -- evaluation --------------------------------------------------------------------

SCALAR, POLY, SPINOR, CURRENT, EXTENDED = "scalar", "poly", "spinor", "current", "extended"


def _kind(value):
    if isinstance(value, GaussianRational):
        return SCALAR
    if isinstance(value, Poly):
        return POLY
    if isinstance(value, Spinor):
        return SPINOR
    if isinstance(value, CurrentElement):
        return CURRENT
    return EXTENDED


def _as_poly(value):
    return Poly.const(value) if isinstance(value, GaussianRational) else value


def _left_scalar_spinor(c: GaussianRational, phi: Spinor) -> Spinor:
    return Spinor(Poly.const(c), Poly.zero(), phi.space) * phi


_ATOM_VALUES = {
    "I": SPINOR_I,
    "J": SPINOR_J,
    "kappa": kappa,
    "kappastar": kappa_star,
    "mu": mu,
    "lambdastar": lambda_star,
}


class _Evaluator:
    def __init__(self, n: int):
        self.n = n
        self.alg = make_sl(n)

    def eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Atom):
            if node.name in _ATOM_VALUES:
                return _ATOM_VALUES[node.name]
            if node.name.startswith("z"):
                return Poly.variable(node.name)
            if node.name == "nder":
                return ExtendedElement.derivation(self.n)
            raise EvalError(f"unknown atom {node.name!r}")
        if isinstance(node, BasisRef):
            try:
                idx = BasisIndex(node.sign, node.m, node.l, node.k).validate()
            except ValueError as exc:
                raise EvalError(str(exc)) from exc
            return basis_phi_sphere(idx)
        if isinstance(node, VRef):
            if min(node.k, node.l, node.j) < 0:
                raise EvalError("v indices must be nonnegative")
            return basis_v(node.k, node.l, node.j)
        if isinstance(node, AK):
            return ExtendedElement.central(self.n, node.k)
        if isinstance(node, Neg):
            value = self.eval(node.arg)
            return value.scale(-1) if _kind(value) in (SPINOR, CURRENT, EXTENDED) else -value
        if isinstance(node, Add):
            return self._add(self.eval(node.lhs), self.eval(node.rhs), node.sign)
        if isinstance(node, Mul):
            return self._mul(self.eval(node.lhs), self.eval(node.rhs))
        if isinstance(node, BracketNode):
            return self._bracket(self.eval(node.lhs), self.eval(node.rhs))
        if isinstance(node, Func):
            return self._func(node.name, self.eval(node.arg))
        if isinstance(node, TensorNode):
            return self._tensor(self.eval(node.arg), node.mat)
        if isinstance(node, SpinorLit):
            u = self.eval(node.u)
            v = self.eval(node.v)
            if _kind(u) not in (SCALAR, POLY) or _kind(v) not in (SCALAR, POLY):
                raise EvalError(
                    f"spinor literal components must be polynomial, got {_kind(u)} and {_kind(v)}"
                )
            return Spinor(_as_poly(u), _as_poly(v), "sphere")
        if isinstance(node, tuple) and node and node[0] == "POW":
            base = self.eval(node[1])
            return self._power(base, node[2])
        raise EvalError(f"cannot evaluate node {node!r}")

    def _power(self, base, exp: int):
        kind = _kind(base)
        if kind == SCALAR:
            acc = GaussianRational(1)
        elif kind == POLY:
            acc = Poly.const(1)
        elif kind == SPINOR:
            acc = Spinor(Poly.const(1), Poly.zero(), base.space)
        else:
            raise EvalError(f"cannot raise a {kind} to a power")
        for _ in range(exp):
            acc = acc * base
        return acc

    def _add(self, x, y, sign):
        kx, ky = _kind(x), _kind(y)
        if sign < 0:
            y = y.scale(-1) if ky in (SPINOR, CURRENT, EXTENDED) else -y
        if kx == ky:
            if kx == CURRENT:
                return x + y
            return x + y
        if {kx, ky} == {SCALAR, POLY}:
            return _as_poly(x) + _as_poly(y)
        if {kx, ky} == {CURRENT, EXTENDED}:
            x = ExtendedElement(x) if kx == CURRENT else x
            y = ExtendedElement(y) if ky == CURRENT else y
            return x + y
        raise EvalError(f"cannot add {kx} and {ky}")

    def _mul(self, x, y):
        kx, ky = _kind(x), _kind(y)
        if kx == SCALAR and ky == SCALAR:
            return x * y
        if {kx, ky} <= {SCALAR, POLY}:
            return _as_poly(x) * _as_poly(y)
        if kx == SCALAR:
            if ky == SPINOR:
                return _left_scalar_spinor(x, y)
            if ky == CURRENT:
                return CurrentElement(
                    y.size, {p: _left_scalar_spinor(x, phi) for p, phi in y.entries.items()}
                )
            if ky == EXTENDED:
                mat = CurrentElement(
                    y.mat.size,
                    {p: _left_scalar_spinor(x, phi) for p, phi in y.mat.entries.items()},
                )
                return ExtendedElement(mat, tuple(a * x for a in y.a), y.t * x)
        if ky == SCALAR:
            if kx == SPINOR:
                return x * Spinor(Poly.const(y), Poly.zero(), x.space)
            return self._mul(y, x)
        if kx == SPINOR and ky == SPINOR:
            return x * y
        raise EvalError(f"cannot multiply {kx} and {ky}")

    def _bracket(self, x, y):
        kx, ky = _kind(x), _kind(y)
        if kx == SPINOR and ky == SPINOR:
            return x.bracket(y)
        if {kx, ky} <= {CURRENT, EXTENDED}:
            if kx == CURRENT and ky == CURRENT:
                return current_bracket(x, y)
            x = ExtendedElement(x) if kx == CURRENT else x
            y = ExtendedElement(y) if ky == CURRENT else y
            return ghat_bracket(x, y)
        raise EvalError(f"cannot bracket {kx} and {ky}")

    def _func(self, name, arg):
        kind = _kind(arg)
        if name in ("sigma", "tau"):
            if kind != SPINOR:
                raise EvalError(f"{name} expects a spinor, got {kind}")
            return involution(name, arg)
        if name == "tr":
            if kind != SPINOR:
                raise EvalError(f"tr expects a spinor, got {kind}")
            return trace(arg)
        if name.startswith("Theta"):
            if kind != SPINOR:
                raise EvalError(f"{name} expects a spinor, got {kind}")
            return theta_action(int(name[-1]), arg)
        if name == "n":
            if kind != SPINOR:
                raise EvalError(f"n expects a spinor, got {kind}")
            return radial_n(arg)
        if name == "Dslash":
            if kind != SPINOR:
                raise EvalError(f"Dslash expects a spinor, got {kind}")
            return dirac("tangential", arg)
        raise EvalError(f"unknown function {name!r}")

    def _tensor(self, arg, mat):
        if _kind(arg) != SPINOR:
            raise EvalError(f"tensor expects a spinor, got {_kind(arg)}")
        n = self.n
        if mat[0] == "E":
            _, i, j = mat
            if not (1 <= i <= n and 1 <= j <= n):
                raise EvalError(f"E({i},{j}) out of range for n={n}")
            x = tuple(
                tuple(gq(1) if (r, c) == (i - 1, j - 1) else gq(0) for c in range(n))
                for r in range(n)
            )
        else:
            _, i = mat
            if not (1 <= i <= n - 1):
                raise EvalError(f"H({i}) out of range for n={n}")
            x = self.alg.h[i - 1]
        return tensor(arg, x)


def evaluate(node, n: int = 2):
    """Evaluate a parsed expression in the size-n algebra context."""
    return _Evaluator(n).eval(node)


# -- rendering ----------------------------------------------------------------------


def _mono_text(mon) -> str:
    a, b, c, d, s = mon
    bits = []
    for name, e in (("z1", a), ("z1~", b), ("z2", c), ("z2~", d)):
        if e == 1:
            bits.append(name)
        elif e > 1:
            bits.append(f"{name}^{e}")
    if s:
        bits.append(f"|z|2^{s}")
    return "*".join(bits)


def _coeff_prefix(c: GaussianRational) -> str:
    """Coefficient rendered so that '<prefix>monomial' parses back."""
    if c.im == 0:
        if c.re == 1:
            return ""
        if c.re == -1:
            return "-"
        return f"{c.re.numerator}/{c.re.denominator}*"
    if c.re == 0:
        if c.im == 1:
            return "i*"
        if c.im == -1:
            return "-i*"
        return f"{c.im.numerator}/{c.im.denominator}*i*"
    return f"({c})*"


def poly_text(p: Poly) -> str:
    if p.is_zero():
        return "0/1"
    items = sorted(
        p.terms.items(), key=lambda kv: (sum(kv[0][:4]), tuple(-e for e in kv[0]))
    )
    bits = []
    for mon, c in items:
        if mon == (0, 0, 0, 0, 0):
            body = f"({c})" if (c.re != 0 and c.im != 0) else str(c)
        else:
            body = _coeff_prefix(c) + _mono_text(mon)
        bits.append(body)
    out = bits[0]
    for body in bits[1:]:
        out += " - " + body[1:] if body.startswith("-") else " + " + body
    return out


def spinor_text(phi: Spinor) -> str:
    return f"({poly_text(phi.u)} | {poly_text(phi.v)})"


def render(value, fmt: str = "text") -> str:
    """Official text and JSON forms; spinor text parses back exactly."""
    if fmt == "json":
        if isinstance(value, GaussianRational):
            return json.dumps(str(value))
        if isinstance(value, Expansion):
            return json.dumps(value.to_json())
        return json.dumps(value.to_json())
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(value, GaussianRational):
        return str(value)
    if isinstance(value, Poly):
        return poly_text(value)
    if isinstance(value, Spinor):
        return spinor_text(value)
    if isinstance(value, Expansion):
        if not len(value):
            return "0"
        return "; ".join(
            f"phi{i.sign}({i.m},{i.l},{i.k}): {c}" for i, c in value
        )
    if isinstance(value, CurrentElement):
        if value.is_zero():
            return f"[n={value.size}; 0]"
        inner = ", ".join(
            f"({i+1},{j+1}): {spinor_text(phi)}" for (i, j), phi in sorted(value.entries.items())
        )
        return f"[n={value.size}; {inner}]"
    if isinstance(value, ExtendedElement):
        base = render(value.mat, "text")
        coords = ", ".join(str(x) for x in value.a)
        return f"{base} + a[{coords}] + t[{value.t}]"
    raise ValueError(f"cannot render {type(value).__name__}")
