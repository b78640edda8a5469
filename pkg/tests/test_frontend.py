import random

import pytest

from s3current.current import ExtendedElement, make_sl, tensor
from s3current.frontend import EvalError, ParseError, evaluate, parse, render
from s3current.poly import Poly
from s3current.scalars import GaussianRational, Q, gq
from s3current.spinor import (
    SPINOR_I,
    SPINOR_J,
    Spinor,
    basis_indices,
    basis_phi_sphere,
    expand,
    kappa,
    mu,
    theta_action,
)

I_GQ = GaussianRational(0, 1)


def ev(text, n=2):
    return evaluate(parse(text), n)


def rand_gq(rng, span=5):
    return GaussianRational(
        Q(rng.randint(-span, span), rng.randint(1, 4)),
        Q(rng.randint(-span, span), rng.randint(1, 4)),
    )


def rand_span(rng, mmax=2, terms=3):
    pool = []
    for m in range(mmax + 1):
        pool.extend(basis_indices("+", m))
        pool.extend(basis_indices("-", m))
    acc = Spinor(Poly.zero(), Poly.zero())
    for _ in range(terms):
        acc = acc + basis_phi_sphere(pool[rng.randrange(len(pool))]).scale(rand_gq(rng))
    return acc


def test_parse_products_and_brackets():
    assert ev("kappa*mu") == (kappa * mu).restrict()
    assert ev("[phi+(1,0,1), phi-(0,0,0)]") == kappa.bracket(mu)
    got = ev("[tensor(kappa,E(1,2)), nder]")
    want = ExtendedElement(tensor(kappa, make_sl(2).e_theta)).scale(Q(-1, 2))
    assert got == want


def test_eval_examples():
    assert ev("Theta0(kappa)") == theta_action(0, kappa)
    assert ev("[kappa, mu] - (kappa*mu - mu*kappa)").is_zero()
    assert ev("tr(J)") == Poly.zero()
    assert ev("J*J") == -SPINOR_I
    assert ev("Dslash(kappa)") == kappa.scale(Q(1, 2))
    assert ev("n(mu)") == mu.scale(Q(-3, 2))


def test_scalar_forms():
    assert ev("3/2") == gq(Q(3, 2))
    assert ev("i") == I_GQ
    assert ev("2i") == gq(2) * I_GQ
    assert ev("-1/2i") == -gq(Q(1, 2)) * I_GQ
    assert ev("2kappa") == kappa.scale(2)
    assert ev("1/1*i") == I_GQ


def test_left_scalar_action():
    # the scalar i acts as the constant spinor (i | 0)
    assert ev("i*J") == Spinor(Poly.zero(), Poly.const(-I_GQ))
    assert ev("J*i") == SPINOR_J.scale(I_GQ)
    assert ev("i*I") == SPINOR_I.scale(I_GQ)


def test_spinor_literals_and_powers():
    assert ev("(z2 | -z1~)") == kappa
    assert ev("(0/1 | 1/1)") == SPINOR_J
    assert ev("z1^2*z1~") == Poly.monomial(2, 1, 0, 0)
    assert ev("(1/2+1/3*i)*z1") == Poly.variable("z1").scale(
        GaussianRational(Q(1, 2), Q(1, 3))
    )


def test_tensor_and_central():
    got = ev("tensor(kappa,E(1,2))", 2)
    assert got == tensor(kappa, make_sl(2).e_theta)
    got = ev("tensor(I,H(1))", 3)
    assert got == tensor(SPINOR_I, make_sl(3).h[0])
    a0 = ev("ak(0)")
    assert a0 == ExtendedElement.central(2, 0)
    assert ev("[ak(0), tensor(kappa,E(1,2))]").is_zero()


def test_weight_example_bracket():
    lhs = ev("[tensor(I,H(1)), tensor(kappa,E(1,2))]", 2)
    assert lhs == tensor(kappa, make_sl(2).e_theta).scale(2)


def test_kind_errors():
    for bad in ("kappa + 1/2", "[1/2, kappa]", "tensor(1/2, E(1,1))",
                "tr(1/2)", "kappa*tensor(I,E(1,1))"):
        with pytest.raises(EvalError):
            ev(bad)


def test_parse_errors_structured():
    for bad, _ in (
        ("kappa*", "atom"),
        ("[kappa, mu", "]"),
        ("phi(1,0,1)", "sign"),
        ("(z1", ")"),
        ("2/%", "int"),
        ("what(3)", "name"),
    ):
        with pytest.raises(ParseError) as err:
            parse(bad)
        assert err.value.line >= 1 and err.value.col >= 1


def test_render_examples():
    assert render(kappa) == "(z2 | -z1~)"
    assert render(gq(-1)) == "-1/1"
    exp = expand(Spinor(Poly.variable("z2~"), Poly.zero()))
    assert render(exp, "json") == '[[["+", 1, 1, 2], "-1/2"]]'


def test_render_ordering():
    p = Poly.monomial(1, 1, 0, 0) + Poly.const(Q(1, 2)) + Poly.monomial(0, 0, 2, 0)
    assert render(p) == "1/2 + z1*z1~ + z2^2"


def test_roundtrip_spinors():
    rng = random.Random(73)
    for _ in range(100):
        phi = rand_span(rng)
        back = ev(render(phi))
        assert back == phi, render(phi)


def test_roundtrip_scalar_coeff_shapes():
    values = [
        Spinor(Poly.const(GaussianRational(Q(1, 2), Q(-2, 3))), Poly.zero()),
        Spinor(Poly.variable("z1").scale(I_GQ), Poly.const(-1)),
        Spinor(Poly.zero(), Poly.zero()),
    ]
    for phi in values:
        assert ev(render(phi)) == phi


def test_fuzz_no_crashes():
    rng = random.Random(75)
    alphabet = "kappa mu phi+-()[],;|*/^0123456789iIJznder\t \n~EHtensor"
    for _ in range(10**4):
        length = rng.randint(0, 30)
        text = "".join(rng.choice(alphabet) for _ in range(length))
        try:
            evaluate(parse(text), 2)
        except (ParseError, EvalError, ZeroDivisionError):
            pass
