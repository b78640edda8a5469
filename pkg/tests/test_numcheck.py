import random

import pytest

from s3current.numcheck import (
    PointS3,
    eval_at,
    fd_check,
    mc_integral,
    random_points,
    tangential_residual,
)
from s3current.poly import Poly, integrate_s3, normal_form
from s3current.scalars import GaussianRational, Q, gq
from s3current.spinor import (
    BasisIndex,
    basis_indices,
    basis_phi_sphere,
    kappa,
    mu,
)

Z1 = Poly.variable("z1")
Z1B = Poly.variable("z1~")
Z2 = Poly.variable("z2")
Z2B = Poly.variable("z2~")


def rand_nf_monomial(rng, maxdeg=6):
    while True:
        a, b = rng.randint(0, maxdeg // 2), rng.randint(0, maxdeg // 2)
        c, d = rng.randint(0, maxdeg // 2), rng.randint(0, maxdeg // 2)
        if min(c, d) == 0 and a + b + c + d <= maxdeg:
            return Poly.monomial(a, b, c, d, 0)


def test_point_validation():
    PointS3(1, 0, 0, 0)
    with pytest.raises(ValueError):
        PointS3(1, 1, 0, 0)


def test_eval_examples():
    p = PointS3(1, 0, 0, 0)  # z1 = 1, z2 = 0
    assert eval_at(kappa, p) == (0, -1)
    u, v = eval_at(mu, PointS3(0, 0, 1, 0))  # z1 = 0, z2 = 1
    assert (u, v) == (1, 0)
    from s3current.spinor import SPINOR_I

    u, v = eval_at(SPINOR_I, random_points(1, 3)[0])
    assert (u, v) == (1, 0)


def test_eval_agrees_with_normal_form():
    rng = random.Random(55)
    pts = random_points(10, 57)
    for _ in range(20):
        mon = tuple(rng.randint(0, 2) for _ in range(4)) + (rng.randint(-2, 2),)
        p = Poly({mon: GaussianRational(Q(rng.randint(-4, 4), rng.randint(1, 3)))})
        q = normal_form(p)
        for pt in pts:
            z1, z2 = pt.z
            from s3current.numcheck import eval_poly

            assert abs(eval_poly(p, z1, z2) - eval_poly(q, z1, z2)) < 1e-10


def test_mc_constant():
    est, err = mc_integral(Poly.const(1), 1000, 0)
    assert est == 1.0 and err == 0.0


def test_mc_against_exact():
    rng = random.Random(59)
    for trial in range(20):
        p = rand_nf_monomial(rng)
        est, err = mc_integral(p, 10**5, seed=trial)
        exact = integrate_s3(p)
        exact_c = complex(float(exact.re), float(exact.im))
        assert abs(est - exact_c) <= 5 * max(err, 1e-12), (p, est, exact_c)


def test_mc_phase_symmetry():
    est, err = mc_integral(Z1 * Z2B, 10**5, seed=7)
    assert abs(est) <= 5 * max(err, 1e-12)


def test_fd_fields():
    rng = random.Random(61)
    pts = random_points(10, 63)
    assert fd_check("theta", Z1 * Z1 * Z2B, pts) <= 1e-6
    assert fd_check("eminus", Z1, pts) <= 1e-6
    for tag in ("dz1", "dz1bar", "dz2", "dz2bar", "eplus", "eminus",
                "theta", "theta0", "theta1", "theta2", "nu", "nubar", "nrad"):
        assert fd_check(tag, Poly.const(1), pts) == 0.0
        for _ in range(3):
            p = rand_nf_monomial(rng, maxdeg=4)
            assert fd_check(tag, p, pts) <= 1e-6, (tag, p)


def test_tangential_eigen_residual():
    pts = random_points(20, 65)
    for m in range(3):
        for idx in basis_indices("+", m):
            phi = basis_phi_sphere(idx)
            assert tangential_residual(phi, m / 2, pts) <= 1e-8
        for idx in basis_indices("-", m):
            phi = basis_phi_sphere(idx)
            assert tangential_residual(phi, -(m + 3) / 2, pts) <= 1e-8


def test_pointwise_quaternion_product():
    rng = random.Random(67)
    pts = random_points(5, 69)

    def as_quat(pair):
        return pair

    for _ in range(10):
        pool = []
        for m in range(3):
            pool.extend(basis_indices("+", m))
            pool.extend(basis_indices("-", m))
        i1 = pool[rng.randrange(len(pool))]
        i2 = pool[rng.randrange(len(pool))]
        phi, psi = basis_phi_sphere(i1), basis_phi_sphere(i2)
        prod = phi * psi
        for pt in pts:
            u1, v1 = eval_at(phi, pt)
            u2, v2 = eval_at(psi, pt)
            want_u = u1 * u2 - v1.conjugate() * v2
            want_v = v1 * u2 + u1.conjugate() * v2
            got_u, got_v = eval_at(prod, pt)
            assert abs(got_u - want_u) < 1e-10
            assert abs(got_v - want_v) < 1e-10


def test_normal_form_rewrite_numerically():
    # the one-step rewrite example, cross-checked on random unit vectors
    p = Z2 * Z2 * Z2B
    q = normal_form(p)
    assert q == Z2 - Z1 * Z1B * Z2
    from s3current.numcheck import eval_poly

    for pt in random_points(20, 71):
        z1, z2 = pt.z
        assert abs(eval_poly(p, z1, z2) - eval_poly(q, z1, z2)) < 1e-10
