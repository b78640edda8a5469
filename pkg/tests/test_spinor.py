import random

import pytest

from s3current.poly import Poly, integrate_s3, normal_form
from s3current.scalars import GaussianRational, Q, gq
from s3current.spinor import (
    SPINOR_I,
    SPINOR_J,
    BasisIndex,
    Expansion,
    Spinor,
    basis_indices,
    basis_phi,
    basis_phi_sphere,
    basis_v,
    clifford_generators,
    dirac,
    expand,
    gram_norm,
    homogeneous_parts,
    inner_product,
    involution,
    k_split,
    kappa,
    kappa_star,
    mu,
    radial_n,
    subspace_class,
    theta_action,
    trace,
)

Z1 = Poly.variable("z1")
Z1B = Poly.variable("z1~")
Z2 = Poly.variable("z2")
Z2B = Poly.variable("z2~")
I_GQ = GaussianRational(0, 1)


def rand_gq(rng, span=5):
    return GaussianRational(
        Q(rng.randint(-span, span), rng.randint(1, 4)),
        Q(rng.randint(-span, span), rng.randint(1, 4)),
    )


def rand_span(rng, mmax=3, terms=3, real=False, space="sphere"):
    """Random combination of basis spinors with m <= mmax."""
    pool = []
    for m in range(mmax + 1):
        pool.extend(basis_indices("+", m))
        pool.extend(basis_indices("-", m))
    build = basis_phi_sphere if space == "sphere" else basis_phi
    acc = Spinor(Poly.zero(), Poly.zero(), space)
    for _ in range(terms):
        idx = pool[rng.randrange(len(pool))]
        c = gq(Q(rng.randint(-5, 5), rng.randint(1, 4))) if real else rand_gq(rng)
        acc = acc + build(idx).scale(c)
    return acc


# -- multiplication and bracket ---------------------------------------------


def test_quaternion_units():
    assert SPINOR_J * SPINOR_J == -SPINOR_I
    assert SPINOR_I * kappa == kappa
    assert kappa * SPINOR_I == kappa


def test_kappa_times_j():
    assert kappa * SPINOR_J == Spinor(Z1, Z2B)
    # that product is the basis spinor at (+,1,1,1)
    assert kappa * SPINOR_J == basis_phi_sphere(BasisIndex("+", 1, 1, 1))


def test_mixed_space_error():
    with pytest.raises(ValueError):
        basis_phi(BasisIndex("+", 1, 0, 1)) * kappa


def test_bracket_examples():
    for phi in (kappa, mu, kappa_star):
        assert SPINOR_I.bracket(phi).is_zero()
    assert SPINOR_J.bracket(SPINOR_I.scale(I_GQ)) == Spinor(Poly.zero(), Poly.const(2 * I_GQ))
    got = kappa.bracket(mu)
    want = Spinor(Poly.zero(), (Z1B * Z2B - Z1B * Z2).scale(2))
    assert got == want


def test_bracket_routes_agree_randomized():
    rng = random.Random(5)
    for _ in range(30):
        phi, psi = rand_span(rng), rand_span(rng)
        assert phi.bracket(psi) == phi * psi - psi * phi


def test_associativity_randomized():
    rng = random.Random(6)
    for _ in range(100):
        a, b, c = (rand_span(rng, terms=2) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_jacobi_randomized():
    rng = random.Random(7)
    for _ in range(30):
        a, b, c = (rand_span(rng, terms=2) for _ in range(3))
        total = (
            a.bracket(b.bracket(c)) + b.bracket(c.bracket(a)) + c.bracket(a.bracket(b))
        )
        assert total.is_zero()


# -- involutions and trace ------------------------------------------------------


def test_involution_values():
    assert involution("sigma", kappa) == mu
    assert involution("tau", mu) == Spinor(Z2B, Z1)
    assert involution("sigma", SPINOR_I) == SPINOR_I


def test_involutions_are_homomorphisms():
    rng = random.Random(8)
    for _ in range(40):
        phi, psi = rand_span(rng), rand_span(rng)
        for w in ("sigma", "tau"):
            assert involution(w, phi * psi) == involution(w, phi) * involution(w, psi)
            assert involution(w, involution(w, phi)) == phi


def test_trace():
    assert trace(kappa) == Z2 + Z2B
    assert trace(SPINOR_J) == Poly.zero()
    rng = random.Random(9)
    for _ in range(25):
        phi, psi = rand_span(rng), rand_span(rng)
        assert normal_form(trace(phi.bracket(psi))) == Poly.zero()


# -- theta action -----------------------------------------------------------------


def test_theta_action_values():
    got = theta_action(0, kappa)
    want = Spinor(Z2.scale(Q(1, 2) * I_GQ), Z1B.scale(Q(1, 2) * I_GQ))
    assert got == want
    for k in (0, 1, 2):
        assert theta_action(k, SPINOR_I).is_zero()
    with pytest.raises(ValueError):
        theta_action(0, basis_phi(BasisIndex("+", 1, 0, 1)))


def test_theta_leibniz():
    rng = random.Random(10)
    for _ in range(20):
        phi, psi = rand_span(rng, mmax=2), rand_span(rng, mmax=2)
        for k in (0, 1, 2):
            lhs = theta_action(k, phi * psi)
            rhs = theta_action(k, phi) * psi + phi * theta_action(k, psi)
            assert lhs == rhs


def test_theta_closure():
    for m in range(4):
        for sign in "+-":
            for idx in basis_indices(sign, m):
                exp = expand(theta_action(0, basis_phi_sphere(idx)))
                assert exp.reconstruct() == theta_action(0, basis_phi_sphere(idx))


# -- basis families ----------------------------------------------------------------


def test_basis_v():
    assert basis_v(0, 1, 0) == Z1
    assert basis_v(1, 1, 0) == -Z2B
    assert basis_v(2, 1, 0) == Poly.zero()


def test_basis_phi_values():
    assert basis_phi_sphere(BasisIndex("+", 1, 0, 1)) == Spinor(Z2, -Z1B)
    assert basis_phi_sphere(BasisIndex("-", 0, 0, 0)) == Spinor(Z2, Z1B)
    assert basis_phi_sphere(BasisIndex("-", 0, 0, 1)) == Spinor(-Z1, Z2B)
    assert basis_phi_sphere(BasisIndex("-", 1, 1, 1)) == Spinor(
        Z2 * Z2B - Z1 * Z1B, (Z1B * Z2B).scale(2)
    )


def test_basis_phi_range_errors():
    with pytest.raises(ValueError):
        basis_phi(BasisIndex("+", 1, 2, 0))
    with pytest.raises(ValueError):
        basis_phi(BasisIndex("-", 1, 0, 3))


def test_family_sizes():
    for m in range(5):
        assert len(basis_indices("+", m)) == (m + 1) * (m + 2)
        assert len(basis_indices("-", m)) == (m + 1) * (m + 2)


def test_harmonicity_m_le_3():
    for m in range(4):
        for sign in "+-":
            for idx in basis_indices(sign, m):
                assert dirac("D", basis_phi(idx)).ambient_is_zero(), idx


def test_tangential_eigenvalues_m_le_3():
    for m in range(4):
        for idx in basis_indices("+", m):
            b = basis_phi_sphere(idx)
            assert dirac("tangential", b) == b.scale(Q(m, 2))
        for idx in basis_indices("-", m):
            b = basis_phi_sphere(idx)
            assert dirac("tangential", b) == b.scale(Q(-(m + 3), 2))


def test_dirac_component_example():
    # the (2,2) matrix entry d/dz1~ is the only one that fires
    assert dirac("D", Spinor(Poly.zero(), Z1B, "ambient")) == Spinor(
        Poly.zero(), Poly.const(1), "ambient"
    )
    # (z1~ | 0) is twice a basis harmonic spinor, so D annihilates it
    assert dirac("D", Spinor(Z1B, Poly.zero(), "ambient")).ambient_is_zero()
    with pytest.raises(ValueError):
        dirac("D", kappa)
    with pytest.raises(ValueError):
        dirac("tangential", basis_phi(BasisIndex("+", 1, 0, 1)))


def test_gram_diagonal_m_le_2():
    pool = []
    for m in range(3):
        pool.extend(basis_indices("+", m))
        pool.extend(basis_indices("-", m))
    for i, b1 in enumerate(pool):
        for b2 in pool[i:]:
            got = inner_product(basis_phi_sphere(b1), basis_phi_sphere(b2))
            if b1 == b2:
                from math import factorial

                want = gq(
                    Q(
                        factorial(b1.k) * factorial(b1.l) * factorial(b1.m - b1.l),
                        factorial(b1.m + 1 - b1.k),
                    )
                )
                assert got == want, b1
            else:
                assert got == gq(0), (b1, b2)


# -- radial grading ------------------------------------------------------------------


def test_radial_n_on_basis():
    assert radial_n(kappa) == kappa.scale(Q(1, 2))
    assert radial_n(SPINOR_I).is_zero()
    amb = basis_phi(BasisIndex("-", 0, 0, 0))
    assert radial_n(amb).ambient_equal(amb.scale(Q(-3, 2)))


def test_radial_n_leibniz_ambient():
    km = basis_phi(BasisIndex("+", 1, 0, 1)) * basis_phi(BasisIndex("-", 0, 0, 0))
    assert radial_n(km).ambient_equal(km.scale(-1))
    rng = random.Random(12)
    for _ in range(15):
        phi = rand_span(rng, mmax=2, space="ambient")
        psi = rand_span(rng, mmax=2, space="ambient")
        lhs = radial_n(phi * psi)
        rhs = radial_n(phi) * psi + phi * radial_n(psi)
        assert lhs.ambient_equal(rhs)


def test_homogeneous_parts_ambient():
    km = basis_phi(BasisIndex("+", 1, 0, 1)) * basis_phi(BasisIndex("-", 0, 0, 0))
    parts = homogeneous_parts(km)
    assert list(parts) == [-2]
    prod = basis_phi(BasisIndex("+", 2, 0, 0)) * basis_phi(BasisIndex("-", 0, 0, 0))
    parts = homogeneous_parts(prod)
    assert list(parts) == [-1]
    assert radial_n(prod).ambient_equal(prod.scale(Q(-1, 2)))
    assert list(homogeneous_parts(basis_phi(BasisIndex("+", 0, 0, 1)))) == [0]


def test_homogeneous_parts_sphere_resum():
    rng = random.Random(13)
    for _ in range(10):
        phi = rand_span(rng)
        parts = homogeneous_parts(phi)
        acc = Spinor(Poly.zero(), Poly.zero(), "sphere")
        for n, part in parts.items():
            assert expand(part).degrees() <= {n}
            acc = acc + part
        assert acc == phi


# -- expansion -----------------------------------------------------------------------


def test_expand_examples():
    assert expand(SPINOR_I) == Expansion({BasisIndex("+", 0, 0, 1): gq(1)})
    got = expand(Spinor(Z2B, Poly.zero()))
    assert got == Expansion({BasisIndex("+", 1, 1, 2): gq(Q(-1, 2))})
    got = expand(Spinor(Z1, Z2B))
    assert got == Expansion({BasisIndex("+", 1, 1, 1): gq(1)})


def test_expand_of_kappa_mu_product():
    got = expand((kappa * mu).restrict())
    want = Expansion(
        {
            BasisIndex("+", 0, 0, 1): gq(Q(1, 2)),
            BasisIndex("+", 2, 0, 1): gq(Q(2, 3)),
            BasisIndex("+", 2, 1, 2): gq(Q(1, 3)),
            BasisIndex("-", 1, 0, 0): gq(Q(1, 3)),
            BasisIndex("-", 1, 1, 1): gq(Q(1, 6)),
        }
    )
    assert got == want


def test_expand_reconstructs_randomized():
    rng = random.Random(14)
    for _ in range(20):
        phi = rand_span(rng)
        exp = expand(phi)
        assert exp.reconstruct() == phi


def test_closure_small_products():
    pool = []
    for m in range(2):
        pool.extend(basis_indices("+", m))
        pool.extend(basis_indices("-", m))
    for b1 in pool:
        for b2 in pool:
            prod = (basis_phi_sphere(b1) * basis_phi_sphere(b2)).restrict()
            exp = expand(prod)
            assert exp.reconstruct() == prod, (b1, b2)


def test_expansion_json_roundtrip():
    rng = random.Random(15)
    for _ in range(10):
        exp = expand(rand_span(rng))
        assert Expansion.from_json(exp.to_json()) == exp


# -- splitting and classes --------------------------------------------------------------


def test_k_split():
    first, second = k_split(kappa)
    assert first == Spinor((Z2 + Z2B).scale(Q(1, 2)), Poly.zero())
    assert second == Spinor((Z2 - Z2B).scale(Q(1, 2)), -Z1B)
    assert first + second == kappa
    assert k_split(SPINOR_I) == (SPINOR_I, Spinor(Poly.zero(), Poly.zero()))
    iu = Spinor(Poly.const(I_GQ), Poly.zero())
    assert k_split(iu) == (Spinor(Poly.zero(), Poly.zero()), iu)


def test_subspace_class():
    assert subspace_class(Spinor(Z1 + Z1B, Poly.zero())) == {"Lr0", "K"}
    assert subspace_class(Spinor(Poly.zero(), Z2 + Z2B)) == {"L0r", "Kbot"}
    assert subspace_class(kappa) == set()
    assert subspace_class(Spinor(Poly.const(I_GQ), Poly.zero())) == {"Li0", "Kbot"}


def test_k_commutes_with_everything():
    rng = random.Random(16)
    for _ in range(50):
        phi, psi = rand_span(rng), rand_span(rng)
        assert k_split(phi)[0].bracket(psi).is_zero()


def test_normalizer_probe():
    witnesses = [
        SPINOR_I,
        Spinor(Z1 + Z1B, Poly.zero()),
        Spinor(Z2 + Z2B, Poly.zero()),
    ]
    for m in range(3):
        for sign in "+-":
            for idx in basis_indices(sign, m):
                psi = basis_phi_sphere(idx)
                if "K" in subspace_class(psi):
                    continue
                assert any(
                    "K" not in subspace_class(w * psi) for w in witnesses
                ), idx


# -- Clifford table ----------------------------------------------------------------------


def test_clifford_anticommutators():
    gammas = clifford_generators()

    def matmul(x, y):
        return tuple(
            tuple(sum((x[r][t] * y[t][c] for t in range(4)), gq(0)) for c in range(4))
            for r in range(4)
        )

    def madd(x, y):
        return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))

    for p in range(4):
        for q in range(4):
            anti = madd(matmul(gammas[p], gammas[q]), matmul(gammas[q], gammas[p]))
            want = gq(2 if p == q else 0)
            for r in range(4):
                for c in range(4):
                    assert anti[r][c] == (want if r == c else gq(0))
