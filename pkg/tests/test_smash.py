"""Twisted tensor products: laws, the commutation twist, factorization."""

from fractions import Fraction

import pytest

from extalg import (
    GradedAlgebra,
    NotAFactorization,
    algebra_table,
    certify_smash,
    ext_product_table,
    flip_twist,
    minimal_resolution,
    morphism_from_images,
    parse_presentation,
    polynomial_algebra_presentation,
    skew_commutation_twist,
    skew_extension,
    skew_smash_transport_report,
    smash_multiply,
    twist_from_factorization,
    ExtAlgebra,
)
from extalg.linalg import RationalField

Q = RationalField()


def poly_algebra(name, deg, D):
    return GradedAlgebra(polynomial_algebra_presentation(Q, name, deg), D)


def test_flip_twist_certifies():
    X = algebra_table(poly_algebra("a", 1, 3), 3)
    Y = algebra_table(poly_algebra("b", 1, 3), 3)
    status, bad = certify_smash(flip_twist(X, Y), 0, 3)
    assert status == "smash-certified-to-(0,3)"
    assert bad is None


def test_smash_multiply_definition_unrolled():
    X = algebra_table(poly_algebra("a", 1, 2), 2)
    Y = algebra_table(poly_algebra("b", 1, 2), 2)
    T = flip_twist(X, Y)
    # scale one flip value: R(b (x) a) = 3 a (x) b
    ylab, xlab = (0, 1, 0), (0, 1, 0)
    T.twist[(ylab, xlab)] = {(xlab, ylab): Fraction(3)}
    one = Q.one
    unit_pair = (X.unit, Y.unit)
    ey = {(X.unit, ylab): one}
    ex = {(xlab, Y.unit): one}
    assert smash_multiply(T, ey, ex) == {(xlab, ylab): Fraction(3)}
    assert smash_multiply(T, ex, ey) == {(xlab, ylab): one}
    assert smash_multiply(T, {unit_pair: one}, ex) == ex


def test_normality_violation_reported():
    X = algebra_table(poly_algebra("a", 1, 2), 2)
    Y = algebra_table(poly_algebra("b", 1, 2), 2)
    T = flip_twist(X, Y)
    T.twist[((0, 1, 0), (0, 0, 0))] = {((0, 0, 0), (0, 1, 0)): Fraction(2)}
    status, bad = certify_smash(T, 0, 2)
    assert status == "failed"
    assert bad[0].startswith("unit law")


def test_associativity_violation_reported():
    X = algebra_table(poly_algebra("a", 1, 3), 3)
    Y = algebra_table(poly_algebra("b", 1, 3), 3)
    T = flip_twist(X, Y)
    # break the twist away from the unit rows
    T.twist[((0, 1, 0), (0, 1, 0))] = {((0, 1, 0), (0, 1, 0)): Fraction(2)}
    status, bad = certify_smash(T, 0, 3)
    assert status == "failed"
    assert bad[0] == "associativity"


def scaling(A, c):
    images = {i: A.free.scale(A.free.gen_poly(i), c) for i in range(len(A.free.gens))}
    return morphism_from_images(A, A, images, automorphism=True)


@pytest.mark.parametrize("ptext,c,l", [
    ("field Q\ngens x:1", 2, 1),
    ("field Q\ngens x:1\nrel x^3", -1, 1),
    ("field Q\ngens x:1 y:1\nrel x*y - 2*y*x", 3, 2),
])
def test_commutation_twist_matches_skew_extension(ptext, c, l):
    D = 4 if l == 1 else 5
    pres = parse_presentation(ptext)
    A = GradedAlgebra(pres, D)
    sigma = scaling(A, c)
    B = GradedAlgebra(skew_extension(A, sigma, l, "z"), D)
    report = skew_smash_transport_report(A, sigma, l, B, "z", D)
    assert report["passed"], report


def test_commutation_twist_nontrivial_value(kx):
    A = GradedAlgebra(kx, 3)
    sigma = scaling(A, 2)
    Z = poly_algebra("z", 1, 3)
    T = skew_commutation_twist(A, sigma, 1, 3, Z)
    # R(z (x) x) = 2 x (x) z
    assert T.twist[((0, 1, 0), (0, 1, 0))] == {((0, 1, 0), (0, 1, 0)): Fraction(2)}
    # R(z^2 (x) x) = 4 x (x) z^2
    assert T.twist[((0, 2, 0), (0, 1, 0))] == {((0, 1, 0), (0, 2, 0)): Fraction(4)}


def test_twist_from_factorization_recovers_flip():
    # C = X (x) Y with the canonical inclusions gives back the flip
    X = algebra_table(poly_algebra("a", 1, 2), 2)
    Y = algebra_table(poly_algebra("b", 1, 2), 2)
    pres = parse_presentation("field Q\ngens a:1 b:1\nrel a*b - b*a")
    C = algebra_table(GradedAlgebra(pres, 2), 2)
    ai, bi = 0, 1
    CA = GradedAlgebra(pres, 2)

    def embed_word(w):
        nf = CA.normal_form({w: Q.one})
        out = {}
        for u, cc in nf.items():
            d = len(u)
            out[(0, d, CA._index[d][u])] = cc
        return out

    fX = {}
    for (_, d, k) in X.labels:
        fX[(0, d, k)] = embed_word((ai,) * d)
    fY = {}
    for (_, d, k) in Y.labels:
        fY[(0, d, k)] = embed_word((bi,) * d)
    R = twist_from_factorization(C, fX, fY, X, Y, 0, 2)
    flip = flip_twist(X, Y)
    for key, vec in R.twist.items():
        assert vec == flip.twist[key]
    status, _ = certify_smash(R, 0, 2)
    assert status.startswith("smash-certified")


def test_twist_from_factorization_dimension_mismatch():
    X = algebra_table(poly_algebra("a", 1, 2), 2)
    Y = algebra_table(poly_algebra("b", 1, 2), 2)
    # target too small: the quotient k[a]/(a^2) cannot factor X (x) Y
    pres = parse_presentation("field Q\ngens a:1\nrel a^2")
    C = algebra_table(GradedAlgebra(pres, 2), 2)
    fX = {lab: {lab: Q.one} if lab[1] < 2 else {(0, 1, 0): Q.one} for lab in X.labels}
    fY = {lab: {(0, 0, 0): Q.one} for lab in Y.labels}
    with pytest.raises(NotAFactorization):
        twist_from_factorization(C, fX, fY, X, Y, 0, 2)


def test_ext_product_table_window(qplane):
    A = GradedAlgebra(qplane, 3)
    P = minimal_resolution(A, 3, 3)
    E = ExtAlgebra(A, P, 3, 3)
    T = ext_product_table(E)
    assert T.dims == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    # certified pairs only: (2,2)x(2,2) exceeds the window
    assert ((2, 2, 0), (2, 2, 0)) not in T.products
    assert T.mul_basis((0, 0, 0), (1, 1, 0)) == {(1, 1, 0): Q.one}
