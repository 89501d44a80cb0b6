import json
import random
from fractions import Fraction

import pytest

from yoklab import YAlgebra, symgroup as sg

import _helpers as H


def test_dimension():
    assert H.yalg(2, 3).dimension == 48
    assert H.yalg(1, 4).dimension == 24
    assert H.yalg(3, 2).dimension == 18
    assert len(H.yalg(2, 2).colors) == 4
    assert len(H.yalg(2, 2).exponents) == 4


def test_validation():
    with pytest.raises(ValueError):
        YAlgebra(0, 2)
    with pytest.raises(ValueError):
        YAlgebra(2, 2, field=H.field(H.CYC, 3))
    alg = H.yalg(2, 2)
    with pytest.raises(ValueError):
        alg.gen_t(3)
    with pytest.raises(ValueError):
        alg.gen_g(2)


def test_presentations_small():
    assert H.yalg(2, 2).verify_presentation(1)["all_zero"]
    assert H.yalg(2, 2).verify_presentation(2)["all_zero"]


def test_basis_conversion_roundtrip():
    for (r, n) in [(2, 2), (3, 2)]:
        alg = H.yalg(r, n)
        one = alg.field.one
        for a in alg.exponents:
            for w in alg.perms:
                x = alg.element({(a, w): one}, "T")
                assert x.as_E().as_T().terms == x.terms
        for chi in alg.colors:
            for w in alg.perms:
                x = alg.element({(chi, w): one}, "E")
                assert x.as_T().as_E().terms == x.terms
    alg = H.yalg(2, 3)
    rng = random.Random(5)
    for _ in range(20):
        x = alg.random_element(rng, basis="T")
        assert x.as_E().as_T() == x


def test_torus_idempotent_frozen():
    # e_1 at r = 2 is (1 + t_1 t_2)/2
    alg = H.yalg(2, 2)
    e = alg.e_idem(1)
    half = alg.field.from_fraction(Fraction(1, 2))
    ident = alg.ident
    assert e.as_T().terms == {((0, 0), ident): half, ((1, 1), ident): half}
    assert (e * e) == e


def test_E_idempotents():
    alg = H.yalg(2, 2)
    total = alg.zero("E")
    for chi in alg.colors:
        ec = alg.E_idem(chi)
        assert ec * ec == ec
        total = total + ec
        # eigenvalue property: t_j E_chi = zeta^{chi_j} E_chi
        for j in (1, 2):
            lhs = alg.gen_t(j) * ec
            assert lhs == ec * alg.field.zeta_pow(chi[j - 1])
    assert total == alg.one()


def test_g_w_length_additive():
    alg = H.yalg(2, 3)
    for u in alg.perms:
        for v in alg.perms:
            if sg.length(sg.compose(u, v)) == sg.length(u) + sg.length(v):
                assert alg.g_w(u) * alg.g_w(v) == alg.g_w(sg.compose(u, v))


def test_quadratic_specializations():
    # g^2 = q + (q-1) e g: at q = 0 this is -e g, over F13 at q = 5 it is 5 + 4 e g
    alg0 = H.yalg(2, 2)
    g, e = alg0.gen_g(1), alg0.e_idem(1)
    assert g * g == -(e * g) + alg0.zero("T")
    alg5 = H.yalg(2, 2, H.FP13, q=5)
    g, e = alg5.gen_g(1), alg5.e_idem(1)
    five = alg5.field.from_int(5)
    four = alg5.field.from_int(4)
    assert g * g == alg5.one() * five + (e * g) * four


def test_torus_wraparound():
    alg = H.yalg(3, 2)
    t1 = alg.gen_t(1)
    assert t1 ** 3 == alg.one()
    assert alg.t_monomial((4, 0)) == alg.t_monomial((1, 0))
    assert alg.t_monomial((-1, 0)) == alg.t_monomial((2, 0))


def test_generator_maps_match_products():
    alg = H.yalg(2, 2)
    one = alg.field.one
    gens = [alg.gen_g(1)] + [alg.gen_t(j) for j in (1, 2)]
    lmaps = alg.lmul_gen_maps()
    rmaps = alg.rmul_gen_maps()
    assert len(lmaps) == len(rmaps) == len(gens)
    for chi in alg.colors:
        for w in alg.perms:
            x = alg.element({(chi, w): one}, "E")
            for gen, lm, rm in zip(gens, lmaps, rmaps):
                assert lm(x.terms) == (gen * x).as_E().terms
                assert rm(x.terms) == (x * gen).as_E().terms


def test_element_operations():
    alg = H.yalg(2, 2)
    x = alg.gen_g(1) + alg.gen_t(1) * 3
    y = alg.gen_t(2)
    assert x - x == alg.zero("T") + alg.zero("E")
    assert (x * Fraction(1, 2)) * 2 == x
    assert x ** 0 == alg.one()
    assert x ** 2 == x * x
    assert (x + y) * y == x * y + y * y
    assert x.coeff(((0, 0), sg.right_mult_s(alg.ident, 1)), "T") == alg.field.one
    with pytest.raises(ValueError):
        x ** -1
    # cross-algebra mixing is rejected
    other = H.yalg(2, 3)
    with pytest.raises(ValueError):
        x + other.gen_t(1)


def test_phi_on_generators():
    alg = H.yalg(2, 3)
    assert alg.phi(alg.gen_g(1)) == alg.gen_g(2)
    assert alg.phi(alg.gen_t(1)) == alg.gen_t(3)
    assert alg.phi(alg.gen_t(2)) == alg.gen_t(2)
    x = alg.gen_g(1) * alg.gen_t(1) + alg.gen_g(2)
    assert alg.phi(alg.phi(x)) == x


def test_json_roundtrip():
    alg = H.yalg(2, 2)
    rng = random.Random(9)
    for basis in ("T", "E"):
        x = alg.random_element(rng, basis=basis)
        blob = json.dumps(alg.element_to_json(x))
        y = alg.element_from_json(json.loads(blob))
        assert y == x
        assert y.basis == basis


def test_json_validation():
    alg = H.yalg(2, 2)
    good = {"basis": "T", "r": 2, "n": 2,
            "terms": [{"a": [0, 0], "w": [2, 1], "coeff": "1"}]}
    alg.element_from_json(good)
    # torus exponents normalize mod r instead of erroring, same as t_monomial
    wrapped = {**good, "terms": [{"a": [0, 5], "w": [2, 1], "coeff": "1"}]}
    assert alg.element_from_json(wrapped).terms == \
        {((0, 1), (2, 1)): alg.field.one}
    for breakage in [
        {**good, "r": 3},
        {**good, "terms": [{"a": [0, 0], "w": [2, 2], "coeff": "1"}]},
        {**good, "terms": [{"a": [0, 0], "w": [2, 1], "coeff": "oops"}]},
        {**good, "basis": "Q"},
        {"basis": "E", "r": 2, "n": 2,
         "terms": [{"chi": [0, 1], "w": [1, 2], "coeff": "1"}]},
    ]:
        with pytest.raises(ValueError):
            alg.element_from_json(breakage)


def test_product_against_regular_representation():
    # independent oracle: multiply two random elements via explicit matrices
    # of left multiplication on the E-monomial basis
    alg = H.yalg(2, 2)
    rng = random.Random(21)
    keys = [(chi, w) for chi in alg.colors for w in alg.perms]
    index = {k: i for i, k in enumerate(keys)}
    zero, one = alg.field.zero, alg.field.one

    def lmat(x):
        cols = []
        for k in keys:
            img = alg.mul_terms(x.terms, {k: one})
            cols.append([img.get(k2, zero) for k2 in keys])
        return cols  # cols[j][i] = coeff of keys[i] in x * keys[j]

    for _ in range(10):
        x = alg.random_element(rng)
        y = alg.random_element(rng)
        mat = lmat(x)
        expect = {}
        for k, c in y.as_E().terms.items():
            col = mat[index[k]]
            for i, entry in enumerate(col):
                if not entry.is_zero():
                    cur = expect.get(keys[i], zero)
                    cur = cur + entry * c
                    if cur.is_zero():
                        expect.pop(keys[i], None)
                    else:
                        expect[keys[i]] = cur
        assert (x * y).as_E().terms == expect
