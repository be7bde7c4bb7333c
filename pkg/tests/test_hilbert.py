import random
from fractions import Fraction

import pytest

from syzygy.catalog import quadric_pentagon_ideal
from syzygy.fields import GF, QQ
from syzygy.groebner import buchberger_complete, minimal_groebner
from syzygy.hilbert import (
    NotACurve,
    degree_genus,
    evaluate_polynomial,
    hilbert_function,
    hilbert_numerator_monomial,
    hilbert_polynomial,
    krull_dimension,
    numerator_from_resolution,
    one_minus_t_power,
    poly_mul,
    regularity_bound,
    series_coefficients,
)
from syzygy.resolution import betti_table, free_resolution, minimalize
from syzygy.rings import PolyRing

from _oracles import random_homogeneous_ideal


def test_basic_numerators():
    assert hilbert_numerator_monomial([], 4) == [1]
    assert hilbert_numerator_monomial([(1,)], 1) == [1, -1]
    # complete intersection of monomials: product formula
    assert hilbert_numerator_monomial([(2, 0), (0, 3)], 2) == poly_mul(
        [1, 0, -1], [1, 0, 0, -1]
    )


def test_numerator_identities_of_the_module_series():
    assert poly_mul(one_minus_t_power(4), [0, 0, 3, 4]) == [
        0, 0, 3, -8, 2, 12, -13, 4,
    ]
    # (1-t)^4 (5t^2+8t^3+6t^4); the tail is -16t^7 + 6t^8 since the product
    # of a degree-4 polynomial with (1-t)^4 has degree 8
    assert poly_mul(one_minus_t_power(4), [0, 0, 5, 8, 6]) == [
        0, 0, 5, -12, 4, 4, 9, -16, 6,
    ]


def test_numerator_from_resolution_free_module():
    R = PolyRing(QQ, ["x", "y"], "degrevlex")
    res = free_resolution([R.parse("x")])
    # S(-1) -> S resolving S/<x>
    assert numerator_from_resolution(betti_table(res)) == [1, -1]


def test_monomial_numerator_matches_resolution_numerator():
    rng = random.Random(67)
    R = PolyRing(GF(10007), ["x", "y", "z"], "degrevlex")
    for _ in range(8):
        gens = random_homogeneous_ideal(R, rng, max_gens=3, max_degree=3)
        gb = minimal_groebner(buchberger_complete(gens))
        lead_num = hilbert_numerator_monomial(gb)
        res_num = numerator_from_resolution(betti_table(free_resolution(gens)))
        assert lead_num == res_num


def test_hilbert_function_values():
    # the full ring in degree 2, four variables
    assert hilbert_function([1], 2, nvars=4) == 10
    _, gens = quadric_pentagon_ideal()
    gb = minimal_groebner(buchberger_complete(gens))
    assert [hilbert_function(gb, n) for n in range(5)] == [1, 4, 5, 5, 5]
    num = hilbert_numerator_monomial(gb)
    series = series_coefficients(num, 4, 8)
    for n in range(9):
        assert hilbert_function(gb, n) == series[n]


@pytest.mark.parametrize("g", [5, 6])
def test_canonical_curve_hilbert_function_shape(g):
    # quotient by the lead ideal J of a canonical curve: pairwise products,
    # the g-3 cubics x_k^2 x_{g-1}, and the quartic x_{g-2}^3 x_{g-1}
    nvars = g
    gens = []
    for i in range(g - 2):
        for j in range(i + 1, g - 2):
            m = [0] * nvars
            m[i] += 1
            m[j] += 1
            gens.append(tuple(m))
    for k in range(g - 3):
        m = [0] * nvars
        m[k] = 2
        m[g - 2] = 1
        gens.append(tuple(m))
    m = [0] * nvars
    m[g - 3] = 3
    m[g - 2] = 1
    gens.append(tuple(m))
    num = hilbert_numerator_monomial(gens, nvars)
    values = series_coefficients(num, nvars, 6)
    assert values[0] == 1
    assert values[1] == g
    for n in range(2, 7):
        assert values[n] == (2 * n - 1) * (g - 1)


def test_degree_genus_twisted_cubic():
    R = PolyRing(GF(10007), ["x", "y", "z", "w"], "degrevlex")
    gens = [R.parse("x*z - y^2"), R.parse("y*w - z^2"), R.parse("x*w - y*z")]
    gb = minimal_groebner(buchberger_complete(gens))
    assert degree_genus(gb) == (3, 0)


def test_degree_genus_rejects_nonlinear_hilbert_polynomial():
    _, gens = quadric_pentagon_ideal()
    gb = minimal_groebner(buchberger_complete(gens))
    # five reduced points: the Hilbert polynomial is the constant 5
    hp = hilbert_polynomial(hilbert_numerator_monomial(gb), 4)
    assert hp == [Fraction(5)]
    with pytest.raises(NotACurve):
        degree_genus(gb)
    # the whole ring: cubic Hilbert polynomial
    with pytest.raises(NotACurve):
        degree_genus([1], nvars=4)


def test_degree_genus_invariant_under_minimalization():
    R = PolyRing(GF(10007), ["x", "y", "z", "w"], "degrevlex")
    gens = [R.parse("x*z - y^2"), R.parse("y*w - z^2"), R.parse("x*w - y*z")]
    raw = free_resolution(gens)
    minimal = minimalize(raw)
    n_raw = numerator_from_resolution(betti_table(raw))
    n_min = numerator_from_resolution(betti_table(minimal))
    assert n_raw == n_min
    assert hilbert_polynomial(n_raw, 4) == hilbert_polynomial(n_min, 4)


def test_hilbert_polynomial_evaluation_matches_function():
    R = PolyRing(GF(10007), ["x", "y", "z", "w"], "degrevlex")
    gens = [R.parse("x*z - y^2"), R.parse("y*w - z^2"), R.parse("x*w - y*z")]
    gb = minimal_groebner(buchberger_complete(gens))
    num = hilbert_numerator_monomial(gb)
    hp = hilbert_polynomial(num, 4)
    bound = regularity_bound(betti_table(minimalize(free_resolution(gens))))
    for n in range(bound, bound + 5):
        assert evaluate_polynomial(hp, n) == hilbert_function(gb, n)


def test_hilbert_function_counts_standard_monomials():
    # the standard monomials outside the leading ideal are a basis of the
    # quotient, so their count is the Hilbert function
    from syzygy.groebner import standard_monomials

    rng = random.Random(71)
    R = PolyRing(GF(10007), ["x", "y", "z"], "degrevlex")
    for _ in range(6):
        gens = random_homogeneous_ideal(R, rng, max_gens=3, max_degree=3)
        gb = minimal_groebner(buchberger_complete(gens))
        lead = gb.lead_ideal()
        for d in range(6):
            assert hilbert_function(gb, d) == len(standard_monomials(lead, d))


def test_krull_dimension():
    assert krull_dimension([], 4) == 4
    assert krull_dimension([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3) == 0
    assert krull_dimension([(1, 1)], 2) == 1
    # a curve cone: the twisted cubic lead ideal has dimension 2
    R = PolyRing(GF(10007), ["x", "y", "z", "w"], "degrevlex")
    gens = [R.parse("x*z - y^2"), R.parse("y*w - z^2"), R.parse("x*w - y*z")]
    gb = minimal_groebner(buchberger_complete(gens))
    assert krull_dimension(gb) == 2
    assert krull_dimension([(0, 0)], 2) == 0  # the unit ideal
