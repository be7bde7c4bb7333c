"""Hilbert series, functions, polynomials, and combinatorial dimension.

The Hilbert series of S/I is N(t)/(1-t)^n.  For a monomial ideal the
numerator N comes from the pivot recursion

    N(I) = N(I + <x>) + t * N(I : x),

and for a module with a graded free resolution from the alternating sum of
twist counts.  A Groebner basis reduces to the monomial case through its
leading ideal (Macaulay: the standard monomials are a vector-space basis of
the quotient).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .groebner import GroebnerBasis, MonomialIdeal, minimalize_monomials
from .resolution import BettiTable, FreeResolution, betti_table


class NotACurve(ValueError):
    """The Hilbert polynomial is not linear, so (degree, genus) is undefined."""


def _poly_trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def one_minus_t_power(n):
    """Coefficients of (1 - t)^n."""
    return [(-1) ** k * comb(n, k) for k in range(n + 1)]


def _as_monomial_gens(I):
    if isinstance(I, GroebnerBasis):
        I = I.lead_ideal()
    if isinstance(I, MonomialIdeal):
        return I.gens, I.nvars
    raise TypeError("expected a MonomialIdeal or a ring Groebner basis")


def hilbert_numerator_monomial(I, nvars=None):
    """Numerator of the Hilbert series of S/I for a monomial ideal I.

    Accepts a MonomialIdeal, a ring Groebner basis (through its leading
    ideal), or an iterable of exponent tuples together with ``nvars``.
    """
    if isinstance(I, (MonomialIdeal, GroebnerBasis)):
        gens, nvars = _as_monomial_gens(I)
    else:
        gens = minimalize_monomials(I)
        if nvars is None:
            raise ValueError("nvars is required with raw exponent tuples")
    return _numerator_rec(frozenset(gens), nvars)


def _numerator_rec(gens, nvars):
    if not gens:
        return [1]
    if any(not any(g) for g in gens):  # contains 1
        return [0]
    # pairwise coprime generators: product of (1 - t^deg)
    supports = [tuple(i for i, e in enumerate(g) if e) for g in gens]
    flat = [i for s in supports for i in s]
    if len(flat) == len(set(flat)):
        out = [1]
        for g in gens:
            factor = [0] * (sum(g) + 1)
            factor[0] = 1
            factor[sum(g)] = -1
            out = poly_mul(out, factor)
        return out
    # pivot on the most frequent variable
    counts = [0] * nvars
    for s in supports:
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    pivot = max(range(nvars), key=lambda i: counts[i])
    pv = tuple(1 if i == pivot else 0 for i in range(nvars))
    plus = minimalize_monomials([g for g in gens if g[pivot] == 0] + [pv])
    colon = minimalize_monomials(
        tuple(e - 1 if i == pivot else e for i, e in enumerate(g)) if g[pivot] else g
        for g in gens
    )
    left = _numerator_rec(plus, nvars)
    right = _numerator_rec(colon, nvars)
    out = list(left) + [0] * max(0, len(right) + 1 - len(left))
    for i, c in enumerate(right):
        out[i + 1] += c
    return _poly_trim(out)


def numerator_from_resolution(b) -> list:
    """Alternating sum of twist counts of a Betti table (or resolution)."""
    if isinstance(b, FreeResolution):
        b = betti_table(b)
    if isinstance(b, BettiTable):
        return b.numerator()
    raise TypeError("expected a BettiTable or FreeResolution")


def series_coefficients(numerator, nvars, upto):
    """Coefficients of numerator/(1-t)^nvars through degree ``upto``."""
    out = []
    for n in range(upto + 1):
        total = 0
        for k, c in enumerate(numerator):
            if k > n:
                break
            if c:
                total += c * comb(n - k + nvars - 1, nvars - 1)
        out.append(total)
    return out


def hilbert_function(I, n, nvars=None):
    """dim_k (S/I)_n via the leading ideal / numerator."""
    if isinstance(I, (MonomialIdeal, GroebnerBasis)):
        num = hilbert_numerator_monomial(I)
        _, nvars = _as_monomial_gens(I)
    elif isinstance(I, (list, tuple)) and (not I or isinstance(I[0], int)):
        num = list(I)  # already a numerator
        if nvars is None:
            raise ValueError("nvars required with a raw numerator")
    else:
        num = hilbert_numerator_monomial(I, nvars)
    if n < 0:
        return 0
    return series_coefficients(num, nvars, n)[n]


def hilbert_polynomial(numerator, nvars):
    """The Hilbert polynomial as Fraction coefficients [c0, c1, ...].

    HP(n) = sum_k N_k * C(n - k + nvars - 1, nvars - 1), expanded as a
    polynomial in n (valid for n >= deg(numerator) - nvars + 1).
    """
    coeffs = [Fraction(0)] * nvars
    fact = 1
    for i in range(1, nvars):
        fact *= i
    for k, c in enumerate(numerator):
        if not c:
            continue
        # expand prod_{i=1..nvars-1} (n - k + i) / (nvars-1)!
        poly = [Fraction(1)]
        for i in range(1, nvars):
            poly = _lin_mul(poly, Fraction(i - k))
        for idx, v in enumerate(poly):
            coeffs[idx] += Fraction(c) * v / fact
    return _poly_trim(coeffs)


def _lin_mul(poly, shift):
    """poly(n) * (n + shift)."""
    out = [Fraction(0)] * (len(poly) + 1)
    for i, v in enumerate(poly):
        out[i + 1] += v
        out[i] += shift * v
    return out


def evaluate_polynomial(coeffs, n):
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * n + c
    return total


def regularity_bound(b) -> int:
    """max over the table of (twist - homological index); HF = HP beyond it."""
    if isinstance(b, FreeResolution):
        b = betti_table(b)
    return max((j - i for i, j in b.entries), default=0)


def degree_genus(I, nvars=None):
    """(degree, genus) of a saturated curve ideal, from HP(t) = d t + 1 - g."""
    if isinstance(I, GroebnerBasis):
        num = hilbert_numerator_monomial(I)
        _, nvars = _as_monomial_gens(I)
    else:
        num = list(I)
        if nvars is None:
            raise ValueError("nvars required with a raw numerator")
    hp = hilbert_polynomial(num, nvars)
    if len(hp) != 2:
        raise NotACurve(f"Hilbert polynomial {hp} is not linear")
    d = hp[1]
    g = 1 - hp[0]
    if d.denominator != 1 or g.denominator != 1:
        raise NotACurve(f"Hilbert polynomial {hp} has non-integer invariants")
    return int(d), int(g)


def krull_dimension(I, nvars=None) -> int:
    """Dimension of S/I for a monomial ideal: the largest variable subset T
    containing no generator's support (the coordinate subspace on T lies in
    the vanishing locus)."""
    if isinstance(I, (MonomialIdeal, GroebnerBasis)):
        gens, nvars = _as_monomial_gens(I)
    else:
        gens = minimalize_monomials(I)
        if nvars is None:
            raise ValueError("nvars required with raw exponent tuples")
    if not gens:
        return nvars
    if any(not any(g) for g in gens):  # unit ideal
        return 0
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    # dimension = nvars - (minimum hitting set of the supports)
    best = [nvars]

    def search(remaining, chosen, k):
        if k >= best[0]:
            return
        if not remaining:
            best[0] = k
            return
        s = min(remaining, key=len)
        for v in sorted(s):
            nxt = [t for t in remaining if v not in t]
            search(nxt, chosen | {v}, k + 1)

    search(supports, set(), 0)
    return nvars - best[0]
