"""Built-in worked examples with their verified outputs.

Each entry can rebuild its input from scratch and carries the expected
results (leading terms, colon-ideal table, resolution shape), so the CLI can
replay an example and diff.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .fields import GF, QQ
from .groebner import colon_generators, is_groebner
from .hilbert import hilbert_numerator_monomial
from .resolution import betti_table, free_resolution, minimalize
from .rings import PolyRing

DEFAULT_PRIME = 10007


def quadric_pentagon_ring(field=None):
    return PolyRing(field or GF(DEFAULT_PRIME), ["w", "x", "y", "z"], "degrevlex")


def quadric_pentagon_ideal(field=None):
    """Five quadrics cutting out the orbit of (1 : t : t^2 : t^3), t^5 = 1."""
    ring = quadric_pentagon_ring(field)
    texts = ["w^2 - x*z", "w*x - y*z", "x^2 - w*y", "x*y - z^2", "y^2 - w*z"]
    return ring, [ring.parse(s) for s in texts]


PENTAGON_EXPECTED = {
    "lead_terms": ["w^2", "w*x", "x^2", "x*y", "y^2"],
    "colon_table": [[], ["w"], ["w"], ["w", "x"], ["w^2", "x"]],
    "division_count": 6,
    "raw_ranks": [1, 5, 6, 2],
    "minimal_ranks": [1, 5, 5, 1],
    "minimal_betti": [[0, 0, 1], [1, 2, 5], [2, 3, 5], [3, 5, 1]],
    "numerator": [1, 0, -5, 5, 0, -1],
}


def generic_minors_ring(field=None):
    names = (
        [f"x{i}" for i in range(1, 6)]
        + [f"y{i}" for i in range(1, 6)]
        + [f"z{i}" for i in range(1, 6)]
    )
    return PolyRing(field or QQ, names, "lex")


def generic_minors_ideal(field=None):
    """The ten 3x3 minors of the generic 3x5 matrix (x_a | y_a | z_a)."""
    ring = generic_minors_ring(field)
    row_offsets = (0, 5, 10)
    # the order used in the worked table: columns sorted by largest index,
    # i.e. (123),(124),(134),(234),(125),(135),(235),(145),(245),(345)
    col_sets = sorted(combinations(range(5), 3), key=lambda t: (t[2], t[1], t[0]))
    minors = []
    for cols in col_sets:
        det = ring.zero()
        for perm in permutations(range(3)):
            sign = _perm_sign(perm)
            term = ring.one()
            for r, c in zip(perm, cols):
                term = ring.mul(term, ring.variable(row_offsets[r] + c))
            det = ring.add(det, ring.scale(term, sign))
        minors.append(det)
    return ring, minors


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


MINORS_EXPECTED = {
    "lead_terms": [
        "x1*y2*z3", "x1*y2*z4", "x1*y3*z4", "x2*y3*z4", "x1*y2*z5",
        "x1*y3*z5", "x2*y3*z5", "x1*y4*z5", "x2*y4*z5", "x3*y4*z5",
    ],
    "colon_table": [
        [], ["z3"], ["y2"], ["x1"], ["z3", "z4"],
        ["y2", "z4"], ["x1", "z4"], ["y2", "y3"], ["x1", "y3"], ["x1", "x2"],
    ],
    "division_count": 15,
    "raw_ranks": [1, 10, 15, 6],
    "minimal_ranks": [1, 10, 15, 6],
    "minimal_betti": [[0, 0, 1], [1, 3, 10], [2, 4, 15], [3, 5, 6]],
    "numerator": [1, 0, 0, -10, 15, -6],
}


EXAMPLE_IDS = ("5gon", "minors35")


def run_example(example_id: str) -> dict:
    """Replay one catalog example; returns actual vs expected plus a verdict."""
    if example_id == "5gon":
        ring, gens = quadric_pentagon_ideal()
        expected = PENTAGON_EXPECTED
    elif example_id == "minors35":
        ring, gens = generic_minors_ideal()
        expected = MINORS_EXPECTED
    else:
        raise ValueError(f"unknown example {example_id!r}; choose from {EXAMPLE_IDS}")

    from .textio import format_polynomial

    leads = [f.lead_monomial() for f in gens]
    lead_strs = [format_polynomial(ring.monomial(m)) for m in leads]
    colon_table = [
        sorted(
            format_polynomial(ring.monomial(g)) for g in colon_generators(leads, i)
        )
        for i in range(len(gens))
    ]
    check = is_groebner(gens)
    raw = free_resolution(gens)
    minimal = minimalize(raw)
    bt = betti_table(minimal)
    actual = {
        "lead_terms": lead_strs,
        "colon_table": colon_table,
        "division_count": check.division_count,
        "is_groebner": check.ok,
        "raw_ranks": raw.ranks(),
        "minimal_ranks": minimal.ranks(),
        "minimal_betti": bt.to_triples(),
        "numerator": hilbert_numerator_monomial(
            [f.lead_monomial() for f in gens], ring.nvars
        ),
    }
    diffs = {}
    for key, want in expected.items():
        if actual.get(key) != want:
            diffs[key] = {"expected": want, "actual": actual.get(key)}
    return {
        "id": example_id,
        "ok": check.ok and not diffs,
        "actual": actual,
        "expected": expected,
        "diffs": diffs,
    }
