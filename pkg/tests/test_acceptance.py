"""Acceptance suite: one test per criterion, with a printed verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  A few classically tabulated values for these constructions contain
arithmetic slips; wherever a target value contradicts the table it
accompanies, the suite asserts the internally consistent value and says so
on the verdict line (the derivation sits next to each assertion).
"""

import random
import time

from syzygy.catalog import (
    MINORS_EXPECTED,
    generic_minors_ideal,
    quadric_pentagon_ideal,
)
from syzygy.curves import (
    DegenerateSample,
    EmbeddingFailure,
    VerificationFailure,
    build_hr_module,
    builtin_recipe,
    curve_from_module,
    curve_ring,
    expected_hilbert_table,
    gorenstein_experiment,
    graded_piece_kernel,
    random_graded_matrix,
)
from syzygy.division import normal_form
from syzygy.fields import GF
from syzygy.groebner import (
    buchberger_complete,
    colon_generators,
    is_groebner,
    minimal_groebner,
)
from syzygy.hilbert import (
    NotACurve,
    degree_genus,
    hilbert_numerator_monomial,
    hilbert_polynomial,
    numerator_from_resolution,
    one_minus_t_power,
    poly_mul,
)
from syzygy.resolution import (
    GradedMatrix,
    betti_table,
    free_resolution,
    minimalize,
    schreyer_syzygies,
    sort_for_termination,
)
from syzygy.rings import PolyRing

from _oracles import (
    borel_closure,
    membership_oracle,
    random_homogeneous_ideal,
    stable_betti_numbers,
)


def _verdict(num, name, ok, elapsed, note=""):
    line = f"[criterion {num:>2}] {name:<34} {'PASS' if ok else 'FAIL'} ({elapsed:6.2f}s)"
    if note:
        line += f"  -- {note}"
    print(line)
    assert ok, f"criterion {num}: {name}{': ' + note if note else ''}"


def test_criterion_01_pentagon_replay():
    t0 = time.time()
    _, gens = quadric_pentagon_ideal()
    check = is_groebner(gens)
    raw = free_resolution(gens)
    minimal = minimalize(raw)
    ok = (
        check.ok
        and raw.ranks() == [1, 5, 6, 2]
        and minimal.ranks() == [1, 5, 5, 1]
    )
    # The five quadrics cut out the five reduced points (1 : t : t^2 : t^3)
    # with t^5 = 1, so the Hilbert polynomial is the constant 5 and no
    # (degree, genus) pair exists; the contract raises instead of guessing.
    gb = minimal_groebner(buchberger_complete(gens))
    hp = hilbert_polynomial(hilbert_numerator_monomial(gb), 4)
    ok = ok and hp == [5]
    try:
        degree_genus(gb)
        ok = False
        raised = False
    except NotACurve:
        raised = True
    elapsed = time.time() - t0
    _verdict(
        1,
        "five-quadric replay",
        ok and raised and elapsed < 1.0,
        elapsed,
        "degree-genus subcheck: the vanishing locus is a length-5 point scheme, "
        "so the Hilbert polynomial is the constant 5 and NotACurve is raised",
    )


def test_criterion_02_minors_replay():
    t0 = time.time()
    ring, minors = generic_minors_ideal()
    leads = [f.lead_monomial() for f in minors]
    from syzygy.textio import format_polynomial

    lead_strs = [format_polynomial(ring.monomial(m)) for m in leads]
    colon = [
        sorted(format_polynomial(ring.monomial(a)) for a in colon_generators(leads, i))
        for i in range(10)
    ]
    check = is_groebner(minors)
    raw = free_resolution(minors)
    minimal = minimalize(raw)
    ok = (
        lead_strs == MINORS_EXPECTED["lead_terms"]
        and colon == MINORS_EXPECTED["colon_table"]
        and check.ok
        and check.division_count == 15
        and raw.ranks() == [1, 10, 15, 6]
        and sorted(raw.twists(1)) == [3] * 10
        and sorted(raw.twists(2)) == [4] * 15
        and sorted(raw.twists(3)) == [5] * 6
        and minimal.ranks() == raw.ranks()
    )
    elapsed = time.time() - t0
    _verdict(2, "generic 3x5 minors replay", ok and elapsed < 10.0, elapsed)


def test_criterion_03_hilbert_numerator_identities():
    t0 = time.time()
    lhs1 = poly_mul(one_minus_t_power(4), [0, 0, 3, 4])
    ok = lhs1 == [0, 0, 3, -8, 2, 12, -13, 4]
    lhs2 = poly_mul(one_minus_t_power(4), [0, 0, 5, 8, 6])
    # the product of (1-t)^4 with a degree-4 polynomial has degree 8, so the
    # tail is -16 t^7 + 6 t^8 (a t^10/t^11 tail is impossible); this matches
    # the alternating sum of the degree-(13,12) module's Betti table
    ok = ok and lhs2 == [0, 0, 5, -12, 4, 4, 9, -16, 6]

    m11 = build_hr_module(builtin_recipe(11, 10), random.Random(1))
    num11 = numerator_from_resolution(
        betti_table(free_resolution(m11.presentation, minimal=True))
    )
    ok = ok and num11 == lhs1

    m13 = build_hr_module(builtin_recipe(13, 12), random.Random(1))
    num13 = numerator_from_resolution(
        betti_table(free_resolution(m13.presentation, minimal=True))
    )
    ok = ok and num13 == lhs2
    elapsed = time.time() - t0
    _verdict(
        3,
        "Hilbert numerator identities",
        ok,
        elapsed,
        "tail of (1-t)^4(5t^2+8t^3+6t^4) is -16t^7+6t^8 by degree count",
    )


EXPECTED_BETTI_M_11_10 = [
    [0, 2, 3], [1, 3, 8], [2, 4, 2], [2, 5, 12], [3, 6, 13], [4, 7, 4],
]
EXPECTED_BETTI_SC_11_10 = [[0, 0, 1], [1, 5, 10], [2, 6, 13], [3, 7, 4]]


def test_criterion_04_degree11_genus10_pipeline():
    t0 = time.time()
    recipe = builtin_recipe(11, 10)
    expected_table = expected_hilbert_table(recipe)
    successes = 0
    smooth = 0
    worst = 0.0
    for seed in range(10):
        ts = time.time()
        rng = random.Random(seed)
        try:
            M = build_hr_module(recipe, rng)
            report = curve_from_module(M, rng, seed=seed)
        except (DegenerateSample, EmbeddingFailure, VerificationFailure) as exc:
            print(f"    seed {seed}: failed gate: {exc}")
            continue
        finally:
            worst = max(worst, time.time() - ts)
        ok_seed = (
            (report.degree, report.genus) == (11, 10)
            and report.hilbert_table == expected_table
            and report.betti_module == EXPECTED_BETTI_M_11_10
            and report.betti_coordinate_ring == EXPECTED_BETTI_SC_11_10
        )
        if ok_seed:
            successes += 1
            if report.smoothness == "smooth":
                smooth += 1
        else:
            print(f"    seed {seed}: invariants off target")
    elapsed = time.time() - t0
    _verdict(
        4,
        "degree 11 genus 10 pipeline",
        successes >= 7 and smooth >= 1 and worst < 300.0,
        elapsed,
        f"{successes}/10 seeds accepted, {smooth} smooth, slowest seed "
        f"{worst:.1f}s; table row n=6 is (0, 57, 84, 27) by Riemann-Roch",
    )


EXPECTED_BETTI_M_13_12 = [
    [0, 2, 5], [1, 3, 12], [2, 4, 4], [2, 5, 4], [2, 6, 9], [3, 7, 16], [4, 8, 6],
]
EXPECTED_BETTI_SC_13_12 = [[0, 0, 1], [1, 5, 2], [1, 6, 9], [2, 7, 16], [3, 8, 6]]


def test_criterion_05_genus12_degree13_pipeline():
    t0 = time.time()
    ring = curve_ring()
    exact_kernels = 0
    for seed in range(100, 110):
        psi = random_graded_matrix(ring, (0,) * 12, (1,) * 4, seed)
        psi_t = GradedMatrix(
            ring,
            (-2,) * 4,
            (-1,) * 12,
            [[psi.entries[i][j] for i in range(12)] for j in range(4)],
        )
        if len(graded_piece_kernel(psi_t, 0)) == 8:
            exact_kernels += 1

    recipe = builtin_recipe(13, 12)
    h_m = dict(recipe.module_hilbert)
    successes = 0
    worst = 0.0
    for seed in range(10):
        ts = time.time()
        rng = random.Random(seed)
        try:
            M = build_hr_module(recipe, rng)
            report = curve_from_module(M, rng, seed=seed)
        except (DegenerateSample, EmbeddingFailure, VerificationFailure) as exc:
            print(f"    seed {seed}: failed gate: {exc}")
            continue
        finally:
            worst = max(worst, time.time() - ts)
        ok_seed = (
            M.hilbert == h_m
            and (report.degree, report.genus) == (13, 12)
            and report.betti_module == EXPECTED_BETTI_M_13_12
            and report.betti_coordinate_ring == EXPECTED_BETTI_SC_13_12
        )
        if ok_seed:
            successes += 1
        else:
            print(f"    seed {seed}: invariants off target")
    elapsed = time.time() - t0
    _verdict(
        5,
        "genus 12 degree 13 pipeline",
        exact_kernels >= 9 and successes >= 7 and worst < 300.0,
        elapsed,
        f"{exact_kernels}/10 syzygy kernels of dimension exactly 8, "
        f"{successes}/10 pipeline seeds accepted; coordinate-ring Betti rows "
        "are '. 2 . .' and '. 9 16 6'",
    )


def test_criterion_06_syzygy_theorem_property_suite():
    t0 = time.time()
    rng = random.Random(2718)
    checked = 0
    ok = True
    while checked < 50:
        nvars = rng.randrange(2, 5)
        ring = PolyRing(GF(10007), [f"x{i}" for i in range(nvars)], "degrevlex")
        gens = random_homogeneous_ideal(ring, rng, max_gens=5, max_degree=3)
        res = free_resolution(gens)
        checked += 1
        if res.length > 4 or not res.is_complex():
            ok = False
            print(f"    ideal {checked}: length {res.length} or nonzero composite")
            continue
        # leading-term law on the first syzygy step
        gb = sort_for_termination(minimal_groebner(buchberger_complete(gens)))
        syz, _, _ = schreyer_syzygies(gb)
        for s in syz:
            (mon, pos), _ = s.element.lead_term()
            if (mon, pos) != (s.source_monomial, s.source_index):
                ok = False
                print(f"    ideal {checked}: leading-term law violated")
    elapsed = time.time() - t0
    _verdict(6, "syzygy-theorem property suite", ok and elapsed < 120.0, elapsed,
             "50 random ideals, length <= 4, exact complexes, lead law")


def test_criterion_07_membership_oracle_equivalence():
    t0 = time.time()
    rng = random.Random(3141)
    ok = True
    for trial in range(30):
        nvars = rng.randrange(2, 4)
        ring = PolyRing(GF(10007), [f"x{i}" for i in range(nvars)], "degrevlex")
        gens = random_homogeneous_ideal(ring, rng, max_gens=4, max_degree=3)
        gb = minimal_groebner(buchberger_complete(gens))
        member = membership_oracle(ring, gens, 6)
        probes = [
            ring.monomial(m) for d in range(7) for m in ring.monomials_of_degree(d)
        ]
        for d in range(1, 7):
            probes.append(ring.random_homogeneous(d, rng))
        # random combinations of the generators are members by construction
        for f in gens:
            cofactor_degree = 6 - f.degree()
            if cofactor_degree >= 0:
                probes.append(
                    ring.mul(ring.random_homogeneous(cofactor_degree, rng), f)
                )
        for g in probes:
            if g.is_zero():
                continue
            if normal_form(g, gb).is_zero() != member(g):
                ok = False
                print(f"    trial {trial}: disagreement on {g}")
    elapsed = time.time() - t0
    _verdict(7, "membership oracle equivalence", ok, elapsed,
             "30 ideals, all monomials and samples through degree 6")


def test_criterion_08_borel_fixed_minimality():
    t0 = time.time()
    rng = random.Random(1618)
    checked = 0
    ok = True
    while checked < 10:
        nvars = rng.randrange(2, 5)
        seeds = [
            tuple(rng.randrange(4) for _ in range(nvars))
            for _ in range(rng.randrange(1, 4))
        ]
        seeds = [m for m in seeds if any(m)]
        if not seeds:
            continue
        gens = borel_closure(seeds, nvars)
        if not gens or len(gens) > 40:
            continue
        checked += 1
        ring = PolyRing(GF(10007), [f"x{i}" for i in range(nvars)], "degrevlex")
        raw = free_resolution([ring.monomial(m) for m in gens])
        minimal = minimalize(raw)
        if raw.ranks() != minimal.ranks():
            ok = False
            print(f"    ideal {checked}: raw resolution not minimal")
            continue
        expected = stable_betti_numbers(gens)
        got = {
            (i - 1, j): r
            for (i, j), r in betti_table(raw).entries.items()
            if i >= 1
        }
        if got != expected:
            ok = False
            print(f"    ideal {checked}: combinatorial counts differ")
    elapsed = time.time() - t0
    _verdict(8, "Borel-fixed raw minimality", ok, elapsed,
             "10 ideals, Eliahou-Kervaire counts as independent oracle")


def test_criterion_09_gorenstein_experiment():
    t0 = time.time()
    e5 = gorenstein_experiment(5, trials=200, seed=7)
    ok = set(e5.histogram) <= {0, 2} and e5.accepted >= 150
    e6 = gorenstein_experiment(6, trials=120, seed=11)
    ok = ok and set(e6.histogram) <= {0, 1, 3}
    elapsed = time.time() - t0
    _verdict(
        9,
        "Gorenstein cubic-generator counts",
        ok and elapsed < 300.0,
        elapsed,
        f"genus 5: {dict(sorted(e5.histogram.items()))} in {{0,2}}; "
        f"genus 6: {dict(sorted(e6.histogram.items()))} in {{0,1,3}}",
    )


def test_criterion_10_documented_exclusions():
    t0 = time.time()
    # Moduli-theoretic statements (unirationality of the moduli space, the
    # genus-16 deformation-dimension table, quoted theorems) have no
    # desk-scale computation; the property checks in criteria 6-9 stand in.
    substitutes = [
        test_criterion_06_syzygy_theorem_property_suite,
        test_criterion_07_membership_oracle_equivalence,
        test_criterion_08_borel_fixed_minimality,
        test_criterion_09_gorenstein_experiment,
    ]
    ok = all(callable(f) for f in substitutes)
    _verdict(10, "exclusions documented", ok, time.time() - t0,
             "property suites 6-9 substitute for moduli-scale statements")
