"""Groebner bases via the colon-ideal form of Buchberger's criterion.

Instead of S-pairs, the criterion tests one division per minimal generator of

    M_i = <L(f_1), ..., L(f_{i-1})> : L(f_i),

where only leading terms in the same module component contribute.  A basis is
a Groebner basis iff every remainder of x^a * f_i under division by the full
sequence vanishes.  Completion appends nonzero remainders at the end (earlier
colon ideals stay valid) and queues the tests of the new element; termination
follows from the ascending chain of leading-term modules.

Built on top of that: normal-form ideal membership, standard monomials, colon
ideals of polynomial ideals, and saturation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field

from .division import ZeroDivisor, divide
from .rings import (
    FreeModule,
    ModuleElement,
    PolyRing,
    Polynomial,
    PositionElimination,
    mon_colon,
    mon_divides,
    mon_degree,
)


class NonTermination(RuntimeError):
    """Saturation failed to stabilize within the iteration cap."""


class ZeroDivisorInput(ValueError):
    pass


class MonomialIdeal:
    """Minimal generators of a monomial ideal, as a frozenset of exponents."""

    def __init__(self, gens, nvars):
        self.nvars = nvars
        self.gens = minimalize_monomials(gens)

    def contains(self, m):
        return any(mon_divides(g, m) for g in self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and other.gens == self.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"MonomialIdeal({sorted(self.gens)})"


def minimalize_monomials(gens):
    """Drop monomials divisible by another generator."""
    gens = sorted(set(gens), key=mon_degree)
    kept = []
    for m in gens:
        if not any(mon_divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


def _lead_data(f):
    """(monomial-part, position) of the lead; position 0 for ring elements."""
    if isinstance(f, ModuleElement):
        (m, pos), _ = f.lead_term()
        return m, pos
    return f.lead_monomial(), 0


def colon_generators(leads, i):
    """Minimal monomial generators of <leads before i> : leads[i].

    ``leads`` may be exponent tuples (ring case) or (exponents, position)
    pairs; only same-position leads contribute in the module case.
    """
    norm = []
    for l in leads:
        if isinstance(l, tuple) and len(l) == 2 and isinstance(l[0], tuple):
            norm.append(l)
        else:
            norm.append((l, 0))
    m_i, pos_i = norm[i]
    quotients = [mon_colon(m_j, m_i) for m_j, pos_j in norm[:i] if pos_j == pos_i]
    return minimalize_monomials(quotients)


@dataclass
class CriterionCheck:
    ok: bool
    remainders: list
    tests: list                      # (index, alpha) pairs, in test order
    division_count: int = 0


@dataclass
class GroebnerBasis:
    """An ordered sequence of nonzero elements with its order and a verified flag."""

    elements: tuple
    order: object
    verified: bool = False
    stats: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.elements = tuple(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def ring(self):
        f = self.elements[0]
        return f.module.ring if isinstance(f, ModuleElement) else f.ring

    def lead_monomials(self):
        return [_lead_data(f) for f in self.elements]

    def lead_ideal(self):
        """Leading term ideal; ring case only (module leads keep positions)."""
        f = self.elements[0]
        if isinstance(f, ModuleElement):
            raise TypeError("lead_ideal is for ring ideals; use lead_monomials")
        return MonomialIdeal([f.lead_monomial() for f in self.elements], f.ring.nvars)

    def is_module(self):
        return isinstance(self.elements[0], ModuleElement)


def _check_inputs(gens):
    gens = list(gens)
    if not gens:
        raise ValueError("empty generating set")
    for f in gens:
        if f.is_zero():
            raise ZeroDivisor("generators must be nonzero")
    return gens


def buchberger_tests(gens):
    """All (i, alpha) pairs the criterion must divide, in sequence order."""
    gens = _check_inputs(gens)
    leads = [_lead_data(f) for f in gens]
    first = gens[0]
    if isinstance(first, ModuleElement):
        order_key = first.module.ring.order.key
    else:
        order_key = first.ring.order.key
    tests = []
    for i in range(len(gens)):
        for alpha in sorted(colon_generators(leads, i), key=order_key):
            tests.append((i, alpha))
    return tests


def _multiply_test(f, alpha):
    if isinstance(f, ModuleElement):
        return f.module.term_mul(alpha, f.module.ring.field.one, f)
    return f.ring.term_mul(alpha, f.ring.field.one, f)


def is_groebner(gens, order=None) -> CriterionCheck:
    """Run the criterion: True iff every test divides to remainder zero."""
    gens = _check_inputs(gens)
    tests = buchberger_tests(gens)
    remainders = []
    count = 0
    for i, alpha in tests:
        res = divide(_multiply_test(gens[i], alpha), gens)
        count += 1
        if not res.remainder.is_zero():
            remainders.append(res.remainder)
    return CriterionCheck(
        ok=not remainders, remainders=remainders, tests=tests, division_count=count
    )


def buchberger_complete(gens, order=None) -> GroebnerBasis:
    """Complete generators to a verified Groebner basis.

    Nonzero remainders are appended at the end of the sequence; tests already
    passed stay valid because a divisor appended last is only consulted when
    no earlier leading term divides, and the appended remainder reduces the
    failing test to zero by linearity of division.
    """
    basis = _check_inputs(gens)
    first = basis[0]
    if isinstance(first, ModuleElement):
        active_order = first.module.order
        ring_key = first.module.ring.order.key
    else:
        active_order = first.ring.order
        ring_key = first.ring.order.key

    leads = [_lead_data(f) for f in basis]
    queue = deque()
    for i in range(len(basis)):
        for alpha in sorted(colon_generators(leads, i), key=ring_key):
            queue.append((i, alpha))
    divisions = 0
    while queue:
        i, alpha = queue.popleft()
        res = divide(_multiply_test(basis[i], alpha), basis)
        divisions += 1
        h = res.remainder
        if h.is_zero():
            continue
        basis.append(h)
        leads.append(_lead_data(h))
        j = len(basis) - 1
        for alpha2 in sorted(colon_generators(leads, j), key=ring_key):
            queue.append((j, alpha2))
    return GroebnerBasis(
        elements=tuple(basis),
        order=active_order,
        verified=True,
        stats={"divisions": divisions, "appended": len(basis) - len(list(gens))},
    )


def minimal_groebner(gb: GroebnerBasis) -> GroebnerBasis:
    """Drop elements whose lead is divisible by another's; make leads monic."""
    if not gb.verified:
        raise ValueError("minimalization expects a verified basis")
    leads = gb.lead_monomials()
    keep = []
    for i, (m_i, p_i) in enumerate(leads):
        redundant = False
        for j, (m_j, p_j) in enumerate(leads):
            if i == j or p_i != p_j or not mon_divides(m_j, m_i):
                continue
            if m_j != m_i or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    out = []
    for i in keep:
        f = gb.elements[i]
        lc = f.lead_coeff()
        parent = f.module if isinstance(f, ModuleElement) else f.ring
        field = parent.ring.field if isinstance(f, ModuleElement) else parent.field
        if lc != field.one:
            out.append(parent.scale(f, field.inv(lc)))
        else:
            out.append(f)
    return GroebnerBasis(out, gb.order, verified=True, stats=dict(gb.stats))


def groebner_basis(gens, order=None) -> GroebnerBasis:
    """Convenience: complete then minimalize."""
    return minimal_groebner(buchberger_complete(gens, order))


def normal_form(g, gb):
    """Unique remainder modulo a verified Groebner basis."""
    elements = gb.elements if isinstance(gb, GroebnerBasis) else gb
    return divide(g, list(elements)).remainder


def ideal_contains(gb: GroebnerBasis, g) -> bool:
    return normal_form(g, gb).is_zero()


def ideals_equal(gb1: GroebnerBasis, gb2: GroebnerBasis) -> bool:
    return all(ideal_contains(gb1, f) for f in gb2.elements) and all(
        ideal_contains(gb2, f) for f in gb1.elements
    )


def standard_monomials(lead_ideal, degree, nvars=None, ring=None):
    """All degree-d monomials outside the given monomial ideal."""
    if isinstance(lead_ideal, GroebnerBasis):
        lead_ideal = lead_ideal.lead_ideal()
    if isinstance(lead_ideal, MonomialIdeal):
        gens = lead_ideal.gens
        nvars = lead_ideal.nvars
    else:
        gens = frozenset(lead_ideal)
        if nvars is None:
            raise ValueError("nvars required when passing raw exponent tuples")
    if ring is None:
        probe = PolyRing(_DUMMY_FIELD, [f"t{i}" for i in range(nvars)])
    else:
        probe = ring
    out = []
    for m in probe.monomials_of_degree(degree):
        if not any(mon_divides(g, m) for g in gens):
            out.append(m)
    return out


class _Dummy:
    zero = 0
    one = 1

    def element(self, v):
        return v


_DUMMY_FIELD = _Dummy()


# ---------------------------------------------------------------------------
# colon ideals and saturation via position-block elimination

def _elimination_quotient(I_gens, divisors):
    """Generators of (I : <divisors>) via a rank-(s+1) module elimination.

    g lies in the quotient iff g * (d_1, ..., d_s) lands in I^s, i.e. iff the
    module generated by (d_1, ..., d_s | 1) and f e_k | 0 contains (0 | g).
    A basis of the trailing-component kernel falls out of a Groebner basis
    under an order where the first s positions dominate.
    """
    ring = I_gens[0].ring
    s = len(divisors)
    order = PositionElimination(ring.order, s)
    module = FreeModule(ring, rank=s + 1, order=order)
    gens = []
    pairs = []
    for k, d in enumerate(divisors):
        for m, c in d.terms:
            pairs.append(((m, k), c))
    pairs.append(((ring.zero_mon, s), ring.field.one))
    gens.append(module.element(pairs))
    for f in I_gens:
        for k in range(s):
            gens.append(module.element([((m, k), c) for m, c in f.terms]))
    gb = buchberger_complete(gens)
    out = []
    for u in gb.elements:
        if all(pos == s for (_, pos), _ in u.terms):
            g = ring.poly([(m, c) for (m, _), c in u.terms])
            if not g.is_zero():
                out.append(g)
    return out


def ideal_quotient(I, f) -> GroebnerBasis:
    """Groebner basis of (I : f) = {g | g*f in I} for a single polynomial f."""
    I_gens = list(I.elements if isinstance(I, GroebnerBasis) else I)
    if isinstance(f, Polynomial) and f.is_zero():
        raise ZeroDivisorInput("cannot form a colon ideal by zero")
    gens = _elimination_quotient(I_gens, [f])
    if not gens:
        gens = [I_gens[0].ring.zero()]  # cannot happen: I : f contains I
    return minimal_groebner(buchberger_complete(gens))


def ideal_quotient_by_ideal(I, J_gens) -> GroebnerBasis:
    """Groebner basis of (I : J) for an ideal J given by generators."""
    I_gens = list(I.elements if isinstance(I, GroebnerBasis) else I)
    J_gens = [f for f in J_gens if not f.is_zero()]
    if not J_gens:
        raise ZeroDivisorInput("cannot form a colon ideal by the zero ideal")
    gens = _elimination_quotient(I_gens, J_gens)
    return minimal_groebner(buchberger_complete(gens))


def saturate(I, J, cap=None) -> GroebnerBasis:
    """(I : J^infinity), by iterating the colon until the ideal stabilizes.

    J may be a single polynomial (typically a variable) or a list of
    generators such as the irrelevant ideal.  The iteration cap defaults to
    ``2 * max generator degree + 4``; hitting it raises NonTermination.
    """
    current = I if isinstance(I, GroebnerBasis) else groebner_basis(list(I))
    if isinstance(J, Polynomial):
        J_gens = [J]
    else:
        J_gens = list(J.elements if isinstance(J, GroebnerBasis) else J)
    if cap is None:
        maxdeg = max(f.degree() for f in current.elements)
        cap = 2 * maxdeg + 4
    for _ in range(cap):
        nxt = ideal_quotient_by_ideal(current, J_gens)
        if _same_lead_ideal(current, nxt):
            return current
        current = nxt
    raise NonTermination(f"saturation did not stabilize within {cap} iterations")


def _same_lead_ideal(gb1: GroebnerBasis, gb2: GroebnerBasis) -> bool:
    l1 = minimalize_monomials(m for m, _ in gb1.lead_monomials())
    l2 = minimalize_monomials(m for m, _ in gb2.lead_monomials())
    return l1 == l2


def saturate_last_variable(gens_or_gb) -> GroebnerBasis:
    """(I : x_n^infinity) for the last variable under degrevlex.

    For a homogeneous ideal with a degrevlex basis, dividing each basis
    element by the largest power of the last variable that divides it yields
    generators of the saturation; we recomplete and repeat until no element
    is divisible by x_n.
    """
    gens = list(
        gens_or_gb.elements if isinstance(gens_or_gb, GroebnerBasis) else gens_or_gb
    )
    ring = gens[0].ring
    if ring.order.kind != "degrevlex":
        raise ValueError("the last-variable saturation shortcut needs degrevlex")
    if not all(f.is_homogeneous() for f in gens):
        raise ValueError("the last-variable saturation shortcut needs homogeneous input")
    last = ring.nvars - 1
    for _ in range(64):
        gb = minimal_groebner(buchberger_complete(gens))
        stripped = []
        changed = False
        for f in gb.elements:
            k = min(m[last] for m, _ in f.terms)
            if k > 0:
                changed = True
                f = ring.poly(
                    [(m[:last] + (m[last] - k,), c) for m, c in f.terms]
                )
            stripped.append(f)
        if not changed:
            return gb
        gens = stripped
    raise NonTermination("last-variable saturation did not stabilize")
