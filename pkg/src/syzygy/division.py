"""Deterministic division with remainder in rings and free modules.

The algorithm repeatedly takes the leading term of the working element and
assigns it to the first divisor whose leading term divides it (or to the
remainder when none does).  This realizes the unique decomposition

    g = g_1 f_1 + ... + g_r f_r + h

with (2a) no term of g_i * L(f_i) divisible by an earlier L(f_j), and (2b)
no term of h divisible by any L(f_i).  Each step strictly decreases the
leading term of the working element, so the loop terminates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .rings import (
    ModuleElement,
    RankMismatch,
    mon_divides,
    mon_mul,
    mon_quotient,
)


class ZeroDivisor(ValueError):
    """A zero element was passed where a nonzero divisor is required."""


@dataclass
class DivisionResult:
    quotients: list          # ring polynomials, one per divisor
    remainder: object        # Polynomial or ModuleElement
    steps: int = 0           # number of reduction/remainder moves


class _Rev:
    """Max-heap adapter for order keys."""

    __slots__ = ("key", "mon")

    def __init__(self, key, mon):
        self.key = key
        self.mon = mon

    def __lt__(self, other):
        return self.key > other.key


def _is_module(x):
    return isinstance(x, ModuleElement)


def divide(g, divisors, *, max_steps=None) -> DivisionResult:
    """Divide ``g`` by an ordered sequence of divisors (rings or modules)."""
    divisors = list(divisors)
    if _is_module(g):
        module = g.module
        ring = module.ring
        order = module.order
        for f in divisors:
            if not _is_module(f) or f.is_zero():
                raise ZeroDivisor("divisors must be nonzero module elements")
            if f.module.rank != module.rank:
                raise RankMismatch("divisor from a different ambient rank")

        def divides(lead, mm):
            return lead[1] == mm[1] and mon_divides(lead[0], mm[0])

        def quotient(mm, lead):
            return mon_quotient(mm[0], lead[0])

        def action(q, mm):
            return (mon_mul(q, mm[0]), mm[1])

        rebuild = module.element
    else:
        ring = g.ring
        order = ring.order
        for f in divisors:
            if _is_module(f) or f.is_zero():
                raise ZeroDivisor("divisors must be nonzero polynomials")
            if f.ring != ring:
                raise ValueError("divisor from a different ring")
        divides = mon_divides
        quotient = mon_quotient

        def action(q, m):
            return mon_mul(q, m)

        rebuild = ring.poly

    field = ring.field
    fzero = field.zero
    fadd, fsub, fmul = field.add, field.sub, field.mul
    key = order.key

    leads = [f.lead_monomial() for f in divisors]
    lead_inv = [field.inv(f.lead_coeff()) for f in divisors]
    tails = [f.terms[1:] for f in divisors]

    work = dict(g.terms)
    heap = [_Rev(key(m), m) for m in work]
    heapq.heapify(heap)
    quots = [dict() for _ in divisors]
    rem = {}
    steps = 0

    while heap:
        entry = heapq.heappop(heap)
        m = entry.mon
        c = work.get(m)
        if not c:
            continue
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise RuntimeError("division exceeded the step budget")
        hit = -1
        for i, lm in enumerate(leads):
            if divides(lm, m):
                hit = i
                break
        if hit < 0:
            prev = rem.get(m)
            rem[m] = c if prev is None else fadd(prev, c)
            del work[m]
            continue
        q = quotient(m, leads[hit])
        qc = fmul(c, lead_inv[hit])
        qprev = quots[hit].get(q)
        quots[hit][q] = qc if qprev is None else fadd(qprev, qc)
        del work[m]  # leading term cancels exactly
        for m2, c2 in tails[hit]:
            mm = action(q, m2)
            nv = fsub(work.get(mm, fzero), fmul(qc, c2))
            if nv == fzero:
                work.pop(mm, None)
            else:
                if mm not in work:
                    heapq.heappush(heap, _Rev(key(mm), mm))
                work[mm] = nv

    quotients = [ring.poly(d.items()) for d in quots]
    remainder = rebuild(rem.items())
    return DivisionResult(quotients=quotients, remainder=remainder, steps=steps)


def normal_form(g, basis):
    """Remainder of g under division by a Groebner basis (or any sequence)."""
    elements = getattr(basis, "elements", basis)
    return divide(g, elements).remainder
