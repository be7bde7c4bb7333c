"""Sparse multivariate polynomials and free-module elements with global orders.

Monomials are exponent tuples; module monomials are ``(exponents, position)``
pairs with 0-based positions.  Orders expose a ``key`` function producing
tuples whose natural comparison realizes the order, so sorting and heaps work
directly.  Ring orders: lex, deglex, degrevlex.  Module orders: term-over-
position (the standalone default, lower position preferred), a position-block
elimination order, and the induced order that carries leading terms of one
syzygy step to the next.

Everything here is an immutable value; orders are stateless apart from key
memoization.
"""

from __future__ import annotations

from itertools import combinations_with_replacement


class RankMismatch(ValueError):
    """Module elements or monomials from free modules of different rank."""


class EmptyBasis(ValueError):
    """An induced order needs at least one previous leading term."""


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples); the hot ones are compiled per arity

def _make_specialized(template, n):
    body = ",".join(template.format(i=i) for i in range(n))
    if n == 1:
        body += ","
    return eval(f"lambda a, b: ({body})")  # noqa: S307 - fixed templates only


class _PerArity(dict):
    def __init__(self, template):
        self.template = template

    def __missing__(self, n):
        fn = _make_specialized(self.template, n)
        self[n] = fn
        return fn


_MUL = _PerArity("a[{i}]+b[{i}]")
_QUO = _PerArity("a[{i}]-b[{i}]")


def mon_mul(a, b):
    return _MUL[len(a)](a, b)


def mon_divides(d, m):
    for x, y in zip(d, m):
        if x > y:
            return False
    return True


def mon_quotient(m, d):
    """m / d, assuming d | m."""
    return _QUO[len(m)](m, d)


def mon_colon(m, d):
    """Generator of <m> : d, i.e. m / gcd(m, d) componentwise."""
    return tuple(x - y if x > y else 0 for x, y in zip(m, d))


def mon_degree(m):
    return sum(m)


# ---------------------------------------------------------------------------
# ring orders

class MonomialOrder:
    """A global order on the monomials of a fixed polynomial ring."""

    def __init__(self, kind: str, nvars: int):
        if kind not in ("lex", "deglex", "degrevlex"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.nvars = nvars
        self._memo = {}

    def key(self, m):
        k = self._memo.get(m)
        if k is None:
            if self.kind == "lex":
                k = m
            elif self.kind == "deglex":
                k = (sum(m), m)
            else:
                k = (sum(m), tuple(-e for e in reversed(m)))
            self._memo[m] = k
        return k

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return f"{self.kind}({self.nvars} vars)"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.nvars == self.nvars
        )

    def __hash__(self):
        return hash((self.kind, self.nvars))


class ModuleOrder:
    """Base class for orders on module monomials ``(exponents, position)``."""

    def key(self, mm):
        raise NotImplementedError

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


class TermOverPosition(ModuleOrder):
    """Compare the ring monomials first; on ties, lower position wins."""

    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, mm):
        m, pos = mm
        return (self.base.key(m), -pos)

    def __repr__(self):
        return f"TOP({self.base!r})"


class PositionElimination(ModuleOrder):
    """Any term in the first ``block`` positions beats any term outside.

    Inside each block the comparison is term-over-position.  Used to project
    submodules onto trailing components (colon ideals, syzygies of arbitrary
    generators).
    """

    def __init__(self, base: MonomialOrder, block: int):
        self.base = base
        self.block = block

    def key(self, mm):
        m, pos = mm
        return (1 if pos < self.block else 0, self.base.key(m), -pos)

    def __repr__(self):
        return f"Elim(block={self.block}, {self.base!r})"


class SchreyerOrder(ModuleOrder):
    """Order induced on syzygy space by the previous step's leading terms.

    ``x^a e_i > x^b e_j`` iff ``x^a * lead_i > x^b * lead_j`` under the
    previous module's order, with ties (equal up to scalar) broken by the
    larger position winning.
    """

    def __init__(self, prev_leads, base):
        prev_leads = tuple(prev_leads)
        if not prev_leads:
            raise EmptyBasis("induced order needs a nonempty previous basis")
        self.prev_leads = prev_leads  # module monomials of the previous step
        self.base = base              # order of the previous module
        self._memo = {}

    def key(self, mm):
        k = self._memo.get(mm)
        if k is None:
            m, pos = mm
            if pos >= len(self.prev_leads):
                raise RankMismatch(
                    f"position {pos} outside the rank {len(self.prev_leads)} "
                    "this order was induced from"
                )
            lm, lpos = self.prev_leads[pos]
            k = (self.base.key((mon_mul(m, lm), lpos)), pos)
            self._memo[mm] = k
        return k

    def __repr__(self):
        return f"Schreyer(rank={len(self.prev_leads)})"


def schreyer_order(prev_leads, base) -> SchreyerOrder:
    """Build the induced order from previous leading module monomials."""
    return SchreyerOrder(prev_leads, base)


def compare(order, a, b) -> int:
    """Three-way comparison under a ring or module order: -1, 0, or 1."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """A normalized sparse polynomial: terms sorted strictly decreasing."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # terms must already be normalized; use ring.poly() to build safely
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def lead_monomial(self):
        return self.terms[0][0] if self.terms else None

    def lead_coeff(self):
        return self.terms[0][1] if self.terms else None

    def lead_term(self):
        """Leading (monomial, coefficient) pair, or None for the zero poly."""
        return self.terms[0] if self.terms else None

    def degree(self):
        if not self.terms:
            return -1
        return max(mon_degree(m) for m, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {mon_degree(m) for m, _ in self.terms}
        return len(degs) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def constant_coeff(self):
        zero_mon = self.ring.zero_mon
        for m, c in self.terms:
            if m == zero_mon:
                return c
        return self.ring.field.zero

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __neg__(self):
        return self.ring.negate(self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.mul(self, other)
        return self.ring.scale(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        from .textio import format_polynomial

        return format_polynomial(self)

    def substitute(self, images):
        """Evaluate at ``x_i -> images[i]`` (ring elements of self.ring)."""
        ring = self.ring
        result = ring.zero()
        for m, c in self.terms:
            term = ring.constant(c)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = ring.mul(term, images[i])
            result = ring.add(result, term)
        return result

    def permute_variables(self, perm):
        """Rename variables: new exponent j comes from old position perm[j]."""
        ring = self.ring
        return ring.poly(
            [(tuple(m[perm[j]] for j in range(ring.nvars)), c) for m, c in self.terms]
        )


class PolyRing:
    """k[x_1..x_n] with a fixed global monomial order."""

    def __init__(self, field, names, order="degrevlex"):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        if len(set(self.names)) != self.nvars:
            raise ValueError("duplicate variable names")
        self.order = (
            order if isinstance(order, MonomialOrder) else MonomialOrder(order, self.nvars)
        )
        if self.order.nvars != self.nvars:
            raise ValueError("order arity does not match variable count")
        self.zero_mon = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}] ({self.order.kind})"

    def with_order(self, order):
        return PolyRing(self.field, self.names, order)

    # -- construction ------------------------------------------------------

    def poly(self, pairs) -> Polynomial:
        """Normalize (monomial, coeff) pairs into a Polynomial."""
        acc = {}
        add = self.field.add
        zero = self.field.zero
        for m, c in pairs:
            if c == zero:
                continue
            prev = acc.get(m)
            acc[m] = c if prev is None else add(prev, c)
        key = self.order.key
        terms = tuple(
            (m, acc[m])
            for m in sorted(acc, key=key, reverse=True)
            if acc[m] != zero
        )
        return Polynomial(self, terms)

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.constant(self.field.one)

    def constant(self, c):
        c = self.field.element(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, ((self.zero_mon, c),))

    def variable(self, i, power=1):
        m = [0] * self.nvars
        m[i] = power
        return Polynomial(self, ((tuple(m), self.field.one),))

    def monomial(self, exps, coeff=None):
        coeff = self.field.one if coeff is None else self.field.element(coeff)
        if coeff == self.field.zero:
            return self.zero()
        return Polynomial(self, ((tuple(exps), coeff),))

    def variables(self):
        return [self.variable(i) for i in range(self.nvars)]

    # -- arithmetic ---------------------------------------------------------

    def add(self, f, g):
        acc = dict(f.terms)
        fadd = self.field.add
        zero = self.field.zero
        for m, c in g.terms:
            prev = acc.get(m)
            if prev is None:
                acc[m] = c
            else:
                s = fadd(prev, c)
                if s == zero:
                    del acc[m]
                else:
                    acc[m] = s
        key = self.order.key
        return Polynomial(
            self, tuple((m, acc[m]) for m in sorted(acc, key=key, reverse=True))
        )

    def sub(self, f, g):
        return self.add(f, self.negate(g))

    def negate(self, f):
        neg = self.field.neg
        return Polynomial(self, tuple((m, neg(c)) for m, c in f.terms))

    def scale(self, f, c):
        c = self.field.element(c)
        if c == self.field.zero:
            return self.zero()
        mul = self.field.mul
        return Polynomial(self, tuple((m, mul(coeff, c)) for m, coeff in f.terms))

    def mul(self, f, g):
        if not f.terms or not g.terms:
            return self.zero()
        acc = {}
        fadd = self.field.add
        fmul = self.field.mul
        zero = self.field.zero
        for m1, c1 in f.terms:
            for m2, c2 in g.terms:
                m = mon_mul(m1, m2)
                c = fmul(c1, c2)
                prev = acc.get(m)
                acc[m] = c if prev is None else fadd(prev, c)
        key = self.order.key
        return Polynomial(
            self,
            tuple(
                (m, acc[m]) for m in sorted(acc, key=key, reverse=True) if acc[m] != zero
            ),
        )

    def term_mul(self, mon, coeff, f):
        """(coeff * x^mon) * f, a single-term product."""
        fmul = self.field.mul
        return Polynomial(
            self, tuple((mon_mul(mon, m), fmul(coeff, c)) for m, c in f.terms)
        )

    # -- enumeration / randomness -------------------------------------------

    def monomials_of_degree(self, d):
        """All degree-d monomials, in a fixed deterministic sequence."""
        if d < 0:
            return
        n = self.nvars
        for combo in combinations_with_replacement(range(n), d):
            m = [0] * n
            for i in combo:
                m[i] += 1
            yield tuple(m)

    def random_homogeneous(self, degree, rng, ensure_nonzero=False):
        """Uniformly random homogeneous form of the given degree."""
        while True:
            f = self.poly(
                (m, self.field.random(rng)) for m in self.monomials_of_degree(degree)
            )
            if f.terms or not ensure_nonzero:
                return f

    def parse(self, text):
        from .textio import parse_polynomial

        return parse_polynomial(self, text)


# ---------------------------------------------------------------------------
# free modules

class ModuleElement:
    """A normalized vector of polynomials, stored as sparse module terms."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def lead_monomial(self):
        return self.terms[0][0] if self.terms else None

    def lead_coeff(self):
        return self.terms[0][1] if self.terms else None

    def lead_term(self):
        return self.terms[0] if self.terms else None

    def degree(self):
        """Internal degree, accounting for the ambient twists."""
        if not self.terms:
            return -1
        tw = self.module.twists
        return max(mon_degree(m) + tw[pos] for (m, pos), _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        tw = self.module.twists
        degs = {mon_degree(m) + tw[pos] for (m, pos), _ in self.terms}
        return len(degs) == 1

    def component(self, pos) -> Polynomial:
        ring = self.module.ring
        return ring.poly([(m, c) for (m, p), c in self.terms if p == pos])

    def components(self):
        return [self.component(i) for i in range(self.module.rank)]

    def __add__(self, other):
        return self.module.add(self, other)

    def __sub__(self, other):
        return self.module.sub(self, other)

    def __neg__(self):
        return self.module.negate(self)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and other.module == self.module
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        from .textio import format_module_element

        return format_module_element(self)


class FreeModule:
    """A free module S^r with twists; elements compare under a module order."""

    def __init__(self, ring, rank=None, twists=None, order=None):
        if twists is None:
            if rank is None:
                raise ValueError("need rank or twists")
            twists = (0,) * rank
        twists = tuple(twists)
        if rank is None:
            rank = len(twists)
        if len(twists) != rank:
            raise ValueError("twist count must equal rank")
        self.ring = ring
        self.rank = rank
        self.twists = twists
        self.order = order if order is not None else TermOverPosition(ring.order)

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and other.ring == self.ring
            and other.rank == self.rank
            and other.twists == self.twists
            and other.order is self.order
        )

    def __hash__(self):
        return hash((self.ring, self.rank, self.twists, id(self.order)))

    def __repr__(self):
        return f"FreeModule(rank={self.rank}, twists={self.twists})"

    def element(self, pairs) -> ModuleElement:
        acc = {}
        fadd = self.ring.field.add
        zero = self.ring.field.zero
        for mm, c in pairs:
            m, pos = mm
            if pos < 0 or pos >= self.rank:
                raise RankMismatch(f"position {pos} outside rank {self.rank}")
            if c == zero:
                continue
            prev = acc.get(mm)
            acc[mm] = c if prev is None else fadd(prev, c)
        key = self.order.key
        terms = tuple(
            (mm, acc[mm]) for mm in sorted(acc, key=key, reverse=True) if acc[mm] != zero
        )
        return ModuleElement(self, terms)

    def zero(self):
        return ModuleElement(self, ())

    def basis_element(self, pos, mon=None, coeff=None):
        mon = self.ring.zero_mon if mon is None else tuple(mon)
        coeff = self.ring.field.one if coeff is None else coeff
        return self.element([((mon, pos), coeff)])

    def from_components(self, polys) -> ModuleElement:
        if len(polys) != self.rank:
            raise RankMismatch(f"expected {self.rank} components, got {len(polys)}")
        pairs = []
        for pos, f in enumerate(polys):
            for m, c in f.terms:
                pairs.append(((m, pos), c))
        return self.element(pairs)

    def add(self, u, v):
        self._check(u, v)
        acc = dict(u.terms)
        fadd = self.ring.field.add
        zero = self.ring.field.zero
        for mm, c in v.terms:
            prev = acc.get(mm)
            if prev is None:
                acc[mm] = c
            else:
                s = fadd(prev, c)
                if s == zero:
                    del acc[mm]
                else:
                    acc[mm] = s
        key = self.order.key
        return ModuleElement(
            self, tuple((mm, acc[mm]) for mm in sorted(acc, key=key, reverse=True))
        )

    def sub(self, u, v):
        return self.add(u, self.negate(v))

    def negate(self, u):
        neg = self.ring.field.neg
        return ModuleElement(self, tuple((mm, neg(c)) for mm, c in u.terms))

    def scale(self, u, c):
        c = self.ring.field.element(c)
        if c == self.ring.field.zero:
            return self.zero()
        fmul = self.ring.field.mul
        return ModuleElement(self, tuple((mm, fmul(coeff, c)) for mm, coeff in u.terms))

    def poly_mul(self, f: Polynomial, u: ModuleElement) -> ModuleElement:
        pairs = []
        fmul = self.ring.field.mul
        for m1, c1 in f.terms:
            for (m2, pos), c2 in u.terms:
                pairs.append(((mon_mul(m1, m2), pos), fmul(c1, c2)))
        return self.element(pairs)

    def term_mul(self, mon, coeff, u: ModuleElement) -> ModuleElement:
        fmul = self.ring.field.mul
        return ModuleElement(
            self,
            tuple(((mon_mul(mon, m), pos), fmul(coeff, c)) for (m, pos), c in u.terms),
        )

    def _check(self, u, v):
        if u.module.rank != self.rank or v.module.rank != self.rank:
            raise RankMismatch("module elements from different ambient ranks")


def leading_term(f):
    """Leading term of a polynomial or module element; None encodes L(0) = 0."""
    return f.lead_term()
