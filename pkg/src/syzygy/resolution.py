"""Iterated syzygies: graded free resolutions, minimalization, Betti tables.

One syzygy step takes a verified Groebner basis F_1..F_r and, for every
minimal generator x^a of the colon ideal M_i, divides x^a * F_i by the whole
sequence.  The relation vector

    x^a e_i - sum_k g_k e_k

is a syzygy whose leading term under the induced order is exactly x^a e_i,
and together these vectors form a Groebner basis of the kernel, so the step
can be repeated without any new completion.  Sorting the basis so the
exponents of the last occurring variable are nondecreasing makes each step
drop at least one variable from the leading terms, which bounds the length
of the chain by the number of variables.

The raw chain is homogeneous but usually not minimal; ``minimalize`` cancels
nonzero constant entries by row/column elimination without changing the
homology (the Hilbert numerator is preserved, which the tests check).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import PrimeField
from .groebner import GroebnerBasis, colon_generators, _lead_data
from .division import divide
from .linalg import rank_mod
from .rings import (
    FreeModule,
    ModuleElement,
    Polynomial,
    SchreyerOrder,
    TermOverPosition,
    mon_mul,
)


class UnverifiedBasis(ValueError):
    """Syzygy computation requires a verified Groebner basis."""


class GradedMatrix:
    """A matrix of homogeneous polynomials between twisted free modules.

    Rows index the target, columns the source; a nonzero entry (i, j) is
    homogeneous of degree col_twists[j] - row_twists[i].
    """

    def __init__(self, ring, row_twists, col_twists, entries, check=True):
        self.ring = ring
        self.row_twists = tuple(row_twists)
        self.col_twists = tuple(col_twists)
        self.entries = tuple(tuple(row) for row in entries)
        if len(self.entries) != len(self.row_twists):
            raise ValueError("row count does not match row twists")
        for row in self.entries:
            if len(row) != len(self.col_twists):
                raise ValueError("column count does not match column twists")
        if check:
            for i, row in enumerate(self.entries):
                for j, f in enumerate(row):
                    if f.is_zero():
                        continue
                    want = self.col_twists[j] - self.row_twists[i]
                    if not f.is_homogeneous() or f.degree() != want:
                        raise ValueError(
                            f"entry ({i},{j}) is not homogeneous of degree {want}"
                        )

    @property
    def nrows(self):
        return len(self.row_twists)

    @property
    def ncols(self):
        return len(self.col_twists)

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return all(f.is_zero() for row in self.entries for f in row)

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """self o other, where other maps into self's source."""
        if other.row_twists != self.col_twists:
            raise ValueError("twist mismatch in composition")
        ring = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = ring.zero()
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = ring.add(acc, ring.mul(a, b))
                row.append(acc)
            out.append(row)
        return GradedMatrix(ring, self.row_twists, other.col_twists, out)

    def transpose_as_map(self) -> "GradedMatrix":
        """The dual map, with negated twists (used for Hom computations)."""
        entries = [
            [self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)
        ]
        return GradedMatrix(
            self.ring,
            [-t for t in self.col_twists],
            [-t for t in self.row_twists],
            entries,
        )

    def graded_piece(self, d):
        """Scalar matrix of the degree-d piece, with its row/column bases.

        Only available over a prime field; returns (numpy int64 array,
        row_basis, col_basis) where bases are (component, monomial) lists.
        """
        ring = self.ring
        if not isinstance(ring.field, PrimeField):
            raise TypeError("graded pieces need a prime field")
        row_basis = [
            (i, m)
            for i, rt in enumerate(self.row_twists)
            for m in ring.monomials_of_degree(d - rt)
        ]
        col_basis = [
            (j, m)
            for j, ct in enumerate(self.col_twists)
            for m in ring.monomials_of_degree(d - ct)
        ]
        row_pos = {key: idx for idx, key in enumerate(row_basis)}
        A = np.zeros((len(row_basis), len(col_basis)), dtype=np.int64)
        for cj, (j, msrc) in enumerate(col_basis):
            for i in range(self.nrows):
                f = self.entries[i][j]
                for m, c in f.terms:
                    A[row_pos[(i, mon_mul(m, msrc))], cj] = int(c)
        return A, row_basis, col_basis

    def __repr__(self):
        return f"GradedMatrix({self.nrows}x{self.ncols}, rows={self.row_twists}, cols={self.col_twists})"


def matrix_from_elements(elements, module: FreeModule) -> GradedMatrix:
    """Columns are the given module elements, written in the ambient basis."""
    ring = module.ring
    col_twists = [el.degree() for el in elements]
    entries = [[None] * len(elements) for _ in range(module.rank)]
    for j, el in enumerate(elements):
        comps = el.components()
        for i in range(module.rank):
            entries[i][j] = comps[i]
    return GradedMatrix(ring, module.twists, col_twists, entries)


@dataclass
class SyzygyElement:
    """One relation x^a e_i - sum g_k e_k, with its source bookkeeping."""

    element: ModuleElement
    source_index: int
    source_monomial: tuple


def _as_module_basis(gb: GroebnerBasis):
    """View a ring-ideal basis as a rank-1 module basis (twist 0)."""
    first = gb.elements[0]
    if isinstance(first, ModuleElement):
        return gb, first.module
    ring = first.ring
    module = FreeModule(ring, twists=(0,), order=TermOverPosition(ring.order))
    wrapped = [
        module.element([((m, 0), c) for m, c in f.terms]) for f in gb.elements
    ]
    return GroebnerBasis(wrapped, module.order, verified=gb.verified, stats=gb.stats), module


def sort_for_termination(gb: GroebnerBasis) -> GroebnerBasis:
    """Stable-sort so the last occurring variable has nondecreasing exponents.

    After this, no leading term of a syzygy involves that variable (or any
    later one), which is what terminates the iterated syzygy computation.
    """
    leads = [_lead_data(f)[0] for f in gb.elements]
    occurring = {i for m in leads for i, e in enumerate(m) if e}
    if not occurring:
        return gb
    ell = max(occurring)
    order = sorted(range(len(gb.elements)), key=lambda k: leads[k][ell])
    if order == list(range(len(gb.elements))):
        return gb
    return GroebnerBasis(
        [gb.elements[k] for k in order], gb.order, verified=gb.verified, stats=gb.stats
    )


def schreyer_syzygies(gb: GroebnerBasis):
    """Syzygies of a verified basis, as (elements, matrix, next module).

    The columns form a Groebner basis of the kernel under the induced order,
    already minimal: their leading terms x^a e_i are incomparable.
    """
    if not gb.verified:
        raise UnverifiedBasis("syzygies need a verified Groebner basis")
    gb, module = _as_module_basis(gb)
    ring = module.ring
    field = ring.field
    elements = gb.elements
    leads = [_lead_data(f) for f in elements]
    graded = all(f.is_homogeneous() for f in elements)
    next_twists = (
        tuple(f.degree() for f in elements) if graded else (0,) * len(elements)
    )
    induced = SchreyerOrder(leads, module.order)
    next_module = FreeModule(ring, twists=next_twists, order=induced)
    syzygies = []
    for i in range(len(elements)):
        for alpha in sorted(colon_generators(leads, i), key=ring.order.key):
            res = divide(module.term_mul(alpha, field.one, elements[i]), list(elements))
            if not res.remainder.is_zero():
                raise UnverifiedBasis(
                    "nonzero remainder in a syzygy division; basis is not Groebner"
                )
            pairs = [((alpha, i), field.one)]
            for k, q in enumerate(res.quotients):
                for m, c in q.terms:
                    pairs.append(((m, k), field.neg(c)))
            syz = next_module.element(pairs)
            syzygies.append(
                SyzygyElement(element=syz, source_index=i, source_monomial=alpha)
            )
    matrix = (
        matrix_from_elements([s.element for s in syzygies], next_module)
        if syzygies
        else None
    )
    return syzygies, matrix, next_module


class FreeResolution:
    """A chain F_0 <- F_1 <- ... of graded free modules with phi phi = 0."""

    def __init__(self, ring, f0_twists, matrices):
        self.ring = ring
        self.f0_twists = tuple(f0_twists)
        self.matrices = list(matrices)
        prev = self.f0_twists
        for k, mat in enumerate(self.matrices):
            if mat.row_twists != prev:
                raise ValueError(f"twist mismatch between steps {k} and {k + 1}")
            prev = mat.col_twists

    @property
    def length(self):
        return len(self.matrices)

    def ranks(self):
        return [len(self.f0_twists)] + [m.ncols for m in self.matrices]

    def twists(self, i):
        if i == 0:
            return self.f0_twists
        return self.matrices[i - 1].col_twists

    def is_complex(self) -> bool:
        for a, b in zip(self.matrices, self.matrices[1:]):
            if not a.compose(b).is_zero():
                return False
        return True

    def __repr__(self):
        return f"FreeResolution(ranks={self.ranks()})"


def free_resolution(presentation, minimal=False, max_length=None) -> FreeResolution:
    """Resolve the cokernel of a graded presentation (or a list of ring gens).

    The first matrix holds a minimal Groebner basis of the column module;
    subsequent matrices come from iterated syzygies.  With ``minimal=True``
    the chain is minimalized afterwards.
    """
    from .groebner import buchberger_complete, minimal_groebner

    if isinstance(presentation, GradedMatrix):
        ring = presentation.ring
        f0 = FreeModule(
            ring,
            twists=presentation.row_twists,
            order=TermOverPosition(ring.order),
        )
        cols = [
            f0.from_components(presentation.column(j))
            for j in range(presentation.ncols)
        ]
        cols = [c for c in cols if not c.is_zero()]
    else:
        gens = list(presentation)
        if not gens:
            raise ValueError("empty presentation")
        first = gens[0]
        if isinstance(first, ModuleElement):
            f0 = first.module
            cols = [c for c in gens if not c.is_zero()]
        else:
            ring = first.ring
            f0 = FreeModule(ring, twists=(0,), order=TermOverPosition(ring.order))
            cols = [
                f0.element([((m, 0), c) for m, c in f.terms])
                for f in gens
                if not f.is_zero()
            ]
        ring = f0.ring
    ring = f0.ring

    if not cols:
        return FreeResolution(ring, f0.twists, [])
    for c in cols:
        if not c.is_homogeneous():
            raise ValueError("free resolutions need homogeneous input")

    gb = minimal_groebner(buchberger_complete(cols))
    matrices = []
    bound = ring.nvars + 1 if max_length is None else max_length
    current_module = f0
    while True:
        gb = sort_for_termination(gb)
        matrices.append(matrix_from_elements(list(gb.elements), current_module))
        if len(matrices) >= bound + 1:
            break
        syz, _, next_module = schreyer_syzygies(gb)
        if not syz:
            break
        gb = GroebnerBasis(
            [s.element for s in syz], next_module.order, verified=True
        )
        current_module = next_module
    res = FreeResolution(ring, f0.twists, matrices)
    if minimal:
        res = minimalize(res)
    return res


# ---------------------------------------------------------------------------
# minimalization

def _constant_entry(f: Polynomial):
    # homogeneous entries are constant iff they are a single degree-0 term
    if len(f.terms) == 1 and not any(f.terms[0][0]):
        return f.terms[0][1]
    return None


def minimalize(res: FreeResolution) -> FreeResolution:
    """Cancel unit (degree-zero) entries; the homology is unchanged.

    Pivots are processed in ascending homological index, and inside a matrix
    in column-major scan order, so the output is deterministic.
    """
    ring = res.ring
    field = ring.field
    mats = [[list(row) for row in m.entries] for m in res.matrices]
    rowtw = [list(m.row_twists) for m in res.matrices]
    coltw = [list(m.col_twists) for m in res.matrices]
    f0 = list(res.f0_twists)

    def find_unit(k):
        A = mats[k]
        for j in range(len(coltw[k])):
            for i in range(len(rowtw[k])):
                if coltw[k][j] != rowtw[k][i]:
                    continue
                c = _constant_entry(A[i][j])
                if c is not None and c != field.zero:
                    return i, j, c
        return None

    for k in range(len(mats)):
        while True:
            hit = find_unit(k)
            if hit is None:
                break
            i, j, c = hit
            A = mats[k]
            ncols = len(coltw[k])
            nrows = len(rowtw[k])
            inv = field.inv(c)
            # clear row i by column operations col_j' -= (a_ij'/c) col_j
            for j2 in range(ncols):
                if j2 == j or A[i][j2].is_zero():
                    continue
                factor = ring.scale(A[i][j2], inv)
                for i2 in range(nrows):
                    if A[i2][j].is_zero():
                        continue
                    A[i2][j2] = ring.sub(A[i2][j2], ring.mul(factor, A[i2][j]))
            # drop column j and row i of phi_{k+1}
            for row in A:
                del row[j]
            del coltw[k][j]
            del A[i]
            del rowtw[k][i]
            # phi_{k+2} loses row j (its target lost a generator)
            if k + 1 < len(mats):
                del mats[k + 1][j]
                del rowtw[k + 1][j]
            # phi_k loses column i (its source lost a generator)
            if k == 0:
                del f0[i]
            else:
                for row in mats[k - 1]:
                    del row[i]
                del coltw[k - 1][i]

    # trim empty tail matrices
    out = []
    prev = tuple(f0)
    for k in range(len(mats)):
        if not coltw[k]:
            break
        mat = GradedMatrix(ring, rowtw[k], coltw[k], mats[k])
        out.append(mat)
        prev = mat.col_twists
    return FreeResolution(ring, f0, out)


# ---------------------------------------------------------------------------
# Betti tables

class BettiTable:
    """Ranks beta_{i,j}: homological index i, internal degree j."""

    def __init__(self, entries):
        self.entries = {k: v for k, v in entries.items() if v}

    @classmethod
    def from_resolution(cls, res: FreeResolution) -> "BettiTable":
        entries = {}
        for i in range(res.length + 1):
            for j in res.twists(i):
                entries[(i, j)] = entries.get((i, j), 0) + 1
        return cls(entries)

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def numerator(self):
        """Coefficients of sum_i (-1)^i sum_j beta_ij t^j, low degree first."""
        if not self.entries:
            return [0]
        top = max(j for _, j in self.entries)
        coeffs = [0] * (top + 1)
        for (i, j), r in self.entries.items():
            coeffs[j] += (-1) ** i * r
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    def to_triples(self):
        return sorted([i, j, r] for (i, j), r in self.entries.items())

    def max_index(self):
        return max((i for i, _ in self.entries), default=0)

    def render(self) -> str:
        """Text layout with rows labeled by j - i and columns by i."""
        if not self.entries:
            return "(empty)"
        imax = self.max_index()
        rows = sorted({j - i for i, j in self.entries})
        width = max(
            [len(str(r)) for r in self.entries.values()]
            + [len(str(i)) for i in range(imax + 1)]
        )
        head = "    " + " ".join(f"{i:>{width}}" for i in range(imax + 1))
        lines = [head, "    " + "-" * (len(head) - 4)]
        for r in range(rows[0], rows[-1] + 1):
            cells = []
            for i in range(imax + 1):
                v = self.get(i, i + r)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>3} " + " ".join(cells))
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and other.entries == self.entries

    def __repr__(self):
        return f"BettiTable({sorted(self.entries.items())})"


def betti_table(res: FreeResolution) -> BettiTable:
    return BettiTable.from_resolution(res)


# ---------------------------------------------------------------------------
# graded-piece diagnostics (exactness checks in tests)

def graded_kernel_dimension(mat: GradedMatrix, d: int) -> int:
    A, _, cols = mat.graded_piece(d)
    if not cols:
        return 0
    return len(cols) - rank_mod(A, mat.ring.field.p)


def graded_image_dimension(mat: GradedMatrix, d: int) -> int:
    A, _, cols = mat.graded_piece(d)
    if not cols:
        return 0
    return rank_mod(A, mat.ring.field.p)
