"""Text format for polynomials, ideal files, and graded-matrix files.

A polynomial file looks like::

    vars: w x y z
    w^2 - x*z
    w*x - y*z

Coefficients are integers or ``a/b`` fractions; ``*`` between factors is
optional (``2xz`` parses like ``2*x*z``, variable names matched longest
first).  The serializer always emits ``*`` and ``^``, so parse/format/parse
is the identity on every polynomial.

A matrix file carries an extra ``rows:`` header with the row twists, and one
comma-separated row of entries per line.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fields import PrimeField
from .rings import ModuleElement, PolyRing, Polynomial


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# formatting

def _coeff_str(ring, c):
    field = ring.field
    if isinstance(field, PrimeField):
        v = c if c <= field.p // 2 else c - field.p  # symmetric representative
        return str(v)
    return str(c)


def _monomial_str(ring, m):
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    ring = f.ring
    chunks = []
    for i, (m, c) in enumerate(f.terms):
        cs = _coeff_str(ring, c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        ms = _monomial_str(ring, m)
        if not ms:
            body = mag
        elif mag == "1":
            body = ms
        else:
            body = f"{mag}*{ms}"
        if i == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"{'-' if neg else '+'} {body}")
    return " ".join(chunks)


def format_module_element(u: ModuleElement) -> str:
    comps = [format_polynomial(f) for f in u.components()]
    return "[" + ", ".join(comps) + "]"


def format_ideal_file(ring: PolyRing, polys) -> str:
    lines = ["vars: " + " ".join(ring.names)]
    lines.extend(format_polynomial(f) for f in polys)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parsing

_NUMBER = re.compile(r"\d+(?:/\d+)?")


def _tokenize(ring, text):
    """Yield ('num', Fraction) | ('var', index) | ('op', char) tokens."""
    names = sorted(range(ring.nvars), key=lambda i: -len(ring.names[i]))
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            yield ("op", ch)
            i += 1
            continue
        m = _NUMBER.match(text, i)
        if m:
            s = m.group(0)
            if "/" in s:
                a, b = s.split("/")
                yield ("num", Fraction(int(a), int(b)))
            else:
                yield ("num", Fraction(int(s)))
            i = m.end()
            continue
        for vi in names:
            name = ring.names[vi]
            if text.startswith(name, i):
                yield ("var", vi)
                i += len(name)
                break
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i} in {text!r}")


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse a sum of terms; each term a product of numbers and powers."""
    tokens = list(_tokenize(ring, text))
    if not tokens:
        raise ParseError("empty polynomial")
    terms = []
    sign = 1
    coeff = Fraction(1)
    exps = [0] * ring.nvars
    started = False

    def flush():
        nonlocal sign, coeff, exps, started
        if started:
            terms.append((tuple(exps), sign * coeff))
        sign, coeff, exps, started = 1, Fraction(1), [0] * ring.nvars, False

    i = 0
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            flush()
            if val == "-":
                sign = -sign
            # allow runs of signs before the first factor
            while i + 1 < len(tokens) and tokens[i + 1] == ("op", "-"):
                sign = -sign
                i += 1
            while i + 1 < len(tokens) and tokens[i + 1] == ("op", "+"):
                i += 1
        elif kind == "op" and val == "*":
            if not started:
                raise ParseError("'*' with no preceding factor")
        elif kind == "num":
            coeff *= val
            started = True
        elif kind == "var":
            power = 1
            if i + 2 < len(tokens) and tokens[i + 1] == ("op", "^"):
                k, v = tokens[i + 2]
                if k != "num" or v.denominator != 1:
                    raise ParseError("exponent must be a nonnegative integer")
                power = int(v)
                i += 2
            exps[val] += power
            started = True
        elif kind == "op" and val == "^":
            raise ParseError("'^' with no preceding variable")
        else:
            raise ParseError(f"unexpected token {val!r}")
        i += 1
    flush()

    field = ring.field
    pairs = []
    for m, q in terms:
        pairs.append((m, field.element(q)))
    return ring.poly(pairs)


def _iter_content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_ideal_file(text: str, field, order="degrevlex"):
    """Parse a ``vars:`` header plus one polynomial per line."""
    lines = list(_iter_content_lines(text))
    if not lines or not lines[0].startswith("vars:"):
        raise ParseError("file must start with a 'vars:' header")
    names = lines[0][len("vars:"):].split()
    if not names:
        raise ParseError("empty variable list")
    ring = PolyRing(field, names, order)
    polys = [parse_polynomial(ring, line) for line in lines[1:]]
    return ring, polys


def parse_matrix_file(text: str, field, order="degrevlex"):
    """Parse a graded-matrix file: vars, row twists, comma-separated rows."""
    from .resolution import GradedMatrix

    lines = list(_iter_content_lines(text))
    if not lines or not lines[0].startswith("vars:"):
        raise ParseError("file must start with a 'vars:' header")
    names = lines[0][len("vars:"):].split()
    ring = PolyRing(field, names, order)
    if len(lines) < 2 or not lines[1].startswith("rows:"):
        raise ParseError("matrix file needs a 'rows:' twist header")
    row_twists = [int(tok) for tok in lines[1][len("rows:"):].split()]
    entries = []
    for line in lines[2:]:
        row = [parse_polynomial(ring, cell) for cell in line.split(",")]
        entries.append(row)
    if len(entries) != len(row_twists):
        raise ParseError(
            f"{len(row_twists)} row twists but {len(entries)} matrix rows"
        )
    ncols = len(entries[0]) if entries else 0
    for row in entries:
        if len(row) != ncols:
            raise ParseError("ragged matrix rows")
    col_twists = []
    for j in range(ncols):
        twist = None
        for i, row in enumerate(entries):
            if not row[j].is_zero():
                if not row[j].is_homogeneous():
                    raise ParseError(f"entry ({i},{j}) is not homogeneous")
                t = row[j].degree() + row_twists[i]
                if twist is not None and t != twist:
                    raise ParseError(f"column {j} has inconsistent entry degrees")
                twist = t
        col_twists.append(twist if twist is not None else 0)
    return ring, GradedMatrix(ring, row_twists, col_twists, entries)


def looks_like_matrix_file(text: str) -> bool:
    lines = list(_iter_content_lines(text))
    return len(lines) >= 2 and lines[1].startswith("rows:")
