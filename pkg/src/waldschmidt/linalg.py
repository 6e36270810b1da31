"""Exact rational matrices: fraction-free rank, kernels, and a modular rank filter."""

from fractions import Fraction
from math import gcd


class BadPrimeError(ValueError):
    """A denominator vanishes modulo the requested prime."""


def parse_rational(s):
    """Parse "p/q" or "p" into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s).strip())


def format_rational(q):
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class RatMatrix:
    """Immutable dense matrix over the rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = [Fraction(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError("need %d entries, got %d" % (rows * cols, len(entries)))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, flat)

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def row_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        e = []
        for c in range(self.cols):
            for r in range(self.rows):
                e.append(self.entries[r * self.cols + c])
        return RatMatrix(self.cols, self.rows, e)

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append(sum(self.entries[base + j] * v[j] for j in range(self.cols)))
        return out

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "RatMatrix(%d, %d, %r)" % (self.rows, self.cols, list(self.entries))


def _integer_rows(m):
    """Clear denominators row by row and strip row contents; rank and kernel are unchanged."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        den = 1
        for e in row:
            den = den * e.denominator // gcd(den, e.denominator)
        ints = [int(e * den) for e in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _bareiss_echelon(rows, ncols):
    """Fraction-free (Bareiss) forward elimination in place.

    Returns the list of pivot columns.  Every intermediate entry is a minor of
    the input, so all divisions below are exact.  Pivot rows are chosen by
    smallest nonzero magnitude, which keeps the minors small in practice and
    is deterministic for a fixed input order.
    """
    nrows = len(rows)
    pivots = []
    prev = 1
    lead = 0
    for col in range(ncols):
        if lead >= nrows:
            break
        best = -1
        bestval = 0
        for r in range(lead, nrows):
            v = rows[r][col]
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < bestval:
                    best, bestval = r, a
                    if a == 1:
                        break
        if best < 0:
            continue
        if best != lead:
            rows[lead], rows[best] = rows[best], rows[lead]
        p = rows[lead][col]
        for r in range(lead + 1, nrows):
            row = rows[r]
            v = row[col]
            prow = rows[lead]
            if v:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c] - v * prow[c]) // prev
                row[col] = 0
            elif p != prev:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c]) // prev
        pivots.append(col)
        prev = p
        lead += 1
    return pivots


def rank_exact(m):
    """Rank of m over the rationals by fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = _integer_rows(m)
    return len(_bareiss_echelon(rows, m.cols))


def nullspace(m):
    """Basis of the right kernel, each vector in primitive integer form.

    Vectors are produced one per free column, in column order, with the first
    nonzero entry positive.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        basis = []
        for j in range(m.cols):
            v = [Fraction(0)] * m.cols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    rows = _integer_rows(m)
    pivots = _bareiss_echelon(rows, m.cols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        # back-substitution over the echelon rows, bottom up
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            row = rows[i]
            s = sum((Fraction(row[c]) * v[c] for c in range(pc + 1, m.cols) if v[c]),
                    Fraction(0))
            v[pc] = -s / row[pc]
        basis.append(_primitive(v))
    return basis


def _primitive(vec):
    """Scale a rational vector to coprime integers with first nonzero entry positive."""
    den = 1
    for e in vec:
        den = den * e.denominator // gcd(den, e.denominator)
    ints = [int(e * den) for e in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-u for u in ints]
            break
    return [Fraction(v) for v in ints]


def rank_modular(m, p):
    """Rank of m reduced mod p; a lower bound for rank_exact.

    Raises BadPrimeError when some entry's denominator vanishes mod p.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = []
    for i in range(m.rows):
        row = []
        for e in m.row(i):
            d = e.denominator % p
            if d == 0:
                raise BadPrimeError("denominator divisible by %d" % p)
            row.append(e.numerator * pow(d, p - 2, p) % p)
        rows.append(row)
    rank = 0
    ncols = m.cols
    for col in range(ncols):
        piv = -1
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = rows[rank]
        for r in range(rank + 1, len(rows)):
            v = rows[r][col]
            if v:
                f = v * inv % p
                row = rows[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == len(rows):
            break
    return rank
