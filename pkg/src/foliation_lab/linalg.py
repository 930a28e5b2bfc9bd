"""Exact dense/sparse linear algebra over Q, plus mod-p rank certificates.

The mod-p routines are one-sided certificates: rank drops under reduction mod
p, so a mod-p kernel dimension that matches a known exact lower bound proves
equality without any probabilistic argument.  Whenever the certificate does
not close, callers fall back to exact rational elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)

# primes small enough that products of two residues stay below 2**31
MODP_PRIMES = (46337, 46327, 46309, 46307, 46301, 46279, 46273)


class QMatrix:
    """Dense exact rational matrix with row reduction and kernel extraction."""

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    def rref(self):
        """(rref QMatrix, rank, pivot columns)."""
        m = [r[:] for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            piv = None
            for i in range(r, self.nrows):
                if m[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return QMatrix(m), r, pivots

    def rank(self) -> int:
        return self.rref()[1]

    def kernel(self):
        """Basis of the right null space, exact."""
        red, rank, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [ZERO] * self.ncols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -red.rows[r][fc]
            basis.append(v)
        return basis

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.rows == other.rows

    def mul_vec(self, v):
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]


def rref_and_kernel(m: QMatrix):
    """(rref, rank, kernel basis); rank + len(kernel) == ncols."""
    red, rank, _ = m.rref()
    ker = m.kernel()
    assert rank + len(ker) == m.ncols
    return red, rank, ker


# ---------------------------------------------------------------------------
# sparse exact elimination (rows are dicts col -> Fraction)

def sparse_kernel(rows: list, ncols: int) -> list:
    """Kernel basis of a sparse rational matrix; rows are dicts col->coeff.

    Pivoting prefers short rows and short columns to limit fill-in.
    """
    rows = [dict(r) for r in rows if r]
    pivots = {}  # col -> reduced row (dict), with coefficient 1 at col
    for row in sorted(rows, key=len):
        row = _sparse_reduce(row, pivots)
        if not row:
            continue
        # pivot on the entry with smallest coefficients to limit blowup
        c = min(row, key=lambda j: (abs(row[j].numerator).bit_length()
                                    + row[j].denominator.bit_length(), j))
        inv = 1 / row[c]
        row = {j: v * inv for j, v in row.items()}
        for pc, prow in pivots.items():
            if c in prow:
                f = prow[c]
                for j, v in row.items():
                    s = prow.get(j, ZERO) - f * v
                    if s:
                        prow[j] = s
                    else:
                        prow.pop(j, None)
        pivots[c] = row
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = {fc: ONE}
        for pc, prow in pivots.items():
            if fc in prow:
                v[pc] = -prow[fc]
        vec = [ZERO] * ncols
        for j, val in v.items():
            vec[j] = val
        basis.append(vec)
    return basis


def _sparse_reduce(row: dict, pivots: dict) -> dict:
    # pivot rows carry exactly one pivot column each, so one pass suffices
    row = dict(row)
    for c in [c for c in row if c in pivots]:
        f = row.pop(c, None)
        if not f:
            continue
        for j, v in pivots[c].items():
            if j == c:
                continue
            s = row.get(j, ZERO) - f * v
            if s:
                row[j] = s
            else:
                row.pop(j, None)
    return row


def sparse_rank(rows: list, ncols: int) -> int:
    return ncols - len(sparse_kernel(rows, ncols))


# ---------------------------------------------------------------------------
# mod-p certificates

def _rows_to_modp(rows: list, ncols: int, p: int):
    """Integer-scale each row and reduce mod p; None when a denominator hits p."""
    mat = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        den = 1
        for v in row.values():
            den = lcm(den, v.denominator)
        if den % p == 0:
            return None
        num_gcd = 0
        for v in row.values():
            num_gcd = gcd(num_gcd, v.numerator * (den // v.denominator))
        if num_gcd == 0:
            continue
        for j, v in row.items():
            x = (v.numerator * (den // v.denominator)) // num_gcd
            mat[i, j] = x % p
    return mat


def modp_rank(rows: list, ncols: int) -> int:
    """Rank of a sparse rational matrix modulo a fixed prime.

    The result never exceeds the rational rank.  Scaling rows by units keeps
    the row space, so kernel dimension comparisons stay valid.
    """
    for p in MODP_PRIMES:
        mat = _rows_to_modp(rows, ncols, p)
        if mat is not None:
            return _dense_modp_rank(mat, p)
    raise ArithmeticError("all certificate primes divide a denominator")


def _dense_modp_rank(mat: np.ndarray, p: int) -> int:
    m = mat % p
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = m[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r, c:] = (m[r, c:] * inv) % p
        below = m[r + 1:, c]
        nzr = np.nonzero(below)[0]
        if nzr.size:
            idx = r + 1 + nzr
            factors = m[idx, c][:, None]
            m[idx, c:] = (m[idx, c:] - factors * m[r, c:]) % p
        r += 1
    return r


def modp_kernel_dim(rows: list, ncols: int) -> int:
    """Kernel dimension mod p; always >= the exact rational kernel dimension."""
    return ncols - modp_rank(rows, ncols)
