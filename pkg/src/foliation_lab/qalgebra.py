"""Exact arithmetic substrate: monomials, term orders, sparse rational polynomials.

Everything here is immutable after construction (by convention) and safe to
share across threads.  Coefficients are ``fractions.Fraction`` throughout, so
all results are exact.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable

Mono = tuple  # exponent vector, one entry per variable

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# monomials

def mono_one(nvars: int) -> Mono:
    return (0,) * nvars


def mono_deg(m: Mono) -> int:
    return sum(m)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono):
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Mono, b: Mono) -> Mono:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# term orders

class TermOrder:
    """Total order on monomials, exposed as a sort key (larger key = larger term)."""

    name = "abstract"

    def key(self, m: Mono):
        raise NotImplementedError

    def max_mono(self, monos: Iterable[Mono]) -> Mono:
        return max(monos, key=self.key)


class DegRevLex(TermOrder):
    """Degree reverse lexicographic order, the default everywhere."""

    name = "degrevlex"

    def key(self, m: Mono):
        return (sum(m), tuple(-e for e in reversed(m)))


class LexOrder(TermOrder):
    name = "lex"

    def key(self, m: Mono):
        return m


class BlockElim(TermOrder):
    """Elimination order for the first ``k`` variables (degrevlex inside blocks)."""

    name = "block-elimination"

    def __init__(self, k: int):
        self.k = k

    def key(self, m: Mono):
        head, tail = m[: self.k], m[self.k:]
        return (
            sum(head), tuple(-e for e in reversed(head)),
            sum(tail), tuple(-e for e in reversed(tail)),
        )


DEGREVLEX = DegRevLex()
LEX = LexOrder()


def graded_basis(nvars: int, d: int, order: TermOrder = DEGREVLEX) -> list:
    """All monomials of total degree d in ``nvars`` variables, largest first."""
    if d < 0:
        return []
    monos = []
    for c in combinations_with_replacement(range(nvars), d):
        m = [0] * nvars
        for i in c:
            m[i] += 1
        monos.append(tuple(m))
    monos.sort(key=order.key, reverse=True)
    assert len(monos) == comb(nvars - 1 + d, d)
    return monos


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse multivariate polynomial over Q.

    ``terms`` maps exponent tuples to nonzero Fractions.  Treat instances as
    immutable; all operations return new polynomials.
    """

    __slots__ = ("n", "terms")

    def __init__(self, nvars: int, terms=None):
        self.n = nvars
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = t

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def const(nvars: int, c) -> "Polynomial":
        return Polynomial(nvars, {mono_one(nvars): Fraction(c)})

    @staticmethod
    def variable(i: int, nvars: int) -> "Polynomial":
        m = [0] * nvars
        m[i] = 1
        return Polynomial(nvars, {tuple(m): ONE})

    @staticmethod
    def monomial(m: Mono, c=ONE) -> "Polynomial":
        return Polynomial(len(m), {m: Fraction(c)})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_deg(m) == 0 for m in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def homogeneous_degree(self):
        """Common total degree of all terms, or None if inhomogeneous/zero."""
        degs = {mono_deg(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.homogeneous_degree() is not None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.n != other.n:
            raise ValueError("ring dimension mismatch")
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, ZERO) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        p.n, p.terms = self.n, t
        return p

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if self.n != other.n:
            raise ValueError("ring dimension mismatch")
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, ZERO) - c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        p.n, p.terms = self.n, t
        return p

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.n = self.n
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.n != other.n:
            raise ValueError("ring dimension mismatch")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        t = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = t.get(m, ZERO) + c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        p = Polynomial.__new__(Polynomial)
        p.n, p.terms = self.n, t
        return p

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        p = Polynomial.__new__(Polynomial)
        p.n = self.n
        p.terms = {m: v * c for m, v in self.terms.items()}
        return p

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        r = Polynomial.const(self.n, 1)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b if k > 1 else b
            k >>= 1
        return r

    def mul_term(self, m: Mono, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        p = Polynomial.__new__(Polynomial)
        p.n = self.n
        p.terms = {mono_mul(m2, m): v * c for m2, v in self.terms.items()}
        return p

    def diff(self, i: int) -> "Polynomial":
        t = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                t[m2] = t.get(m2, ZERO) + c * e
        return Polynomial(self.n, t)

    # -- leading data --------------------------------------------------------

    def leading(self, order: TermOrder = DEGREVLEX):
        """(monomial, coefficient) of the largest term."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order: TermOrder = DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- normalization -------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-primitive; 0 for the zero poly."""
        if not self.terms:
            return ZERO
        from math import gcd, lcm
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self, order: TermOrder = DEGREVLEX) -> "Polynomial":
        """Integer-primitive scalar multiple with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        p = self.scale(1 / c)
        if p.terms[max(p.terms, key=order.key)] < 0:
            p = -p
        return p

    def monic(self, order: TermOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(1 / c)

    # -- substitution --------------------------------------------------------

    def substitute(self, images: list) -> "Polynomial":
        """Ring map x_i -> images[i]; images live in a common ring."""
        n2 = images[0].n
        result = Polynomial.zero(n2)
        cache = {}
        for m, c in self.terms.items():
            p = Polynomial.const(n2, 1)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    p = p * cache[(i, e)]
            result = result + p.scale(c)
        return result

    def evaluate(self, point: list) -> Fraction:
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({poly_str(self)})"


def poly_str(p: Polynomial, names=None, order: TermOrder = DEGREVLEX) -> str:
    """Canonical human-readable form, terms in decreasing order."""
    if p.is_zero():
        return "0"
    if names is None:
        names = [f"x{i}" for i in range(p.n)]
    pieces = []
    for m, c in p.sorted_terms(order):
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        if not factors:
            body = str(abs(c))
        else:
            body = "*".join(factors)
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def exact_div(f: Polynomial, g: Polynomial, order: TermOrder = DEGREVLEX) -> Polynomial:
    """Exact quotient f/g; raises ArithmeticError when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    q = Polynomial.zero(f.n)
    r = f
    gm, gc = g.leading(order)
    while not r.is_zero():
        rm, rc = r.leading(order)
        d = mono_div(rm, gm)
        if d is None:
            raise ArithmeticError("inexact polynomial division")
        c = rc / gc
        q = q + Polynomial.monomial(d, c)
        r = r - g.mul_term(d, c)
    return q


# ---------------------------------------------------------------------------
# limited homogeneous factorization (supports the prime-splitting engine)

def monomial_content(p: Polynomial) -> Mono:
    """Largest monomial dividing every term."""
    it = iter(p.terms)
    m = next(it)
    for m2 in it:
        m = mono_gcd(m, m2)
    return m


def effective_variables(p: Polynomial) -> list:
    used = [False] * p.n
    for m in p.terms:
        for i, e in enumerate(m):
            if e:
                used[i] = True
    return [i for i, u in enumerate(used) if u]


def _univariate_coeffs(p: Polynomial, i: int, j: int) -> list:
    """Dehomogenize a homogeneous 2-variable form: coefficients of t^k = (x_i/x_j)^k."""
    d = p.homogeneous_degree()
    coeffs = [ZERO] * (d + 1)
    for m, c in p.terms.items():
        coeffs[m[i]] += c
    return coeffs


def _rational_roots(coeffs: list) -> list:
    """Rational roots (with multiplicity) of the polynomial sum(coeffs[k] t^k)."""
    from math import gcd
    cs = list(coeffs)
    roots = []
    while len(cs) > 1:
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) <= 1:
            break
        lo = 0
        while cs[lo] == 0:
            roots.append(ZERO)
            lo += 1
        cs = cs[lo:]
        if len(cs) <= 1:
            break
        den = 1
        for c in cs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in cs]
        a0, an = ints[0], ints[-1]
        found = None
        for pden in _divisors(abs(an)):
            for pnum in _divisors(abs(a0)):
                for s in (1, -1):
                    r = Fraction(s * pnum, pden)
                    if sum(c * r ** k for k, c in enumerate(cs)) == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        # synthetic division by (t - found)
        q = [ZERO] * (len(cs) - 1)
        rem = list(cs)
        for k in range(len(cs) - 1, 0, -1):
            q[k - 1] = rem[k]
            rem[k - 1] += rem[k] * found
            rem[k] = ZERO
        cs = q
    return roots


def _divisors(x: int) -> list:
    if x == 0:
        return [1]
    ds = set()
    d = 1
    while d * d <= x:
        if x % d == 0:
            ds.add(d)
            ds.add(x // d)
        d += 1
    return sorted(ds)


def factor_homogeneous(p: Polynomial):
    """Factor a homogeneous polynomial into irreducibles over Q where possible.

    Returns (constant, [(factor, multiplicity), ...], complete) where complete
    is False when some factor could not be certified irreducible.  Handles
    monomial content, forms in <= 2 effective variables (via univariate
    factorization with rational-root extraction) and quadratic forms (via
    Gram-matrix diagonalization).
    """
    assert p.is_homogeneous() and not p.is_zero()
    n = p.n
    const = ONE
    factors = []
    mc = monomial_content(p)
    if mono_deg(mc) > 0:
        for i, e in enumerate(mc):
            if e:
                factors.append((Polynomial.variable(i, n), e))
        p = exact_div(p, Polynomial.monomial(mc))
    if p.is_constant():
        const = p.terms.get(mono_one(n), ONE)
        return const, factors, True
    ev = effective_variables(p)
    if len(ev) == 1:
        i = ev[0]
        d = p.homogeneous_degree()
        const = p.terms[tuple(d if k == i else 0 for k in range(n))]
        factors.append((Polynomial.variable(i, n), d))
        return const, factors, True
    if len(ev) == 2:
        return _factor_two_vars(p, ev, const, factors)
    if p.homogeneous_degree() == 1:
        factors.append((p.primitive(), 1))
        const = p.content() if p.leading()[1] > 0 else -p.content()
        return const, factors, True
    if p.homogeneous_degree() == 2:
        ok = _factor_quadric(p, const, factors)
        if ok is not None:
            return ok
    factors.append((p.primitive(), 1))
    const = p.content() if p.leading()[1] > 0 else -p.content()
    return const, factors, False


def _factor_two_vars(p: Polynomial, ev, const, factors):
    i, j = ev
    n = p.n
    d = p.homogeneous_degree()
    coeffs = _univariate_coeffs(p, i, j)
    roots = _rational_roots(coeffs)
    xi, xj = Polynomial.variable(i, n), Polynomial.variable(j, n)
    rem = p
    for r in roots:
        lin = (xi - xj.scale(r)).primitive() if r != 0 else xi
        rem = exact_div(rem, lin)
        for k, (f, e) in enumerate(factors):
            if f == lin:
                factors[k] = (f, e + 1)
                break
        else:
            factors.append((lin, 1))
    if rem.is_constant():
        const = rem.terms.get(mono_one(n), ONE)
        return const, factors, True
    rd = rem.homogeneous_degree()
    if rd == 2:
        got = _factor_quadric(rem, const, factors)
        if got is not None:
            return got
        factors.append((rem.primitive(), 1))
        return const, factors, False
    complete = rd == 3  # cubic with no rational root is irreducible over Q
    factors.append((rem.primitive(), 1))
    return const, factors, complete


def _factor_quadric(p: Polynomial, const, factors):
    """Factor or certify a quadratic form; None when p is not quadratic."""
    n = p.n
    if p.homogeneous_degree() != 2:
        return None
    # Gram matrix of the form
    G = [[ZERO] * n for _ in range(n)]
    for m, c in p.terms.items():
        idx = [i for i, e in enumerate(m) for _ in range(e)]
        a, b = idx
        if a == b:
            G[a][a] += c
        else:
            G[a][b] += c / 2
            G[b][a] += c / 2
    # symmetric diagonalization by congruence: p = sum c_k * l_k^2
    lins = []
    coefs = []
    M = [row[:] for row in G]
    basis = [Polynomial.variable(i, n) for i in range(n)]
    work = list(range(n))
    while True:
        piv = None
        for i in work:
            if M[i][i]:
                piv = i
                break
        if piv is None:
            off = None
            for i in work:
                for j in work:
                    if i < j and M[i][j]:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                break
            i, j = off
            # substitute to create a diagonal entry
            basis[i], basis[j] = basis[i] + basis[j], basis[i] - basis[j]
            for k in range(n):
                M[i][k], M[j][k] = M[i][k] + M[j][k], M[i][k] - M[j][k]
            for k in range(n):
                M[k][i], M[k][j] = M[k][i] + M[k][j], M[k][i] - M[k][j]
            continue
        c = M[piv][piv]
        lin = Polynomial.zero(n)
        for j in range(n):
            lin = lin + basis[j].scale(M[piv][j] / c)
        lins.append(lin)
        coefs.append(c)
        for i in range(n):
            for j in range(n):
                if i != piv and j != piv:
                    M[i][j] -= M[i][piv] * M[piv][j] / c
        for i in range(n):
            M[i][piv] = ZERO
            M[piv][i] = ZERO
        work = [i for i in work if i != piv]
    rank = len(coefs)
    if rank >= 3:
        factors.append((p.primitive(), 1))
        cc = p.content() if p.leading()[1] > 0 else -p.content()
        return cc * const, factors, True
    if rank == 1:
        lin = lins[0].primitive()
        factors.append((lin, 2))
        return const, factors, True
    # rank 2: c0 l0^2 + c1 l1^2 splits over Q iff -c1/c0 is a square
    ratio = -coefs[1] / coefs[0]
    if ratio < 0:
        factors.append((p.primitive(), 1))
        cc = p.content() if p.leading()[1] > 0 else -p.content()
        return cc * const, factors, True  # irreducible over Q (definite pair)
    num, den = ratio.numerator, ratio.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        factors.append((p.primitive(), 1))
        cc = p.content() if p.leading()[1] > 0 else -p.content()
        return cc * const, factors, True  # irreducible over Q
    r = Fraction(rn, rd)
    f1 = (lins[0] + lins[1].scale(r)).primitive()
    f2 = (lins[0] - lins[1].scale(r)).primitive()
    if f1 == f2:
        factors.append((f1, 2))
    else:
        factors.append((f1, 1))
        factors.append((f2, 1))
    return const, factors, True


def _isqrt_exact(x: int):
    from math import isqrt
    if x < 0:
        return None
    r = isqrt(x)
    return r if r * r == x else None


def squarefree_part(p: Polynomial):
    """Product of the distinct irreducible factors, or None when unknown."""
    const, factors, complete = factor_homogeneous(p)
    if not complete:
        return None
    out = Polynomial.const(p.n, 1)
    for f, _ in factors:
        out = out * f
    return out.primitive()
