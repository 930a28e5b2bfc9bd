"""Buchberger engine and the ideal calculus built on it.

Ideals cache their reduced Groebner basis (unique for the term order), which
makes ideal equality, membership, quotients, saturations, intersections,
Hilbert data and the prime-splitting decomposition all exact and
deterministic.  Computations carry an explicit budget and fail loudly with
``BudgetExceeded`` instead of running away.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .linalg import QMatrix, sparse_rank
from .qalgebra import (
    DEGREVLEX, ONE, ZERO, BlockElim, Mono, Polynomial, TermOrder,
    factor_homogeneous, graded_basis, mono_coprime, mono_deg, mono_div,
    mono_lcm, mono_mul, mono_one, poly_str, squarefree_part,
)


class BudgetExceeded(Exception):
    """A Groebner computation hit its pair or degree cap."""

    def __init__(self, what: str):
        super().__init__(what)
        self.what = what


@dataclass(frozen=True)
class Budget:
    max_pairs: int = 200_000
    max_degree: int | None = None

    def check_degree(self, d: int):
        if self.max_degree is not None and d > self.max_degree:
            raise BudgetExceeded(f"reduction degree {d} exceeds cap {self.max_degree}")


DEFAULT_BUDGET = Budget()


# ---------------------------------------------------------------------------
# raw Buchberger machinery (dict-of-monomial polynomials for speed)

def _reduce_full(f: dict, basis: list, order: TermOrder, budget: Budget) -> dict:
    """Full normal form of f against (lt, terms) pairs; returns a new dict."""
    key = order.key
    work = dict(f)
    out = {}
    while work:
        m = max(work, key=key)
        budget.check_degree(mono_deg(m))
        c = work[m]
        for lt, g in basis:
            q = mono_div(m, lt)
            if q is not None:
                f0 = c / g[lt]
                for gm, gc in g.items():
                    mm = mono_mul(gm, q)
                    s = work.get(mm, ZERO) - f0 * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            out[m] = c
            del work[m]
    return out


def _content_normalize(t: dict, order: TermOrder) -> dict:
    """Scale to integer-primitive with positive leading coefficient."""
    if not t:
        return t
    from math import gcd, lcm
    num, den = 0, 1
    for c in t.values():
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    scale = Fraction(den, num)
    if t[max(t, key=order.key)] < 0:
        scale = -scale
    return {m: c * scale for m, c in t.items()}


def _spoly(f: dict, g: dict, ltf: Mono, ltg: Mono) -> dict:
    l = mono_lcm(ltf, ltg)
    qf, qg = mono_div(l, ltf), mono_div(l, ltg)
    cf, cg = f[ltf], g[ltg]
    out = {}
    for m, c in f.items():
        out[mono_mul(m, qf)] = c / cf
    for m, c in g.items():
        mm = mono_mul(m, qg)
        s = out.get(mm, ZERO) - c / cg
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def buchberger(gens: list, order: TermOrder = DEGREVLEX,
               budget: Budget = DEFAULT_BUDGET, verify: bool = True) -> list:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pair handling uses the Gebauer-Moeller criteria with normal selection
    (lowest lcm degree first, ties by the order on the lcm).  The Buchberger
    criterion is re-verified on the finished basis when ``verify`` is set.
    """
    key = order.key
    G: list[dict] = []
    lts: list[Mono] = []
    pairs: list[tuple] = []  # (sortkey, i, j, lcm)
    npairs_done = 0

    def add_pairs(t: int):
        nonlocal pairs
        ltt = lts[t]
        cand = {}
        for i in range(t):
            l = mono_lcm(lts[i], ltt)
            cand[i] = l
        # Gebauer-Moeller M: drop (i,t) when lcm(j,t) properly divides lcm(i,t)
        drop = set()
        items = list(cand.items())
        for i, li in items:
            for j, lj in items:
                if i == j or j in drop:
                    continue
                if li != lj and mono_div(li, lj) is not None:
                    drop.add(i)
                    break
        # F: for equal lcms keep a single representative
        seen = {}
        for i, li in items:
            if i in drop:
                continue
            if li in seen:
                drop.add(i)
            else:
                seen[li] = i
        # B (product criterion): coprime lead terms reduce to zero
        newp = []
        for i, li in cand.items():
            if i in drop:
                continue
            if mono_coprime(lts[i], ltt):
                continue
            newp.append(((mono_deg(li), key(li)), i, t, li))
        # chain criterion on old pairs
        kept = []
        for sk, i, j, l in pairs:
            if mono_div(l, ltt) is not None and \
               mono_lcm(lts[i], ltt) != l and mono_lcm(lts[j], ltt) != l:
                continue
            kept.append((sk, i, j, l))
        pairs = kept + newp
        pairs.sort(key=lambda p: p[0])

    for g in gens:
        if g is None or not g.terms:
            continue
        t = _content_normalize(_reduce_full(g.terms, list(zip(lts, G)), order, budget), order)
        if not t:
            continue
        G.append(t)
        lts.append(max(t, key=key))
        add_pairs(len(G) - 1)

    while pairs:
        npairs_done += 1
        if npairs_done > budget.max_pairs:
            raise BudgetExceeded(f"S-pair count exceeds cap {budget.max_pairs}")
        _, i, j, _ = pairs.pop(0)
        s = _spoly(G[i], G[j], lts[i], lts[j])
        basis = list(zip(lts, G))
        r = _reduce_full(s, basis, order, budget)
        if r:
            r = _content_normalize(r, order)
            G.append(r)
            lts.append(max(r, key=key))
            add_pairs(len(G) - 1)

    # interreduce to the unique reduced basis, dropping redundant lead terms
    alive = []
    for k, (lt, g) in enumerate(zip(lts, G)):
        if any(k != k2 and mono_div(lt, lt2) is not None
               and (mono_deg(lt2), k2) < (mono_deg(lt), k)
               for k2, lt2 in enumerate(lts)):
            continue
        alive.append((lt, g))
    reduced = []
    for idx, (lt, g) in enumerate(alive):
        others = [(l2, g2) for k, (l2, g2) in enumerate(alive) if k != idx]
        r = _reduce_full(g, others, order, budget)
        if r:
            reduced.append(r)
    final = []
    for t in reduced:
        lt = max(t, key=key)
        c = t[lt]
        final.append({m: v / c for m, v in t.items()})
    final.sort(key=lambda t: key(max(t, key=key)), reverse=True)

    if verify:
        basis = [(max(t, key=key), t) for t in final]
        for a in range(len(final)):
            for b in range(a + 1, len(final)):
                la, lb = basis[a][0], basis[b][0]
                if mono_coprime(la, lb):
                    continue
                s = _spoly(final[a], final[b], la, lb)
                if _reduce_full(s, basis, order, budget):
                    raise AssertionError("Buchberger criterion failed on finished basis")

    return final


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals

def _hilbert_numerator(gens: list, nvars: int) -> dict:
    """Numerator of the Hilbert series of S/(monomial ideal), as {deg: coeff}."""

    def minimalize(ms):
        out = []
        for m in sorted(ms, key=mono_deg):
            if not any(mono_div(m, g) is not None for g in out):
                out.append(m)
        return out

    def poly_mul(a, b):
        out = {}
        for d1, c1 in a.items():
            for d2, c2 in b.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return {d: c for d, c in out.items() if c}

    def poly_add(a, b, sign=1):
        out = dict(a)
        for d, c in b.items():
            out[d] = out.get(d, 0) + sign * c
        return {d: c for d, c in out.items() if c}

    def rec(ms):
        ms = minimalize(ms)
        if not ms:
            return {0: 1}
        if any(mono_deg(m) == 0 for m in ms):
            return {}
        if len(ms) == 1:
            return {0: 1, mono_deg(ms[0]): -1}
        pairwise = all(mono_coprime(ms[i], ms[j])
                       for i in range(len(ms)) for j in range(i + 1, len(ms)))
        if pairwise:
            out = {0: 1}
            for m in ms:
                out = poly_mul(out, {0: 1, mono_deg(m): -1})
            return out
        counts = [0] * nvars
        for m in ms:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
        v = max(range(nvars), key=lambda i: counts[i])
        pivot = tuple(1 if i == v else 0 for i in range(nvars))
        plus = ms + [pivot]
        colon = [tuple(max(e - p, 0) for e, p in zip(m, pivot)) for m in ms]
        return poly_add(rec(plus), poly_mul({1: 1}, rec(colon)))

    return rec(list(gens))


@dataclass
class HilbertData:
    """Hilbert series data of S/I: numerator over (1-T)^(n+1)."""

    nvars: int
    numerator: dict  # {degree: int}

    def _split(self):
        """Write numerator = (1-T)^c * q with q(1) != 0; returns (c, q)."""
        num = dict(self.numerator)
        if not num:
            return None, {}
        c = 0
        while True:
            if sum(num.values()) != 0:
                return c, num
            # divide by (1 - T)
            maxd = max(num)
            q = {}
            acc = 0
            for d in range(0, maxd + 1):
                acc = num.get(d, 0) + acc
                if d < maxd:
                    q[d] = acc
            num = {d: v for d, v in q.items() if v}
            c += 1

    @property
    def krull_dim(self) -> int:
        """Krull dimension of S/I (0 for the zero ring by convention)."""
        if not self.numerator:
            return 0
        c, _ = self._split()
        return self.nvars - c

    @property
    def dim_proj(self) -> int:
        """Dimension of Proj(S/I); -1 when empty."""
        return self.krull_dim - 1

    @property
    def degree(self) -> int:
        if not self.numerator:
            return 0
        _, q = self._split()
        d = sum(q.values())
        return abs(d)

    def hilbert_function(self, d: int) -> int:
        """dim (S/I)_d computed from the series."""
        n = self.nvars
        total = 0
        for j, c in self.numerator.items():
            if d - j >= 0:
                total += c * comb(d - j + n - 1, n - 1)
        return total

    def hilbert_polynomial(self) -> list:
        """Coefficients [a_0..a_k] with HP(d) = sum a_i * C(d, i)... in the
        binomial basis C(d - j + k - 1, k - 1) collapsed to a plain rational
        coefficient list in d (degree = krull_dim - 1)."""
        k = self.krull_dim
        if k <= 0:
            return []
        c, q = self._split()
        # HP(d) = sum_j q_j * C(d - j + k - 1, k - 1) as a polynomial in d
        coeffs = [Fraction(0)] * k
        for j, cj in q.items():
            poly = _binomial_poly(k - 1, -j + k - 1)
            for i, a in enumerate(poly):
                coeffs[i] += cj * a
        return coeffs


def _binomial_poly(r: int, shift: int) -> list:
    """Coefficients in d of C(d + shift, r)."""
    num = [Fraction(1)]
    for t in range(r):
        # multiply by (d + shift - t)
        nxt = [Fraction(0)] * (len(num) + 1)
        for i, a in enumerate(num):
            nxt[i + 1] += a
            nxt[i] += a * (shift - t)
        num = nxt
    fact = 1
    for t in range(1, r + 1):
        fact *= t
    return [a / fact for a in num]


# ---------------------------------------------------------------------------
# the Ideal class

class Ideal:
    """Homogeneous ideal with cached reduced Groebner basis."""

    def __init__(self, nvars: int, gens, order: TermOrder = DEGREVLEX,
                 budget: Budget = DEFAULT_BUDGET):
        self.nvars = nvars
        self.order = order
        self.budget = budget
        self.gens = tuple(g for g in gens if g is not None and not g.is_zero())
        for g in self.gens:
            if g.n != nvars:
                raise ValueError("ring dimension mismatch")
        self._gb = None
        self._hilbert = None

    # -- basics --------------------------------------------------------------

    def _spawn(self, gens) -> "Ideal":
        return Ideal(self.nvars, gens, self.order, self.budget)

    def groebner(self) -> tuple:
        """Reduced Groebner basis as a tuple of monic Polynomials."""
        if self._gb is None:
            raw = buchberger(list(self.gens), self.order, self.budget)
            self._gb = tuple(Polynomial(self.nvars, t) for t in raw)
        return self._gb

    def leading_monomials(self) -> list:
        return [g.leading(self.order)[0] for g in self.groebner()]

    def normal_form(self, f: Polynomial) -> Polynomial:
        basis = [(g.leading(self.order)[0], g.terms) for g in self.groebner()]
        return Polynomial(self.nvars, _reduce_full(f.terms, basis, self.order, self.budget))

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_zero(self) -> bool:
        return len(self.groebner()) == 0

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def equals(self, other: "Ideal") -> bool:
        return self.groebner() == other.groebner()

    def generator_strings(self, names=None) -> list:
        return [poly_str(g, names, self.order) for g in self.groebner()]

    def max_gen_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    # -- graded pieces --------------------------------------------------------

    def graded_dim(self, d: int) -> int:
        """dim of the degree-d piece of the ideal (vector space over Q)."""
        lts = self.leading_monomials()
        count = 0
        for m in graded_basis(self.nvars, d):
            if any(mono_div(m, lt) is not None for lt in lts):
                count += 1
        return count

    def graded_piece_basis(self, d: int) -> list:
        """Triangular vector-space basis of the degree-d piece."""
        gb = self.groebner()
        out = []
        seen = set()
        for g in gb:
            lt = g.leading(self.order)[0]
            gd = g.degree()
            if gd > d:
                continue
            for m in graded_basis(self.nvars, d - gd):
                lead = mono_mul(lt, m)
                if lead not in seen:
                    seen.add(lead)
                    out.append(g.mul_term(m, ONE))
        return out

    # -- calculus -------------------------------------------------------------

    def sum(self, other: "Ideal") -> "Ideal":
        return self._spawn(list(self.gens) + list(other.gens))

    def intersection(self, other: "Ideal") -> "Ideal":
        """I cap J via t*I + (1-t)*J in S[t], eliminating t."""
        n = self.nvars
        ext = []
        t = Polynomial.variable(0, n + 1)
        one = Polynomial.const(n + 1, 1)
        for g in self.gens:
            ext.append(t * _lift(g))
        for g in other.gens:
            ext.append((one - t) * _lift(g))
        gb = buchberger(ext, BlockElim(1), self.budget)
        gens = []
        for tdict in gb:
            if all(m[0] == 0 for m in tdict):
                gens.append(Polynomial(n, {m[1:]: c for m, c in tdict.items()}))
        return self._spawn(gens)

    def quotient_poly(self, g: Polynomial) -> "Ideal":
        """(I : g) via the intersection I cap (g), then exact division by g."""
        if g.is_zero():
            raise ValueError("quotient by zero polynomial")
        inter = self.intersection(self._spawn([g]))
        from .qalgebra import exact_div
        return self._spawn([exact_div(h, g, self.order) for h in inter.groebner()])

    def quotient(self, other: "Ideal") -> "Ideal":
        """(I : J) = intersection of the single-generator quotients."""
        gens = [g for g in other.gens if not g.is_zero()]
        if not gens:
            raise ValueError("quotient by zero ideal")
        out = None
        for g in gens:
            q = self.quotient_poly(g)
            if out is None or out.is_unit():
                out = q
            elif not q.is_unit():
                out = out.intersection(q)
        return out

    def saturation(self, other: "Ideal") -> "Ideal":
        """(I : J^infinity) by iterating quotients until they stabilize."""
        if other.is_unit():
            return self
        cur = self
        for _ in range(64):
            nxt = cur.quotient(other)
            if nxt.equals(cur):
                return cur
            cur = nxt
        raise BudgetExceeded("saturation did not stabilize in 64 steps")

    def irrelevant_saturation(self) -> "Ideal":
        m = self._spawn([Polynomial.variable(i, self.nvars) for i in range(self.nvars)])
        return self.saturation(m)

    def is_saturated(self) -> bool:
        return self.irrelevant_saturation().equals(self)

    def radical_membership(self, f: Polynomial) -> bool:
        """f in sqrt(I) via 1 in I + (1 - t*f) in S[t]."""
        if f.is_zero():
            return True
        n = self.nvars
        ext = [_lift(g) for g in self.gens]
        t = Polynomial.variable(0, n + 1)
        ext.append(Polynomial.const(n + 1, 1) - t * _lift(f))
        gb = buchberger(ext, DEGREVLEX, self.budget, verify=False)
        return any(len(g) == 1 and mono_deg(next(iter(g))) == 0 for g in gb)

    def radical_equals(self, other: "Ideal") -> bool:
        return (all(other.radical_membership(g) for g in self.gens)
                and all(self.radical_membership(g) for g in other.gens))

    # -- numerical invariants --------------------------------------------------

    def hilbert(self) -> HilbertData:
        if self._hilbert is None:
            lts = self.leading_monomials()
            self._hilbert = HilbertData(self.nvars, _hilbert_numerator(lts, self.nvars))
        return self._hilbert

    def dim_proj(self) -> int:
        return self.hilbert().dim_proj

    def degree(self) -> int:
        return self.hilbert().degree

    def codim(self) -> int:
        return self.nvars - self.hilbert().krull_dim

    def minimal_generators(self) -> list:
        """Degree histogram [(degree, count), ...] of a minimal generating set."""
        if self.is_zero():
            return []
        degs = sorted({g.degree() for g in self.gens})
        out = []
        for d in degs:
            dim_d = self.graded_dim(d)
            below = self.graded_piece_basis(d - 1)
            rows = []
            basis_d = {m: i for i, m in enumerate(graded_basis(self.nvars, d))}
            for b in below:
                for i in range(self.nvars):
                    p = b.mul_term(tuple(1 if k == i else 0 for k in range(self.nvars)), ONE)
                    rows.append({basis_d[m]: c for m, c in p.terms.items()})
            span = sparse_rank(rows, len(basis_d)) if rows else 0
            fresh = dim_d - span
            if fresh:
                out.append((d, fresh))
        return out

    def minimal_generator_polys(self) -> list:
        """A minimal generating set chosen from the generators/GB."""
        if self.is_zero():
            return []
        pool = sorted(self.groebner(), key=lambda g: (g.degree(), self.order.key(g.leading(self.order)[0])))
        chosen: list[Polynomial] = []
        for g in pool:
            if not chosen:
                chosen.append(g)
                continue
            if self._spawn(chosen).contains(g):
                continue
            chosen.append(g)
        return chosen

    # -- decomposition ----------------------------------------------------------

    def minimal_primes(self):
        """Minimal primes via coprime-factor splitting; None when indeterminate.

        Certified leaves: ideals generated by linear forms, or by linear forms
        plus one polynomial that is irreducible over Q.  Generators are
        replaced by their squarefree parts when those are computable.
        """
        start = self.irrelevant_saturation()
        if start.is_unit():
            return []
        work = [start]
        leaves = []
        guard = 0
        while work:
            guard += 1
            if guard > 500:
                return None
            J = work.pop()
            if J.is_unit():
                continue
            J, changed = _squarefree_reduce(J)
            if changed:
                J = J.irrelevant_saturation()
                if J.is_unit():
                    continue
            split = _find_split(J)
            if split is not None:
                g1, g2 = split
                work.append(J.sum(J._spawn([g1])).saturation(J._spawn([g2])))
                work.append(J.sum(J._spawn([g2])))
                continue
            cert = _certify_prime(J)
            if cert is None:
                return None
            if cert:
                leaves.append(J)
            else:
                return None
        # prune non-minimal and duplicate leaves
        primes = []
        for P in leaves:
            P = P.irrelevant_saturation()
            if P.is_unit():
                continue
            if any(P.equals(Q) for Q in primes):
                continue
            primes.append(P)
        out = []
        for P in primes:
            if any((not P.equals(Q)) and P.contains_ideal(Q) for Q in primes):
                continue
            out.append(P)
        out.sort(key=lambda P: tuple(sorted(self.order.key(m) for m in P.leading_monomials())))
        return out

    def component_multiplicity(self, prime: "Ideal", all_primes: list) -> int:
        """Scheme multiplicity along a minimal prime: deg(primary part)/deg(prime)."""
        part = self.irrelevant_saturation()
        for Q in all_primes:
            if Q.equals(prime):
                continue
            h = None
            for g in Q.groebner():
                if not prime.contains(g):
                    h = g
                    break
            if h is None:
                raise ValueError("component primes must be incomparable")
            part = part.saturation(part._spawn([h]))
        mult, rem = divmod(part.degree(), prime.degree())
        if rem:
            raise ArithmeticError("component degree not divisible by prime degree")
        return mult

    def radical_from_primes(self, primes: list) -> "Ideal":
        out = None
        for P in primes:
            out = P if out is None else out.intersection(P)
        if out is None:
            return self._spawn([Polynomial.const(self.nvars, 1)])
        return out


def _lift(p: Polynomial) -> Polynomial:
    """Insert a fresh first variable (exponent 0 everywhere)."""
    return Polynomial(p.n + 1, {(0,) + m: c for m, c in p.terms.items()})


def _squarefree_reduce(J: Ideal):
    """Replace generators by squarefree parts where certifiable."""
    changed = False
    gens = []
    for g in J.groebner():
        sf = squarefree_part(g)
        if sf is not None and sf.monic(J.order) != g.monic(J.order):
            gens.append(sf)
            changed = True
        else:
            gens.append(g)
    return (J._spawn(gens) if changed else J), changed


def _find_split(J: Ideal):
    """A generator factorization g = g1*g2 into coprime non-units, if any."""
    for g in J.groebner():
        const, factors, complete = factor_homogeneous(g)
        if len(factors) < 2:
            continue
        f1, e1 = factors[0]
        g1 = f1 ** e1
        g2 = Polynomial.const(J.nvars, 1)
        for f, e in factors[1:]:
            g2 = g2 * f ** e
        # distinct irreducible factors are coprime even when the tail is
        # unfactored, provided the head factor does not divide it
        if not complete:
            from .qalgebra import exact_div
            try:
                exact_div(g2, f1, J.order)
                continue  # cannot certify coprimality
            except ArithmeticError:
                pass
        return g1, g2
    return None


def _certify_prime(J: Ideal):
    """True/False when primality is decided, None when out of supported class."""
    gb = J.groebner()
    if not gb:
        return False  # zero ideal: prime, but callers treat separately
    linears = [g for g in gb if g.degree() == 1]
    higher = [g for g in gb if g.degree() > 1]
    if not higher:
        return True
    if len(higher) == 1:
        const, factors, complete = factor_homogeneous(higher[0])
        if complete and len(factors) == 1 and factors[0][1] == 1:
            # irreducible modulo the linear forms only if it stays irreducible
            # after eliminating them; restrict to the linear quotient ring
            g = higher[0]
            reduced = _eliminate_linears(g, linears, J.order)
            if reduced is None:
                return None
            const2, factors2, complete2 = factor_homogeneous(reduced)
            if complete2 and len(factors2) == 1 and factors2[0][1] == 1:
                return True
            if complete2:
                return False
            return None
        if complete:
            return False
    return None


def _eliminate_linears(g: Polynomial, linears: list, order: TermOrder):
    """Substitute away the lead variables of the linear forms."""
    out = g
    for l in linears:
        lt, lc = l.leading(order)
        var = None
        for i, e in enumerate(lt):
            if e == 1:
                var = i
        rest = (l - Polynomial.monomial(lt, lc)).scale(-1 / lc)
        images = [Polynomial.variable(i, g.n) for i in range(g.n)]
        images[var] = rest
        out = out.substitute(images)
    return out


# ---------------------------------------------------------------------------
# spec-level convenience wrappers

def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    return I.quotient(J)


def saturation(I: Ideal, J: Ideal) -> Ideal:
    return I.saturation(J)


def irrelevant_saturation(I: Ideal) -> Ideal:
    return I.irrelevant_saturation()


def intersection(I: Ideal, J: Ideal) -> Ideal:
    return I.intersection(J)


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    return I.radical_membership(f)


def radical_equal(I: Ideal, J: Ideal) -> bool:
    return I.radical_equals(J)


def normal_form(f: Polynomial, I: Ideal) -> Polynomial:
    return I.normal_form(f)


def hilbert_data(I: Ideal) -> HilbertData:
    return I.hilbert()


def minimal_generators(I: Ideal) -> list:
    return I.minimal_generators()


def minimal_primes(I: Ideal):
    return I.minimal_primes()


def component_multiplicity(I: Ideal, P: Ideal, all_primes: list) -> int:
    return I.component_multiplicity(P, all_primes)
