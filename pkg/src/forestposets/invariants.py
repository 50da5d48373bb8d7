"""Brute-force invariants of materialized intervals.

Everything here works off the element-pair relation stored in an
IntervalPoset and never consults the recursive decomposition, so these
functions serve as the independent oracle for the fast engine.
"""

from __future__ import annotations

from .order import IntervalPoset
from .polynomials import BivariatePolynomial, UnivariatePolynomial


def _mu_table(p: IntervalPoset) -> dict:
    """mu(i, j) for every comparable index pair, computed bottom-up."""
    if p._mu is None:
        mu = {}
        n = len(p.elements)
        for i in range(n):
            for j in range(n):
                if i not in p.below[j]:
                    continue
                if i == j:
                    mu[i, j] = 1
                else:
                    mu[i, j] = -sum(mu[i, k] for k in p.below[j]
                                    if k != j and i in p.below[k])
        p._mu = mu
    return p._mu


def mobius(p: IntervalPoset, a, b) -> int:
    """Mobius function mu(a, b) of two comparable elements."""
    i, j = p.index_of(a), p.index_of(b)
    if i not in p.below[j]:
        raise ValueError("mobius is only defined on comparable pairs")
    return _mu_table(p)[i, j]


def mobius_number(p: IntervalPoset) -> int:
    """mu(lower, upper)."""
    return mobius(p, p.lower, p.upper)


def m_polynomial(p: IntervalPoset) -> BivariatePolynomial:
    """Sum of mu(a,b) x^crk(a) y^crk(b) over comparable pairs."""
    mu = _mu_table(p)
    out = {}
    for (i, j), m in mu.items():
        key = (p.coranks[i], p.coranks[j])
        out[key] = out.get(key, 0) + m
    return BivariatePolynomial(out)


def z_polynomial(p: IntervalPoset) -> BivariatePolynomial:
    """Sum of x^crk(a) y^crk(b) over comparable pairs."""
    out = {}
    for j in range(len(p.elements)):
        cj = p.coranks[j]
        for i in p.below[j]:
            key = (p.coranks[i], cj)
            out[key] = out.get(key, 0) + 1
    return BivariatePolynomial(out)


def characteristic_polynomial(p: IntervalPoset) -> UnivariatePolynomial:
    """Sum of mu(lower, b) y^crk(b); monic of degree deg(p)."""
    mu = _mu_table(p)
    bottom = 0
    out = {}
    for j in p.above[bottom]:
        d = p.coranks[j]
        out[d] = out.get(d, 0) + mu[bottom, j]
    return UnivariatePolynomial(out)


def cardinal_polynomial(p: IntervalPoset) -> UnivariatePolynomial:
    """Generating function of corank: sum of x^crk(a) over elements."""
    out = {}
    for c in p.coranks:
        out[c] = out.get(c, 0) + 1
    return UnivariatePolynomial(out, var="x")


# ---------------------------------------------------------------------------
# structural checks

def check_ranked(p: IntervalPoset, covers=None) -> bool:
    """True iff every maximal cover-path has length |V(upper)| - |V(lower)|.

    Works directly on the cover set (an override is accepted so corrupted
    fixtures can be probed), so a rank-skipping edge is detected.
    """
    n = len(p.elements)
    if n == 0:
        return False
    cover_up = [[] for _ in range(n)]
    cover_dn = [[] for _ in range(n)]
    for i, j in (covers if covers is not None else p.covers):
        cover_up[i].append(j)
        cover_dn[j].append(i)
    expected = p.upper.n_inner - p.lower.n_inner

    shortest, longest = {}, {}

    def span(i):
        if i not in shortest:
            if not cover_up[i]:
                shortest[i] = longest[i] = 0
            else:
                spans = [span(j) for j in cover_up[i]]
                shortest[i] = 1 + min(s for s, _ in spans)
                longest[i] = 1 + max(l for _, l in spans)
        return shortest[i], longest[i]

    sources = [i for i in range(n) if not cover_dn[i]]
    for i in sources:
        lo, hi = span(i)
        if lo != expected or hi != expected:
            return False
    return True


def _meet(p, x, y):
    common = p.below[x] & p.below[y]
    for m in common:
        if common <= p.below[m]:
            return m
    return None


def _join(p, x, y):
    common = p.above[x] & p.above[y]
    for j in common:
        if common <= p.above[j]:
            return j
    return None


def check_semimodular(p: IntervalPoset) -> bool:
    """Semimodularity on the cover graph.

    For each pair x, y that both cover their meet, the join must cover
    both x and y. Pairs whose meet or join does not exist (intervals
    need not be lattices) are skipped.
    """
    return find_semimodularity_violation(p) is None


def find_semimodularity_violation(p: IntervalPoset):
    """The first (x, y) element pair witnessing a semimodularity failure."""
    n = len(p.elements)
    for x in range(n):
        for y in range(x + 1, n):
            if x in p.below[y] or y in p.below[x]:
                continue
            m = _meet(p, x, y)
            if m is None or (m, x) not in p.covers or (m, y) not in p.covers:
                continue
            j = _join(p, x, y)
            if j is None:
                continue
            if (x, j) not in p.covers or (y, j) not in p.covers:
                return p.elements[x], p.elements[y]
    return None
