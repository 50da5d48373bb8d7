"""Self-verification suites behind the CLI verify command.

Each check compares an independent route against the subject code:
counting formulas against enumeration, the fast decomposition engine
against brute force over materialized intervals, structural claims
(rank property, classification by marked vertices, rebuild
isomorphisms) against exhaustive or seeded-sample search. Sizes are
exhaustive through five labels and seeded samples at six.
"""

from __future__ import annotations

import math
import random
import string
import time
from dataclasses import dataclass

from .decomposition import chi_fast, chi_recursive, exponents, m_fast, mobius_fast, z_fast
from .forests import (enumerate_forests, enumerate_trees, forest, format_forest,
                      make_comb, parse_forest)
from .invariants import (characteristic_polynomial, find_semimodularity_violation,
                         check_ranked, m_polynomial, mobius_number, z_polynomial)
from .order import interval, leq, lower_set, marked_pair, marked_vertices, MarkedTreePair
from .partitions import enumerate_partitions, partition_char_poly
from .partitive import as_partitive, partitive_isomorphic, rebuild_one_step
from .polynomials import UnivariatePolynomial


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    millis: float


def _labels(n):
    return string.ascii_lowercase[:n]

def _double_factorial_trees(n):
    return 1 if n == 1 else math.prod(range(1, 2 * n - 2, 2))

def _bell(n):
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]

def _forest_count_formula(n):
    total = 0
    for p in enumerate_partitions(_labels(n)):
        total += math.prod(_double_factorial_trees(len(b)) for b in p.blocks)
    return total


def check_counting(max_labels):
    """Enumeration sizes against the closed-form counts."""
    for n in range(1, max_labels + 1):
        labels = _labels(n)
        got = len(enumerate_trees(labels))
        want = _double_factorial_trees(n)
        if got != want:
            return False, f"{got} trees on {n} labels, expected {want}"
        got = len(enumerate_forests(labels))
        want = _forest_count_formula(n)
        if got != want:
            return False, f"{got} forests on {n} labels, expected {want}"
        comb = forest([make_comb(labels)])
        got = len(lower_set(comb))
        if got != _bell(n):
            return False, f"|[E, comb]| = {got} on {n} labels, expected {_bell(n)}"
    return True, f"tree/forest/comb counts agree up to {max_labels} labels"


def check_roundtrip(max_labels):
    """parse(format(F)) is the identity over the full enumeration."""
    total = 0
    for n in range(1, min(max_labels, 5) + 1):
        for f in enumerate_forests(_labels(n)):
            if parse_forest(format_forest(f)) != f:
                return False, f"round trip broke {format_forest(f)}"
            total += 1
    return True, f"{total} forests round-tripped"


def check_order_axioms(max_labels, seed):
    """Reflexivity, antisymmetry, transitivity; strict vertex growth."""
    top = min(max_labels, 4)
    for n in range(1, top + 1):
        forests = enumerate_forests(_labels(n))
        down = {g: set(lower_set(g)) for g in forests}
        for g in forests:
            if not leq(g, g):
                return False, f"reflexivity broke at {format_forest(g)}"
            for f in down[g]:
                if f != g:
                    if leq(g, f):
                        return False, (f"antisymmetry broke at {format_forest(f)}"
                                       f" / {format_forest(g)}")
                    if f.n_inner >= g.n_inner:
                        return False, (f"vertex count not strict at {format_forest(f)}"
                                       f" < {format_forest(g)}")
                for h in down[f]:
                    if h not in down[g]:
                        return False, (f"transitivity broke: {format_forest(h)} <= "
                                       f"{format_forest(f)} <= {format_forest(g)}")
    extra = ""
    if max_labels >= 5:
        rng = random.Random(seed)
        forests = enumerate_forests(_labels(5))
        for _ in range(2000):
            g = rng.choice(forests)
            below_g = lower_set(g)
            f = rng.choice(below_g)
            h = rng.choice(lower_set(f))
            if not leq(h, g):
                return False, (f"transitivity broke: {format_forest(h)} <= "
                               f"{format_forest(f)} <= {format_forest(g)}")
        extra = " plus 2000 sampled triples on 5"
    return True, f"order axioms exhaustive to {top} labels{extra}"


def _sweep_intervals(max_labels):
    for n in range(1, max_labels + 1):
        for g in enumerate_forests(_labels(n)):
            for f in lower_set(g):
                yield f, g


def _agreement_failures(f, g):
    """Names of the fast-vs-brute comparisons that fail on [f, g]."""
    p = interval(f, g)
    pair = marked_pair(f, g)
    bad = []
    m_brute = m_polynomial(p)
    if m_brute != m_fast(pair):
        bad.append("m")
    if z_polynomial(p) != z_fast(pair):
        bad.append("z")
    chi_brute = characteristic_polynomial(p)
    if chi_brute != chi_fast(pair):
        bad.append("chi")
    if chi_fast(pair) != chi_recursive(pair):
        bad.append("chi-recurrence")
    if mobius_number(p) != mobius_fast(pair):
        bad.append("mobius")
    if m_brute.substitute_y(1) != UnivariatePolynomial.constant(1):
        bad.append("m-at-one")
    if _roots_by_trial_division(chi_brute, exponents(pair)) is None:
        bad.append("chi-roots")
    if not check_ranked(p):
        bad.append("rank")
    return bad


def _roots_by_trial_division(chi, roots):
    """Divide chi by (y - e) for each e; None unless it factors exactly."""
    coeffs = dict(chi.coeffs)
    for e in roots:
        degree = max(coeffs, default=0)
        if degree == 0:
            return None
        quotient = {}
        acc = 0
        for d in range(degree - 1, -1, -1):
            acc = coeffs.get(d + 1, 0) + acc * e
            quotient[d] = acc
        if coeffs.get(0, 0) + acc * e != 0:
            return None
        coeffs = {d: c for d, c in quotient.items() if c != 0}
    if coeffs != {0: 1}:
        return None
    return tuple(sorted(roots))


def check_oracle_equivalence(max_labels):
    """Fast engine against brute force over every interval."""
    top = min(max_labels, 5)
    count = 0
    for f, g in _sweep_intervals(top):
        bad = _agreement_failures(f, g)
        if bad:
            return False, (f"{','.join(bad)} disagree on "
                           f"[{format_forest(f)}, {format_forest(g)}]")
        count += 1
    return True, f"{count} intervals agree (exhaustive to {top} labels)"


def check_sampled_oracle(seed, samples=20):
    """Seeded fast-vs-brute samples on six labels."""
    rng = random.Random(seed)
    forests6 = enumerate_forests(_labels(6))
    for _ in range(samples):
        g = rng.choice(forests6)
        f = rng.choice(lower_set(g))
        bad = _agreement_failures(f, g)
        if bad:
            return False, (f"{','.join(bad)} disagree on "
                           f"[{format_forest(f)}, {format_forest(g)}]")
    return True, f"{samples} sampled intervals on 6 labels agree"


def check_comb_chi(max_labels):
    """Characteristic polynomial below a comb is the falling factorial."""
    for n in range(2, max_labels + 1):
        comb = forest([make_comb(_labels(n))])
        pair = MarkedTreePair(comb, frozenset())
        if chi_fast(pair) != partition_char_poly(n):
            return False, f"comb on {n} labels disagrees with the partition lattice"
        if mobius_fast(pair) != (-1) ** (n - 1) * math.factorial(n - 1):
            return False, f"comb Mobius number wrong on {n} labels"
    return True, f"comb chi matches the partition lattice up to {max_labels} labels"


def check_semimodularity_witness():
    """Exhaustive search on four labels finds a non-semimodular interval."""
    for f, g in _sweep_intervals(4):
        p = interval(f, g)
        violation = find_semimodularity_violation(p)
        if violation is not None:
            x, y = violation
            return True, (f"witness [{format_forest(f)}, {format_forest(g)}] "
                          f"at {format_forest(x)} / {format_forest(y)}")
    return False, "no non-semimodular interval found on 4 labels"


def _marked_groups(g):
    groups = {}
    for f in lower_set(g):
        groups.setdefault(marked_vertices(f, g), []).append(f)
    return groups


def check_classification(max_labels, seed, samples=300):
    """Intervals sharing (upper, marked set) are partitive-isomorphic."""
    pairs = 0
    for n in range(2, min(max_labels, 4) + 1):
        for g in enumerate_forests(_labels(n)):
            for marks, group in _marked_groups(g).items():
                posets = [as_partitive(f, g) for f in group]
                for i in range(len(group)):
                    for j in range(i + 1, len(group)):
                        if not partitive_isomorphic(posets[i], posets[j]):
                            return False, (
                                f"[{format_forest(group[i])}, {format_forest(g)}] vs "
                                f"[{format_forest(group[j])}, {format_forest(g)}]")
                        pairs += 1
    sampled = 0
    if max_labels >= 5:
        rng = random.Random(seed)
        forests5 = enumerate_forests(_labels(5))
        while sampled < samples:
            g = rng.choice(forests5)
            groups = [grp for grp in _marked_groups(g).values() if len(grp) > 1]
            if not groups:
                continue
            group = rng.choice(groups)
            f1, f2 = rng.sample(group, 2)
            if not partitive_isomorphic(as_partitive(f1, g), as_partitive(f2, g)):
                return False, (f"[{format_forest(f1)}, {format_forest(g)}] vs "
                               f"[{format_forest(f2)}, {format_forest(g)}]")
            sampled += 1
    extra = f" plus {sampled} sampled pairs on 5" if sampled else ""
    return True, f"{pairs} exhaustive pairs agree{extra}"


def check_rebuild_isomorphisms(max_labels):
    """One decomposition step rebuilt abstractly matches the interval."""
    count = 0
    for f, g in _sweep_intervals(min(max_labels, 4)):
        if not partitive_isomorphic(as_partitive(f, g), rebuild_one_step(f, g)):
            return False, f"rebuild differs on [{format_forest(f)}, {format_forest(g)}]"
        count += 1
    return True, f"{count} intervals rebuilt"


def run_verification(max_labels=4, seed=0) -> list[CheckResult]:
    """Run every suite up to the given size; seeded where sampling occurs."""
    if not 2 <= max_labels <= 6:
        raise ValueError("max_labels must be between 2 and 6")
    suites = [
        ("counting", lambda: check_counting(max_labels)),
        ("round-trip", lambda: check_roundtrip(max_labels)),
        ("order-axioms", lambda: check_order_axioms(max_labels, seed)),
        ("oracle-equivalence", lambda: check_oracle_equivalence(max_labels)),
        ("comb-partition-chi", lambda: check_comb_chi(max_labels)),
    ]
    if max_labels >= 4:
        suites.append(("non-semimodular-witness", check_semimodularity_witness))
        suites.append(("marked-classification", lambda: check_classification(max_labels, seed)))
        suites.append(("rebuild-isomorphisms", lambda: check_rebuild_isomorphisms(max_labels)))
    if max_labels >= 6:
        suites.append(("sampled-oracle-6", lambda: check_sampled_oracle(seed)))
    results = []
    for name, fn in suites:
        start = time.perf_counter()
        passed, detail = fn()
        millis = (time.perf_counter() - start) * 1000.0
        results.append(CheckResult(name, passed, detail, millis))
    return results
