"""Exhaustive search for balanced sequences, plus existence probes.

The search is the ground truth the constructions are checked against, so it
stays deliberately simple: every candidate is enumerated and tallied, and
nothing is pruned across candidates.  Within one candidate the tally exits
early (see balanced_terms).  The candidate space splits by fixed prefixes
into blocks that workers scan independently; blocks are merged in
lexicographic order, so the report is identical for any worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .admissible import is_admissible
from .errors import BudgetExceeded, UnsupportedLength
from .progressions import ArithmeticProgression, construct_balanced
from .sequences import Sequence, balanced_terms

DEFAULT_MAX_STATES = 10**8


@dataclass(frozen=True, slots=True)
class SearchBudget:
    """Caps for an exhaustive search: total states and worker processes."""

    max_states: int = DEFAULT_MAX_STATES
    workers: int = 1

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError(f"max_states must be positive, got {self.max_states}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")


@dataclass(frozen=True, slots=True)
class SearchReport:
    """Outcome of one exhaustive scan over all sequences of one length."""

    modulus: int
    length: int
    found: tuple[Sequence, ...]
    count: int
    states_examined: int


def _scan_block(n: int, m: int, prefix, count_only: bool):
    """Check every length-m sequence starting with `prefix`.

    The suffix runs through an odometer in lexicographic order.  Candidates
    live in one mutable list; only the rare balanced ones are copied out.
    """
    k = len(prefix)
    terms = list(prefix) + [0] * (m - k)
    found = []
    count = 0
    while True:
        if balanced_terms(terms, n):
            count += 1
            if not count_only:
                found.append(tuple(terms))
        j = m - 1
        while j >= k and terms[j] == n - 1:
            terms[j] = 0
            j -= 1
        if j < k:
            return found, count
        terms[j] += 1


def brute_force_balanced(
    n: int, m: int, budget: SearchBudget | None = None, count_only: bool = False
) -> SearchReport:
    """Enumerate all n^m sequences of length m and report the balanced ones.

    Raises BudgetExceeded before any work if n^m exceeds budget.max_states.
    found is sorted lexicographically and is empty in count_only mode.
    """
    if n < 1 or m < 1:
        raise ValueError("modulus and length must be positive")
    if budget is None:
        budget = SearchBudget()
    states = n**m
    if states > budget.max_states:
        raise BudgetExceeded(
            f"{n}^{m} = {states} states exceed the budget of {budget.max_states}"
        )
    # Prefix length just large enough that there is at least one block per
    # worker; every block is then a contiguous lexicographic range.
    k = 0
    if budget.workers > 1 and n > 1:
        while n**k < budget.workers:
            k += 1
        k = min(k, m)
    prefixes = list(itertools.product(range(n), repeat=k))
    scan = partial(_scan_block, n, m, count_only=count_only)
    if budget.workers == 1 or len(prefixes) < 2:
        blocks = [scan(p) for p in prefixes]
    else:
        with ProcessPoolExecutor(max_workers=budget.workers) as pool:
            blocks = list(pool.map(scan, prefixes))
    found: list[tuple[int, ...]] = []
    count = 0
    for block_found, block_count in blocks:
        found.extend(block_found)
        count += block_count
    found.sort()  # already in block order; kept as a determinism backstop
    return SearchReport(n, m, tuple(Sequence(n, t) for t in found), count, states)


def classify_even_progressions(n: int, max_length: int = 40) -> list[ArithmeticProgression]:
    """All progressions mod even n, up to max_length, with balanced triangles.

    Scans every (start, step, length) triple; non-admissible lengths are
    rejected without expanding the progression.
    """
    if n < 2 or n % 2:
        raise ValueError(f"classification applies to even moduli, got {n}")
    if max_length < 1:
        raise ValueError(f"max_length must be positive, got {max_length}")
    hits = []
    for m in range(1, max_length + 1):
        if (m * (m + 1) // 2) % n:
            continue
        for a in range(n):
            for d in range(n):
                terms = [(a + j * d) % n for j in range(m)]
                if balanced_terms(terms, n):
                    hits.append(ArithmeticProgression(n, a, d, m))
    return hits


def molluzzo_probe(n: int, m: int, budget: SearchBudget | None = None) -> bool:
    """Whether any balanced sequence of admissible length m exists mod n.

    Tries the progression constructions first (odd n); otherwise falls back
    to exhaustive search when n^m fits the budget.  Raises BudgetExceeded
    when neither route settles the question.
    """
    if not is_admissible(n, m):
        raise ValueError(
            f"length {m} is not admissible mod {n}: {n} does not divide {m}*{m + 1}/2"
        )
    if budget is None:
        budget = SearchBudget()
    if n % 2:
        for family in ("beta", "alpha"):
            try:
                construct_balanced(n, m, family=family)
                return True
            except UnsupportedLength:
                continue
    if n**m <= budget.max_states:
        report = brute_force_balanced(n, m, budget, count_only=True)
        return report.count > 0
    raise BudgetExceeded(
        f"no construction applies and {n}^{m} states exceed the budget of {budget.max_states}"
    )
