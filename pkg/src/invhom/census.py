"""Exhaustive scans over all structures of a tiny order.

A candidate of order n is a product table together with an alpha table,
n**(n*n) * n**n in all, so full censuses stop at order 3.  Iteration is
deterministic: product tables vary row-major, alpha tables innermost, and
the law checks run on raw index tuples so the scan stays cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

from .finite import FiniteHomMagma

_LABELS = ("a", "b", "c", "d")

Quad = Tuple[bool, bool, bool, bool]


def _hom_ok(mul, alpha, n) -> bool:
    for i in range(n):
        ai = alpha[i]
        for j in range(n):
            mij = mul[i][j]
            for k in range(n):
                if mul[ai][mul[j][k]] != mul[mij][alpha[k]]:
                    return False
    return True


def _assoc_ok(mul, n) -> bool:
    for i in range(n):
        for j in range(n):
            mij = mul[i][j]
            for k in range(n):
                if mul[mij][k] != mul[i][mul[j][k]]:
                    return False
    return True


def _mult_ok(mul, alpha, n) -> bool:
    for i in range(n):
        for j in range(n):
            if alpha[mul[i][j]] != mul[alpha[i]][alpha[j]]:
                return False
    return True


def _invol_ok(alpha, n) -> bool:
    return all(alpha[alpha[i]] == i for i in range(n))


def canonical_form(mul, alpha) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Least relabeling of a candidate, flattened.

    Two candidates are isomorphic exactly when their canonical forms are
    equal, so this doubles as the deduplication key for up_to_iso scans.
    """
    n = len(alpha)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        flat_mul = tuple(
            perm[mul[inv[p]][inv[q]]] for p in range(n) for q in range(n)
        )
        flat_alpha = tuple(perm[alpha[inv[p]]] for p in range(n))
        cand = (flat_mul, flat_alpha)
        if best is None or cand < best:
            best = cand
    return best


def _is_canonical(mul, alpha, n) -> bool:
    flat = (tuple(mul[i][j] for i in range(n) for j in range(n)), tuple(alpha))
    return flat == canonical_form(mul, alpha)


@dataclass(frozen=True)
class Census:
    """Counts of candidates by the quadruple of laws they satisfy.

    Keys of ``counts`` are (hom_associative, associative, multiplicative,
    involutive_alpha); all 16 keys are present.  With up_to_iso the counts
    are of isomorphism classes instead of raw tables.
    """

    order: int
    total_candidates: int
    counts: Dict[Quad, int]
    up_to_iso: bool = False

    def law_count(
        self,
        hom_associative: Optional[bool] = None,
        associative: Optional[bool] = None,
        multiplicative: Optional[bool] = None,
        involutive_alpha: Optional[bool] = None,
    ) -> int:
        wanted = (hom_associative, associative, multiplicative, involutive_alpha)
        total = 0
        for quad, k in self.counts.items():
            if all(w is None or w == q for w, q in zip(wanted, quad)):
                total += k
        return total


def census(order: int, up_to_iso: bool = False) -> Census:
    """Classify every candidate of the given order against all four laws."""
    if not 1 <= order <= 3:
        raise ValueError("census is exhaustive, order must be 1, 2, or 3")
    n = order
    rows = list(itertools.product(range(n), repeat=n))
    alphas = rows
    invol = {al: _invol_ok(al, n) for al in alphas}
    counts = {q: 0 for q in itertools.product((False, True), repeat=4)}
    total = 0
    for mul in itertools.product(rows, repeat=n):
        assoc = _assoc_ok(mul, n)
        for al in alphas:
            total += 1
            if up_to_iso and not _is_canonical(mul, al, n):
                continue
            quad = (_hom_ok(mul, al, n), assoc, _mult_ok(mul, al, n), invol[al])
            counts[quad] += 1
    return Census(order=n, total_candidates=total, counts=counts, up_to_iso=up_to_iso)


def iter_matching(
    order: int,
    hom_associative: Optional[bool] = None,
    associative: Optional[bool] = None,
    multiplicative: Optional[bool] = None,
    involutive_alpha: Optional[bool] = None,
    up_to_iso: bool = False,
) -> Iterator[FiniteHomMagma]:
    """Stream the structures of one order that match the requested laws.

    Law arguments are three-valued: True to require, False to forbid, None
    to ignore.  With up_to_iso only the least relabeling of each
    isomorphism class is yielded.  Orders up to 4 are accepted, but an
    unfiltered scan at order 4 is astronomically long; callers are expected
    to bound it (the command line tool insists on a filter and a limit).
    """
    if not 1 <= order <= 4:
        raise ValueError("order must be between 1 and 4")
    return _matching(
        order,
        hom_associative,
        associative,
        multiplicative,
        involutive_alpha,
        up_to_iso,
    )


def _matching(
    order, hom_associative, associative, multiplicative, involutive_alpha, up_to_iso
):
    n = order
    labels = _LABELS[:n]
    alphas = list(itertools.product(range(n), repeat=n))
    if involutive_alpha is not None:
        alphas = [al for al in alphas if _invol_ok(al, n) == involutive_alpha]
    rows = list(itertools.product(range(n), repeat=n))
    for mul in itertools.product(rows, repeat=n):
        if associative is not None and _assoc_ok(mul, n) != associative:
            continue
        for al in alphas:
            if hom_associative is not None and _hom_ok(mul, al, n) != hom_associative:
                continue
            if multiplicative is not None and _mult_ok(mul, al, n) != multiplicative:
                continue
            if up_to_iso and not _is_canonical(mul, al, n):
                continue
            yield FiniteHomMagma(labels, mul, al)
