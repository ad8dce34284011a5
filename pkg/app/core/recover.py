"""
Recover (m, n) from an intersection matrix given up to simultaneous row/column permutation.

Pairs are emitted with m >= n >= 2. Every candidate is confirmed by
rebuilding its matrix and testing permutation equivalence.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from sympy import divisors

from app.core.errors import InvariantViolation
from app.core.variety import closed_form_matrix

logger = logging.getLogger(__name__)

Verdict = Literal["unique", "ambiguous", "underdetermined", "invalid"]
Pair = Tuple[int, int]


@dataclass(frozen=True)
class RecoveryResult:
    verdict: Verdict
    pairs: List[Pair] = field(default_factory=list)
    constraint: Optional[str] = None
    detail: Optional[str] = None


def validate_matrix(entries: Sequence[Sequence[int]]) -> Optional[str]:
    k = len(entries)
    if k == 0:
        return "matrix is empty"
    for row in entries:
        if len(row) != k:
            return "matrix is not square"
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                return f"entry {v!r} is not a nonnegative integer"
    for i in range(k):
        for j in range(i + 1, k):
            if entries[i][j] != entries[j][i]:
                return f"matrix is not symmetric at ({i}, {j})"
    return None


def _as_graph(entries: Sequence[Sequence[int]]) -> nx.Graph:
    graph = nx.Graph()
    for i, row in enumerate(entries):
        graph.add_node(i, diag=row[i])
    for i, row in enumerate(entries):
        for j in range(i + 1, len(row)):
            if row[j]:
                graph.add_edge(i, j, weight=row[j])
    return graph


def signature(entries: Sequence[Sequence[int]]) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """Sorted (diagonal, sorted off-diagonal row) pairs; equal for permutation-equivalent matrices."""
    k = len(entries)
    return tuple(sorted((entries[i][i], tuple(sorted(entries[i][j] for j in range(k) if j != i))) for i in range(k)))


def permutation_equivalent(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    if len(a) != len(b) or signature(a) != signature(b):
        return False
    matcher = GraphMatcher(
        _as_graph(a),
        _as_graph(b),
        node_match=lambda x, y: x["diag"] == y["diag"],
        edge_match=lambda x, y: x["weight"] == y["weight"],
    )
    return matcher.is_isomorphic()


def candidates_from_line_count(lines: int) -> List[Pair]:
    """All (m, n), m >= n >= 2, gcd 1, with (m-1)(n-1) = 2 * lines, ordered by n."""
    if lines < 0:
        raise ValueError(f"line count must be nonnegative, got {lines}")
    if lines == 0:
        return []
    target = 2 * lines
    out: List[Pair] = []
    for small in divisors(target):
        large = target // small
        if small > large:
            break
        m, n = large + 1, small + 1
        if math.gcd(m, n) == 1:
            out.append((m, n))
    return out


def _solve_primes(lines: int, product: int) -> Optional[Pair]:
    """m' >= n' >= 1 with m'n' = product and (m'-1)(n'-1) = 2 * lines."""
    total = product + 1 - 2 * lines
    disc = total * total - 4 * product
    if total < 2 or disc < 0:
        return None
    root = math.isqrt(disc)
    if root * root != disc or (total + root) % 2:
        return None
    mp, np_ = (total + root) // 2, (total - root) // 2
    if np_ < 1 or math.gcd(mp, np_) != 1:
        return None
    return mp, np_


def _decide(entries: Sequence[Sequence[int]]) -> Tuple[List[Pair], Optional[str]]:
    k = len(entries)
    diagonal = [entries[i][i] for i in range(k)]
    off = [entries[i][j] for i in range(k) for j in range(k) if i != j]

    if sum(diagonal) == 0:
        if k == 2:
            a12 = entries[0][1]
            if a12 == 0:
                return [], "trace-zero 2x2 matrix needs a positive off-diagonal entry"
            if a12 == 2:
                return [(3, 3), (4, 2)], None
            return [(2 * a12, 2)], None
        d = 2 * k - 2 if 1 in off else 2 * k - 1
        return [(d, d)], None

    low = min(diagonal)
    times = diagonal.count(low)
    if times == 1:
        d = 2 * k - 1
        product, rem = divmod(min(off), 2)
        if rem:
            return [], "minimum off-diagonal entry is odd for odd d"
    elif times == 2:
        d = 2 * k - 2
        product = min(off)
    else:
        return [], f"smallest diagonal entry {low} appears {times} times"
    primes = _solve_primes(low, product)
    if primes is None:
        return [], f"no coprime (m', n') with m'n' = {product} and (m'-1)(n'-1) = {2 * low}"
    mp, np_ = primes
    return [(mp * d, np_ * d)], None


def recover(entries: Sequence[Sequence[int]]) -> RecoveryResult:
    problem = validate_matrix(entries)
    if problem:
        return RecoveryResult(verdict="invalid", detail=problem)

    k = len(entries)
    if k == 1:
        lines = entries[0][0]
        candidates = candidates_from_line_count(lines)
        constraint = f"(m-1)(n-1) = {2 * lines}, gcd(m, n) = 1"
        if not candidates:
            return RecoveryResult(verdict="invalid", constraint=constraint, detail="no pair with m >= n >= 2 has this line count")
        if len(candidates) == 1:
            return RecoveryResult(verdict="unique", pairs=candidates, constraint=constraint)
        return RecoveryResult(verdict="underdetermined", pairs=candidates, constraint=constraint)

    pairs, reason = _decide(entries)
    if not pairs:
        return RecoveryResult(verdict="invalid", detail=reason)
    for m, n in pairs:
        rebuilt = closed_form_matrix(m, n)
        if not permutation_equivalent(rebuilt, entries):
            logger.debug("candidate (%d, %d) does not rebuild the matrix", m, n)
            return RecoveryResult(verdict="invalid", detail=f"candidate ({m}, {n}) does not reproduce the matrix")
    if len(pairs) == 1:
        return RecoveryResult(verdict="unique", pairs=pairs)
    return RecoveryResult(verdict="ambiguous", pairs=pairs)


def round_trip(m: int, n: int, matrix: Sequence[Sequence[int]]) -> RecoveryResult:
    """Recover from the matrix of (m, n); the result must name (max, min) of |m|, |n|."""
    result = recover(matrix)
    expected = (max(abs(m), abs(n)), min(abs(m), abs(n)))
    if expected not in result.pairs:
        raise InvariantViolation(f"recovery of ({m}, {n}) returned {result.verdict} {result.pairs}")
    return result
