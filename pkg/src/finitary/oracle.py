"""Brute-force reference answers for cross-checking the basis machinery.

Everything here enumerates words outright and recomputes products with plain
loops; nothing is shared with the candidate-driven scan in ``basis`` beyond
the representation type itself and the rank routine.  Exponential in the word
length by design, so every entry point takes an explicit budget.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import IndependenceTester, dot, mat_vec, rank, vec_mat
from .models import Word
from .representation import LinearRepresentation
from .scalars import DEFAULT_TOLERANCE

DEFAULT_BUDGET = 1_000_000


class BudgetExceededError(RuntimeError):
    pass


def _word_count(num_symbols: int, max_len: int) -> int:
    return sum(num_symbols ** t for t in range(max_len + 1))


def _check_budget(amount: int, budget: int, what: str):
    if amount > budget:
        raise BudgetExceededError(
            f"{what} needs {amount} entries, budget is {budget}")


def _all_words(num_symbols: int, max_len: int) -> list[Word]:
    words: list[Word] = []
    for t in range(max_len + 1):
        words.extend(itertools.product(range(num_symbols), repeat=t))
    return words


@dataclass(frozen=True)
class ProbTable:
    max_len: int
    entries: dict


def enumerate_probs(lr: LinearRepresentation, max_len: int,
                    budget: int = DEFAULT_BUDGET) -> ProbTable:
    """Word probabilities for every word up to ``max_len``.

    Left-to-right products carried down a depth-first walk; the prefix vector
    is the only reuse.
    """
    ns = len(lr.alphabet)
    _check_budget(_word_count(ns, max_len), budget, "probability table")
    entries: dict = {}

    def walk(word: Word, row):
        entries[word] = dot(row, lr.fin)
        if len(word) < max_len:
            for a in range(ns):
                walk(word + (a,), vec_mat(row, lr.matrices[a]))

    walk((), lr.init)
    return ProbTable(max_len, entries)


@dataclass(frozen=True)
class BruteResult:
    equal_up_to: bool
    witness: Word | None
    values: tuple | None


def brute_equiv(lr_x: LinearRepresentation, lr_y: LinearRepresentation,
                max_len: int, tolerance: float = 0.0,
                budget: int = DEFAULT_BUDGET) -> BruteResult:
    """Compare every word up to ``max_len``; first difference wins, scanning
    shorter words first and symbols in alphabet order.  ``tolerance`` zero
    means literal equality."""
    if len(lr_x.alphabet) != len(lr_y.alphabet):
        raise ValueError("alphabet size mismatch")
    table_x = enumerate_probs(lr_x, max_len, budget)
    table_y = enumerate_probs(lr_y, max_len, budget)
    ns = len(lr_x.alphabet)
    for t in range(max_len + 1):
        for word in itertools.product(range(ns), repeat=t):
            px = table_x.entries[word]
            py = table_y.entries[word]
            if (px != py) if tolerance == 0.0 else (abs(px - py) > tolerance):
                return BruteResult(False, word, (px, py))
    return BruteResult(True, None, None)


def hankel_rank(lr: LinearRepresentation, max_len: int,
                budget: int = DEFAULT_BUDGET,
                tolerance: float = DEFAULT_TOLERANCE) -> int:
    """Rank of the block with rows and columns both over all words up to
    ``max_len``.  Stabilizes at the process dimension once ``max_len``
    reaches the representation dimension."""
    ns = len(lr.alphabet)
    words = _all_words(ns, max_len)
    _check_budget(len(words) * len(words), budget, "Hankel block")
    prefix_rows = []
    for w in words:
        row = lr.init
        for a in w:
            row = vec_mat(row, lr.matrices[a])
        prefix_rows.append(row)
    suffix_cols = []
    for v in words:
        col = lr.fin
        for a in reversed(v):
            col = mat_vec(lr.matrices[a], col)
        suffix_cols.append(col)
    block = [[dot(row, col) for row in prefix_rows] for col in suffix_cols]
    return rank(block, lr.mode, tolerance)


def process_dimension(lr: LinearRepresentation,
                      budget: int = DEFAULT_BUDGET,
                      tolerance: float = DEFAULT_TOLERANCE) -> int:
    """Process dimension by exhaustive span saturation.

    Enumerates whole generations of prefix products (all words of length t,
    not just the independent ones) until one full generation adds nothing to
    the span; the same for suffix products.  A generation that adds nothing
    proves the span complete, because the next generation consists of
    one-step extensions of its members.  The process dimension is then the
    rank of the basis-against-basis pairing, which equals the rank of the
    unbounded Hankel array.
    """
    ns = len(lr.alphabet)
    n = lr.dimension

    def saturate(start, extend):
        tester = IndependenceTester(n, lr.mode, tolerance)
        kept = []
        if tester.try_insert(start):
            kept.append(start)
        generation = [start]
        seen = 1
        while True:
            generation = [extend(vec, a) for vec in generation for a in range(ns)]
            seen += len(generation)
            if seen > budget:
                raise BudgetExceededError(
                    f"span saturation needs more than {budget} vectors")
            added = False
            for vec in generation:
                if tester.try_insert(vec):
                    kept.append(vec)
                    added = True
            if not added:
                return kept

    prefix_basis = saturate(lr.init, lambda vec, a: vec_mat(vec, lr.matrices[a]))
    suffix_basis = saturate(lr.fin, lambda vec, a: mat_vec(lr.matrices[a], vec))
    pairing = [[dot(p, s) for p in prefix_basis] for s in suffix_basis]
    return rank(pairing, lr.mode, tolerance)
