"""Linear codes over GF(q) and the exact distance engines.

A LinearCode is immutable: the generator matrix is canonicalized to RREF
at construction, so structural equality is subspace equality.  The
minimum-distance and coset-minimum-weight engines enumerate the full
codeword space when q^k fits the budget and otherwise fall back to a
Brouwer-Zimmermann information-set sweep, which also handles the coset
variant (weights of words outside a subcode).
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from . import linalg
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    IndexOutOfRange,
    NotNested,
    ZeroCode,
)
from .gf import Field

DEFAULT_BUDGET = 1 << 22
_CHUNK = 1 << 14


def default_budget() -> int:
    env = os.environ.get("HIRZCODE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class LinearCode:
    """A subspace of F_q^n held as a canonical (RREF) generator matrix."""

    def __init__(self, field: Field, n: int, rows=None):
        self.field = field
        self.n = int(n)
        gen = linalg.as_matrix(rows if rows is not None else [], self.n)
        if gen.shape[1] != self.n:
            raise DimensionMismatch(f"rows have length {gen.shape[1]}, expected {self.n}")
        self.gen = linalg.row_space(field, gen)
        self.gen.setflags(write=False)

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, n)

    @classmethod
    def full(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, n, linalg.identity(n))

    # -- structure ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.gen.shape == other.gen.shape
            and bool(np.array_equal(self.gen, other.gen))
        )

    def __hash__(self):
        return hash((self.field, self.n, self.gen.tobytes()))

    def __repr__(self):
        return f"LinearCode(q={self.field.q}, n={self.n}, k={self.k})"

    def _require_same_space(self, other: "LinearCode"):
        if self.field != other.field or self.n != other.n:
            raise DimensionMismatch("codes live in different ambient spaces")

    def contains(self, other: "LinearCode") -> bool:
        self._require_same_space(other)
        return all(linalg.in_row_space(self.field, self.gen, row) for row in other.gen)

    def contains_word(self, word: np.ndarray) -> bool:
        return linalg.in_row_space(self.field, self.gen, word)

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.n, linalg.kernel_basis(self.field, self.gen))

    def parity_check(self) -> np.ndarray:
        return linalg.kernel_basis(self.field, self.gen)

    def sum(self, other: "LinearCode") -> "LinearCode":
        self._require_same_space(other)
        return LinearCode(self.field, self.n, np.vstack([self.gen, other.gen]))

    def intersection(self, other: "LinearCode") -> "LinearCode":
        self._require_same_space(other)
        rows = linalg.subspace_intersection(self.field, self.gen, other.gen)
        return LinearCode(self.field, self.n, rows)

    # -- coordinate surgery ---------------------------------------------------

    def puncture(self, keep) -> "LinearCode":
        keep = list(keep)
        if len(set(keep)) != len(keep) or any(i < 0 or i >= self.n for i in keep):
            raise IndexOutOfRange("keep indices must be distinct and in range")
        return LinearCode(self.field, len(keep), self.gen[:, keep])

    def extend_by_zero(self, positions, n_target: int) -> "LinearCode":
        positions = sorted(set(positions))
        if any(i < 0 or i >= n_target for i in positions):
            raise IndexOutOfRange("zero positions out of range")
        if len(positions) + self.n != n_target:
            raise DimensionMismatch("positions do not pad to the target length")
        keep = [i for i in range(n_target) if i not in set(positions)]
        out = np.zeros((self.k, n_target), dtype=np.int64)
        out[:, keep] = self.gen
        return LinearCode(self.field, n_target, out)

    def schur_multiply(self, m) -> "LinearCode":
        m = np.asarray(m, dtype=np.int64)
        if m.shape != (self.n,):
            raise DimensionMismatch(f"multiplier length {m.shape} != n = {self.n}")
        return LinearCode(self.field, self.n, self.field.mul_arr(self.gen, m[None, :]))

    # -- weights --------------------------------------------------------------

    def min_distance(self, budget: int | None = None) -> int:
        if self.k == 0:
            raise ZeroCode("the zero code has no minimum distance")
        budget = budget if budget is not None else default_budget()
        if self.field.q**self.k <= budget:
            return _enumerate_min_weight(self, None, budget)
        return _bz_min_weight(self, None, budget)

    def weight_distribution(self, budget: int | None = None) -> dict[int, int]:
        budget = budget if budget is not None else default_budget()
        if self.field.q**self.k > budget:
            raise BudgetExceeded(f"q^k = {self.field.q ** self.k} exceeds budget {budget}")
        hist: dict[int, int] = {}
        for weights in _codeword_weight_chunks(self):
            vals, counts = np.unique(weights, return_counts=True)
            for w, c in zip(vals, counts):
                hist[int(w)] = hist.get(int(w), 0) + int(c)
        hist[0] = hist.get(0, 0) + 1  # the zero word, skipped by the enumerator
        return hist


def coset_min_weight(c2: LinearCode, c1: LinearCode, budget: int | None = None) -> int:
    """Minimum weight over codewords of c2 that are not in c1.

    Requires strict nesting c1 < c2.  Strategy, in order: full enumeration
    of c2 when q^k2 fits the budget; the d(c1) > d(c2) shortcut (then the
    answer is d(c2), itself computable by Brouwer-Zimmermann); a
    Brouwer-Zimmermann sweep of c2 that only records words outside c1.
    """
    c2._require_same_space(c1)
    if c1.k >= c2.k or not c2.contains(c1):
        raise NotNested("need c1 strictly contained in c2")
    budget = budget if budget is not None else default_budget()
    q = c2.field.q
    if q**c2.k <= budget:
        return _enumerate_min_weight(c2, c1, budget)
    d2 = c2.min_distance(budget)
    if c1.k == 0:
        return d2
    if c1.min_distance(budget) > d2:
        return d2
    return _bz_min_weight(c2, c1, budget)


def min_weight_outside(code: LinearCode, exclude: LinearCode, budget: int | None = None) -> int:
    """Minimum weight over codewords of `code` not lying in `exclude`.

    Unlike coset_min_weight this does not require nesting: words in the
    intersection are excluded, everything else of `code` competes.
    """
    code._require_same_space(exclude)
    if exclude.contains(code):
        raise NotNested("every codeword lies in the excluded code")
    budget = budget if budget is not None else default_budget()
    if code.field.q**code.k <= budget:
        return _enumerate_min_weight(code, exclude, budget)
    return _bz_min_weight(code, exclude, budget)


# -- enumeration engine -------------------------------------------------------


def _codeword_chunks(code: LinearCode):
    """All nonzero codewords, in message order, chunked."""
    f, g, k = code.field, code.gen, code.k
    q = f.q
    total = q**k
    for start in range(1, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        words = np.zeros((idx.size, code.n), dtype=np.int64)
        rest = idx.copy()
        for i in range(k):
            digit = rest % q
            rest //= q
            words = f.add_arr(words, f.mul_arr(digit[:, None], g[i][None, :]))
        yield words


def _codeword_weight_chunks(code: LinearCode):
    for words in _codeword_chunks(code):
        yield np.count_nonzero(words, axis=1)


def _enumerate_min_weight(code: LinearCode, exclude: LinearCode | None, budget: int) -> int:
    h = exclude.parity_check() if exclude is not None and exclude.k else None
    best = code.n + 1
    for words in _codeword_chunks(code):
        weights = np.count_nonzero(words, axis=1)
        if h is not None:
            syndromes = linalg.matmul(code.field, words, h.T)
            outside = np.any(syndromes != 0, axis=1)
            weights = weights[outside]
        if weights.size:
            best = min(best, int(weights.min()))
    if best > code.n:
        raise NotNested("no codeword outside the excluded subcode")  # defensive
    return best


# -- Brouwer-Zimmermann engine ------------------------------------------------


def _information_sets(code: LinearCode):
    """Disjoint (possibly partial-rank) information sets.

    Each entry is (generator basis gi, r) where gi spans the code in a form
    systematic on r fresh pivot columns disjoint from earlier sets.  Any
    codeword whose message weight w.r.t. gi exceeds w has at least
    w + 1 - (k - r) nonzeros on those columns, which is the standard
    Brouwer-Zimmermann lower-bound bookkeeping.
    """
    f = code.field
    sets = []
    used = np.zeros(code.n, dtype=bool)
    while not used.all():
        order = np.concatenate([np.nonzero(~used)[0], np.nonzero(used)[0]])
        gperm, rank, pivots = linalg.rref(f, code.gen[:, order])
        piv_cols = [int(order[c]) for c in pivots]
        fresh = [c for c in piv_cols if not used[c]]
        if not fresh:
            break
        gi = np.empty_like(code.gen)
        gi[:, order] = gperm[:rank]
        sets.append((gi, len(fresh)))
        used[fresh] = True
    return sets


def _nonzero_value_matrix(f: Field, w: int) -> np.ndarray:
    """All length-w vectors over F_q^* with first entry fixed to 1."""
    if w == 1:
        return np.ones((1, 1), dtype=np.int64)
    nz = np.arange(1, f.q, dtype=np.int64)
    out = np.ones(((f.q - 1) ** (w - 1), w), dtype=np.int64)
    grids = np.meshgrid(*([nz] * (w - 1)), indexing="ij")
    for j, gcol in enumerate(grids):
        out[:, j + 1] = gcol.ravel()
    return out


def _bz_min_weight(code: LinearCode, exclude: LinearCode | None, budget: int) -> int:
    """Brouwer-Zimmermann sweep; `exclude` restricts to words outside it."""
    f, k, n = code.field, code.k, code.n
    sets = _information_sets(code)
    h = exclude.parity_check() if exclude is not None and exclude.k else None
    best = n + 1
    spent = 0
    for w in range(1, k + 1):
        values = _nonzero_value_matrix(f, w)
        for gi, _rank in sets:
            for combo in itertools.combinations(range(k), w):
                rows = gi[list(combo)]
                words = linalg.matmul(f, values, rows)
                spent += words.shape[0]
                weights = np.count_nonzero(words, axis=1)
                if h is not None:
                    syndromes = linalg.matmul(f, words, h.T)
                    outside = np.any(syndromes != 0, axis=1)
                    weights = weights[outside]
                if weights.size:
                    best = min(best, int(weights.min()))
            if spent > budget:
                raise BudgetExceeded(
                    f"Brouwer-Zimmermann sweep exceeded budget {budget} at weight {w}"
                )
        lower = sum(max(0, (w + 1) - (k - rank)) for _gi, rank in sets)
        if best <= lower:
            return best
    if best > n:
        raise NotNested("no codeword outside the excluded subcode")  # defensive
    return best
