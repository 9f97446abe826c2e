"""Staged Gauss-Jordan elimination over row-finite infinite matrices.

Rows of the input matrix arrive one at a time. Each stage reduces the
incoming row against the pivot rows found so far, normalizes it into a new
pivot row (or records a zero row), then clears the new pivot column from all
earlier rows. The same operations are mirrored on an identity matrix, whose
rows therefore always express the current reduced rows in terms of the
original input rows.

With the rightmost strategy the pivot of a row is its rightmost support
index; with the leftmost strategy it is the leftmost one.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Tuple

from .rows import Row
from .scalars import Field


class PivotCollision(Exception):
    """Raised when a new pivot lands on a column that is already pinned."""


class CertificateViolation(Exception):
    """Raised when an observed pivot breaks a declared pivot floor promise."""

    def __init__(self, stage: int, column: int, floor: int):
        self.stage = stage
        self.column = column
        self.floor = floor
        super().__init__(
            "stage %d produced pivot column %d below promised floor %d"
            % (stage, column, floor)
        )


class IndexOutOfRange(IndexError):
    """Raised when a prefix index exceeds the current stage."""


class PivotFloor:
    """A promise b: after stage m, every later pivot column is >= b(m).

    The promise is validated online: each observed nonzero pivot is checked
    against the largest floor promised by the completed stages before it.
    Zero rows produce no pivot and are exempt.
    """

    def __init__(self, promise: Callable[[int], int]):
        self.promise = promise
        self.validated_through = -1

    @classmethod
    def affine(cls, slope: int, intercept: int) -> "PivotFloor":
        return cls(lambda m: slope * m + intercept)


class EliminationState:
    """All data accumulated by the staged elimination of one matrix."""

    def __init__(self, field: Field, strategy: str = "rps", certificate: Optional[PivotFloor] = None):
        if strategy not in ("rps", "lps"):
            raise ValueError("unknown strategy: %r" % (strategy,))
        self.field = field
        self.strategy = strategy
        self.rows: List[Row] = []
        self.passage: List[Row] = []
        self.pivots: Dict[int, int] = {}
        self.pivot_history: List[Optional[int]] = []
        self.last_changed: List[int] = []
        self.certificate = certificate
        self._floor_max: Optional[int] = None

    @property
    def stage(self) -> int:
        """Index of the last processed input row; -1 before the first."""
        return len(self.rows) - 1

    def pivot_of(self, r: Row) -> Optional[int]:
        return r.maxs if self.strategy == "rps" else r.zeta


def gaussian_reduce(state: EliminationState, c: Row) -> Row:
    """Reduce an incoming row against the current pivot rows.

    Every pivot row is one at its own pivot column and zero at all other
    pivot columns, so the multiplier against pivot i is just the incoming
    row's original entry there; the result is independent of pivot order.
    """
    reduced, _ = _reduce_with_multipliers(state, c)
    return reduced


def _reduce_with_multipliers(
    state: EliminationState, c: Row
) -> Tuple[Row, List[Tuple[int, object]]]:
    F = state.field
    mults = []
    for col, val in c.support:
        idx = state.pivots.get(col)
        if idx is not None:
            mults.append((idx, val))
    reduced = c
    for idx, val in mults:
        reduced = _sub_scaled(reduced, val, state.rows[idx])
    return reduced, mults


def _sub_scaled(y: Row, lam, x: Row) -> Row:
    from .rows import axpy_raw

    return axpy_raw(y.field.neg(lam), x, y)


def jordan_update(state: EliminationState, g: Row) -> None:
    """Clear the pivot column of the newly appended pivot row g everywhere.

    g must already sit at the last index of state.rows with its passage row
    in place; earlier rows (and their passage rows) are patched in step and
    recorded in last_changed.
    """
    n = len(state.rows) - 1
    if n < 0 or state.rows[n] is not g:
        raise ValueError("jordan_update expects the last appended row")
    col = state.pivot_of(g)
    if col is None:
        return
    if col in state.pivots:
        raise PivotCollision(
            "column %d already pinned by row %d" % (col, state.pivots[col])
        )
    g_passage = state.passage[n]
    for i in range(n):
        mu = state.rows[i].raw(col)
        if mu:
            state.rows[i] = _sub_scaled(state.rows[i], mu, g)
            state.passage[i] = _sub_scaled(state.passage[i], mu, g_passage)
            state.last_changed[i] = n
    state.pivots[col] = n


def step(state: EliminationState, c: Row) -> EliminationState:
    """Run one full stage on the incoming row and return the state."""
    n = len(state.rows)
    reduced, mults = _reduce_with_multipliers(state, c)
    p = Row.unit(state.field, n)
    for idx, val in mults:
        p = _sub_scaled(p, val, state.passage[idx])

    if reduced.is_zero():
        state.rows.append(reduced)
        state.passage.append(p)
        state.pivot_history.append(None)
        state.last_changed.append(n)
        _absorb_floor(state, n)
        return state

    col = state.pivot_of(reduced)
    if state.certificate is not None and state._floor_max is not None:
        if col < state._floor_max:
            raise CertificateViolation(n, col, state._floor_max)
    lead = reduced.raw(col)
    inv = state.field.inv(lead)
    g = reduced.scaled_raw(inv)
    state.rows.append(g)
    state.passage.append(p.scaled_raw(inv))
    state.pivot_history.append(col)
    state.last_changed.append(n)
    jordan_update(state, g)
    _absorb_floor(state, n)
    return state


def _absorb_floor(state: EliminationState, n: int) -> None:
    if state.certificate is None:
        return
    b = state.certificate.promise(n)
    if state._floor_max is None or b > state._floor_max:
        state._floor_max = b
    state.certificate.validated_through = n


def step_lps(state: EliminationState, c: Row) -> EliminationState:
    """One stage under the leftmost strategy."""
    if state.strategy != "lps":
        raise ValueError("state strategy is %r, not lps" % (state.strategy,))
    return step(state, c)


def run_to(matrix, n: int, strategy: str = "rps") -> EliminationState:
    """Process rows 0..n of the matrix and return the resulting state."""
    state = EliminationState(
        matrix.field, strategy, certificate=getattr(matrix, "certificate", None)
    )
    for k in range(n + 1):
        step(state, matrix.row_at(k))
    return state


def prefix_stability(state, k: int) -> int:
    """Last stage at which any of rows 0..k changed.

    Works on any state-like object carrying stage and last_changed; the
    result is the empirical stage after which the prefix has stayed fixed so
    far and can only grow as later rows arrive.
    """
    if k > state.stage or k < 0:
        raise IndexOutOfRange("prefix %d exceeds stage %d" % (k, state.stage))
    return max(state.last_changed[: k + 1])


def certified_stable(state: EliminationState, k: int) -> str:
    """Decide whether rows 0..k are guaranteed final: certified|provisional.

    A future stage can touch row i only through a pivot column inside row
    i's support, so a validated floor promise strictly above every nonzero
    row's rightmost index freezes the prefix.
    """
    if k > state.stage or k < 0:
        raise IndexOutOfRange("prefix %d exceeds stage %d" % (k, state.stage))
    cert = state.certificate
    if cert is None or cert.validated_through < state.stage:
        return "provisional"
    floor = cert.promise(state.stage)
    for r in state.rows[: k + 1]:
        if not r.is_zero() and r.maxs >= floor:
            return "provisional"
    return "certified"


def nullspace_basis(state: EliminationState) -> List[Row]:
    """Passage rows of the zero rows; each is fixed from its creation stage."""
    return [
        state.passage[w]
        for w, r in enumerate(state.rows)
        if r.is_zero()
    ]


def snapshot(state: EliminationState) -> dict:
    """JSON-ready summary of the state, sparse rows as 'col:val' text."""
    return {
        "stage": state.stage,
        "strategy": state.strategy,
        "rows": [str(r) for r in state.rows],
        "passage": [str(p) for p in state.passage],
        "pivots": {str(col): idx for col, idx in sorted(state.pivots.items())},
        "pivot_history": [-1 if c is None else c for c in state.pivot_history],
        "last_changed": list(state.last_changed),
    }
