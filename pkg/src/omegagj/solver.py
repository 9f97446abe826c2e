"""Symbolic solutions of row-finite systems from a reduced elimination state."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Union

from .engine import EliminationState, IndexOutOfRange
from .scalars import LinForm, Scalar


class SymbolicSequence:
    """A column-indexed sequence of linear forms, defined up to a horizon.

    Entries beyond the horizon are not known yet; asking for one raises
    IndexOutOfRange rather than silently returning zero.
    """

    def __init__(
        self,
        field,
        entries: Dict[int, LinForm],
        free_columns: Sequence[int],
        provenance: Dict[int, str],
        horizon: int,
        stage: int,
    ) -> None:
        self.field = field
        self.entries = {j: f for j, f in entries.items() if not f.is_zero()}
        self.free_columns = list(free_columns)
        self.provenance = dict(provenance)
        self.horizon = horizon
        self.stage = stage

    def entry(self, j: int) -> LinForm:
        if j < 0 or j > self.horizon:
            raise IndexOutOfRange(
                "column %d is outside the computed horizon %d" % (j, self.horizon)
            )
        return self.entries.get(j, LinForm.zero(self.field))

    def dense(self, n: Optional[int] = None) -> List[LinForm]:
        upto = self.horizon if n is None else min(n - 1, self.horizon)
        return [self.entry(j) for j in range(upto + 1)]

    def __add__(self, other: "SymbolicSequence") -> "SymbolicSequence":
        horizon = min(self.horizon, other.horizon)
        entries: Dict[int, LinForm] = {}
        for j in set(self.entries) | set(other.entries):
            if j <= horizon:
                entries[j] = self.entries.get(j, LinForm.zero(self.field)) + other.entries.get(
                    j, LinForm.zero(self.field)
                )
        provenance = dict(other.provenance)
        provenance.update(self.provenance)
        return SymbolicSequence(
            self.field,
            entries,
            sorted(set(self.free_columns) | set(other.free_columns)),
            provenance,
            horizon,
            max(self.stage, other.stage),
        )


@dataclass
class SolveResult:
    """Constraints plus the general solution of one system."""

    constraints: List[LinForm]
    general: SymbolicSequence
    deficiency_over_horizon: int
    horizon: int


def transform_rhs(
    passage: Sequence, rhs: Union[str, Sequence, Callable[[int], object]]
) -> List[LinForm]:
    """Push a right-hand side through the recorded combination rows.

    ``rhs`` may be a symbol namespace (each input row i contributes the
    symbol ``ns_i``), an explicit list of field values, or a callable
    giving the value for index i.
    """
    out: List[LinForm] = []
    for prow in passage:
        F = prow.field
        acc = LinForm.zero(F)
        for j, v in prow.support:
            if isinstance(rhs, str):
                term = LinForm.symbol(F, rhs, j)
            elif callable(rhs):
                term = _as_form(F, rhs(j))
            else:
                term = _as_form(F, rhs[j]) if j < len(rhs) else LinForm.zero(F)
            acc = acc + term.scaled_raw(v)
        out.append(acc)
    return out


def _as_form(F, value) -> LinForm:
    if isinstance(value, LinForm):
        return value
    if isinstance(value, Scalar):
        return LinForm.const(F, value.value)
    return LinForm.const(F, F.from_int(value) if isinstance(value, int) else value)


def consistency_constraints(state: EliminationState, k: Sequence[LinForm]) -> List[LinForm]:
    """Transformed right-hand sides sitting against zero rows must vanish."""
    return [k[w] for w, r in enumerate(state.rows) if r.is_zero() and not k[w].is_zero()]


def _provenance(state: EliminationState, column: int) -> str:
    cert = state.certificate
    if (
        cert is not None
        and cert.validated_through >= state.stage
        and column < cert.promise(state.stage)
    ):
        return "certified"
    return "provisional at stage %d" % state.stage


def homogeneous_solution(state: EliminationState, horizon: int) -> SymbolicSequence:
    """General solution of the homogeneous system through the given column.

    Free columns get fresh parameters t_0, t_1, ... in column order; each
    pivot column balances its row against the free columns to its left.
    """
    F = state.field
    free = [j for j in range(horizon + 1) if j not in state.pivots]
    param = {j: LinForm.symbol(F, "t", idx) for idx, j in enumerate(free)}
    entries: Dict[int, LinForm] = dict(param)
    provenance = {j: _provenance(state, j) for j in range(horizon + 1)}
    for col, i in state.pivots.items():
        if col > horizon:
            continue
        acc = LinForm.zero(F)
        for c, v in state.rows[i].support:
            if c != col:
                acc = acc + param[c].scaled_raw(F.neg(v))
        entries[col] = acc
    return SymbolicSequence(F, entries, free, provenance, horizon, state.stage)


def particular_solution(
    state: EliminationState, k: Sequence[LinForm], horizon: Optional[int] = None
) -> SymbolicSequence:
    """One solution: the transformed right-hand side placed at the pivot columns."""
    F = state.field
    if horizon is None:
        horizon = max(state.pivots) if state.pivots else -1
    entries: Dict[int, LinForm] = {}
    for col, i in state.pivots.items():
        if col <= horizon:
            entries[col] = k[i]
    provenance = {j: _provenance(state, j) for j in range(horizon + 1)}
    return SymbolicSequence(F, entries, [], provenance, horizon, state.stage)


def general_solution(
    state: EliminationState, k: Sequence[LinForm], horizon: int
) -> SolveResult:
    """Constraints, particular plus homogeneous part, and the rank deficiency."""
    constraints = consistency_constraints(state, k)
    xp = particular_solution(state, k, horizon)
    xh = homogeneous_solution(state, horizon)
    general = xp + xh
    pivots_below = sum(1 for c in state.pivots if c <= horizon)
    return SolveResult(constraints, general, horizon + 1 - pivots_below, horizon)


def _reduce_modulo(form: LinForm, constraints: Sequence[LinForm]) -> LinForm:
    """Eliminate the leading symbol of each constraint from the form."""
    ordered = []
    for c in constraints:
        if c.terms:
            ordered.append((max(c.terms), c))
    ordered.sort(key=lambda t: t[0], reverse=True)
    for sym, c in ordered:
        coeff = form.terms.get(sym)
        if coeff is None:
            continue
        F = form.field
        # sym = -(c - coeff_c*sym)/coeff_c
        rest = LinForm(F, c.constant, {s: v for s, v in c.terms.items() if s != sym})
        replacement = rest.scaled_raw(F.neg(F.inv(c.terms[sym])))
        form = form.substitute(sym, replacement)
    return form


def verify_solution(
    matrix,
    x: SymbolicSequence,
    c: Union[str, Sequence, Callable[[int], object]],
    horizon: int,
    trials: int = 0,
    constraints: Optional[Sequence[LinForm]] = None,
    rng: Optional[random.Random] = None,
) -> bool:
    """Check rows 0..horizon of the system against a candidate solution.

    The residual of each row must vanish identically after reduction
    modulo the constraints.  With ``trials`` > 0, also spot-check with
    random constraint-satisfying numeric assignments.
    """
    F = x.field
    residuals: List[LinForm] = []
    try:
        for i in range(horizon + 1):
            row = matrix.row_at(i)
            acc = LinForm.zero(F)
            for j, v in row.support:
                acc = acc + x.entry(j).scaled_raw(v)
            if isinstance(c, str):
                acc = acc - LinForm.symbol(F, c, i)
            elif callable(c):
                acc = acc - _as_form(F, c(i))
            else:
                acc = acc - (_as_form(F, c[i]) if i < len(c) else LinForm.zero(F))
            residuals.append(acc)
    except IndexOutOfRange:
        return False
    cons = list(constraints or [])
    for r in residuals:
        if not _reduce_modulo(r, cons).is_zero():
            return False
    rng = rng or random.Random(0)
    symbols = set()
    for r in residuals:
        symbols.update(r.terms)
    for con in cons:
        symbols.update(con.terms)
    for _ in range(trials):
        values = {s: _random_value(F, rng) for s in symbols}
        for con in sorted(cons, key=lambda f: max(f.terms)):
            lead = max(con.terms)
            rest = con.constant
            for s, v in con.terms.items():
                if s != lead:
                    rest = F.add(rest, F.mul(v, values[s]))
            values[lead] = F.mul(F.neg(F.inv(con.terms[lead])), rest)
        for r in residuals:
            total = r.constant
            for s, v in r.terms.items():
                total = F.add(total, F.mul(v, values[s]))
            if total != F.zero():
                return False
    return True


def _random_value(F, rng: random.Random):
    if F.kind == "gf":
        return rng.randrange(F.p)
    from fractions import Fraction

    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))
