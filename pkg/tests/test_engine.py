from fractions import Fraction

import pytest

from omegagj import (
    BUILTINS,
    CertificateViolation,
    EliminationState,
    Field,
    IndexOutOfRange,
    PivotCollision,
    PivotFloor,
    RATIONAL,
    Row,
    certified_stable,
    make_explicit,
    nullspace_basis,
    prefix_stability,
    run_to,
    snapshot,
    step,
    step_lps,
)
from omegagj.engine import gaussian_reduce, jordan_update
from omegagj.rows import parse_row
from fixtures import (
    FULKERSON_NULLSPACE,
    FULKERSON_PASSAGE,
    FULKERSON_REDUCED,
    PDE_REDUCED,
    bidiag_lps_row,
    bidiag_passage_row,
    bidiag_reduced_row,
)
from util import mk_row, mk_rows, row_dict, rows_dicts

GF7 = Field.gf(7)


def test_state_stage_starts_before_first_row():
    state = EliminationState(RATIONAL)
    assert state.stage == -1
    with pytest.raises(ValueError):
        EliminationState(RATIONAL, "downhill")


def test_step_normalizes_and_registers_pivot():
    state = EliminationState(RATIONAL)
    step(state, mk_row(RATIONAL, {0: Fraction(2), 3: Fraction(4)}))
    assert row_dict(state.rows[0]) == {0: Fraction(1, 2), 3: Fraction(1)}
    assert state.pivots == {3: 0}
    assert state.pivot_history == [3]
    assert row_dict(state.passage[0]) == {0: Fraction(1, 4)}


def test_step_zero_row_keeps_passage_combination():
    rows = mk_rows(RATIONAL, [{0: Fraction(1)}, {0: Fraction(3)}])
    state = run_to(make_explicit(RATIONAL, rows), 1)
    assert state.rows[1].is_zero()
    assert state.pivot_history == [0, None]
    assert row_dict(state.passage[1]) == {0: Fraction(-3), 1: Fraction(1)}


def test_gaussian_reduce_uses_original_entries():
    state = run_to(BUILTINS["bidiag"](), 2)
    incoming = mk_row(RATIONAL, {1: Fraction(2), 3: Fraction(5)})
    reduced = gaussian_reduce(state, incoming)
    # pivots 1, 2, 3 belong to rows 0, 1, 2; entries at 1 and 3 are removed
    assert reduced.raw(1) == 0 and reduced.raw(3) == 0


def test_jordan_update_guards():
    state = run_to(BUILTINS["bidiag"](), 1)
    with pytest.raises(ValueError):
        jordan_update(state, Row.unit(RATIONAL, 9))
    # a hand-appended row whose pivot column is already pinned
    clash = Row.unit(RATIONAL, 2)
    state.rows.append(clash)
    state.passage.append(Row.unit(RATIONAL, 2))
    state.last_changed.append(2)
    with pytest.raises(PivotCollision):
        jordan_update(state, clash)


def test_bidiag_run_matches_closed_forms():
    state = run_to(BUILTINS["bidiag"](), 6)
    assert state.stage == 6
    for k in range(7):
        assert row_dict(state.rows[k]) == bidiag_reduced_row(k)
        assert row_dict(state.passage[k]) == bidiag_passage_row(k)
    assert state.pivots == {k + 1: k for k in range(7)}
    assert state.last_changed == list(range(7))


def test_fulkerson_stage_six_state():
    state = run_to(BUILTINS["fulkerson"](), 6)
    assert rows_dicts(state.rows) == FULKERSON_REDUCED
    assert rows_dicts(state.passage) == FULKERSON_PASSAGE
    assert [i for i, r in enumerate(state.rows) if r.is_zero()] == [1, 3, 5]
    assert rows_dicts(nullspace_basis(state)) == FULKERSON_NULLSPACE


def test_pde_run_matches_slot_order_and_change_log():
    state = run_to(BUILTINS["pde"](), 9)
    assert rows_dicts(state.rows) == PDE_REDUCED
    assert state.last_changed == [0, 1, 2, 3, 5, 5, 6, 9, 9, 9]
    assert prefix_stability(state, 6) == 6
    assert prefix_stability(state, 9) == 9


def test_jordan_steps_preserve_earlier_rightmost_indices():
    m = BUILTINS["pde"]()
    state = EliminationState(m.field)
    seen = []
    for k in range(12):
        step(state, m.row_at(k))
        for i, prev in enumerate(seen):
            cur = state.rows[i].maxs
            assert cur == prev, "row %d rightmost moved at stage %d" % (i, k)
        seen = [r.maxs for r in state.rows]


def test_lps_run_matches_drift_formula():
    m = BUILTINS["bidiag"]()
    state = EliminationState(RATIONAL, "lps")
    for k in range(5):
        step_lps(state, m.row_at(k))
    n = 5
    for i in range(n):
        assert row_dict(state.rows[i]) == bidiag_lps_row(i, n)
    assert state.rows[0].maxs == n


def test_step_lps_rejects_rightmost_state():
    state = EliminationState(RATIONAL, "rps")
    with pytest.raises(ValueError):
        step_lps(state, Row.unit(RATIONAL, 0))


def test_run_to_over_gf():
    rows = mk_rows(GF7, [{0: 3, 1: 5}, {0: 1, 1: 4}])
    state = run_to(make_explicit(GF7, rows), 1)
    # rightmost pivot: scale by 5^-1 = 3, so (3, 5) becomes (2, 1)
    assert row_dict(state.rows[0]) == {0: 2, 1: 1}
    assert row_dict(state.passage[0]) == {0: 3}
    # (1, 4) = 4 * (2, 1) mod 7, so row 1 vanishes
    assert state.rows[1].is_zero()
    assert row_dict(state.passage[1]) == {0: 2, 1: 1}


def test_prefix_stability_bounds():
    state = run_to(BUILTINS["bidiag"](), 3)
    assert prefix_stability(state, 0) == 0
    with pytest.raises(IndexOutOfRange):
        prefix_stability(state, 4)
    with pytest.raises(IndexOutOfRange):
        prefix_stability(state, -1)


def test_snapshot_shape_and_content():
    state = run_to(BUILTINS["fulkerson"](), 3)
    snap = snapshot(state)
    assert snap["stage"] == 3 and snap["strategy"] == "rps"
    assert parse_row(RATIONAL, snap["rows"][2]) == state.rows[2]
    assert snap["pivot_history"] == [3, -1, 6, -1]
    assert snap["pivots"] == {"3": 0, "6": 2}
    assert snap["last_changed"] == state.last_changed
    import json

    json.dumps(snap)


# -- pivot-floor certificates -------------------------------------------------


def bidiag_with_floor(slope, intercept):
    m = BUILTINS["bidiag"]()
    m.certificate = PivotFloor.affine(slope, intercept)
    return m


def test_floor_validates_and_certifies():
    state = run_to(bidiag_with_floor(1, 1), 8)
    assert state.certificate.validated_through == 8
    assert certified_stable(state, 5) == "certified"
    assert certified_stable(state, 8) == "provisional"  # row 8 ends at the floor


def test_certification_arrives_one_stage_after_the_row():
    m = bidiag_with_floor(1, 1)
    state = EliminationState(m.field, certificate=m.certificate)
    for k in range(7):
        step(state, m.row_at(k))
        if k >= 1:
            assert certified_stable(state, k - 1) == "certified"
        assert certified_stable(state, k) == "provisional"


def test_without_certificate_everything_is_provisional():
    state = run_to(BUILTINS["bidiag"](), 4)
    assert certified_stable(state, 0) == "provisional"


def test_overpromised_floor_raises_before_mutation():
    m = bidiag_with_floor(1, 5)
    state = EliminationState(m.field, certificate=m.certificate)
    step(state, m.row_at(0))
    rows_before = list(state.rows)
    with pytest.raises(CertificateViolation) as info:
        step(state, m.row_at(1))
    assert info.value.stage == 1
    assert info.value.column == 2
    assert info.value.floor == 5
    assert state.rows == rows_before


def test_floor_ignores_zero_rows():
    m = BUILTINS["fulkerson"]()
    m.certificate = PivotFloor.affine(1, 1)
    state = run_to(m, 6)  # zero rows at 1, 3, 5 yield no pivot to check
    assert state.certificate.validated_through == 6
    # floor(6) = 7 clears rows ending at 3 and 6, not the one ending at 9
    assert certified_stable(state, 2) == "certified"
    assert certified_stable(state, 4) == "provisional"


def test_certified_stable_bounds():
    state = run_to(bidiag_with_floor(1, 1), 3)
    with pytest.raises(IndexOutOfRange):
        certified_stable(state, 4)
