"""Finitely supported rows: sorted (column, value) support lists over a field."""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

from .scalars import Field, Scalar, check_same_field


class Row:
    """An immutable finitely supported sequence indexed by naturals.

    support is a tuple of (column, raw value) pairs with strictly increasing
    columns and no zero values, so equal rows have equal supports.
    """

    __slots__ = ("field", "support")

    def __init__(self, field: Field, support: Tuple[Tuple[int, object], ...] = ()):
        self.field = field
        self.support = support

    @classmethod
    def from_pairs(cls, field: Field, pairs: Iterable[Tuple[int, object]]) -> "Row":
        """Build from (column, value) pairs in any order; repeats accumulate."""
        acc: dict = {}
        for col, val in pairs:
            if col < 0:
                raise ValueError("negative column: %d" % col)
            if isinstance(val, Scalar):
                check_same_field(field, val.field)
                val = val.value
            v = field.add(acc.get(col, field.zero()), val)
            if v:
                acc[col] = v
            else:
                acc.pop(col, None)
        return cls(field, tuple(sorted(acc.items())))

    @classmethod
    def zero(cls, field: Field) -> "Row":
        return cls(field, ())

    @classmethod
    def unit(cls, field: Field, col: int) -> "Row":
        return cls(field, ((col, field.one()),))

    def is_zero(self) -> bool:
        return not self.support

    @property
    def maxs(self) -> Optional[int]:
        """Rightmost support index; None for the zero row."""
        return self.support[-1][0] if self.support else None

    @property
    def zeta(self) -> Optional[int]:
        """Leftmost support index; None for the zero row."""
        return self.support[0][0] if self.support else None

    def raw(self, col: int):
        """Raw value at a column (field zero when absent); linear scan is fine
        because supports stay short."""
        for c, v in self.support:
            if c == col:
                return v
            if c > col:
                break
        return self.field.zero()

    def get(self, col: int) -> Scalar:
        return Scalar(self.field, self.raw(col))

    def scaled_raw(self, lam) -> "Row":
        if not lam:
            return Row(self.field, ())
        F = self.field
        return Row(F, tuple((c, F.mul(lam, v)) for c, v in self.support))

    def __eq__(self, other):
        if not isinstance(other, Row):
            return NotImplemented
        check_same_field(self.field, other.field)
        return self.support == other.support

    def __hash__(self):
        return hash((self.field, self.support))

    def dense(self, width: int) -> list:
        """Raw values at columns 0..width-1."""
        out = [self.field.zero()] * width
        for c, v in self.support:
            if c < width:
                out[c] = v
        return out

    def __str__(self):
        return " ".join("%d:%s" % (c, self.field.format(v)) for c, v in self.support)

    def __repr__(self):
        return "Row(%s)" % (self if self.support else "0")


def maxs(r: Row) -> Optional[int]:
    return r.maxs


def zeta(r: Row) -> Optional[int]:
    return r.zeta


def get(r: Row, col: int) -> Scalar:
    return r.get(col)


def axpy_raw(lam, x: Row, y: Row) -> Row:
    """Return y + lam * x by merging the two sorted supports."""
    check_same_field(x.field, y.field)
    F = x.field
    if not lam:
        return y
    out: List[Tuple[int, object]] = []
    xs, ys = x.support, y.support
    i = j = 0
    nx, ny = len(xs), len(ys)
    while i < nx and j < ny:
        cx, vx = xs[i]
        cy, vy = ys[j]
        if cx < cy:
            out.append((cx, F.mul(lam, vx)))
            i += 1
        elif cy < cx:
            out.append((cy, vy))
            j += 1
        else:
            v = F.add(vy, F.mul(lam, vx))
            if v:
                out.append((cx, v))
            i += 1
            j += 1
    while i < nx:
        cx, vx = xs[i]
        out.append((cx, F.mul(lam, vx)))
        i += 1
    out.extend(ys[j:])
    return Row(F, tuple(out))


def axpy(lam: Scalar, x: Row, y: Row) -> Row:
    """Return y + lam * x."""
    check_same_field(lam.field, x.field)
    return axpy_raw(lam.value, x, y)


def normalize_rightmost(r: Row) -> Row:
    """Scale so the rightmost coefficient is one; zero row stays zero."""
    if r.is_zero():
        return r
    lead = r.support[-1][1]
    if lead == r.field.one():
        return r
    return r.scaled_raw(r.field.inv(lead))


def normalize_leftmost(r: Row) -> Row:
    """Scale so the leftmost coefficient is one; zero row stays zero."""
    if r.is_zero():
        return r
    lead = r.support[0][1]
    if lead == r.field.one():
        return r
    return r.scaled_raw(r.field.inv(lead))


def parse_row(field: Field, text: str) -> Row:
    """Parse the sparse text form 'col:val col:val'; empty text is the zero row."""
    pairs = []
    for tok in text.split():
        col_s, _, val_s = tok.partition(":")
        pairs.append((int(col_s), field.parse(val_s)))
    return Row.from_pairs(field, pairs)


def dense_width(rows: Iterable[Row]) -> int:
    """Running horizon: one past the largest rightmost index over the rows."""
    width = 0
    for r in rows:
        if r.maxs is not None and r.maxs + 1 > width:
            width = r.maxs + 1
    return width
