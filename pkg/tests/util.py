"""Small conversion helpers shared by the test modules."""

from fractions import Fraction

from omegagj import RATIONAL, Field, Row


def mk_row(field: Field, entries) -> Row:
    """Build a Row from a {col: value} dict (or pair iterable)."""
    if isinstance(entries, dict):
        entries = entries.items()
    return Row.from_pairs(field, entries)


def mk_rows(field: Field, dicts):
    return [mk_row(field, d) for d in dicts]


def row_dict(r: Row) -> dict:
    """Sparse {col: raw value} image of a Row."""
    return dict(r.support)


def rows_dicts(rows) -> list:
    return [row_dict(r) for r in rows]


def random_dict_rows(rng, n, max_cols, max_support, p=None):
    """Random sparse rows as dicts; zero rows appear with probability ~1/5."""
    rows = []
    for _ in range(n):
        if rng.random() < 0.2:
            rows.append({})
            continue
        support = rng.sample(range(max_cols), rng.randint(1, max_support))
        row = {}
        for c in support:
            if p is None:
                v = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            else:
                v = rng.randrange(p)
            if v:
                row[c] = v
        rows.append(row)
    return rows


def field_for(p=None) -> Field:
    return RATIONAL if p is None else Field.gf(p)
