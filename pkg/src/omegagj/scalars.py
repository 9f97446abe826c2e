"""Exact field scalars (rationals and prime fields) and affine symbolic forms.

Every value in the library is either a Scalar over an explicit Field or a
LinForm (affine combination of indexed symbols with Scalar coefficients).
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional


class FieldMismatch(Exception):
    """Raised when two values from different fields meet in one operation."""


class DivisionByZero(Exception):
    """Raised on division or inversion by the zero scalar."""


def _is_prime(n: int) -> bool:
    """Primality by trial division; moduli here are small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """A coefficient field: exact rationals, or integers mod a prime."""

    __slots__ = ("kind", "p")

    _gf_cache: dict = {}

    def __init__(self, kind: str, p: Optional[int] = None):
        if kind not in ("rational", "gf"):
            raise ValueError("unknown field kind: %r" % (kind,))
        if kind == "gf":
            if p is None or not _is_prime(p):
                raise ValueError("gf modulus must be prime, got %r" % (p,))
        self.kind = kind
        self.p = p

    @classmethod
    def gf(cls, p: int) -> "Field":
        try:
            return cls._gf_cache[p]
        except KeyError:
            f = cls("gf", p)
            cls._gf_cache[p] = f
            return f

    # -- raw-value arithmetic -------------------------------------------------
    # Raw values are Fraction for rationals and int residues in [0, p) for gf.

    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    def one(self):
        return Fraction(1) if self.kind == "rational" else 1 % self.p

    def from_int(self, n: int):
        return Fraction(n) if self.kind == "rational" else n % self.p

    def add(self, a, b):
        return a + b if self.kind == "rational" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rational" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rational" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "rational" else (-a) % self.p

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.kind == "rational":
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        if self.kind == "rational":
            return a / b
        return (a * pow(b, -1, self.p)) % self.p

    def parse(self, text: str):
        """Parse the canonical text form: 'p/q' or 'p' (residue for gf)."""
        if self.kind == "rational":
            return Fraction(text)
        return int(text) % self.p

    def format(self, a) -> str:
        """Canonical text form: lowest-terms 'p/q' (or 'p'), bare residue for gf."""
        return str(a)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Field(rational)" if self.kind == "rational" else "Field(gf %d)" % self.p


RATIONAL = Field("rational")


def check_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatch("%r vs %r" % (a, b))


class Scalar:
    """An immutable field element; arithmetic never coerces across fields."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    @classmethod
    def of(cls, field: Field, n: int) -> "Scalar":
        return cls(field, field.from_int(n))

    def __bool__(self):
        return bool(self.value)

    def __add__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        check_same_field(self.field, other.field)
        return self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return "Scalar(%r, %s)" % (self.field, self.value)


def scalar_arith(a: Scalar, b: Optional[Scalar], op: str):
    """Dispatch one exact operation: add|sub|mul|div|neg|inv|eq."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "eq":
        return a == b
    raise ValueError("unknown op: %r" % (op,))


# Symbols are (namespace, index) pairs: ("t", 3) prints as t_3.


class LinForm:
    """An affine form over indexed symbols: constant + sum of coeff * ns_i.

    Canonical: the term table never stores zero coefficients, so two forms
    are equal iff their fields, constants, and term tables are equal.
    """

    __slots__ = ("field", "constant", "terms")

    def __init__(self, field: Field, constant=None, terms=None):
        self.field = field
        self.constant = field.zero() if constant is None else constant
        self.terms = {} if terms is None else terms

    @classmethod
    def zero(cls, field: Field) -> "LinForm":
        return cls(field)

    @classmethod
    def const(cls, field: Field, value) -> "LinForm":
        if isinstance(value, Scalar):
            check_same_field(field, value.field)
            value = value.value
        return cls(field, constant=value)

    @classmethod
    def symbol(cls, field: Field, namespace: str, index: int) -> "LinForm":
        return cls(field, terms={(namespace, index): field.one()})

    def is_zero(self) -> bool:
        return not self.constant and not self.terms

    def coeff(self, sym) -> Scalar:
        return Scalar(self.field, self.terms.get(sym, self.field.zero()))

    def __add__(self, other):
        check_same_field(self.field, other.field)
        F = self.field
        terms = dict(self.terms)
        for s, c in other.terms.items():
            v = F.add(terms.get(s, F.zero()), c)
            if v:
                terms[s] = v
            else:
                terms.pop(s, None)
        return LinForm(F, F.add(self.constant, other.constant), terms)

    def __sub__(self, other):
        return self + other.scaled_raw(self.field.neg(self.field.one()))

    def __neg__(self):
        return self.scaled_raw(self.field.neg(self.field.one()))

    def scaled_raw(self, lam) -> "LinForm":
        F = self.field
        if not lam:
            return LinForm(F)
        return LinForm(
            F,
            F.mul(lam, self.constant),
            {s: F.mul(lam, c) for s, c in self.terms.items()},
        )

    def scaled(self, lam: Scalar) -> "LinForm":
        check_same_field(self.field, lam.field)
        return self.scaled_raw(lam.value)

    def substitute(self, sym, replacement: "LinForm") -> "LinForm":
        """Replace one symbol by an affine form."""
        c = self.terms.get(sym)
        if c is None:
            return self
        check_same_field(self.field, replacement.field)
        rest = LinForm(
            self.field,
            self.constant,
            {s: v for s, v in self.terms.items() if s != sym},
        )
        return rest + replacement.scaled_raw(c)

    def __eq__(self, other):
        if not isinstance(other, LinForm):
            return NotImplemented
        check_same_field(self.field, other.field)
        return self.constant == other.constant and self.terms == other.terms

    def __str__(self):
        return self.render()

    def render(self, leading=None) -> str:
        """Text form with terms sorted by (namespace, index), constant last.

        leading, if given, is a symbol pulled to the front (used for
        constraints written as c_w - ... = 0).
        """
        F = self.field
        items = sorted(self.terms.items())
        if leading is not None and leading in self.terms:
            items = [(leading, self.terms[leading])] + [
                it for it in items if it[0] != leading
            ]
        parts = []
        for (ns, idx), c in items:
            parts.append(_signed(F, c, "%s_%d" % (ns, idx), first=not parts))
        if self.constant or not parts:
            parts.append(_signed(F, self.constant, None, first=not parts))
        return "".join(parts)

    def __repr__(self):
        return "LinForm(%s)" % self

    __hash__ = None


def _signed(F: Field, c, sym: Optional[str], first: bool) -> str:
    """Render one signed term; rationals show sign, gf shows bare residues."""
    if F.kind == "rational" and c < 0:
        sign, mag = "-", -c
    else:
        sign, mag = "+", c
    body = F.format(mag)
    if sym is not None:
        body = sym if mag == F.one() else "%s*%s" % (body, sym)
    if first:
        return body if sign == "+" else "-" + body
    return (" + " if sign == "+" else " - ") + body


def linform_axpy(lam: Scalar, x: LinForm, y: LinForm) -> LinForm:
    """Return y + lam * x."""
    check_same_field(lam.field, x.field)
    return y + x.scaled_raw(lam.value)


def linform_eval(form: LinForm, binding: dict) -> Scalar:
    """Evaluate under a total assignment of symbols to Scalars."""
    F = form.field
    acc = form.constant
    for s, c in form.terms.items():
        v = binding[s]
        check_same_field(F, v.field)
        acc = F.add(acc, F.mul(c, v.value))
    return Scalar(F, acc)
