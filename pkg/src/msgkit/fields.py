"""Exact ground fields: odd prime fields F_p and the rationals.

Scalars are plain Python values -- int residues in [0, p) for F_p,
``fractions.Fraction`` for Q -- and a ``Field`` object owns
canonicalization, arithmetic, and JSON encoding.  Keeping scalars
unboxed makes the dense linear algebra in :mod:`msgkit.matrices` cheap;
the cost is that the field object must travel alongside the values,
which every container in this package does.

Characteristic 2 is excluded on purpose: the symplectic facts the rest
of the package relies on (alternating == skew with zero diagonal, even
rank) degenerate there.
"""

from __future__ import annotations

from fractions import Fraction

from ._integers import is_prime

MAX_PRIME = 2**31


class FieldMismatchError(ValueError):
    """Raised when operands belong to different fields."""


class Field:
    """Common interface; see PrimeField and RationalField."""

    kind: str

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def require_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(f"mixed fields: {self} vs {other}")

    # subclasses provide: element, zero, one, add, mul, neg, inv, pow,
    # random, encode, decode, spec


class PrimeField(Field):
    """F_p for an odd prime p, 3 <= p < 2**31.  Scalars are ints in [0, p)."""

    kind = "prime"
    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or p % 2 == 0 or p >= MAX_PRIME:
            raise ValueError(f"modulus must be an odd prime in [3, 2^31): {p}")
        if not is_prime(p):
            raise ValueError(f"modulus is not prime: {p}")
        self.p = p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def element(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"F_{self.p} scalar must be an int, got {x!r}")
        return x % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        return pow(a, e, self.p)

    def random(self, rng) -> int:
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def encode(self, a: int) -> int:
        return a

    def decode(self, obj) -> int:
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise ValueError(f"F_{self.p} scalar must decode from an int: {obj!r}")
        return obj % self.p

    def spec(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("prime", self.p))

    def __repr__(self) -> str:
        return f"F_{self.p}"


class RationalField(Field):
    """The rationals with arbitrary-precision numerators and denominators."""

    kind = "rational"
    __slots__ = ()

    zero = Fraction(0)
    one = Fraction(1)

    def element(self, x) -> Fraction:
        if isinstance(x, bool):
            raise TypeError("rational scalar cannot be a bool")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"rational scalar must be int, Fraction, or 'a/b': {x!r}")

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def pow(self, a: Fraction, e: int) -> Fraction:
        if e < 0 and a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return Fraction(a) ** e

    def random(self, rng) -> Fraction:
        # small numerators/denominators keep downstream coefficient growth sane
        return Fraction(rng.randint(-9, 9), rng.randint(1, 3))

    def encode(self, a: Fraction):
        if a.denominator == 1:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def decode(self, obj) -> Fraction:
        if isinstance(obj, bool):
            raise ValueError("rational scalar cannot decode from bool")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            return Fraction(obj)
        raise ValueError(f"rational scalar must be int or 'a/b' string: {obj!r}")

    def spec(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational")

    def __repr__(self) -> str:
        return "Q"


QQ = RationalField()


def field_from_spec(spec: dict) -> Field:
    """Inverse of Field.spec(); accepts {'kind': 'prime', 'p': p} or {'kind': 'rational'}."""
    kind = str(spec.get("kind", "")).lower()
    if kind == "prime":
        if "p" not in spec:
            raise ValueError("prime field spec needs 'p'")
        return PrimeField(spec["p"])
    if kind == "rational":
        return QQ
    raise ValueError(f"unknown field kind: {spec.get('kind')!r}")
