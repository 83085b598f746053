"""Exact scalars for diagram calculus.

Two scalar domains are used throughout the package:

* :class:`fractions.Fraction` when the loop parameter is pinned to a rational
  value (``DeltaMode.fixed``), and
* :class:`RationalFunction`, an element of Q(d), when it is kept symbolic.

Both support ``+ - * /`` with ints and with each other's constants, so the
diagram code never needs to know which one it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as _igcd
from typing import Iterable, Sequence, Union

__all__ = [
    "Poly",
    "RationalFunction",
    "DELTA",
    "DeltaMode",
    "PoleError",
    "Scalar",
    "quantum_int",
    "eval_at",
    "to_fraction",
    "scalar_to_json",
    "scalar_from_json",
]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense integer polynomial in one variable, coefficients in ascending order.

    ``Poly([-1, 0, 1])`` is ``d**2 - 1``.  The zero polynomial has no
    coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"Poly coefficients must be int, got {type(x).__name__}")
        self.coeffs = c

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Poly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _igcd(g, c)
        return g

    def primitive(self) -> "Poly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return Poly(c // g for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def pseudo_rem(self, other: "Poly") -> "Poly":
        """Pseudo-remainder: lc(other)**(deg self - deg other + 1) * self mod other."""
        if not other:
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        while len(r) - 1 >= db and r:
            lr, shift = r[-1], len(r) - 1 - db
            r = [lb * c for c in r]
            for i, c in enumerate(b):
                r[i + shift] -= lr * c
            r = list(_trim(r))
        # scale to the conventional exponent is unnecessary for gcd purposes
        return Poly(r)

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division in Z[d]; raises if it does not divide."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        if len(r) - 1 < db:
            if r:
                raise ArithmeticError("polynomial division is not exact")
            return Poly()
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            top = r[k + db]
            if top % lb:
                raise ArithmeticError("polynomial division is not exact")
            t = top // lb
            q[k] = t
            if t:
                for i, c in enumerate(b):
                    r[k + i] -= t * c
        if any(r):
            raise ArithmeticError("polynomial division is not exact")
        return Poly(q)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return _poly_str(self.coeffs)


def _poly_str(coeffs: Sequence[int], var: str = "δ") -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor in Z[d] by the primitive remainder sequence.

    The result is primitive up to the integer gcd of the contents and has a
    positive leading coefficient.
    """
    if not a:
        return b.primitive() * (b.content() or 1) if b else Poly()
    if not b:
        return a.primitive() * a.content()
    c = _igcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    return a.primitive() * c


class RationalFunction:
    """An element of Q(d) stored as a reduced quotient of integer polynomials.

    Invariants after construction: the denominator is nonzero, numerator and
    denominator are coprime, the integer contents share no factor and the
    denominator has a positive leading coefficient.  Zero is ``0/1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int = 0, den: Poly | int = 1, *, _reduced: bool = False):
        if isinstance(num, int):
            num = Poly.constant(num)
        if isinstance(den, int):
            den = Poly.constant(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls(Poly((0, 1)), Poly.constant(1), _reduced=True)

    @classmethod
    def from_scalar(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, int):
            return cls(Poly.constant(x), Poly.constant(1), _reduced=True)
        if isinstance(x, Fraction):
            return cls(Poly.constant(x.numerator), Poly.constant(x.denominator), _reduced=True)
        if isinstance(x, Poly):
            return cls(x, Poly.constant(1), _reduced=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction.from_scalar(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.is_constant():
            # keep hash(RationalFunction(3)) == hash(3) like numbers do
            return hash(Fraction(self.num(0), self.den(0)))
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if other.den.coeffs == (1,):
            return RationalFunction(self.num + other.num * self.den, self.den, _reduced=True)
        if self.den.coeffs == (1,):
            return RationalFunction(self.num * other.den + other.num, other.den, _reduced=True)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return RationalFunction(self.num * other.num, self.den, _reduced=True)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n = self.num.exact_div(g1) * other.num.exact_div(g2)
        d = self.den.exact_div(g2) * other.den.exact_div(g1)
        return RationalFunction(n, d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return self * RationalFunction(other.den, other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return RationalFunction(1) / (self ** (-k))
        return RationalFunction(self.num ** k, self.den ** k, _reduced=True)

    def conjugate(self) -> "RationalFunction":
        # real coefficients, real parameter
        return self

    def __call__(self, x):
        return eval_at(self, x)

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self) -> str:
        if self.den.coeffs == (1,):
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if len(self.num.coeffs) - sum(1 for c in self.num.coeffs if c == 0) > 1:
            n = f"({n})"
        if len(self.den.coeffs) - sum(1 for c in self.den.coeffs if c == 0) > 1:
            d = f"({d})"
        return f"{n}/{d}"


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num:
        return Poly(), Poly.constant(1)
    if not den.is_constant():
        g = poly_gcd(num, den).primitive()
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    c = _igcd(num.content(), den.content())
    if den.lead < 0:
        c = -c
    if c != 1:
        num = Poly(x // c for x in num.coeffs)
        den = Poly(x // c for x in den.coeffs)
    return num, den


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Poly)):
        return RationalFunction.from_scalar(x)
    return NotImplemented


ZERO = RationalFunction(Poly(), Poly.constant(1), _reduced=True)
DELTA = RationalFunction.variable()

Scalar = Union[Fraction, int, RationalFunction]


def eval_at(f, d) -> Fraction:
    """Evaluate ``f`` at the rational point ``d``, exactly.

    Integers and fractions evaluate to themselves.  A vanishing denominator
    raises :class:`PoleError`.
    """
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    if isinstance(f, Poly):
        return Fraction(f(Fraction(d)))
    if not isinstance(f, RationalFunction):
        raise TypeError(f"cannot evaluate {type(f).__name__}")
    d = Fraction(d)
    den = f.den(d)
    if den == 0:
        raise PoleError(f"denominator {f.den} vanishes at {d}")
    return Fraction(f.num(d)) / den


def to_fraction(x) -> Fraction:
    """Convert a constant scalar to a Fraction; raises for nonconstant input."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, RationalFunction) and x.is_constant():
        return Fraction(x.num(0), x.den(0))
    raise ValueError(f"{x} is not a constant")


@lru_cache(maxsize=None)
def quantum_int(n: int) -> Poly:
    """Quantum integer [n] as a polynomial in d: [0]=0, [1]=1, [n+1]=d[n]-[n-1]."""
    if n < 0:
        raise ValueError("quantum_int needs n >= 0")
    if n == 0:
        return Poly()
    if n == 1:
        return Poly.constant(1)
    d = Poly((0, 1))
    return d * quantum_int(n - 1) - quantum_int(n - 2)


@dataclass(frozen=True)
class DeltaMode:
    """Choice of loop parameter: symbolic (``value is None``) or a fixed rational."""

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None:
            v = Fraction(self.value)
            if v < 0:
                raise ValueError(f"loop parameter must be >= 0, got {v}")
            object.__setattr__(self, "value", v)

    @classmethod
    def symbolic(cls) -> "DeltaMode":
        return cls(None)

    @classmethod
    def fixed(cls, value) -> "DeltaMode":
        return cls(Fraction(value))

    @classmethod
    def parse(cls, text: str) -> "DeltaMode":
        """Parse ``"symbolic"`` or a rational literal such as ``"5/2"``."""
        t = text.strip()
        if t.lower() == "symbolic":
            return cls.symbolic()
        try:
            v = Fraction(t)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid delta {text!r}: expected 'symbolic' or p/q") from exc
        return cls.fixed(v)

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def delta(self) -> Scalar:
        """The loop value as a scalar of the matching domain."""
        return DELTA if self.value is None else self.value

    def __str__(self) -> str:
        return "symbolic" if self.value is None else str(self.value)


def scalar_to_json(x) -> dict:
    """``{"num": [...], "den": [...]}`` with integer strings, ascending degree."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return {"num": [str(x.numerator)], "den": [str(x.denominator)]}
    if isinstance(x, RationalFunction):
        num = [str(c) for c in x.num.coeffs] or ["0"]
        return {"num": num, "den": [str(c) for c in x.den.coeffs]}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def scalar_from_json(obj: dict, symbolic: bool = True):
    num = Poly(int(c) for c in obj["num"])
    den = Poly(int(c) for c in obj["den"])
    f = RationalFunction(num, den)
    if not symbolic:
        return to_fraction(f)
    return f
