"""The rational function field Q(q), used while deriving straightening rules
at a symbolic deformation parameter before specializing q to a root of unity.

Elements are normalized fractions num/den of polynomials in q with rational
coefficients (den monic, gcd cancelled), so equality and zero-testing are
exact.  Only small polynomials ever arise here; no sparse tricks needed.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import CycField, CycScalar, _poly_divmod, _poly_mul, _poly_sub, _trim

Poly = tuple  # tuple[Fraction, ...], index = degree, trimmed


def _p(*coeffs) -> Poly:
    return tuple(_trim([Fraction(c) for c in coeffs]))


def _pgcd(a: Poly, b: Poly) -> Poly:
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return tuple(a)


class QRat:
    """A rational function in q over Q, kept in normalized form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = tuple(_trim([Fraction(c) for c in num]))
        den = tuple(_trim([Fraction(c) for c in den]))
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not num:
            self.num, self.den = (), (Fraction(1),)
            return
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _poly_divmod(num, g)
            den, _ = _poly_divmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = [c / lead for c in num]
            den = [c / lead for c in den]
        self.num = tuple(num)
        self.den = tuple(den)

    @staticmethod
    def from_rational(value) -> "QRat":
        return QRat((Fraction(value),))

    @staticmethod
    def q_power(n: int) -> "QRat":
        """q^n as an element of Q(q); negative n allowed."""
        if n >= 0:
            return QRat((Fraction(0),) * n + (Fraction(1),))
        return QRat((Fraction(1),), (Fraction(0),) * (-n) + (Fraction(1),))

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QRat.from_rational(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, int):
            other = QRat.from_rational(other)
        if not isinstance(other, QRat):
            return NotImplemented
        num = _poly_sub(_poly_mul(self.num, other.den), [-c for c in _poly_mul(other.num, self.den)])
        return QRat(num, _poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QRat(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QRat) else -QRat.from_rational(other))

    def __rsub__(self, other):
        return QRat.from_rational(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            other = QRat.from_rational(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return QRat(_poly_mul(self.num, other.num), _poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def inv(self) -> "QRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = QRat.from_rational(other)
        return self * other.inv()

    def as_q_monomial(self):
        """Return (c, n) if the value is exactly c * q^n, else None."""
        if not self.num:
            return None
        if any(self.num[:-1]) or any(self.den[:-1]):
            return None
        return (self.num[-1] / self.den[-1], len(self.num) - len(self.den))

    def specialize(self, field: CycField) -> CycScalar:
        """Evaluate at q = zeta_p; the denominator must not vanish there."""

        def ev(poly):
            acc = field.zero
            for k, c in enumerate(poly):
                if c:
                    acc = acc + field.q_power(k) * field.scalar(c)
            return acc

        den = ev(self.den)
        if not den:
            raise ZeroDivisionError(
                f"denominator vanishes at a primitive {field.p}-th root of unity"
            )
        return ev(self.num) * den.inv()

    def __repr__(self):
        def s(poly):
            return "+".join(f"{c}q^{k}" for k, c in enumerate(poly) if c) or "0"

        if self.den == (Fraction(1),):
            return f"QRat({s(self.num)})"
        return f"QRat(({s(self.num)})/({s(self.den)}))"


QRAT_ZERO = QRat(())
QRAT_ONE = QRat.from_rational(1)
# q - q^{-1} = (q^2 - 1)/q
QRAT_QQ = QRat(_p(-1, 0, 1), _p(0, 1))
