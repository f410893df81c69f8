"""Exact arithmetic in the cyclotomic field Q(zeta_p) for odd p >= 3.

Elements are coordinate vectors over Q in the power basis 1, z, ..., z^(d-1)
of Q[z]/Phi_p(z), where Phi_p is the p-th cyclotomic polynomial and
d = deg Phi_p (= p-1 for prime p, phi(p) in general).  Equality of
coordinate vectors is exact equality in the field, which makes zero-testing
trivial; that property is the backbone of every verification built on top.

Also provides the q-combinatorics used everywhere: q-powers, symmetric
q-integers [n], the (n)_q! factorials entering q-exponentials, and Gaussian
binomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class FieldMismatchError(ValueError):
    """Raised when scalars from different cyclotomic fields are combined."""


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    """Division with remainder in Q[x]; b must be nonzero."""
    a = list(a)
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and _trim(a):
        shift = len(a) - len(b)
        c = a[-1] / lead
        quot[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        _trim(a)
    return _trim(quot), a


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]
    return _trim(out)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                if bc:
                    out[i + j] += ac * bc
    return _trim(out)


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Coefficients of Phi_n, computed by dividing x^n - 1 by the Phi_d, d|n, d<n."""
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not r, "cyclotomic division must be exact"
            num = q
    return num


class CycField:
    """The field Q(zeta_p), shared context for all scalars with the same p.

    p must be odd and >= 3; it need not be prime (the correct Phi_p of
    degree phi(p) is used either way).
    """

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0:
            raise ValueError(f"order must be odd and >= 3, got {p}")
        self.p = p
        self.modulus = cyclotomic_polynomial(p)
        self.degree = len(self.modulus) - 1
        # x^k mod Phi_p for k up to 2*(degree-1), used to fold products.
        self._pow = []
        cur = [Fraction(1)]
        for _ in range(2 * self.degree - 1):
            self._pow.append(self._pad(cur))
            cur = [Fraction(0)] + cur
            _, cur = _poly_divmod(cur, self.modulus)
        self.zero = CycScalar(self, (Fraction(0),) * self.degree)
        self.one = self.scalar(1)
        # zeta^k for 0 <= k < p
        pows = [self.one]
        for _ in range(p - 1):
            pows.append(pows[-1]._shift())
        self._zeta_pows = pows
        self.q = pows[1 % p]
        self.qq = self.q - self.q_power(-1)  # q - q^{-1}, nonzero for odd p
        self.qq_inv = self.qq.inv()

    def _pad(self, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(coeffs) + (Fraction(0),) * (self.degree - len(coeffs))

    def scalar(self, value) -> CycScalar:
        """Embed a rational number."""
        return CycScalar(self, self._pad([Fraction(value)]))

    def from_coords(self, coords: Iterable) -> CycScalar:
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError("coordinate vector has wrong length")
        return CycScalar(self, coords)

    def q_power(self, n: int) -> CycScalar:
        """zeta^(n mod p)."""
        return self._zeta_pows[n % self.p]

    def q_int(self, n: int) -> CycScalar:
        """Symmetric q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

        Computed by Laurent expansion, never by field division, so the
        value is well defined even when n is divisible by p.
        """
        if n == 0:
            return self.zero
        if n < 0:
            return -self.q_int(-n)
        total = self.zero
        for j in range(n):
            total = total + self.q_power(n - 1 - 2 * j)
        return total

    def q_paren(self, k: int) -> CycScalar:
        """(k)_q = 1 + q + ... + q^(k-1)."""
        total = self.zero
        for j in range(k):
            total = total + self.q_power(j)
        return total

    def q_paren_factorial(self, n: int) -> CycScalar:
        """(n)_q! = (1)_q (2)_q ... (n)_q, with (0)_q! = 1.

        Nonzero exactly for 0 <= n <= p-1; callers dividing by it beyond
        that range hit the zero-division error in inv().
        """
        if n < 0:
            raise ValueError("factorial of negative index")
        total = self.one
        for k in range(1, n + 1):
            total = total * self.q_paren(k)
        return total

    def q_binomial(self, m: int, n: int, t: CycScalar) -> CycScalar:
        """Gaussian binomial [m+n, n]_t = prod_{i<n} (t^(m+n-i) - t^(i+n-m-... )

        evaluated as prod_{i=0}^{n-1} (t^(m+n-i) - t^-(m+n-i)) / (t^(i+1) - t^-(i+1)).
        The caller is responsible for the denominators being nonzero at t.
        """
        if m < 0 or n < 0:
            raise ValueError("nonnegative arguments required")
        t_inv = t.inv()
        out = self.one
        for i in range(n):
            num = t ** (m + n - i) - t_inv ** (m + n - i)
            den = t ** (i + 1) - t_inv ** (i + 1)
            out = out * num * den.inv()
        return out


class CycScalar:
    """An element of Q(zeta_p); immutable value type."""

    __slots__ = ("field", "coords")

    def __init__(self, field: CycField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    def _check(self, other: "CycScalar"):
        if self.field.p != other.field.p:
            raise FieldMismatchError(
                f"mixed cyclotomic orders {self.field.p} and {other.field.p}"
            )

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def _shift(self) -> "CycScalar":
        # multiply by zeta
        f = self.field
        raw = (Fraction(0),) + self.coords
        out = list(raw[: f.degree])
        top = raw[f.degree] if len(raw) > f.degree else 0
        if top:
            for i, c in enumerate(f._pow[f.degree]):
                out[i] += top * c
        return CycScalar(f, tuple(out))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        d = f.degree
        acc = [Fraction(0)] * d
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if not b:
                    continue
                k = i + j
                if k < d:
                    acc[k] += a * b
                else:
                    ab = a * b
                    for t, c in enumerate(f._pow[k]):
                        if c:
                            acc[t] += ab * c
        return CycScalar(f, tuple(acc))

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        """Multiplicative inverse via the extended Euclidean algorithm
        on the coordinate polynomial and Phi_p."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_p)")
        f = self.field
        # extended gcd; invariant old_s * a = old_r (mod Phi_p)
        old_r, r = _trim(list(self.coords)), list(f.modulus)
        old_s, s = [Fraction(1)], []
        while r:
            q, rem = _poly_divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, _poly_sub(old_s, _poly_mul(q, s))
        # old_r is a nonzero constant since Phi_p is irreducible over Q
        assert len(old_r) == 1, "gcd with the cyclotomic modulus must be a unit"
        c = old_r[0]
        inv_coeffs = [a / c for a in old_s]
        _, red = _poly_divmod(inv_coeffs, f.modulus)
        return CycScalar(f, f._pad(red))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field.p, self.coords))

    def __bool__(self):
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational scalar")
        return self.coords[0]

    def __repr__(self):
        return f"CycScalar(p={self.field.p}, {self.render()})"

    def render(self) -> str:
        """Laurent-style rendering c0 + c1*q + ... in the power basis."""
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out
