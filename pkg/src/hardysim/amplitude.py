"""Exact scalar arithmetic in the field Q(i, sqrt2).

An ``ExactScalar`` is q0 + q1*i + q2*sqrt2 + q3*i*sqrt2 with rational
coefficients. This field is closed under every beam-splitter factor used
here (1/sqrt2 and i), so circuit amplitudes never need rounding. A plain
``complex`` serves as the floating-point mirror; the helpers at the bottom
of this module dispatch on the scalar type so that the rest of the package
can run on either backend.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnrepresentableError

EXACT = "exact"
FLOAT = "float"

FLOAT_TOL = 1e-12

_Coercible = (int, Fraction)


@dataclass(frozen=True)
class ExactScalar:
    """Element of Q(i, sqrt2), stored as four rational coefficients."""

    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    @classmethod
    def from_fraction(cls, q) -> "ExactScalar":
        return cls(Fraction(q))

    @classmethod
    def i(cls) -> "ExactScalar":
        return cls(q1=Fraction(1))

    @classmethod
    def sqrt2(cls) -> "ExactScalar":
        return cls(q2=Fraction(1))

    @classmethod
    def inv_sqrt2(cls) -> "ExactScalar":
        # 1/sqrt2 = sqrt2/2
        return cls(q2=Fraction(1, 2))

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, _Coercible):
            return ExactScalar.from_fraction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.q0 + o.q0, self.q1 + o.q1,
                           self.q2 + o.q2, self.q3 + o.q3)

    __radd__ = __add__

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.q0, -self.q1, -self.q2, -self.q3)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # Write x = A + B*sqrt2 with A, B Gaussian rationals; sqrt2^2 = 2.
        a_re, a_im, b_re, b_im = self.q0, self.q1, self.q2, self.q3
        c_re, c_im, d_re, d_im = o.q0, o.q1, o.q2, o.q3
        ac_re = a_re * c_re - a_im * c_im
        ac_im = a_re * c_im + a_im * c_re
        bd_re = b_re * d_re - b_im * d_im
        bd_im = b_re * d_im + b_im * d_re
        ad_re = a_re * d_re - a_im * d_im
        ad_im = a_re * d_im + a_im * d_re
        bc_re = b_re * c_re - b_im * c_im
        bc_im = b_re * c_im + b_im * c_re
        return ExactScalar(ac_re + 2 * bd_re, ac_im + 2 * bd_im,
                           ad_re + bc_re, ad_im + bc_im)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "ExactScalar":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        # 1/(A + B*sqrt2) = (A - B*sqrt2) / (A^2 - 2 B^2), both steps Gaussian.
        conj2 = ExactScalar(self.q0, self.q1, -self.q2, -self.q3)
        denom = self * conj2  # Gaussian rational: q2 = q3 = 0
        d_re, d_im = denom.q0, denom.q1
        mag = d_re * d_re + d_im * d_im
        if mag == 0:
            raise ZeroDivisionError("inverse of zero ExactScalar")
        inv_gauss = ExactScalar(d_re / mag, -d_im / mag)
        return conj2 * inv_gauss

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.q0, -self.q1, self.q2, -self.q3)

    def norm_sq(self) -> "ExactScalar":
        """self * conj(self); i-parts are always zero."""
        return self * self.conjugate()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.q0, self.q1, self.q2, self.q3) == (o.q0, o.q1, o.q2, o.q3)

    def __hash__(self):
        return hash((self.q0, self.q1, self.q2, self.q3))

    def is_zero(self) -> bool:
        return not (self.q0 or self.q1 or self.q2 or self.q3)

    def as_fraction(self) -> Fraction:
        """The value as a plain rational; raises if i or sqrt2 parts remain."""
        if self.q1 or self.q2 or self.q3:
            raise UnrepresentableError(f"{self} is not a plain rational")
        return self.q0

    def to_complex(self) -> complex:
        try:
            r2 = math.sqrt(2.0)
            return complex(float(self.q0) + float(self.q2) * r2,
                           float(self.q1) + float(self.q3) * r2)
        except OverflowError as exc:
            raise UnrepresentableError(f"overflow converting {self!r}") from exc

    def __float__(self) -> float:
        z = self.to_complex()
        if z.imag != 0.0:
            raise UnrepresentableError(f"{self} has a nonzero imaginary part")
        return z.real

    def to_string(self) -> str:
        """Canonical form "q0 + q1*i + q2*r2 + q3*i*r2", zero terms omitted."""
        parts = []
        for coeff, tag in ((self.q0, ""), (self.q1, "*i"),
                           (self.q2, "*r2"), (self.q3, "*i*r2")):
            if coeff:
                parts.append(f"{coeff}{tag}")
        return " + ".join(parts) if parts else "0"

    @classmethod
    def from_string(cls, text: str) -> "ExactScalar":
        coeffs = {"": Fraction(0), "*i": Fraction(0),
                  "*r2": Fraction(0), "*i*r2": Fraction(0)}
        text = text.strip()
        if text != "0":
            for part in text.split(" + "):
                m = re.fullmatch(r"(-?\d+(?:/\d+)?)((?:\*i)?(?:\*r2)?)", part.strip())
                if m is None:
                    raise ValueError(f"malformed ExactScalar term: {part!r}")
                coeffs[m.group(2)] += Fraction(m.group(1))
        return cls(coeffs[""], coeffs["*i"], coeffs["*r2"], coeffs["*i*r2"])

    def __str__(self) -> str:
        return self.to_string()


ZERO = ExactScalar()
ONE = ExactScalar.from_fraction(1)
I = ExactScalar.i()
INV_SQRT2 = ExactScalar.inv_sqrt2()


def _fraction_sqrt(q: Fraction):
    """sqrt of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_sqrt(q: Fraction) -> ExactScalar:
    """sqrt(q) as an ExactScalar; only q = r^2 or q = 2 r^2 are in the field."""
    r = _fraction_sqrt(q)
    if r is not None:
        return ExactScalar(r)
    r = _fraction_sqrt(q / 2)
    if r is not None:
        return ExactScalar(q2=r)
    raise UnrepresentableError(f"sqrt({q}) is not in Q(i, sqrt2)")


# ---------------------------------------------------------------------------
# Backend dispatch. Exact states carry ExactScalar amplitudes, float states
# carry complex; the functions below are the only places that care which.
# ---------------------------------------------------------------------------

def scalar_one(backend: str):
    return ONE if backend == EXACT else complex(1.0)


def scalar_i(backend: str):
    return I if backend == EXACT else complex(0.0, 1.0)


def scalar_inv_sqrt2(backend: str):
    return INV_SQRT2 if backend == EXACT else complex(1.0 / math.sqrt(2.0))


def scalar_from_fraction(q: Fraction, backend: str):
    return ExactScalar.from_fraction(q) if backend == EXACT else complex(float(q))


def scalar_sqrt(q: Fraction, backend: str):
    """sqrt of a non-negative rational in the given backend."""
    if backend == EXACT:
        return exact_sqrt(q)
    return complex(math.sqrt(float(q)))


def conj(x):
    return x.conjugate()


def real_part(x):
    """The value as an exact real: Fraction when rational, else a real
    ExactScalar carrying a sqrt2 part. Raises if an imaginary part remains."""
    if isinstance(x, ExactScalar):
        if x.q1 or x.q3:
            raise UnrepresentableError(f"{x} has a nonzero imaginary part")
        if x.q2 == 0:
            return x.q0
        return x
    return x.real


def is_zero(x) -> bool:
    if isinstance(x, ExactScalar):
        return x.is_zero()
    return x == 0.0


def to_complex(x) -> complex:
    if isinstance(x, ExactScalar):
        return x.to_complex()
    return complex(x)
