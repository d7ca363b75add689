"""Dense integer polynomials in q and the Gaussian binomial family.

Everything here is exact: coefficients are arbitrary-precision ints and
the only division on offer refuses to leave a remainder.
"""

from __future__ import annotations

import dataclasses
import functools
from collections.abc import Iterable

from .errors import NonExactDivisionError


@dataclasses.dataclass(init=False, frozen=True)
class QPoly:
    """Polynomial in q, stored as a dense coefficient tuple.

    coeffs[r] is the coefficient of q^r.  Trailing zeros are trimmed on
    construction, so the zero polynomial has coeffs == () and degree -1.

    >>> QPoly([1, 0, 2]).coeffs
    (1, 0, 2)
    >>> QPoly([0, 0]).degree
    -1
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, r: int) -> int:
        """Coefficient of q^r, zero outside the stored range.

        >>> q_int(2).coeff(2)
        1
        >>> q_int(2).coeff(-1)
        0
        """
        if 0 <= r < len(self.coeffs):
            return self.coeffs[r]
        return 0

    def low_degree(self) -> int | None:
        """Smallest exponent carrying a nonzero coefficient, None if zero."""
        for r, c in enumerate(self.coeffs):
            if c:
                return r
        return None

    def shift(self, d: int) -> QPoly:
        """Multiply by q^d; d must be nonnegative."""
        if d < 0:
            raise ValueError(f"shift distance must be nonnegative, got {d}")
        if self.is_zero or d == 0:
            return self
        return QPoly((0,) * d + self.coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            return QPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return QPoly(out)

    __rmul__ = __mul__

    def exact_div(self, other: QPoly) -> QPoly:
        """Quotient self / other, demanding exactness.

        Raises NonExactDivisionError when a quotient coefficient would
        not be an integer or when a remainder is left over.

        >>> (q_int(2) * q_int(3)).exact_div(q_int(2)).coeffs
        (1, 1, 1, 1)
        """
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return ZERO
        if self.degree < other.degree:
            raise NonExactDivisionError(f"{self!r} is not a multiple of {other!r}")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        quot = [0] * (len(rem) - len(other.coeffs) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + other.degree]
            if c % lead:
                raise NonExactDivisionError(
                    f"leading step {c} / {lead} is not an integer")
            quot[i] = c // lead
            if quot[i]:
                for j, d in enumerate(other.coeffs):
                    rem[i + j] -= quot[i] * d
        if any(rem):
            raise NonExactDivisionError(
                f"nonzero remainder {QPoly(rem)!r} dividing by {other!r}")
        return QPoly(quot)

    def is_symmetric(self, center_times_two: int) -> bool:
        """True when coeff(r) == coeff(center_times_two - r) for all r.

        The center is passed doubled so odd symmetry axes need no
        fractions: a polynomial of degree d symmetric about d/2 passes
        is_symmetric(d).
        """
        hi = max(self.degree, center_times_two)
        return all(self.coeff(r) == self.coeff(center_times_two - r)
                   for r in range(hi + 1))

    def is_unimodal(self) -> bool:
        """True when coefficients weakly rise and then weakly fall.

        >>> QPoly([1, 0, 1]).is_unimodal()
        False
        """
        falling = False
        for prev, cur in zip(self.coeffs, self.coeffs[1:]):
            if cur < prev:
                falling = True
            elif cur > prev and falling:
                return False
        return True

    def evaluate(self, x: int) -> int:
        """Value at q = x; evaluate(1) is the coefficient sum."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for r, c in enumerate(self.coeffs):
            if not c:
                continue
            if r == 0:
                terms.append(str(c))
                continue
            base = "q" if r == 1 else f"q^{r}"
            terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms)


ZERO = QPoly()
ONE = QPoly((1,))


def q_int(a: int) -> QPoly:
    """The q-integer [a+1]_q = 1 + q + ... + q^a.

    >>> q_int(2).coeffs
    (1, 1, 1)
    """
    if a < 0:
        raise ValueError(f"q_int needs a >= 0, got {a}")
    return QPoly((1,) * (a + 1))


@functools.cache
def q_binomial(n: int, k: int) -> QPoly:
    """Generating function for partitions inside a k-row, n-column box.

    Built from the Pascal-style recurrence
    B(n, k) = B(n, k-1) + q^k B(n-1, k), never by division, so every
    coefficient is an exact partition count.  A negative argument gives
    the zero polynomial.  The cache is safe under concurrent use: the
    function is pure, so racing writes are idempotent.

    >>> q_binomial(2, 2).coeffs
    (1, 1, 2, 1, 1)
    """
    if n < 0 or k < 0:
        return ZERO
    # column[i] holds B(i, j) while stage j runs; i ascending keeps the
    # already-updated B(i-1, j) available
    column = [ONE] * (n + 1)
    for j in range(1, k + 1):
        for i in range(1, n + 1):
            column[i] = column[i] + column[i - 1].shift(j)
    return column[n]
