"""Truncated Taylor (jet) arithmetic.

A ``Jet`` stores the coefficients ``c[j] = f^(j)(x) / j!`` of a function
expanded at a point, truncated after a fixed order.  Arithmetic on jets is
ordinary power-series arithmetic truncated to that order, which yields exact
derivatives of composite expressions without symbolic differentiation.

Coefficients may be ``int``/``Fraction`` (kept exact as long as every
operation is rational, e.g. ``log`` at argument 1) or ``float``.  Mixing the
two degrades to ``float`` through normal Python numeric coercion.
"""

from __future__ import annotations

import math
from fractions import Fraction

_FACTORIALS = [math.factorial(j) for j in range(34)]


def _factorial(j):
    if j < len(_FACTORIALS):
        return _FACTORIALS[j]
    return math.factorial(j)


def _is_exact(x):
    return isinstance(x, (int, Fraction))


class Jet:
    """Truncated Taylor expansion of fixed order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    # -- construction -------------------------------------------------
    @classmethod
    def variable(cls, x, order):
        """Jet of the identity function at ``x``."""
        if order == 0:
            return cls((x,))
        zero = 0 if _is_exact(x) else 0.0
        one = 1 if _is_exact(x) else 1.0
        return cls((x, one) + (zero,) * (order - 1))

    @classmethod
    def constant(cls, c, order):
        zero = 0 if _is_exact(c) else 0.0
        return cls((c,) + (zero,) * order)

    # -- basic queries -------------------------------------------------
    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def value(self):
        return self.coeffs[0]

    def derivatives(self):
        """Return ``(f, f', ..., f^(m))`` recovered from the coefficients."""
        return tuple(c * _factorial(j) for j, c in enumerate(self.coeffs))

    def is_exact(self):
        return all(_is_exact(c) for c in self.coeffs)

    # -- ring operations -----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ValueError("jet order mismatch")
            return other
        return Jet.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return Jet(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Jet(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        return Jet(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        m = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(m + 1):
            out.append(sum(a[i] * b[k - i] for i in range(k + 1)))
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("jet division by a jet with zero value")
        m = self.order
        c = []
        for k in range(m + 1):
            s = a[k] - sum(c[j] * b[k - j] for j in range(k))
            c.append(s / b[0])
        return Jet(c)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"jet powers require a non-negative integer, got {n!r}")
        result = Jet.constant(1 if self.is_exact() else 1.0, self.order)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- transcendental operations --------------------------------------
    def log(self):
        """Series logarithm.  Exact when the value is exactly 1."""
        v = self.value
        if not (v > 0):
            raise ValueError("jet log requires a positive value")
        if _is_exact(v) and v == 1:
            head = 0
        else:
            head = math.log(v)
        m = self.order
        if m == 0:
            return Jet((head,))
        # (log f)' = f'/f, integrated term by term.
        deriv = Jet(tuple((j + 1) * self.coeffs[j + 1] for j in range(m))
                    + (0 if self.is_exact() else 0.0,))
        quot = deriv / self
        out = [head]
        for k in range(1, m + 1):
            out.append(quot.coeffs[k - 1] / k)
        return Jet(out)

    def exp(self):
        """Series exponential.  Exact when the value is exactly 0."""
        v = self.value
        if _is_exact(v) and v == 0:
            head = 1
        else:
            head = math.exp(v)
        m = self.order
        out = [head]
        for k in range(1, m + 1):
            s = sum(j * self.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out.append(s / k)
        return Jet(out)

    def __repr__(self):
        return f"Jet({self.coeffs!r})"


# -- helpers usable on both jets and plain numbers -----------------------

def jlog(x):
    """log that dispatches on Jet vs plain number."""
    if isinstance(x, Jet):
        return x.log()
    return math.log(x)


def jexp(x):
    if isinstance(x, Jet):
        return x.exp()
    return math.exp(x)
