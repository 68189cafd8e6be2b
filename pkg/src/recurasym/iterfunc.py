"""Iterative functions F = Iter(h, g, x0, k).

``F`` solves the functional equation ``F(x) = h(x) + F(g(x))`` for ``x > x0``
with boundary ``F = k`` on ``[0, x0]``, where ``g`` is an increasing unbounded
contraction-toward-the-boundary map satisfying a gap condition
``x - g(x) > eps`` on bounded windows above ``x0``.  Evaluation unrolls the
recursion: ``F(x) = sum_i h(g^(i)(x)) + k(g^(m0)(x))`` where ``m0`` counts the
iterations needed to fall at or below ``x0``.

Derivatives are propagated through the same orbit with jet arithmetic, so no
symbolic work or finite differencing is involved.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

from .errors import (ArgumentError, CapabilityError, DivergentIterationError,
                     InversionError)
from .jets import Jet

DEFAULT_ITERATION_CAP = 10 ** 6


# ---------------------------------------------------------------------------
# Smooth scalar functions carrying derivative (jet) information
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmoothFn:
    """A scalar function with derivatives available up to ``order``.

    ``expr`` must accept either a plain number or a :class:`Jet` and use only
    operations both support (arithmetic plus the ``jlog``/``jexp`` helpers),
    so a single definition yields values and exact derivatives.
    """

    expr: Callable
    order: int = 8
    domain_min: float = 0.0
    label: str = ""

    def value(self, x):
        return self.expr(x)

    __call__ = value

    def jet(self, x, m=None):
        """Return derivatives ``(f(x), f'(x), ..., f^(m)(x))``."""
        if m is None:
            m = self.order
        if m > self.order:
            raise CapabilityError(
                f"derivative order {m} exceeds declared order {self.order}"
                f" of {self.label or 'smooth function'}")
        if m == 0:
            return (self.expr(x),)
        out = self.expr(Jet.variable(x, m))
        if isinstance(out, Jet):
            return out.derivatives()
        # expression collapsed to a constant
        return (out,) + (0.0,) * m

    def jet_apply(self, u: Jet) -> Jet:
        """Apply the function to an existing jet (for compositions)."""
        out = self.expr(u)
        if isinstance(out, Jet):
            return out
        return Jet.constant(out, u.order)

    def derivative(self, x, j):
        return self.jet(x, j)[j]


def constant(c, label=None) -> SmoothFn:
    return SmoothFn(lambda x: x * 0 + c, order=64,
                    label=label or f"{c}")


def affine(intercept, slope, label=None) -> SmoothFn:
    return SmoothFn(lambda x: intercept + slope * x, order=64,
                    label=label or f"{intercept} + {slope}*x")


def polynomial(coeffs, label=None) -> SmoothFn:
    """Polynomial ``sum coeffs[i] * x**i`` (Horner form, jet-safe)."""
    coeffs = tuple(coeffs)

    def expr(x):
        acc = x * 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    return SmoothFn(expr, order=64, label=label or "polynomial")


def scaled_log(scale=1, label=None) -> SmoothFn:
    """x -> scale * log(x), valid for x > 0."""
    from .jets import jlog

    return SmoothFn(lambda x: scale * jlog(x), order=16,
                    domain_min=1e-300,
                    label=label or (f"{scale}*log(x)" if scale != 1 else "log(x)"))


def from_expression(expr, order=8, domain_min=0.0, label="") -> SmoothFn:
    return SmoothFn(expr, order=order, domain_min=domain_min, label=label)


# ---------------------------------------------------------------------------
# Boundaries
# ---------------------------------------------------------------------------

def _boundary_jet(boundary, u: Jet) -> Jet:
    """Evaluate the boundary function on a jet.

    Accepts SmoothFn, anything exposing ``jet_apply`` (e.g. the boundary
    polynomial from the smoothing module), or a bare callable; bare callables
    support order-0 jets only.
    """
    if hasattr(boundary, "jet_apply"):
        return boundary.jet_apply(u)
    if u.order == 0:
        return Jet.constant(boundary(u.value), 0)
    raise CapabilityError(
        "boundary is a bare callable; derivatives are unavailable")


def _boundary_value(boundary, x):
    if hasattr(boundary, "value"):
        return boundary.value(x)
    return boundary(x)


# ---------------------------------------------------------------------------
# The quadruple
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IterSpec:
    """The quadruple (h, g, x0, boundary) generating an iterative function.

    ``g`` must be strictly increasing and satisfy the gap condition
    ``x - g(x) > 0`` above ``x0``; both are checked on a geometric sample grid
    at construction (a sampled check, not a proof).
    """

    h: SmoothFn
    g: SmoothFn
    x0: float
    boundary: object = None            # SmoothFn-like or callable on [0, x0]
    iteration_cap: int = DEFAULT_ITERATION_CAP
    g_inverse: Callable | None = None  # optional analytic inverse
    validate: bool = True
    validation_x_max: float = 1e6
    validation_points: int = 1024

    def __post_init__(self):
        if self.boundary is None:
            object.__setattr__(self, "boundary", constant(0.0, label="0"))
        if not self.x0 > 0:
            raise ArgumentError(f"x0 must be positive, got {self.x0}")
        if self.validate:
            self._validate_on_grid()

    def _validate_on_grid(self):
        lo = self.x0
        hi = max(self.validation_x_max, self.x0 * 4)
        n = self.validation_points
        ratio = (hi / lo) ** (1.0 / n)
        prev_g = None
        x = lo
        for _ in range(n):
            x *= ratio
            gx = self.g.value(x)
            if not x - gx > 0:
                raise ArgumentError(
                    f"gap condition violated at x={x:.6g}: x - g(x) = {x - gx:.3g}")
            if prev_g is not None and not gx > prev_g:
                raise ArgumentError(
                    f"g is not strictly increasing near x={x:.6g}")
            prev_g = gx


@dataclass(frozen=True)
class Breakpoints:
    """Increasing orbit of x0 under the inverse map: A_1 = x0, g(A_{i+1}) = A_i."""

    values: tuple = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def m0(spec: IterSpec, x) -> int:
    """Number of g-iterations needed to drive ``x`` to at most ``x0``."""
    if x < 0:
        raise ArgumentError(f"m0 requires x >= 0, got {x}")
    count = 0
    cur = float(x)
    while cur > spec.x0:
        cur = spec.g.value(cur)
        count += 1
        if count > spec.iteration_cap:
            raise DivergentIterationError(
                f"iteration cap {spec.iteration_cap} exceeded at x={x!r}; "
                "the gap condition appears to be violated")
    return count


def iter_eval(spec: IterSpec, x) -> float:
    if x < 0:
        raise ArgumentError(f"iter_eval requires x >= 0, got {x}")
    total = 0.0
    cur = float(x)
    count = 0
    while cur > spec.x0:
        total += spec.h.value(cur)
        cur = spec.g.value(cur)
        count += 1
        if count > spec.iteration_cap:
            raise DivergentIterationError(
                f"iteration cap {spec.iteration_cap} exceeded at x={x!r}")
    return total + _boundary_value(spec.boundary, cur)


def iter_jet(spec: IterSpec, x, order) -> tuple:
    """Value and derivatives of the iterative function at ``x``.

    Chain rule through the whole orbit, carried by jet composition; the
    boundary contributes its own derivatives at the landing point.
    """
    u = Jet.variable(float(x), order)
    total = Jet.constant(0.0, order)
    count = 0
    while u.value > spec.x0:
        total = total + spec.h.jet_apply(u)
        u = spec.g.jet_apply(u)
        count += 1
        if count > spec.iteration_cap:
            raise DivergentIterationError(
                f"iteration cap {spec.iteration_cap} exceeded at x={x!r}")
    total = total + _boundary_jet(spec.boundary, u)
    return total.derivatives()


def iter_derivative(spec: IterSpec, x, order: int) -> float:
    """First or second derivative of the iterative function at ``x``."""
    if order not in (1, 2):
        raise ArgumentError(f"derivative order must be 1 or 2, got {order}")
    for fn, name in ((spec.h, "h"), (spec.g, "g")):
        if fn.order < order:
            raise CapabilityError(
                f"{name} declares order {fn.order} < requested {order}")
    return iter_jet(spec, x, order)[order]


def breakpoints(spec: IterSpec, x_max: float,
                rel_tol: float = 1e-12, max_count: int = 64) -> Breakpoints:
    """Breakpoints A_i <= x_max obtained by inverting g from x0 upward."""
    if x_max < spec.x0:
        return Breakpoints(())
    values = [float(spec.x0)]
    while len(values) < max_count:
        try:
            nxt = _invert_g(spec, values[-1], rel_tol)
        except InversionError:
            if len(values) == 1:
                raise
            break
        if nxt > x_max:
            break
        values.append(nxt)
    return Breakpoints(tuple(values))


def _invert_g(spec: IterSpec, target, rel_tol):
    """Solve g(y) = target for y > target using bisection with bracket growth."""
    if spec.g_inverse is not None:
        return float(spec.g_inverse(target))
    lo = max(target, spec.x0 * 0.5, 1e-300)
    if spec.g.value(lo) > target:
        raise InversionError(
            f"g({lo:.6g}) already exceeds the target {target:.6g}")
    hi = max(lo * 2, lo + 1.0)
    growth = 0
    while spec.g.value(hi) < target:
        hi *= 2
        growth += 1
        if growth > 4000 or not math.isfinite(hi):
            raise InversionError(
                f"could not bracket g^(-1)({target:.6g}); g may be bounded")
    while hi - lo > rel_tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if spec.g.value(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def asymptotic_compare(f1, f2, grid):
    """Raw ratio trace ``(x, f2(x)/f1(x), finite)`` over an increasing grid.

    No verdict is attached; non-finite ratios are flagged, not raised.
    """
    out = []
    for x in grid:
        try:
            v1 = f1(x)
            v2 = f2(x)
            ratio = v2 / v1
        except (ZeroDivisionError, OverflowError, ValueError):
            out.append((x, float("nan"), False))
            continue
        out.append((x, ratio, bool(math.isfinite(ratio))))
    return out
