"""Transformation functions and negators on probability values.

A *transformation function* N maps probability values to probability values
so that applying it component-wise to any distribution yields another
distribution.  A *negator* is a decreasing transformation function; applying
it component-wise produces a negation of the input distribution (larger
components become smaller and vice versa).

This module provides an immutable descriptor algebra for such functions:

``Identity``
    N(p) = p.  Increasing, so not a negator.
``RootSum``
    N(p) = sqrt(p) / sum(sqrt(p_i)).  Increasing and pd-dependent.
``Uniform``
    N(p) = 1/n.  Ignores p; every negation lands on the uniform distribution.
``Yager``
    N(p) = (1 - p) / (n - 1).
``Tsallis(k)``
    N(p) = (1 - p^k) / (n - sum(p_i^k)), k > 0.  pd-dependent for k != 1.
``Linear(alpha)``
    N(p) = alpha/n + (1 - alpha)(1 - p)/(n - 1), the convex combination of
    the uniform and Yager negators; alpha in [0, 1].
``Generator(fn, label)``
    N(p) = fn(p) / sum(fn(p_i)) for a non-negative fn with positive sum.
``Mixture(components)``
    Weighted sum of other descriptors, weights in [0, 1] summing to 1.

Each descriptor carries two claims: ``claims_negator`` (it is a decreasing
transformation function) and ``claims_pd_independent`` (its value at p does
not depend on the surrounding distribution).  The claims are declared for
built-ins and inferred for mixtures; the analysis module checks them
empirically.

Descriptors also have a textual form (see :func:`parse_descriptor`) used by
the command line:

    identity | rootsum | uniform | yager | tsallis:k=<real>
    | linear:alpha=<real> | linear:n1=<real> | linear:n0=<real>
    | mix:[<w1>*<desc1>,<w2>*<desc2>,...]

The ``linear:n1=`` / ``linear:n0=`` forms fix the value of the negator at
p = 1 (resp. p = 0) and therefore need the distribution length to resolve;
``parse_descriptor`` must be given ``n`` for them.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import Distribution
from .errors import (
    ArgumentError,
    ContextMismatch,
    ContextRequired,
    DescriptorError,
    EmptyMixture,
    GeneratorError,
    InternalConsistencyError,
    LengthError,
    RangeError,
    SumError,
    WeightError,
)

#: Slack allowed on probability arguments (matches distribution validation).
PROBABILITY_SLACK = 1e-9
#: Tolerance for matching a probed value against a context component.
CONTEXT_TOLERANCE = 1e-12
#: Tolerance on the mixture weight sum.
WEIGHT_TOLERANCE = 1e-12
#: Tolerance on the component sum of a transformed distribution.
OUTPUT_SUM_TOLERANCE = 1e-9


class NegatorDescriptor:
    """Immutable description of a transformation function.

    ``uses_length`` is True when evaluating the descriptor needs the
    distribution length as an input beyond the probability value and the
    context distribution itself.
    """

    claims_negator: bool = False
    claims_pd_independent: bool = False
    uses_length: bool = False

    def spec_string(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(NegatorDescriptor):
    claims_pd_independent = True

    def spec_string(self) -> str:
        return "identity"


@dataclass(frozen=True)
class RootSum(NegatorDescriptor):
    def spec_string(self) -> str:
        return "rootsum"


@dataclass(frozen=True)
class Uniform(NegatorDescriptor):
    claims_negator = True
    claims_pd_independent = True
    uses_length = True

    def spec_string(self) -> str:
        return "uniform"


@dataclass(frozen=True)
class Yager(NegatorDescriptor):
    claims_negator = True
    claims_pd_independent = True
    uses_length = True

    def spec_string(self) -> str:
        return "yager"


@dataclass(frozen=True)
class Tsallis(NegatorDescriptor):
    k: float
    claims_negator = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", float(self.k))
        # k < 0 would make the generator 1 - p^k non-positive on (0, 1]
        # and undefined at 0, so only k > 0 is admitted.
        if not (math.isfinite(self.k) and self.k > 0):
            raise RangeError(f"Tsallis parameter k must be > 0, got {self.k!r}")

    def spec_string(self) -> str:
        return f"tsallis:k={self.k!r}"


@dataclass(frozen=True)
class Linear(NegatorDescriptor):
    alpha: float
    claims_negator = True
    claims_pd_independent = True
    uses_length = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", float(self.alpha))
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha <= 1.0):
            raise RangeError(f"Linear parameter alpha must lie in [0, 1], got {self.alpha!r}")

    def spec_string(self) -> str:
        return f"linear:alpha={self.alpha!r}"


@dataclass(frozen=True)
class Generator(NegatorDescriptor):
    """Descriptor backed by a caller-supplied generator function.

    ``fn`` must be effect-free, non-negative on [0, 1] and have a positive
    sum over every distribution it is applied to.  The function itself is
    not serialisable; ``label`` stands in for it in reports.

    pd-independence cannot be decided from function values, so the claim
    defaults to False and may be asserted by the caller (typically after
    probing).  A claimed-independent generator evaluated without a context
    uses the canonical two-value distribution (p, q, ..., q) with
    q = (1 - p)/(n - 1), which by the claim is as good as any other.
    """

    fn: Callable[[float], float]
    label: str = "generator"
    claims_pd_independent: bool = False
    claims_negator = True

    def spec_string(self) -> str:
        return f"generator:{self.label}"


@dataclass(frozen=True)
class Mixture(NegatorDescriptor):
    components: tuple[tuple[float, NegatorDescriptor], ...]

    def __post_init__(self) -> None:
        components = tuple((float(w), d) for w, d in self.components)
        object.__setattr__(self, "components", components)
        if not components:
            raise EmptyMixture("a mixture needs at least one component")
        for weight, inner in components:
            if not (math.isfinite(weight) and 0.0 <= weight <= 1.0):
                raise WeightError(f"mixture weight {weight!r} lies outside [0, 1]")
            if not isinstance(inner, NegatorDescriptor):
                raise DescriptorError(f"mixture component {inner!r} is not a descriptor")
        total = math.fsum(w for w, _ in components)
        if abs(total - 1.0) > WEIGHT_TOLERANCE:
            raise WeightError(f"mixture weights sum to {total!r}, expected 1")

    @property
    def claims_negator(self) -> bool:  # type: ignore[override]
        return all(inner.claims_negator for _, inner in self.components)

    @property
    def claims_pd_independent(self) -> bool:  # type: ignore[override]
        return all(inner.claims_pd_independent for _, inner in self.components)

    @property
    def uses_length(self) -> bool:  # type: ignore[override]
        return any(inner.uses_length for _, inner in self.components)

    def spec_string(self) -> str:
        inner = ",".join(f"{w!r}*{d.spec_string()}" for w, d in self.components)
        return f"mix:[{inner}]"


IDENTITY = Identity()
ROOT_SUM = RootSum()
UNIFORM = Uniform()
YAGER = Yager()

#: Parameterless built-ins by their textual name.
BUILTINS: dict[str, NegatorDescriptor] = {
    "identity": IDENTITY,
    "rootsum": ROOT_SUM,
    "uniform": UNIFORM,
    "yager": YAGER,
}


def _coerce_probability(p: float) -> float:
    p = float(p)
    if math.isnan(p) or p < -PROBABILITY_SLACK or p > 1.0 + PROBABILITY_SLACK:
        raise RangeError(f"probability {p!r} lies outside [0, 1]")
    return min(max(p, 0.0), 1.0)


def _require_length(descriptor: NegatorDescriptor, n: int | None) -> int:
    if n is None:
        raise ArgumentError(
            f"{type(descriptor).__name__} evaluation needs the distribution length; "
            "pass n= or a context distribution"
        )
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    return n


def _canonical_context(p: float, n: int) -> Distribution:
    # The distribution (p, q, ..., q) with q = (1 - p)/(n - 1); the unique
    # length-n distribution, up to order, whose remaining mass is spread evenly.
    q = (1.0 - p) / (n - 1)
    return Distribution((p,) + (q,) * (n - 1))


def _generator_value(fn: Callable[[float], float], label: str, p: float, context: Distribution) -> float:
    values = []
    for c in context.values:
        fc = fn(min(max(c, 0.0), 1.0))
        if math.isnan(fc):
            raise GeneratorError(f"generator {label} returned NaN at {c!r}")
        if fc < 0.0:
            raise GeneratorError(f"generator {label} is negative at {c!r}: f = {fc!r}")
        values.append(fc)
    total = math.fsum(values)
    if total <= 0.0:
        raise GeneratorError(f"generator {label} sums to {total!r} over the context, expected > 0")
    fp = fn(p)
    if math.isnan(fp) or fp < 0.0:
        raise GeneratorError(f"generator {label} is negative at {p!r}: f = {fp!r}")
    return fp / total


def _require_member(p: float, context: Distribution) -> None:
    if min(abs(c - p) for c in context.values) > CONTEXT_TOLERANCE:
        raise ContextMismatch(f"{p!r} is not a component of the context distribution")


def evaluate(
    descriptor: NegatorDescriptor,
    p: float,
    context: Distribution | None = None,
    *,
    n: int | None = None,
) -> float:
    """Evaluate a transformation function at a single probability value.

    pd-independent descriptors ignore the context's values (only its length
    matters, and ``n`` may be passed instead).  pd-dependent descriptors
    need a context containing ``p`` as a component within 1e-12; a
    pd-dependent descriptor without one raises :class:`ContextRequired`,
    except for generators that claim independence, which fall back to the
    canonical two-value context.
    """
    p = _coerce_probability(p)
    if context is not None:
        if n is not None and n != len(context):
            raise ArgumentError(f"n={n} disagrees with the context length {len(context)}")
        n = len(context)
    return _evaluate(descriptor, p, context, n)


def _evaluate(descriptor, p, context, n):
    if isinstance(descriptor, Identity):
        return p
    if isinstance(descriptor, Uniform):
        return 1.0 / _require_length(descriptor, n)
    if isinstance(descriptor, Yager):
        return (1.0 - p) / (_require_length(descriptor, n) - 1)
    if isinstance(descriptor, Linear):
        n = _require_length(descriptor, n)
        return descriptor.alpha / n + (1.0 - descriptor.alpha) * (1.0 - p) / (n - 1)
    if isinstance(descriptor, Mixture):
        return math.fsum(w * _evaluate(inner, p, context, n) for w, inner in descriptor.components)
    if isinstance(descriptor, (RootSum, Tsallis, Generator)):
        if context is None:
            if isinstance(descriptor, Generator) and descriptor.claims_pd_independent and n is not None:
                context = _canonical_context(p, _require_length(descriptor, n))
            else:
                raise ContextRequired(
                    f"{type(descriptor).__name__} is pd-dependent and needs a context distribution"
                )
        else:
            _require_member(p, context)
        if isinstance(descriptor, RootSum):
            total = math.fsum(math.sqrt(min(max(c, 0.0), 1.0)) for c in context.values)
            return math.sqrt(p) / total
        if isinstance(descriptor, Tsallis):
            k = descriptor.k
            denominator = len(context) - math.fsum(min(max(c, 0.0), 1.0) ** k for c in context.values)
            if denominator <= 0.0:
                raise GeneratorError(f"Tsallis normaliser is {denominator!r}, expected > 0")
            return (1.0 - p ** k) / denominator
        return _generator_value(descriptor.fn, descriptor.label, p, context)
    raise DescriptorError(f"unknown descriptor type {type(descriptor).__name__}")


def apply_transformation(descriptor: NegatorDescriptor, dist: Distribution) -> Distribution:
    """Apply a transformation function component-wise to a distribution.

    Equal components are evaluated once and the result reused, so equal
    inputs map to bit-equal outputs.  The output must land back on the
    simplex within 1e-9; anything else is an
    :class:`InternalConsistencyError`, never renormalised away.
    """
    images: dict[float, float] = {}
    for value in dist.values:
        if value not in images:
            images[value] = evaluate(descriptor, value, context=dist)
    transformed = tuple(images[value] for value in dist.values)
    total = math.fsum(transformed)
    if abs(total - 1.0) > OUTPUT_SUM_TOLERANCE:
        raise InternalConsistencyError(
            f"{descriptor.spec_string()} produced components summing to {total!r}"
        )
    try:
        return Distribution(transformed, OUTPUT_SUM_TOLERANCE)
    except (RangeError, SumError, LengthError) as exc:
        raise InternalConsistencyError(
            f"{descriptor.spec_string()} produced values off the simplex: {exc}"
        ) from exc


def from_generator(fn: Callable[[float], float], dist: Distribution, label: str = "generator") -> Distribution:
    """Transform a distribution by normalising a generator function over it.

    The result is (f(p_1), ..., f(p_n)) / sum(f(p_i)).  Raises
    :class:`GeneratorError` when some f(p_i) is negative or the sum is not
    positive.  A decreasing ``fn`` yields a negation of ``dist``.
    """
    return apply_transformation(Generator(fn, label), dist)


def mixture(components: Sequence[tuple[float, NegatorDescriptor]] | Iterable[tuple[float, NegatorDescriptor]]) -> Mixture:
    """Build the weighted sum of other descriptors.

    The result claims to be a negator (resp. pd-independent) exactly when
    every component does.
    """
    return Mixture(tuple(components))


def _snap_unit(x: float, tolerance: float = 1e-12) -> float:
    # Absorb float excursions just outside [0, 1] from boundary conversions.
    if -tolerance <= x < 0.0:
        return 0.0
    if 1.0 < x <= 1.0 + tolerance:
        return 1.0
    return x


def linear_from_alpha(alpha: float) -> Linear:
    """The convex combination of the uniform and Yager negators."""
    return Linear(alpha)


def linear_from_boundary(
    n: int,
    n_at_one: float | None = None,
    n_at_zero: float | None = None,
) -> Linear:
    """Build the linear negator fixed by its value at p = 1 or at p = 0.

    For length n the admissible boundary values are N(1) in [0, 1/n] and
    N(0) in [1/n, 1/(n-1)]; the two determine each other through
    N(1) = 1 - (n - 1) N(0), and either pins alpha = n N(1).
    """
    if n < 2:
        raise LengthError(f"need n >= 2, got {n}")
    if (n_at_one is None) == (n_at_zero is None):
        raise ArgumentError("exactly one of n_at_one and n_at_zero must be supplied")
    if n_at_zero is not None:
        n_at_zero = float(n_at_zero)
        low, high = 1.0 / n, 1.0 / (n - 1)
        if math.isnan(n_at_zero) or not low <= n_at_zero <= high:
            raise RangeError(
                f"N(0) = {n_at_zero!r} outside the admissible interval [1/{n}, 1/{n - 1}] = [{low!r}, {high!r}]"
            )
        n_at_one = 1.0 - (n - 1) * n_at_zero
    else:
        n_at_one = float(n_at_one)
        if math.isnan(n_at_one) or not 0.0 <= n_at_one <= 1.0 / n:
            raise RangeError(
                f"N(1) = {n_at_one!r} outside the admissible interval [0, 1/{n}] = [0.0, {1.0 / n!r}]"
            )
    return Linear(_snap_unit(n * _snap_unit(n_at_one)))


# ---------------------------------------------------------------------------
# Textual descriptor syntax
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"[a-z]+")
_FLOAT_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


class _Parser:
    """Recursive-descent parser for the descriptor syntax.

    Parsing is exact: no whitespace skipping, no case folding.  Failures
    raise :class:`DescriptorError` carrying the offending position.
    """

    def __init__(self, text: str, n: int | None):
        self.text = text
        self.n = n
        self.pos = 0

    def parse(self) -> NegatorDescriptor:
        descriptor = self.descriptor()
        if self.pos != len(self.text):
            self.fail("unexpected trailing characters")
        return descriptor

    def fail(self, message: str) -> None:
        raise DescriptorError(message, position=self.pos)

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def number(self) -> float:
        match = _FLOAT_RE.match(self.text, self.pos)
        if match is None:
            self.fail("expected a number")
        self.pos = match.end()
        return float(match.group())

    def descriptor(self) -> NegatorDescriptor:
        match = _NAME_RE.match(self.text, self.pos)
        if match is None:
            self.fail("expected a negator name")
        name = match.group()
        self.pos = match.end()
        if name in BUILTINS:
            return BUILTINS[name]
        if name == "tsallis":
            self.expect(":k=")
            return Tsallis(self.number())
        if name == "linear":
            self.expect(":")
            if self.text.startswith("alpha=", self.pos):
                self.pos += len("alpha=")
                return Linear(self.number())
            if self.text.startswith("n1=", self.pos):
                if self.n is None:
                    self.fail("linear:n1= needs the distribution length n")
                self.pos += len("n1=")
                return linear_from_boundary(self.n, n_at_one=self.number())
            if self.text.startswith("n0=", self.pos):
                if self.n is None:
                    self.fail("linear:n0= needs the distribution length n")
                self.pos += len("n0=")
                return linear_from_boundary(self.n, n_at_zero=self.number())
            self.fail("expected alpha=, n1= or n0=")
        if name == "mix":
            self.expect(":[")
            components = [self.weighted()]
            while self.text.startswith(",", self.pos):
                self.pos += 1
                components.append(self.weighted())
            self.expect("]")
            return Mixture(tuple(components))
        self.pos -= len(name)
        self.fail(f"unknown negator {name!r}")
        raise AssertionError("unreachable")

    def weighted(self) -> tuple[float, NegatorDescriptor]:
        weight = self.number()
        self.expect("*")
        return weight, self.descriptor()


def parse_descriptor(text: str, n: int | None = None) -> NegatorDescriptor:
    """Parse the textual descriptor syntax.

    ``n`` is required only by the ``linear:n1=``/``linear:n0=`` boundary
    forms, which resolve to a concrete ``Linear`` for that length.
    """
    if not isinstance(text, str):
        raise DescriptorError(f"descriptor must be a string, got {type(text).__name__}")
    return _Parser(text, n).parse()
