"""Operation descriptors, monoids, semirings, and the semiring registry.

The built-in families follow the usual graph conventions:

    plus_times      (+, *, 0)        numeric domains, integers wrap
    max_plus        (max, +, -inf)   ordered numeric domains
    min_plus        (min, +, +inf)   ordered numeric domains
    min_max         (min, max, +inf) ordered numeric domains
    or_and          (or, and, False) boolean
    min_select2nd   (min, 2nd, +inf) ordered numeric domains

Integer domains have no real infinities, so min-monoids use the domain's
maximum representable value as their identity and max-monoids use the
minimum (floats use actual +-inf).  Multiplications treat that encoded
infinity as absorbing: tropical plus returns it when either operand equals
it (and otherwise saturates instead of wrapping), and select2nd passes the
encoding through.  Without this the annihilator contract mul(0, x) = 0 that
sparse kernels rely on would not hold at the domain boundaries.
"""

from __future__ import annotations

import itertools
import random
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .domains import BOOLEAN, ValueDomain, ulp_distance
from .errors import (
    DomainMismatchError,
    DuplicateNameError,
    LawCheckError,
    UnknownSemiringError,
    UnsupportedDomainError,
)


@dataclass(frozen=True)
class BinaryOp:
    """A named, deterministic, pure function of two domain values."""

    name: str
    domain: ValueDomain
    eval: Callable[[Any, Any], Any] = field(repr=False)

    def __call__(self, a, b):
        return self.eval(a, b)


@dataclass(frozen=True)
class UnaryOp:
    """A named, deterministic, pure function from one domain into another."""

    name: str
    input_domain: ValueDomain
    output_domain: ValueDomain
    eval: Callable[[Any], Any] = field(repr=False)

    def __call__(self, a):
        return self.eval(a)


@dataclass(frozen=True)
class Monoid:
    """A commutative, associative binary operation with an identity element."""

    op: BinaryOp
    identity: Any

    def __post_init__(self):
        self.op.domain.check_value(self.identity)

    @property
    def domain(self) -> ValueDomain:
        return self.op.domain


@dataclass(frozen=True)
class Semiring:
    """An additive monoid and a multiplication sharing one value domain.

    The additive identity must annihilate under the multiplication; kernels
    skip implicit entries on that basis.
    """

    name: str
    add: Monoid
    mul: BinaryOp

    def __post_init__(self):
        if self.add.domain != self.mul.domain:
            raise DomainMismatchError(
                f"semiring {self.name!r}: add is over {self.add.domain.kind}, "
                f"mul over {self.mul.domain.kind}"
            )

    @property
    def domain(self) -> ValueDomain:
        return self.add.domain

    @property
    def zero(self):
        return self.add.identity


# ---------------------------------------------------------------------------
# Operation factories


def plus_monoid(domain: ValueDomain) -> Monoid:
    """Arithmetic addition; fixed-width integers wrap (two's complement)."""
    if domain.is_integer:
        fn = lambda a, b, _d=domain: _d.wrap(a + b)
        identity: Any = 0
    elif domain.is_float:
        fn = lambda a, b, _d=domain: _d.normalize(a + b)
        identity = 0.0
    elif domain.is_complex:
        fn = lambda a, b: a + b
        identity = complex(0.0, 0.0)
    else:
        raise UnsupportedDomainError(f"plus is not defined over {domain.kind}")
    return Monoid(BinaryOp("plus", domain, fn), identity)


def times_op(domain: ValueDomain) -> BinaryOp:
    """Arithmetic multiplication; fixed-width integers wrap."""
    if domain.is_integer:
        fn = lambda a, b, _d=domain: _d.wrap(a * b)
    elif domain.is_float:
        fn = lambda a, b, _d=domain: _d.normalize(a * b)
    elif domain.is_complex:
        fn = lambda a, b: a * b
    else:
        raise UnsupportedDomainError(f"times is not defined over {domain.kind}")
    return BinaryOp("times", domain, fn)


def _ordered_numeric(domain: ValueDomain) -> None:
    if not (domain.is_integer or domain.is_float):
        raise UnsupportedDomainError(
            f"ordered arithmetic is not defined over {domain.kind}"
        )


def min_monoid(domain: ValueDomain) -> Monoid:
    """Minimum, with the domain's encoded +infinity as identity."""
    _ordered_numeric(domain)
    return Monoid(BinaryOp("min", domain, lambda a, b: a if a <= b else b),
                  domain.max_value)


def max_monoid(domain: ValueDomain) -> Monoid:
    """Maximum, with the domain's encoded -infinity as identity."""
    _ordered_numeric(domain)
    return Monoid(BinaryOp("max", domain, lambda a, b: a if a >= b else b),
                  domain.min_value)


def or_monoid() -> Monoid:
    return Monoid(BinaryOp("or", BOOLEAN, lambda a, b: a or b), False)


def and_op() -> BinaryOp:
    return BinaryOp("and", BOOLEAN, lambda a, b: a and b)


def tropical_plus_op(domain: ValueDomain, absorbing) -> BinaryOp:
    """Addition that treats an encoded infinity as absorbing.

    Integer sums saturate at the domain bounds instead of wrapping; float
    sums short-circuit so that +inf plus -inf cannot produce a NaN.
    """
    _ordered_numeric(domain)
    if domain.is_integer:
        def fn(a, b, _d=domain, _z=absorbing):
            if a == _z or b == _z:
                return _z
            return _d.clamp(a + b)
    else:
        def fn(a, b, _d=domain, _z=absorbing):
            if a == _z or b == _z:
                return _z
            return _d.normalize(a + b)
    return BinaryOp("tropical_plus", domain, fn)


def select2nd_op(domain: ValueDomain, absorbing) -> BinaryOp:
    """Return the second operand, except that the encoded infinity absorbs.

    A plain (a, b) -> b would map (0, x) to x and break the annihilator
    contract, so the absorbing element is passed through from either side.
    """
    def fn(a, b, _z=absorbing):
        return _z if a == _z else b
    return BinaryOp("select2nd", domain, fn)


# ---------------------------------------------------------------------------
# Law checking


def _values_equal(domain: ValueDomain, a, b, ulp_tol: int) -> bool:
    if domain.is_float or domain.is_complex:
        return ulp_distance(a, b, domain) <= ulp_tol
    return a == b


def law_sample_pool(s: Semiring, rng: random.Random, size: int = 64) -> list:
    """Domain values used to probe a semiring's laws.

    Includes the additive identity, the domain extremes, and random draws.
    For semirings whose addition rounds (plus_times over floats or complex),
    the pool is restricted to positive finite magnitudes: sign-mixed sums
    cancel catastrophically and no fixed ULP bound on associativity could
    hold, while 0 * inf would produce NaN and break the annihilator check.
    """
    d = s.domain
    rounding_add = s.name.startswith("plus_times/") and (d.is_float or d.is_complex)
    if d.is_boolean:
        return [False, True]
    if d.is_integer:
        lo, hi = d.min_value, d.max_value
        pool = {0, 1, lo, hi, lo + 1, hi - 1}
        if d.is_signed:
            pool.add(-1)
        while len(pool) < size:
            pool.add(rng.randint(-100 if d.is_signed else 0, 100))
            pool.add(rng.randint(lo, hi))
        return sorted(pool)
    if d.is_float:
        def draw() -> float:
            return d.normalize(10.0 ** rng.uniform(-6.0, 6.0))

        if rounding_add:
            big = 3.4028234663852886e38 if d.kind == "float-single" else 1.7976931348623157e308
            tiny = 1.401298464324817e-45 if d.kind == "float-single" else 5e-324
            pool = [0.0, 0.5, 1.0, 2.0, big, tiny]
            while len(pool) < size:
                pool.append(draw())
            return pool
        pool = [0.0, 1.0, -1.0, d.max_value, d.min_value]
        while len(pool) < size:
            x = draw()
            pool.append(x if rng.random() < 0.5 else -x)
        return pool
    if d.is_complex:
        def draw_c() -> complex:
            return complex(10.0 ** rng.uniform(-6.0, 6.0), 10.0 ** rng.uniform(-6.0, 6.0))

        pool = [complex(0.0, 0.0), complex(1.0, 0.0), complex(0.0, 1.0)]
        while len(pool) < size:
            pool.append(draw_c())
        return pool
    raise UnsupportedDomainError(
        f"no default law samples over {d.kind}; pass explicit samples"
    )


def check_law_triples(s: Semiring, triples: Iterable[tuple], ulp_tol: int = 1) -> None:
    """Check add commutativity/associativity/identity and the annihilator.

    Each law is verified in its own full pass over the triples so the
    reported failure names the simplest broken law, not whichever check
    happened to run first.  Exact domains must match exactly; float and
    complex domains within `ulp_tol` units in the last place.
    """
    add = s.add.op.eval
    mul = s.mul.eval
    zero = s.add.identity
    d = s.domain
    triples = list(triples)
    for a, b, _c in triples:
        if not _values_equal(d, add(a, b), add(b, a), ulp_tol):
            raise LawCheckError("commutativity", (a, b))
    for a, b, c in triples:
        left = add(add(a, b), c)
        right = add(a, add(b, c))
        if not _values_equal(d, left, right, ulp_tol):
            raise LawCheckError("associativity", (a, b, c))
    for a, _b, _c in triples:
        if not _values_equal(d, add(a, zero), a, ulp_tol):
            raise LawCheckError("identity", (a,))
    for a, _b, _c in triples:
        if not _values_equal(d, mul(zero, a), zero, ulp_tol) or not _values_equal(
            d, mul(a, zero), zero, ulp_tol
        ):
            raise LawCheckError("annihilator", (a,))


def verify_semiring_laws(s: Semiring, samples: Sequence | None = None) -> None:
    """Registration-time gate: exhaustive law check over a compact sample."""
    if samples is None:
        samples = law_sample_pool(s, random.Random(0x5EED), size=16)
    for v in samples:
        s.domain.check_value(v)
    check_law_triples(s, itertools.product(samples, repeat=3))


# ---------------------------------------------------------------------------
# Registry

_ORDERED_KINDS = frozenset(
    k for k in (
        "signed-int-8", "signed-int-16", "signed-int-32", "signed-int-64",
        "unsigned-int-8", "unsigned-int-16", "unsigned-int-32", "unsigned-int-64",
        "float-single", "float-double",
    )
)
_NUMERIC_KINDS = _ORDERED_KINDS | {"complex-double"}

_FAMILY_SUPPORT = {
    "plus_times": _NUMERIC_KINDS,
    "max_plus": _ORDERED_KINDS,
    "min_plus": _ORDERED_KINDS,
    "min_max": _ORDERED_KINDS,
    "or_and": frozenset({"boolean"}),
    "min_select2nd": _ORDERED_KINDS,
}

_CANONICAL_DOMAIN = {
    "plus_times": "float-double",
    "max_plus": "float-double",
    "min_plus": "float-double",
    "min_max": "signed-int-64",
    "or_and": "boolean",
    "min_select2nd": "signed-int-64",
}

CANONICAL_NAMES = tuple(
    f"{family}/{kind}" for family, kind in _CANONICAL_DOMAIN.items()
)


def _build_family(family: str, domain: ValueDomain) -> Semiring:
    name = f"{family}/{domain.kind}"
    if family == "plus_times":
        return Semiring(name, plus_monoid(domain), times_op(domain))
    if family == "max_plus":
        add = max_monoid(domain)
        return Semiring(name, add, tropical_plus_op(domain, add.identity))
    if family == "min_plus":
        add = min_monoid(domain)
        return Semiring(name, add, tropical_plus_op(domain, add.identity))
    if family == "min_max":
        add = min_monoid(domain)
        return Semiring(name, add, BinaryOp("max", domain, max_monoid(domain).op.eval))
    if family == "or_and":
        return Semiring(name, or_monoid(), and_op())
    if family == "min_select2nd":
        add = min_monoid(domain)
        return Semiring(name, add, select2nd_op(domain, add.identity))
    raise UnknownSemiringError(f"unknown semiring family {family!r}")


_registry: dict[str, Semiring] = {}
_registry_lock = threading.Lock()


def registry_get(name: str) -> Semiring:
    """Look up a semiring by name.

    Built-in names have the form "family/domain-kind"; a bare family name
    resolves to its canonical domain (for example "min_plus" means
    "min_plus/float-double").  User-registered names are matched verbatim.
    """
    if not isinstance(name, str) or not name:
        raise UnknownSemiringError(f"invalid semiring name {name!r}")
    found = _registry.get(name)
    if found is not None:
        return found
    family, _, kind = name.partition("/")
    if family not in _FAMILY_SUPPORT:
        raise UnknownSemiringError(f"unknown semiring {name!r}")
    kind = kind or _CANONICAL_DOMAIN[family]
    if kind not in _FAMILY_SUPPORT[family]:
        raise UnsupportedDomainError(f"{family} is not defined over {kind!r}")
    full = f"{family}/{kind}"
    with _registry_lock:
        found = _registry.get(full)
        if found is None:
            from .domains import domain_from_kind

            found = _build_family(family, domain_from_kind(kind))
            _registry[full] = found
    return found


def register_semiring(s: Semiring, samples: Sequence | None = None) -> str:
    """Add a user semiring to the registry after checking its laws.

    The additive monoid must be associative, commutative, and have its
    declared identity; the identity must annihilate under the
    multiplication.  Checks run over `samples` when given, otherwise over a
    generated pool for the domain.  Returns the registered name.
    """
    family = s.name.partition("/")[0]
    if family in _FAMILY_SUPPORT:
        raise DuplicateNameError(
            f"{s.name!r} collides with the built-in family {family!r}"
        )
    verify_semiring_laws(s, samples)
    with _registry_lock:
        if s.name in _registry:
            raise DuplicateNameError(f"semiring {s.name!r} is already registered")
        _registry[s.name] = s
    return s.name
