"""Abstract brace interface, the star and lambda operations, and identity checkers.

Every identity is registered as a function returning ``(lhs, rhs)`` so that a
failed check can be replayed on its witness.  Exhaustive checks over Cayley
tables are routed through :mod:`onebrace.kernels` when a table kernel exists
for the identity; the witness is identical either way.
"""

from __future__ import annotations

import abc
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Sequence


class BraceDomainError(ValueError):
    """An element is not in the carrier of the brace it was used with."""


class UnsupportedStrategy(ValueError):
    """A verification strategy cannot be applied to this brace."""


class Brace(abc.ABC):
    """A left brace: abelian group ``(A, +)``, group ``(A, *)`` sharing the identity 0."""

    name: str = "brace"

    @property
    @abc.abstractmethod
    def zero(self) -> Any: ...

    @abc.abstractmethod
    def add(self, x, y): ...

    @abc.abstractmethod
    def neg(self, x): ...

    @abc.abstractmethod
    def mul(self, x, y): ...

    @abc.abstractmethod
    def inv(self, x): ...

    @abc.abstractmethod
    def contains(self, x) -> bool: ...

    @property
    def is_finite(self) -> bool:
        return False

    def elements(self) -> Sequence:
        raise UnsupportedStrategy(f"{self.name} has an infinite carrier")

    def order(self) -> int:
        return len(self.elements())

    def random_element(self, rng: random.Random):
        elems = self.elements()
        return elems[rng.randrange(len(elems))]

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def check_element(self, x) -> None:
        if not self.contains(x):
            raise BraceDomainError(f"{x!r} is not an element of {self.name}")


# ---------------------------------------------------------------- operations


def star(brace: Brace, x, y):
    """Return ``x * y = xy - x - y``."""
    brace.check_element(x)
    brace.check_element(y)
    return brace.sub(brace.sub(brace.mul(x, y), x), y)


def lambda_map(brace: Brace, a, x):
    """Return ``lambda_a(x) = ax - a``."""
    brace.check_element(a)
    brace.check_element(x)
    return brace.sub(brace.mul(a, x), a)


def multiple(brace: Brace, n: int, x):
    """The additive multiple ``n x`` (an n-fold sum, computed by doubling)."""
    if n < 0:
        return multiple(brace, -n, brace.neg(x))
    result = brace.zero
    base = x
    while n:
        if n & 1:
            result = brace.add(result, base)
        n >>= 1
        if n:
            base = brace.add(base, base)
    return result


def group_power(brace: Brace, a, m: int):
    """``a^m`` by literal repeated multiplication (|m| factors of ``a`` or ``a^-1``)."""
    factor = a if m >= 0 else brace.inv(a)
    result = brace.zero
    for _ in range(abs(m)):
        result = brace.mul(result, factor)
    return result


def power_closed_form(brace: Brace, a, m: int):
    """``a^m = m a + (m^2 - m)/2 (a * a)``, valid whenever ``A^3 = 0``."""
    b = star(brace, a, a)
    return brace.add(multiple(brace, m, a), multiple(brace, (m * m - m) // 2, b))


# ---------------------------------------------------------------- strategies


@dataclass(frozen=True)
class Exhaustive:
    """Visit every tuple of carrier elements in lexicographic table order."""


@dataclass(frozen=True)
class Sampled:
    """Visit ``count`` seeded random tuples.

    ``bound`` limits coefficients when sampling a free brace.
    """

    count: int = 10_000
    seed: int = 0
    bound: int = 1000


Strategy = Exhaustive | Sampled


@dataclass
class CheckReport:
    name: str
    passed: bool
    witness: tuple | None = None
    identity: str | None = None
    examined: int = 0
    seed: int | None = None
    detail: str = ""
    elapsed: float | None = field(default=None, compare=False)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def __post_init__(self) -> None:
        if self.passed != (self.witness is None):
            raise ValueError("a report fails exactly when it carries a witness")


# ---------------------------------------------------------------- identities


@dataclass(frozen=True)
class Identity:
    """An equation in ``arity`` element variables, plus optional integer parameters."""

    name: str
    arity: int
    sides: Callable[..., tuple[Any, Any]]
    int_params: int = 0
    kernel: str | None = None

    def holds(self, brace: Brace, *args) -> bool:
        try:
            lhs, rhs = self.sides(brace, *args)
        except BraceDomainError:
            return False
        return lhs == rhs


IDENTITIES: dict[str, Identity] = {}


def _identity(name, arity, int_params=0, kernel=None):
    def register(fn):
        IDENTITIES[name] = Identity(name, arity, fn, int_params, kernel)
        return fn

    return register


def replay(brace: Brace, report: CheckReport) -> bool:
    """True if the report's witness still violates its identity on ``brace``."""
    if report.passed:
        return False
    ident = IDENTITIES[report.identity]
    return not ident.holds(brace, *report.witness)


# brace axioms


@_identity("add_assoc", 3, kernel="assoc_add")
def _add_assoc(B, a, b, c):
    return B.add(B.add(a, b), c), B.add(a, B.add(b, c))


@_identity("add_comm", 2, kernel="comm_add")
def _add_comm(B, a, b):
    return B.add(a, b), B.add(b, a)


@_identity("add_zero", 1)
def _add_zero(B, a):
    return B.add(a, B.zero), a


@_identity("add_neg", 1)
def _add_neg(B, a):
    return B.add(a, B.neg(a)), B.zero


@_identity("mul_assoc", 3, kernel="assoc_mul")
def _mul_assoc(B, a, b, c):
    return B.mul(B.mul(a, b), c), B.mul(a, B.mul(b, c))


@_identity("mul_right_inverse", 1)
def _mul_right_inverse(B, a):
    return B.mul(a, B.inv(a)), B.zero


@_identity("mul_left_inverse", 1)
def _mul_left_inverse(B, a):
    return B.mul(B.inv(a), a), B.zero


@_identity("zero_right_identity", 1)
def _zero_right(B, a):
    return B.mul(a, B.zero), a


@_identity("zero_left_identity", 1)
def _zero_left(B, a):
    return B.mul(B.zero, a), a


@_identity("left_brace_law", 3, kernel="brace_law")
def _brace_law(B, a, b, c):
    return B.mul(a, B.add(b, c)), B.sub(B.add(B.mul(a, b), B.mul(a, c)), a)


AXIOM_GROUPS: dict[str, tuple[str, ...]] = {
    "abelian_addition": ("add_assoc", "add_comm", "add_zero", "add_neg"),
    "multiplicative_group": ("mul_assoc", "mul_right_inverse", "mul_left_inverse"),
    "identity_equals_zero": ("zero_right_identity", "zero_left_identity"),
    "left_brace_law": ("left_brace_law",),
}


# general star identities


@_identity("star_left_distributive", 3, kernel="star_left_distrib")
def _star_ldist(B, a, b, c):
    return star(B, a, B.add(b, c)), B.add(star(B, a, b), star(B, a, c))


@_identity("star_of_product", 3, kernel="star_of_product")
def _star_of_product(B, a, b, c):
    bc = star(B, b, c)
    return star(B, B.mul(a, b), c), B.add(B.add(star(B, a, bc), bc), star(B, a, c))


@_identity("star_of_sum", 3, kernel="star_of_sum")
def _star_of_sum(B, a, b, c):
    # implemented exactly as printed: b' = lambda_{a^-1}(b)
    bp = lambda_map(B, B.inv(a), b)
    bpc = star(B, bp, c)
    return star(B, B.add(a, b), c), B.add(B.add(star(B, a, bpc), bpc), star(B, a, c))


@_identity("lambda_conjugation", 3, kernel="lambda_conjugation")
def _lambda_conj(B, y, b, a):
    conj = B.mul(B.mul(y, b), B.inv(y))
    return lambda_map(B, y, star(B, b, a)), star(B, conj, lambda_map(B, y, a))


@_identity("conjugate_via_lambda", 2)
def _conj_lambda(B, y, b):
    yi = B.inv(y)
    inner = B.add(B.sub(lambda_map(B, b, yi), yi), b)
    return B.mul(B.mul(y, b), yi), lambda_map(B, y, inner)


@_identity("conjugate_via_star", 2)
def _conj_star(B, y, b):
    yi = B.inv(y)
    return B.mul(B.mul(y, b), yi), lambda_map(B, y, B.add(star(B, b, yi), b))


LEMMA_GROUPS: dict[str, tuple[str, ...]] = {
    "star_left_distributive": ("star_left_distributive",),
    "star_of_product": ("star_of_product",),
    "star_of_sum": ("star_of_sum",),
    "lambda_conjugation": ("lambda_conjugation", "conjugate_via_lambda", "conjugate_via_star"),
}


# identities that need A^3 = 0


@_identity("square_annihilated", 2)
def _square_annihilated(B, x, y):
    return star(B, x, y), B.zero


@_identity("square_product_is_sum", 2)
def _square_product(B, x, y):
    return B.mul(x, y), B.add(x, y)


@_identity("star_right_additive_in_product", 3, kernel="star_right_mul")
def _star_right_mul(B, x, z, y):
    return star(B, B.mul(x, z), y), B.add(star(B, x, y), star(B, z, y))


@_identity("power_star", 2, int_params=1)
def _power_star(B, g, z, n):
    return star(B, group_power(B, g, n), z), multiple(B, n, star(B, g, z))


@_identity("power_closed_form", 1, int_params=1)
def _power_closed(B, a, m):
    return group_power(B, a, m), power_closed_form(B, a, m)


@_identity("multiple_star_closed_form", 1, int_params=2)
def _multiple_star(B, a, n, k):
    b = star(B, a, a)
    c = star(B, b, a)
    lhs = star(B, multiple(B, n, a), multiple(B, k, a))
    rhs = B.add(multiple(B, k * n, b), multiple(B, (n - n * n) // 2 * k, c))
    return lhs, rhs


# ---------------------------------------------------------------- runners


def _tuples(brace: Brace, arity: int, strategy: Strategy, rng: random.Random | None,
            pool: Sequence | None = None, pool_slot: int | None = None) -> Iterator[tuple]:
    """Element tuples for a check, in deterministic order.

    If ``pool`` is given, slot ``pool_slot`` ranges over it instead of the carrier.
    """
    if isinstance(strategy, Exhaustive):
        elems = brace.elements()
        ranges = [pool if i == pool_slot else elems for i in range(arity)]
        yield from itertools.product(*ranges)
        return
    draw = _sampler(brace, "random_element", strategy)
    for _ in range(strategy.count):
        yield tuple(
            pool[rng.randrange(len(pool))] if i == pool_slot else draw(rng)
            for i in range(arity)
        )


def _sampler(brace: Brace, method: str, strategy: Sampled):
    fn = getattr(brace, method)
    if getattr(brace, "accepts_bound", False):
        return lambda rng: fn(rng, strategy.bound)
    return fn


def _require(brace: Brace, strategy: Strategy) -> None:
    if isinstance(strategy, Exhaustive) and not brace.is_finite:
        raise UnsupportedStrategy(f"exhaustive strategy needs a finite carrier; {brace.name} is infinite")


def _kernel_witness(brace: Brace, ident: Identity) -> tuple[bool, tuple | None, int] | None:
    """Try the table kernel for ``ident``; None if no kernel applies."""
    tables = getattr(brace, "index_tables", None)
    if ident.kernel is None or tables is None:
        return None
    from . import kernels

    hit = kernels.run_identity_kernel(ident.kernel, tables())
    n = brace.order()
    if hit is None:
        return True, None, n ** ident.arity
    elems = brace.elements()
    idx = hit
    examined = 0
    for i in idx:
        examined = examined * n + i
    return False, tuple(elems[i] for i in idx), examined + 1


def run_identity(brace: Brace, name: str, strategy: Strategy, *,
                 params: Sequence[tuple[int, ...]] = ((),), pool: Sequence | None = None,
                 pool_slot: int | None = None) -> CheckReport:
    """Check one registered identity; witness is the first violating tuple."""
    ident = IDENTITIES[name]
    _require(brace, strategy)
    seed = strategy.seed if isinstance(strategy, Sampled) else None
    if isinstance(strategy, Exhaustive) and pool is None and ident.int_params == 0:
        res = _kernel_witness(brace, ident)
        if res is not None:
            passed, witness, examined = res
            return CheckReport(name, passed, witness, None if passed else name, examined, seed)
    rng = random.Random(seed) if seed is not None else None
    examined = 0
    for tup in _tuples(brace, ident.arity, strategy, rng, pool, pool_slot):
        for p in params:
            examined += 1
            if not ident.holds(brace, *tup, *p):
                return CheckReport(name, False, tup + tuple(p), name, examined, seed)
    return CheckReport(name, True, None, None, examined, seed)


def _group_report(brace: Brace, group: str, names: Iterable[str], strategy: Strategy) -> CheckReport:
    total = 0
    for name in names:
        rep = run_identity(brace, name, strategy)
        total += rep.examined
        if not rep.passed:
            rep.name = group
            rep.examined = total
            return rep
    seed = strategy.seed if isinstance(strategy, Sampled) else None
    return CheckReport(group, True, None, None, total, seed)


def check_brace_axioms(brace: Brace, strategy: Strategy = Exhaustive()) -> list[CheckReport]:
    """One report per axiom group: abelian addition, multiplicative group,
    identity equals zero, and the left-brace law."""
    _require(brace, strategy)
    return [_group_report(brace, g, names, strategy) for g, names in AXIOM_GROUPS.items()]


def check_lemma_identities(brace: Brace, strategy: Strategy = Exhaustive()) -> list[CheckReport]:
    """The general star/lambda identities that hold in every left brace.

    The brace axioms are assumed, not re-checked.
    """
    _require(brace, strategy)
    return [_group_report(brace, g, names, strategy) for g, names in LEMMA_GROUPS.items()]


def check_A3_identities(brace: Brace, int_range: range, strategy: Strategy = Exhaustive(),
                        square: Sequence | None = None) -> list[CheckReport]:
    """Identities valid in braces with ``A^3 = 0``.

    The precondition is trusted, not verified.  ``square`` lists the elements of
    ``A^2`` used for the annihilation check; free braces may omit it and
    supply ``random_square_element`` instead.
    """
    _require(brace, strategy)
    seed = strategy.seed if isinstance(strategy, Sampled) else None
    ints = list(int_range)
    reports = []

    if square is None:
        sampler = getattr(brace, "random_square_element", None)
        if sampler is None or isinstance(strategy, Exhaustive):
            raise UnsupportedStrategy("elements of A^2 must be supplied for this brace")
        rng = random.Random(seed)
        draw = _sampler(brace, "random_square_element", strategy)
        square = [draw(rng) for _ in range(min(strategy.count, 1000))]
    square = list(square)
    total = 0
    failed = None
    for name in ("square_annihilated", "square_product_is_sum"):
        rep = run_identity(brace, name, strategy, pool=square, pool_slot=1)
        total += rep.examined
        if not rep.passed:
            failed = rep
            break
    if failed is not None:
        failed.name, failed.examined = "square_annihilates", total
        reports.append(failed)
    else:
        reports.append(CheckReport("square_annihilates", True, None, None, total, seed))

    rep = run_identity(brace, "star_right_additive_in_product", strategy)
    rep.name = "star_right_additive_in_product"
    reports.append(rep)
    reports.append(_renamed(run_identity(brace, "power_star", strategy,
                                         params=[(n,) for n in ints]), "power_star"))
    reports.append(_renamed(run_identity(brace, "power_closed_form", strategy,
                                         params=[(m,) for m in ints]), "power_closed_form"))
    reports.append(_renamed(run_identity(brace, "multiple_star_closed_form", strategy,
                                         params=[(n, k) for n in ints for k in ints]),
                            "multiple_star_closed_form"))
    return reports


def _renamed(rep: CheckReport, name: str) -> CheckReport:
    rep.name = name
    return rep
