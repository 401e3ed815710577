"""The free one-generator braces on Z^2 and Z^3 with ``A^3 = 0``.

Elements are exact integer coefficient vectors ``(k1, k2[, k3])`` standing for
``k1 a1 + k2 a2 + k3 a3`` where ``a1 = a``, ``a2 = a * a``, ``a3 = a2 * a``.
On the element types, ``+``/``-`` are the additive operations, ``x * y`` is the
brace multiplication and ``x ** m`` the multiplicative power.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import (
    Brace,
    BraceDomainError,
    CheckReport,
    Exhaustive,
    Sampled,
    Strategy,
    UnsupportedStrategy,
    multiple,
    power_closed_form,
    star,
)


class D2Element(NamedTuple):
    k1: int
    k2: int

    def __add__(self, other):
        return D2Element(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other):
        return D2Element(self[0] - other[0], self[1] - other[1])

    def __neg__(self):
        return D2Element(-self[0], -self[1])

    def __mul__(self, other):
        return d2_mul(self, other)

    def __rmul__(self, n):
        # n * x is the additive multiple, x * y the brace product
        return D2Element(n * self[0], n * self[1])

    def __pow__(self, m):
        return power(D2, self, m)


class D3Element(NamedTuple):
    k1: int
    k2: int
    k3: int

    def __add__(self, other):
        return D3Element(self[0] + other[0], self[1] + other[1], self[2] + other[2])

    def __sub__(self, other):
        return D3Element(self[0] - other[0], self[1] - other[1], self[2] - other[2])

    def __neg__(self):
        return D3Element(-self[0], -self[1], -self[2])

    def __mul__(self, other):
        return d3_mul(self, other)

    def __rmul__(self, n):
        return D3Element(n * self[0], n * self[1], n * self[2])

    def __pow__(self, m):
        return power(D3, self, m)


def _half(k1: int, k2: int) -> int:
    # 2 k2 + k1 - k1^2 is even: k1 (1 - k1) is a product of consecutive integers
    return (2 * k2 + k1 - k1 * k1) // 2


def d2_mul(x, y) -> D2Element:
    k1, k2 = x
    t1, t2 = y
    return D2Element(k1 + t1, k1 * t1 + k2 + t2)


def d2_inv(x) -> D2Element:
    k1, k2 = x
    return D2Element(-k1, k1 * k1 - k2)


def d2_star(x, y) -> D2Element:
    return D2Element(0, y[0] * x[0])


def d3_mul(x, y) -> D3Element:
    k1, k2, k3 = x
    t1, t2, t3 = y
    return D3Element(k1 + t1, k1 * t1 + k2 + t2, k3 + t3 + _half(k1, k2) * t1)


def d3_inv(x) -> D3Element:
    k1, k2, k3 = x
    return D3Element(-k1, k1 * k1 - k2, k1 * k2 + (k1 * k1 - k1 ** 3) // 2 - k3)


def d3_star(x, y) -> D3Element:
    """Closed form ``x * y = t1 k1 a2 + (2 k2 + k1 - k1^2)/2 t1 a3``."""
    k1, k2, _ = x
    t1 = y[0]
    return D3Element(0, t1 * k1, _half(k1, k2) * t1)


class FreeBrace(Brace):
    """Common carrier handling for the coefficient lattices Z^2 and Z^3."""

    dim: int
    element_type: type
    accepts_bound = True

    def __init__(self) -> None:
        self._zero = self.element_type(*([0] * self.dim))

    def __repr__(self) -> str:
        return f"<{self.name}>"

    @property
    def zero(self):
        return self._zero

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == self.dim
                and all(isinstance(k, int) and not isinstance(k, bool) for k in x))

    def coerce(self, x):
        if not self.contains(x):
            raise BraceDomainError(f"{x!r} is not an element of {self.name}")
        return self.element_type(*x)

    def add(self, x, y):
        return self.element_type(*(a + b for a, b in zip(x, y)))

    def neg(self, x):
        return self.element_type(*(-a for a in x))

    def random_element(self, rng: random.Random, bound: int = 1000):
        return self.element_type(*(rng.randint(-bound, bound) for _ in range(self.dim)))

    def random_square_element(self, rng: random.Random, bound: int = 1000):
        """A random element of ``A^2``, which is ``{(0, *, ...)}`` here."""
        return self.element_type(0, *(rng.randint(-bound, bound) for _ in range(self.dim - 1)))

    def generator(self):
        return self.element_type(1, *([0] * (self.dim - 1)))


class FreeD2(FreeBrace):
    name = "free_d2"
    dim = 2
    element_type = D2Element

    def mul(self, x, y):
        return d2_mul(x, y)

    def inv(self, x):
        return d2_inv(x)


class FreeD3(FreeBrace):
    name = "free_d3"
    dim = 3
    element_type = D3Element

    def mul(self, x, y):
        return d3_mul(x, y)

    def inv(self, x):
        return d3_inv(x)


D2 = FreeD2()
D3 = FreeD3()


def power(brace: Brace, a, m: int):
    """``a^m`` via the closed form ``m a + (m^2 - m)/2 (a * a)``.

    Valid in any brace with ``A^3 = 0``; ``m`` may be zero or negative.
    """
    return power_closed_form(brace, a, m)


@dataclass(frozen=True)
class GeneratorSequence:
    """``[a1, ..., an]`` with ``a1 = a`` and ``a_{j+1} = a_j * a``."""

    terms: tuple

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    def vanishing_index(self, zero) -> int | None:
        """1-based index of the first zero term, if any."""
        for j, t in enumerate(self.terms, start=1):
            if t == zero:
                return j
        return None


def generator_sequence(brace: Brace, a, n: int) -> GeneratorSequence:
    if n < 1:
        raise ValueError("need n >= 1")
    terms = [a]
    while len(terms) < n:
        terms.append(star(brace, terms[-1], a))
    return GeneratorSequence(tuple(terms))


# ---------------------------------------------------------------- epimorphism


class Epimorphism:
    """``f(k1, k2, k3) = k1 a1 + k2 a2 + k3 a3`` from a free brace onto ``br(a)``."""

    def __init__(self, source: FreeBrace, target: Brace, a) -> None:
        self.source = source
        self.target = target
        self.a = a
        self.images = tuple(generator_sequence(target, a, source.dim))

    def __repr__(self) -> str:
        return f"Epimorphism({self.source.name} -> {self.target.name}, a={self.a!r})"

    def __call__(self, x):
        T = self.target
        result = T.zero
        for k, g in zip(x, self.images):
            result = T.add(result, multiple(T, k, g))
        return result

    def verify(self, strategy: Strategy = Sampled()) -> list[CheckReport]:
        if not isinstance(strategy, Sampled):
            raise UnsupportedStrategy("the free source can only be sampled")
        rng_seed = strategy.seed
        src = self.source
        T = self.target
        reports = []
        for name, lhs_op, rhs_op in (
            ("additive", src.add, T.add),
            ("multiplicative", src.mul, T.mul),
        ):
            rng = random.Random(rng_seed)
            witness = None
            examined = 0
            for _ in range(strategy.count):
                x = src.random_element(rng, strategy.bound)
                y = src.random_element(rng, strategy.bound)
                examined += 1
                if self(lhs_op(x, y)) != rhs_op(self(x), self(y)):
                    witness = (x, y)
                    break
            reports.append(CheckReport(f"epimorphism_{name}", witness is None, witness,
                                       None if witness is None else f"epimorphism_{name}",
                                       examined, rng_seed))
        if T.is_finite:
            reports.append(self.surjectivity())
        return reports

    def image(self) -> set:
        """Image of the coefficient box bounded by the additive orders of the a_j."""
        from .finite import additive_order

        T = self.target
        ranges = [range(additive_order(T, g)) for g in self.images]
        out = set()

        def rec(i, acc):
            if i == len(ranges):
                out.add(acc)
                return
            g = self.images[i]
            cur = acc
            for _ in ranges[i]:
                rec(i + 1, cur)
                cur = T.add(cur, g)

        rec(0, T.zero)
        return out

    def surjectivity(self) -> CheckReport:
        """Compare the image with the subbrace generated by ``a``."""
        if not self.target.is_finite:
            raise UnsupportedStrategy("surjectivity needs a finite target")
        from .series import subbrace_closure

        img = self.image()
        closure = subbrace_closure(self.target, [self.a])
        missing = [x for x in self.target.elements() if x in closure and x not in img]
        detail = f"image {len(img)} of br(a) {len(closure)}"
        if missing:
            return CheckReport("epimorphism_surjective", False, (missing[0],),
                               "epimorphism_surjective", len(img), None, detail)
        return CheckReport("epimorphism_surjective", True, None, None, len(img), None, detail)


def epimorphism_to(target: Brace, a, source: FreeBrace | None = None) -> Epimorphism:
    """The coefficient map onto ``br(a)``.

    Defaults to D3, or D2 when ``a3 = 0`` in the target.
    """
    target.check_element(a)
    if source is None:
        a3 = generator_sequence(target, a, 3)[2]
        source = D2 if a3 == target.zero else D3
    return Epimorphism(source, target, a)


def as_element(brace: FreeBrace, coeffs: Sequence[int]):
    return brace.coerce(tuple(coeffs))
