"""Finite braces given by Cayley tables.

Quotients of the free braces modulo ``m``, trivial cyclic braces, and braces
ingested from a brace-spec document all end up as a :class:`CayleyBrace`.
The public constructors run the full axiom suite; a brace that leaves one of
them is a verified left brace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .core import (
    Brace,
    BraceDomainError,
    CheckReport,
    Exhaustive,
    check_brace_axioms,
)
from .free import D2, D3, d2_mul, d3_mul, generator_sequence


class BraceSpecError(ValueError):
    """A brace-spec document is malformed."""


class AxiomViolation(ValueError):
    """A candidate brace failed an axiom; ``report`` carries the witness."""

    def __init__(self, report: CheckReport, message: str | None = None) -> None:
        self.report = report
        super().__init__(message or f"{report.name} fails ({report.identity}) at {report.witness!r}")


class IllegalModulus(AxiomViolation):
    """A D3 quotient with an even modulus is not a well-defined brace."""


class NotInSubbrace(ValueError):
    pass


class CayleyBrace(Brace):
    """A finite brace on labelled elements with index-valued operation tables.

    ``add[i][j]`` is the index of ``elements[i] + elements[j]``; likewise ``mul``.
    Construction alone does not verify anything; use :func:`verified`.
    """

    def __init__(self, elements: Sequence, add, mul, name: str = "table") -> None:
        self.name = name
        self._elements = tuple(elements)
        n = len(self._elements)
        self._index = {e: i for i, e in enumerate(self._elements)}
        if len(self._index) != n:
            raise BraceSpecError("element labels must be distinct")
        self.add_table = np.asarray(add, dtype=np.int64)
        self.mul_table = np.asarray(mul, dtype=np.int64)
        for t in (self.add_table, self.mul_table):
            if t.shape != (n, n):
                raise BraceSpecError(f"tables must be {n}x{n}, got {t.shape}")
            if n and (t.min() < 0 or t.max() >= n):
                raise BraceSpecError("table entries must be element indices")
        for t in (self.add_table, self.mul_table):
            t.setflags(write=False)
        self._add = self.add_table.tolist()
        self._mul = self.mul_table.tolist()
        self.zero_index = self._find_zero()
        self._neg = self._right_inverses(self._add)
        self._inv = self._right_inverses(self._mul)
        self._star = None

    def __repr__(self) -> str:
        return f"<CayleyBrace {self.name} of order {len(self._elements)}>"

    def _find_zero(self) -> int:
        n = len(self._elements)
        ident = list(range(n))
        for i in range(n):
            if self._add[i] == ident:
                return i
        return 0

    def _right_inverses(self, table) -> list[int]:
        z = self.zero_index
        return [row.index(z) if z in row else -1 for row in table]

    # -- Brace interface

    @property
    def zero(self):
        return self._elements[self.zero_index]

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> tuple:
        return self._elements

    def order(self) -> int:
        return len(self._elements)

    def contains(self, x) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise BraceDomainError(f"{x!r} is not an element of {self.name}") from None

    def add(self, x, y):
        return self._elements[self._add[self.index(x)][self.index(y)]]

    def neg(self, x):
        j = self._neg[self.index(x)]
        if j < 0:
            raise BraceDomainError(f"{x!r} has no additive inverse")
        return self._elements[j]

    def mul(self, x, y):
        return self._elements[self._mul[self.index(x)][self.index(y)]]

    def inv(self, x):
        j = self._inv[self.index(x)]
        if j < 0:
            raise BraceDomainError(f"{x!r} has no multiplicative inverse")
        return self._elements[j]

    # -- index-level helpers

    @property
    def star_table(self) -> np.ndarray:
        """``S[i, j]`` = index of ``x_i * x_j``."""
        if self._star is None:
            neg = np.asarray(self._neg)
            if (neg < 0).any():
                raise BraceDomainError("additive inverses missing")
            A = self.add_table
            n = self.order()
            rows = np.arange(n)[:, None]
            cols = np.arange(n)[None, :]
            s = A[A[self.mul_table, neg[rows]], neg[cols]]
            s.setflags(write=False)
            self._star = s
        return self._star

    def _star_list(self) -> list[list[int]]:
        if getattr(self, "_star_rows", None) is None:
            self._star_rows = self.star_table.tolist()
        return self._star_rows

    def index_tables(self) -> dict[str, np.ndarray]:
        """Index tables for the kernels; ``lambda[a, x]`` is ``ax - a``."""
        inv = np.asarray(self._inv, dtype=np.int64)
        neg = np.asarray(self._neg, dtype=np.int64)
        if (inv < 0).any() or (neg < 0).any():
            raise BraceDomainError("inverse missing; tables are not groups")
        return {
            "add": self.add_table,
            "mul": self.mul_table,
            "neg": neg,
            "inv": inv,
            "star": self.star_table,
            "lambda": self.add_table[self.mul_table, neg[:, None]],
        }

    def to_document(self) -> dict[str, Any]:
        return {
            "kind": "table",
            "elements": [list(e) if isinstance(e, tuple) else e for e in self._elements],
            "add": self.add_table.tolist(),
            "mul": self.mul_table.tolist(),
        }


def verified(brace: CayleyBrace, error=AxiomViolation) -> CayleyBrace:
    """Run the exhaustive axiom suite; raise ``error`` on the first failure."""
    for rep in check_brace_axioms(brace, Exhaustive()):
        if not rep.passed:
            raise error(rep)
    return brace


# ---------------------------------------------------------------- quotients


@dataclass(frozen=True)
class QuotientSpec:
    family: str  # "d2" | "d3"
    modulus: int

    def __post_init__(self) -> None:
        if self.family not in ("d2", "d3"):
            raise BraceSpecError(f"unknown quotient family {self.family!r}")
        if self.modulus < 2:
            raise BraceSpecError("modulus must be at least 2")

    @property
    def legal(self) -> bool:
        return self.family == "d2" or self.modulus % 2 == 1


def _reduced_mul(family: str, m: int):
    fn = d2_mul if family == "d2" else d3_mul
    return lambda x, y: tuple(k % m for k in fn(x, y))


def quotient_tables(spec: QuotientSpec) -> CayleyBrace:
    """The candidate quotient on ``(Z/m)^d`` without any verification.

    Products are computed on representatives in ``[0, m)`` and reduced.
    """
    m = spec.modulus
    dim = 2 if spec.family == "d2" else 3
    elems = list(itertools.product(range(m), repeat=dim))
    # coefficient columns in lexicographic order; index = mixed-radix value
    coords = np.array(elems, dtype=np.int64).reshape(-1, dim)
    x = [c[:, None] for c in coords.T]
    y = [c[None, :] for c in coords.T]
    add_c = [(xi + yi) % m for xi, yi in zip(x, y)]
    if dim == 2:
        mul_c = [(x[0] + y[0]) % m, (x[0] * y[0] + x[1] + y[1]) % m]
    else:
        half = (2 * x[1] + x[0] - x[0] * x[0]) // 2
        mul_c = [(x[0] + y[0]) % m, (x[0] * y[0] + x[1] + y[1]) % m,
                 (x[2] + y[2] + half * y[0]) % m]
    return CayleyBrace(elems, _encode(add_c, m), _encode(mul_c, m),
                       name=f"quotient_{spec.family}_mod_{m}")


def _encode(cols, m):
    idx = np.zeros_like(cols[0])
    for c in cols:
        idx = idx * m + c
    return idx


def representative_violation(spec: QuotientSpec) -> CheckReport:
    """Look for ``x, y`` and a coordinate shift by ``m`` that changes ``xy mod m``.

    Witness is ``(x, y, x_alt, y_alt)`` where ``x_alt``, ``y_alt`` represent the
    same classes as ``x``, ``y``.
    """
    m = spec.modulus
    dim = 2 if spec.family == "d2" else 3
    mul = _reduced_mul(spec.family, m)
    elems = list(itertools.product(range(m), repeat=dim))
    examined = 0
    for x in elems:
        for i in range(dim):
            shifted = tuple(k + m if j == i else k for j, k in enumerate(x))
            for y in elems:
                for y_alt in (y, tuple(k + m if j == i else k for j, k in enumerate(y))):
                    examined += 1
                    if mul(x, y) != mul(shifted, y_alt):
                        return CheckReport("representative_invariance", False,
                                           (x, y, shifted, y_alt), "representative_invariance",
                                           examined)
    return CheckReport("representative_invariance", True, None, None, examined)


def replay_representative(spec: QuotientSpec, witness: tuple) -> bool:
    """True if the witness representatives really give different reduced products."""
    x, y, x_alt, y_alt = witness
    mul = _reduced_mul(spec.family, spec.modulus)
    m = spec.modulus
    same_class = all((a - b) % m == 0 for a, b in zip(x, x_alt)) and all(
        (a - b) % m == 0 for a, b in zip(y, y_alt))
    return same_class and mul(x, y) != mul(x_alt, y_alt)


def build_quotient(spec: QuotientSpec) -> CayleyBrace:
    """Verified quotient ``D2/mD2`` or ``D3/mD3``.

    Even moduli are refused for D3 with a concrete counterexample.
    """
    brace = quotient_tables(spec)
    if not spec.legal:
        for rep in check_brace_axioms(brace, Exhaustive()):
            if not rep.passed:
                raise IllegalModulus(rep)
        rep = representative_violation(spec)
        raise IllegalModulus(rep, f"D3 mod {spec.modulus}: product depends on representatives "
                                  f"at {rep.witness!r}")
    return verified(brace)


def build_trivial_cyclic(m: int) -> CayleyBrace:
    """Z/m with ``xy = x + y``."""
    if m < 1:
        raise BraceSpecError("modulus must be at least 1")
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    return verified(CayleyBrace(list(range(m)), table, table, name=f"trivial_cyclic_{m}"))


# ---------------------------------------------------------------- ingestion


FAMILIES = ("free_d2", "free_d3", "quotient_d2", "quotient_d3", "trivial_cyclic", "table")


def _label(e):
    return tuple(e) if isinstance(e, list) else e


def ingest_table(doc: dict) -> CayleyBrace:
    """Parse a ``kind: table`` document and verify it."""
    try:
        elements = [_label(e) for e in doc["elements"]]
        add = doc["add"]
        mul = doc["mul"]
    except (KeyError, TypeError) as exc:
        raise BraceSpecError(f"table document missing field: {exc}") from None
    try:
        brace = CayleyBrace(elements, add, mul, name=doc.get("name", "table"))
    except (ValueError, TypeError) as exc:
        raise BraceSpecError(str(exc)) from None
    for label, table in (("add", brace._add), ("mul", brace._mul)):
        if not is_latin_square(table):
            raise AxiomViolation(_latin_report(brace, table, label),
                                 f"{label} table is not a Latin square (not a group)")
    return verified(brace)


def is_latin_square(table) -> bool:
    n = len(table)
    full = set(range(n))
    return (all(set(row) == full for row in table)
            and all({row[j] for row in table} == full for j in range(n)))


def _latin_report(brace: CayleyBrace, table, label: str) -> CheckReport:
    n = len(table)
    elems = brace.elements()
    for i, row in enumerate(table):
        seen = {}
        for j, v in enumerate(row):
            if v in seen:
                return CheckReport(f"{label}_latin_square", False,
                                   (elems[i], elems[seen[v]], elems[j]), f"{label}_latin_square", n)
            seen[v] = j
    for j in range(n):
        seen = {}
        for i in range(n):
            v = table[i][j]
            if v in seen:
                return CheckReport(f"{label}_latin_square", False,
                                   (elems[seen[v]], elems[i], elems[j]), f"{label}_latin_square", n)
            seen[v] = i
    return CheckReport(f"{label}_latin_square", True)


def load_brace(doc: dict):
    """Build the brace described by a brace-spec document."""
    if not isinstance(doc, dict):
        raise BraceSpecError("brace spec must be a JSON object")
    kind = doc.get("kind")
    if kind not in FAMILIES:
        raise BraceSpecError(f"unknown kind {kind!r}; expected one of {', '.join(FAMILIES)}")
    if kind == "free_d2":
        return D2
    if kind == "free_d3":
        return D3
    if kind == "table":
        return ingest_table(doc)
    modulus = doc.get("modulus")
    if not isinstance(modulus, int) or isinstance(modulus, bool):
        raise BraceSpecError(f"kind {kind} needs an integer modulus")
    if kind == "trivial_cyclic":
        return build_trivial_cyclic(modulus)
    return build_quotient(QuotientSpec(kind.split("_")[1], modulus))


# ---------------------------------------------------------------- decomposition


def additive_order(brace: Brace, x) -> int:
    n = 1
    acc = x
    while acc != brace.zero:
        acc = brace.add(acc, x)
        n += 1
    return n


@dataclass(frozen=True)
class Decomposition:
    """``x = k1 a1 + k2 a2 + k3 a3`` with ``0 <= kj < order(aj)``."""

    coefficients: tuple[int, int, int]
    generators: tuple

    def reassemble(self, brace: Brace):
        from .core import multiple

        acc = brace.zero
        for k, g in zip(self.coefficients, self.generators):
            acc = brace.add(acc, multiple(brace, k, g))
        return acc


def decompose(brace: Brace, a, x) -> Decomposition:
    """Brute-force coefficients of ``x`` over the generator sequence of ``a``."""
    brace.check_element(a)
    brace.check_element(x)
    gens = tuple(generator_sequence(brace, a, 3))
    orders = [additive_order(brace, g) for g in gens]
    z = brace.zero
    p1 = z
    for k1 in range(orders[0]):
        p2 = p1
        for k2 in range(orders[1]):
            p3 = p2
            for k3 in range(orders[2]):
                if p3 == x:
                    return Decomposition((k1, k2, k3), gens)
                p3 = brace.add(p3, gens[2])
            p2 = brace.add(p2, gens[1])
        p1 = brace.add(p1, gens[0])
    raise NotInSubbrace(f"{x!r} is not of the form k1 a1 + k2 a2 + k3 a3 for a = {a!r}")
