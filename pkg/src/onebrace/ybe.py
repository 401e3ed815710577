"""Set-theoretic Yang-Baxter maps from finite left braces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from . import kernels
from .core import CheckReport
from .finite import BraceSpecError, CayleyBrace, _label


@dataclass(frozen=True)
class YbeMap:
    """``r(x, y) = (X[U[i, j]], X[V[i, j]])`` on the carrier ``X``."""

    carrier: tuple
    U: np.ndarray
    V: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.carrier)
        for t in (self.U, self.V):
            if t.shape != (n, n) or (n and (t.min() < 0 or t.max() >= n)):
                raise BraceSpecError("r table must map X x X into X x X")

    def __call__(self, x, y):
        idx = {e: i for i, e in enumerate(self.carrier)}
        i, j = idx[x], idx[y]
        return self.carrier[self.U[i, j]], self.carrier[self.V[i, j]]

    def to_document(self, reports: list[CheckReport] | None = None) -> dict[str, Any]:
        n = len(self.carrier)
        doc = {
            "kind": "ybe_solution",
            "carrier": [list(e) if isinstance(e, tuple) else e for e in self.carrier],
            "r": [[int(self.U[i, j]), int(self.V[i, j])] for i in range(n) for j in range(n)],
        }
        if reports is not None:
            doc["properties"] = {r.name: r.passed for r in reports}
            doc["statistics"] = {r.name: r.examined for r in reports}
        return doc

    @classmethod
    def from_document(cls, doc: dict) -> "YbeMap":
        try:
            carrier = tuple(_label(e) for e in doc["carrier"])
            r = np.asarray(doc["r"], dtype=np.int64)
        except (KeyError, TypeError, ValueError) as exc:
            raise BraceSpecError(f"bad solution document: {exc}") from None
        n = len(carrier)
        if r.shape != (n * n, 2):
            raise BraceSpecError(f"r must be an {n * n}x2 index matrix")
        return cls(carrier, r[:, 0].reshape(n, n).copy(), r[:, 1].reshape(n, n).copy())


def derive_solution(brace: CayleyBrace) -> YbeMap:
    """``r(x, y) = (lambda_x(y), lambda_x(y)^-1 x y)``."""
    A = brace.add_table
    M = brace.mul_table
    neg = np.asarray(brace._neg)
    inv = np.asarray(brace._inv)
    n = brace.order()
    rows = np.arange(n)[:, None]
    U = A[M, neg[rows]]
    # v = u^-1 (x y)
    V = M[inv[U], M]
    return YbeMap(brace.elements(), U, V)


def check_braid(r: YbeMap, backend: str | None = None) -> CheckReport:
    """``r12 r23 r12 = r23 r12 r23`` on all of ``X^3``."""
    n = len(r.carrier)
    hit = kernels.first_braid_violation(r.U, r.V, backend)
    if hit is None:
        return CheckReport("braid", True, None, None, n ** 3)
    x, y, z = hit
    witness = tuple(r.carrier[i] for i in hit)
    return CheckReport("braid", False, witness, "braid", (x * n + y) * n + z + 1)


def check_involutive(r: YbeMap) -> CheckReport:
    n = len(r.carrier)
    U, V = r.U.tolist(), r.V.tolist()
    for i in range(n):
        for j in range(n):
            u, v = U[i][j], V[i][j]
            if (U[u][v], V[u][v]) != (i, j):
                return CheckReport("involutive", False, (r.carrier[i], r.carrier[j]),
                                   "involutive", i * n + j + 1)
    return CheckReport("involutive", True, None, None, n * n)


def check_nondegenerate(r: YbeMap) -> CheckReport:
    """Each ``y -> U[x, y]`` and each ``x -> V[x, y]`` must be a bijection.

    A failing row is reported as ``("left", x)``, a failing column as ``("right", y)``.
    """
    n = len(r.carrier)
    full = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(r.U[i, :]), full):
            return CheckReport("nondegenerate", False, ("left", r.carrier[i]), "nondegenerate", i + 1)
    for j in range(n):
        if not np.array_equal(np.sort(r.V[:, j]), full):
            return CheckReport("nondegenerate", False, ("right", r.carrier[j]), "nondegenerate",
                               n + j + 1)
    return CheckReport("nondegenerate", True, None, None, 2 * n)


def check_all(r: YbeMap) -> list[CheckReport]:
    return [check_braid(r), check_involutive(r), check_nondegenerate(r)]


def replay_braid(r: YbeMap, witness: tuple) -> bool:
    """Recompute both sides of the braid relation at ``(x, y, z)`` through ``r``."""
    x, y, z = witness
    a, b = r(x, y)
    b, c = r(b, z)
    left = (*r(a, b), c)
    p, q = r(y, z)
    s, t = r(x, p)
    right = (s, *r(t, q))
    return left != right
