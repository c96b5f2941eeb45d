"""Matrices over nonnegative-integer-coefficient polynomials.

Irreducibility and aperiodicity are graph-theoretic on the support
digraph: an entry with nonnegative integer coefficients is positive at
an interior point of the orthant exactly when it is a nonzero
polynomial.  The spectral radius function is evaluated by power
iteration with Collatz-Wielandt bracketing, and a claimed identity
p = beta_A is verified through an exact characteristic residual
det(p I - A) plus numeric dominance sampling.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .poly import Polynomial, eval_rational, parse, serialize

MAX_DETERMINANT_DIM = 8


class PolyMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix whose entries are polynomials with coefficients in Z_+."""

    dim: int
    nvars: int
    entries: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise PolyMatrixError("dim must be positive")
        if len(self.entries) != self.dim or any(len(r) != self.dim for r in self.entries):
            raise PolyMatrixError("entries must form a dim x dim grid")
        for row in self.entries:
            for q in row:
                if q.nvars != self.nvars:
                    raise PolyMatrixError("entry nvars mismatch")
                for coef in q.terms.values():
                    if coef.denominator != 1 or coef < 0:
                        raise PolyMatrixError(
                            f"entry coefficient {coef} is not a nonnegative integer")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        dim = len(rows)
        nvars = rows[0][0].nvars
        return PolyMatrix(dim, nvars, tuple(tuple(r) for r in rows))

    @staticmethod
    def from_json_dict(data: dict) -> "PolyMatrix":
        dim = int(data["dim"])
        nvars = int(data["nvars"])
        rows = []
        for row in data["entries"]:
            rows.append(tuple(parse(expr, nvars) for expr in row))
        return PolyMatrix(dim, nvars, tuple(rows))

    @staticmethod
    def from_json(text: str) -> "PolyMatrix":
        return PolyMatrix.from_json_dict(json.loads(text))

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "nvars": self.nvars,
                "entries": [[serialize(q) for q in row] for row in self.entries]}

    def at(self, x: Sequence[Fraction | int]) -> list[list[Fraction]]:
        """Exact numeric matrix A(x)."""
        xs = [Fraction(v) for v in x]
        return [[eval_rational(q, xs) for q in row] for row in self.entries]

    def support_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.dim) for j in range(self.dim)
                if not self.entries[i][j].is_zero()]


# ---------------------------------------------------------------------
# Support digraph structure
# ---------------------------------------------------------------------

def _strongly_connected_components(dim: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative."""
    adj: list[list[int]] = [[] for _ in range(dim)]
    for i, j in edges:
        adj[i].append(j)
    index = [None] * dim
    low = [0] * dim
    on_stack = [False] * dim
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(dim):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if index[w] is None:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def is_irreducible(a: PolyMatrix) -> bool:
    """True iff the support digraph is strongly connected.

    A single node needs a self-loop (a closed walk must exist).
    """
    edges = a.support_edges()
    if a.dim == 1:
        return bool(edges)
    sccs = _strongly_connected_components(a.dim, edges)
    return len(sccs) == 1


def _scc_period(nodes: list[int], edges: list[tuple[int, int]]) -> int:
    """gcd of closed-walk lengths within one strongly connected component.

    0 when the component carries no edge (no closed walk at all).
    """
    node_set = set(nodes)
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    internal = False
    for i, j in edges:
        if i in node_set and j in node_set:
            adj[i].append(j)
            internal = True
    if not internal:
        return 0
    start = nodes[0]
    level = {start: 0}
    queue = [start]
    g = 0
    while queue:
        v = queue.pop()
        for w in adj[v]:
            if w not in level:
                level[w] = level[v] + 1
                queue.append(w)
            else:
                g = math.gcd(g, level[v] + 1 - level[w])
    return abs(g)


def is_aperiodic(a: PolyMatrix) -> bool:
    """True iff every node's closed-walk lengths have gcd 1."""
    edges = a.support_edges()
    for comp in _strongly_connected_components(a.dim, edges):
        if _scc_period(comp, edges) != 1:
            return False
    return True


# ---------------------------------------------------------------------
# Spectral radius function
# ---------------------------------------------------------------------

class ConvergenceError(RuntimeError):
    pass


def perron_bounds(b: Sequence[Sequence[float]], tol: float = 1e-9,
                  max_iter: int = 100_000) -> tuple[float, float, np.ndarray]:
    """Collatz-Wielandt enclosure of the spectral radius of nonnegative b.

    Power iteration on b + I (the shift keeps the iteration primitive);
    returns (lo, hi, v) with lo <= beta(b) <= hi and v the iterate.
    Raises ConvergenceError when the bracket fails to tighten in budget.
    """
    m = np.asarray(b, dtype=float) + np.eye(len(b))
    v = np.ones(len(b))
    lo, hi = -math.inf, math.inf
    for _ in range(max_iter):
        w = m @ v
        ratios = w / v
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo <= tol:
            return lo - 1.0, hi - 1.0, v
        nv = w / np.linalg.norm(w)
        if not np.all(nv > 0):
            raise ConvergenceError("iterate left the positive cone; matrix not irreducible?")
        v = nv
    raise ConvergenceError(
        f"Collatz-Wielandt bracket [{lo - 1.0}, {hi - 1.0}] did not reach tol={tol}")


def beta_at(a: PolyMatrix, x: Sequence[Fraction | int], tol: float = 1e-9,
            max_iter: int = 100_000) -> float:
    """Spectral radius of A(x) at a strictly positive point, to tol."""
    xs = [Fraction(v) for v in x]
    if len(xs) != a.nvars:
        raise ValueError("point dimension mismatch")
    if any(v <= 0 for v in xs):
        raise ValueError("beta_at requires a strictly positive point")
    b = [[float(v) for v in row] for row in a.at(xs)]
    lo, hi, _ = perron_bounds(b, tol=tol, max_iter=max_iter)
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------
# Characteristic residual and beta verification
# ---------------------------------------------------------------------

def charpoly_residual(a: PolyMatrix, p: Polynomial) -> Polynomial:
    """Exact det(p I - A), which vanishes identically when p is an
    eigenvalue function of A.

    Laplace expansion with memoization over column subsets; refused
    beyond dim 8 (the blow-up is factorial in spirit).
    """
    if p.nvars != a.nvars:
        raise ValueError("nvars mismatch between p and A")
    if a.dim > MAX_DETERMINANT_DIM:
        raise PolyMatrixError(
            f"exact determinant refused for dim {a.dim} > {MAX_DETERMINANT_DIM}")
    n = a.dim
    zero = Polynomial.zero(p.nvars)
    mat = [[(p if i == j else zero) - a.entries[i][j] for j in range(n)]
           for i in range(n)]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if not cols:
            return Polynomial.constant(p.nvars, 1)
        total = Polynomial.zero(p.nvars)
        for pos, col in enumerate(cols):
            entry = mat[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    result = minor(0, tuple(range(n)))
    minor.cache_clear()
    return result


class BetaVerdict(str, Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class BetaReport:
    verdict: BetaVerdict
    exact_charpoly_zero: bool
    samples: list[dict] = field(default_factory=list)
    irreducible: bool = False
    aperiodic: bool = False
    p_integer_coeffs: bool = True  # Z[x] membership matters for realizability
    note: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {"verdict": self.verdict.value,
                "exact_charpoly_zero": self.exact_charpoly_zero,
                "irreducible": self.irreducible,
                "aperiodic": self.aperiodic,
                "p_integer_coeffs": self.p_integer_coeffs,
                "samples": self.samples,
                "note": self.note}


def _second_modulus_gap(b: list[list[Fraction]], top: float) -> float:
    eig = np.linalg.eigvals(np.array([[float(v) for v in row] for row in b]))
    mods = sorted((abs(v) for v in eig), reverse=True)
    return top - (mods[1] if len(mods) > 1 else 0.0)


def verify_beta(a: PolyMatrix, p: Polynomial, sample_count: int = 20,
                tol: float = 1e-9, seed: int = 0) -> BetaReport:
    """Verify or refute p = beta_A.

    Verified requires det(p I - A) == 0 identically AND agreement of
    p(x) with the Perron root of A(x) at sample_count random positive
    rational points, to relative tolerance tol.  Any exact or numeric
    contradiction refutes; missing structural hypotheses give
    Inconclusive.
    """
    irr = is_irreducible(a)
    aper = is_aperiodic(a)
    int_coeffs = all(c.denominator == 1 for c in p.terms.values())
    report = BetaReport(BetaVerdict.INCONCLUSIVE, exact_charpoly_zero=False,
                        irreducible=irr, aperiodic=aper,
                        p_integer_coeffs=int_coeffs)
    if not (irr or aper):
        report.note = "matrix is neither irreducible nor aperiodic"
        return report
    residual = charpoly_residual(a, p)
    report.exact_charpoly_zero = residual.is_zero()
    if not report.exact_charpoly_zero:
        report.verdict = BetaVerdict.REFUTED
        report.note = f"characteristic residual nonzero: {serialize(residual)}"
        return report
    rng = random.Random(seed)
    for _ in range(sample_count):
        x = [Fraction(rng.randint(1, 24), rng.randint(1, 8)) for _ in range(a.nvars)]
        pv = float(eval_rational(p, x))
        try:
            bv = beta_at(a, x, tol=min(tol, 1e-10))
        except ConvergenceError as exc:
            report.note = str(exc)
            return report
        gap = _second_modulus_gap(a.at(x), bv)
        report.samples.append({"point": [str(v) for v in x], "p_value": pv,
                               "perron_value": bv, "gap_to_second_modulus": gap})
        if abs(pv - bv) > tol * (1.0 + abs(pv)):
            report.verdict = BetaVerdict.REFUTED
            report.note = f"dominance mismatch at {[str(v) for v in x]}"
            return report
    report.verdict = BetaVerdict.VERIFIED
    if not int_coeffs:
        report.note = ("p has non-integer coefficients; realizability as a "
                       "spectral radius function needs p in Z[x]")
    return report
