"""Support lattices, the log-Hessian matrix, and convexity probes.

Covers: exponent support and the affine dimension of its convex hull,
fullness of the difference lattice via Smith normal form, the matrix
J_f(s) = s_j d/ds_j (s_i d/ds_i log f) computed exactly from f and its
partials, a finite-difference cross-check through the exponential
change of variables, and the AM-GM style midpoint inequality
p(sqrt(x*y))^2 <= p(x) p(y).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .poly import Polynomial, eval_rational


# ---------------------------------------------------------------------
# Support and lattices
# ---------------------------------------------------------------------

def log_support(f: Polynomial) -> frozenset:
    """Exponent support {I : c_I != 0}; rejects the zero polynomial."""
    if f.is_zero():
        raise ValueError("zero polynomial has empty support")
    return frozenset(f.terms)


def _rational_rank(rows: list[list[int]]) -> int:
    """Exact rank over Q by fraction elimination."""
    mat = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for r in range(rank + 1, len(mat)):
            if mat[r][col] != 0:
                factor = mat[r][col] / prow[col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], prow)]
        rank += 1
        col += 1
    return rank


def newton_affine_dim(f: Polynomial) -> int:
    """Affine dimension of the Newton polytope of f."""
    support = sorted(log_support(f))
    base = support[0]
    rows = [[a - b for a, b in zip(exp, base)] for exp in support[1:]]
    return _rational_rank(rows)


def smith_invariant_factors(rows: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix (Smith normal form).

    Standard row/column reduction over arbitrary-precision integers; the
    matrices here are tiny, so no modular shortcuts.
    """
    mat = [list(map(int, row)) for row in rows]
    if not mat or not mat[0]:
        return []
    m, n = len(mat), len(mat[0])
    factors: list[int] = []
    t = 0
    while t < min(m, n):
        # find a nonzero pivot in the remaining block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if mat[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        while True:
            # move the smallest-magnitude nonzero entry to (t, t)
            bi, bj = pivot
            best = abs(mat[bi][bj])
            for i in range(t, m):
                for j in range(t, n):
                    v = abs(mat[i][j])
                    if v and v < best:
                        best, bi, bj = v, i, j
            mat[t], mat[bi] = mat[bi], mat[t]
            for row in mat:
                row[t], row[bj] = row[bj], row[t]
            piv = mat[t][t]
            done = True
            for i in range(t + 1, m):
                if mat[i][t] % piv:
                    done = False
                q = mat[i][t] // piv
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[t])]
            for j in range(t + 1, n):
                if mat[t][j] % piv:
                    done = False
                q = mat[t][j] // piv
                if q:
                    for row in mat:
                        row[j] -= q * row[t]
            if done and all(mat[i][t] == 0 for i in range(t + 1, m)) \
                    and all(mat[t][j] == 0 for j in range(t + 1, n)):
                # pivot must divide the rest of the block
                offender = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if mat[i][j] % piv:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                mat[t] = [a + b for a, b in zip(mat[t], mat[offender])]
            pivot = (t, t)
        factors.append(abs(mat[t][t]))
        t += 1
    return factors


def difference_lattice_generators(f: Polynomial) -> list[list[int]]:
    """Generators {I - I0} of the lattice spanned by support differences."""
    support = sorted(log_support(f))
    base = support[0]
    return [[a - b for a, b in zip(exp, base)] for exp in support[1:]]


def difference_lattice_is_full(f: Polynomial) -> bool:
    """True iff the support-difference lattice equals Z^nvars.

    Decided by Smith normal form: full exactly when there are nvars
    invariant factors, all equal to 1.
    """
    gens = difference_lattice_generators(f)
    factors = smith_invariant_factors(gens)
    ell = f.nvars
    return len(factors) == ell and all(v == 1 for v in factors)


# ---------------------------------------------------------------------
# J_f and its finite-difference cross-check
# ---------------------------------------------------------------------

def jf_matrix(f: Polynomial, s: Sequence[Fraction | int]) -> list[list[Fraction]]:
    """Exact J_f(s)_ij = s_i s_j d2(log f)/ds_i ds_j + delta_ij s_j d(log f)/ds_i.

    Computed algebraically from f, its first and second partials, and
    f(s); requires f(s) > 0 at a strictly positive point.
    """
    ell = f.nvars
    point = [Fraction(v) for v in s]
    if len(point) != ell:
        raise ValueError(f"point has length {len(point)}, expected {ell}")
    if any(v <= 0 for v in point):
        raise ValueError("jf_matrix requires a strictly positive point")
    fval = eval_rational(f, point)
    if fval <= 0:
        raise ValueError(f"f must be positive at the point (got {fval})")
    firsts = [f.partial_derivative(i) for i in range(ell)]
    fvals1 = [eval_rational(g, point) for g in firsts]
    out = [[Fraction(0)] * ell for _ in range(ell)]
    for i in range(ell):
        for j in range(i, ell):
            fij = eval_rational(firsts[i].partial_derivative(j), point)
            # d2(log f) = (f * f_ij - f_i * f_j) / f^2
            val = point[i] * point[j] * (fval * fij - fvals1[i] * fvals1[j]) / fval ** 2
            if i == j:
                val += point[i] * fvals1[i] / fval
            out[i][j] = out[j][i] = val
    return out


def hessian_logf_fd(f: Polynomial, t: Sequence[float], h: float = 1e-3) -> np.ndarray:
    """Central-difference Hessian of log f(e^{t_1}, ..., e^{t_l}) at t."""
    ell = f.nvars
    t = np.asarray(t, dtype=float)
    if t.shape != (ell,):
        raise ValueError(f"point has shape {t.shape}, expected ({ell},)")

    def logf(tt: np.ndarray) -> float:
        val = float(eval_rational(f, [Fraction(x) for x in np.exp(tt)]))
        if val <= 0:
            raise ValueError("f(e^t) must be positive throughout the stencil")
        return math.log(val)

    out = np.empty((ell, ell))
    for i in range(ell):
        ei = np.zeros(ell)
        ei[i] = h
        out[i, i] = (logf(t + ei) - 2 * logf(t) + logf(t - ei)) / h ** 2
        for j in range(i + 1, ell):
            ej = np.zeros(ell)
            ej[j] = h
            out[i, j] = out[j, i] = (
                logf(t + ei + ej) - logf(t + ei - ej)
                - logf(t - ei + ej) + logf(t - ei - ej)) / (4 * h ** 2)
    return out


def is_positive_definite(mat, tol: float = 1e-9) -> bool:
    """Positive definiteness check.

    Rational input: exact LDL elimination, all pivots must be > 0.
    Float input: symmetrize (rejecting asymmetry beyond tol) and test
    the smallest eigenvalue.
    """
    if isinstance(mat, np.ndarray) or (mat and isinstance(mat[0][0], float)):
        arr = np.asarray(mat, dtype=float)
        scale = max(1.0, float(np.max(np.abs(arr))))
        if np.max(np.abs(arr - arr.T)) > tol * scale:
            raise ValueError("matrix asymmetric beyond tolerance")
        sym = 0.5 * (arr + arr.T)
        return bool(np.min(np.linalg.eigvalsh(sym)) > 0)

    rows = [[Fraction(v) for v in row] for row in mat]
    dim = len(rows)
    if any(len(r) != dim for r in rows):
        raise ValueError("matrix must be square")
    for i in range(dim):
        for j in range(i + 1, dim):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix must be symmetric")
    # LDL without pivoting: a PD matrix never produces a pivot <= 0
    for k in range(dim):
        piv = rows[k][k]
        if piv <= 0:
            return False
        for i in range(k + 1, dim):
            factor = rows[i][k] / piv
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
    return True


def amgm_check(p: Polynomial, x: Sequence[Fraction | int],
               y: Sequence[Fraction | int], tol: float = 1e-9) -> bool:
    """Check p(sqrt(x1 y1), ..., sqrt(xn yn))^2 <= p(x) p(y) within tol.

    The geometric-mean side needs square roots and is evaluated in
    floating point; the right side is exact.  Equality is accepted.
    """
    xs = [Fraction(v) for v in x]
    ys = [Fraction(v) for v in y]
    if len(xs) != p.nvars or len(ys) != p.nvars:
        raise ValueError("dimension mismatch")
    if any(v <= 0 for v in xs + ys):
        raise ValueError("points must be strictly positive")
    mid = [complex(math.sqrt(a * b)) for a, b in zip(xs, ys)]
    from .poly import eval_complex
    left = eval_complex(p, mid).real ** 2
    right = float(eval_rational(p, xs) * eval_rational(p, ys))
    scale = max(1.0, abs(right))
    return left <= right + tol * scale
