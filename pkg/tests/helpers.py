"""Shared test utilities: independent oracles and random instance builders.

The oracles here deliberately avoid the library's own code paths:
sympy expansion for polynomial arithmetic, dense array convolution for
powers, and breadth-first lattice walking for lattice fullness.
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction

import numpy as np
import sympy

from powerpos import Polynomial, monomials_of_degree


def sympy_coeff_dict(expr_text: str, nvars: int) -> dict[tuple, Fraction]:
    """Expand an expression with sympy and return {exponent: coefficient}."""
    syms = sympy.symbols(f"x1:{nvars + 1}")
    expr = sympy.expand(sympy.sympify(expr_text.replace("^", "**"),
                                      dict(zip(map(str, syms), syms))))
    poly = sympy.Poly(expr, *syms)
    out = {}
    for exp, coef in poly.terms():
        out[tuple(int(e) for e in exp)] = Fraction(int(coef.p), int(coef.q))
    return out


def to_sympy(p: Polynomial):
    syms = sympy.symbols(f"x1:{p.nvars + 1}")
    total = sympy.Integer(0)
    for exp, coef in p.terms.items():
        term = sympy.Rational(coef.numerator, coef.denominator)
        for s, e in zip(syms, exp):
            term *= s ** e
        total += term
    return sympy.expand(total)


def from_sympy(expr, nvars: int) -> Polynomial:
    syms = sympy.symbols(f"x1:{nvars + 1}")
    poly = sympy.Poly(sympy.expand(expr), *syms)
    terms = {tuple(int(e) for e in exp): Fraction(int(c.p), int(c.q))
             for exp, c in poly.terms()}
    return Polynomial(nvars, terms)


def dense_grid_pow_2d(p: Polynomial, m: int) -> np.ndarray:
    """Independent power oracle for bivariate polynomials.

    Represents coefficients on a dense (deg_x1, deg_x2) integer grid and
    convolves with plain Python-int accumulation (object dtype).
    """
    assert p.nvars == 2
    d = p.degree()
    grid = np.zeros((d + 1, d + 1), dtype=object)
    for (a, b), c in p.terms.items():
        assert c.denominator == 1
        grid[a, b] = int(c)
    result = np.zeros((1, 1), dtype=object)
    result[0, 0] = 1
    for _ in range(m):
        ra, rb = result.shape
        out = np.zeros((ra + d, rb + d), dtype=object)
        for i in range(ra):
            for j in range(rb):
                v = result[i, j]
                if v:
                    out[i:i + d + 1, j:j + d + 1] += v * grid
        result = out
    return result


def lattice_units_reachable(gens: list[list[int]], ell: int, box: int = 12) -> bool:
    """Brute-force lattice membership of all unit vectors.

    BFS from the origin adding/subtracting generators, confined to
    [-box, box]^ell.  Independent of the Smith-normal-form route.
    """
    start = (0,) * ell
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for g in gens:
            for s in (1, -1):
                w = tuple(a + s * b for a, b in zip(v, g))
                if all(abs(x) <= box for x in w) and w not in seen:
                    seen.add(w)
                    queue.append(w)
    units = (tuple(1 if i == j else 0 for i in range(ell)) for j in range(ell))
    return all(u in seen for u in units)


def rand_homogeneous(rng: random.Random, nvars: int, degree: int,
                     all_positive: bool = False,
                     density: float = 1.0) -> Polynomial:
    """Random homogeneous polynomial with small rational coefficients."""
    terms = {}
    for exp in monomials_of_degree(nvars, degree):
        if not all_positive and rng.random() > density:
            continue
        num = rng.randint(1, 9) if all_positive else rng.randint(-9, 9)
        if num == 0 and not all_positive:
            continue
        terms[exp] = Fraction(num, rng.randint(1, 4))
    if not terms:
        terms[next(iter(monomials_of_degree(nvars, degree)))] = Fraction(1)
    return Polynomial(nvars, terms)


def rand_positive_point(rng: random.Random, n: int,
                        lo: int = 1, hi: int = 12) -> list[Fraction]:
    return [Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(n)]


def rand_complex_point(rng: random.Random, n: int, scale: float = 2.0) -> list[complex]:
    return [complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
            for _ in range(n)]
