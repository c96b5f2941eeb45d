"""Power scans for eventual coefficient positivity.

The scanner walks p^m * q for m = 0..M_max with exact arithmetic and
records, for each m, whether every monomial of the full degree basis
carries a strictly positive coefficient.  The least m from which the
flags stay true through the end of the window is the "window-onset":
a finite proxy for the true onset, never an inference beyond the window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .poly import (Polynomial, dense_monomial_count, monomials_of_degree,
                   serialize)

DEFAULT_DENSE_CAP = 2_000_000


def all_coeffs_positive(f: Polynomial) -> bool:
    """True iff every monomial of f's full degree basis has coefficient > 0.

    A missing monomial fails the property.  Requires homogeneous input;
    the zero polynomial is rejected (its degree is not a nonnegative int).
    """
    if not f.is_homogeneous():
        raise ValueError("all_coeffs_positive requires a homogeneous polynomial")
    if f.is_zero():
        return False
    d = f.degree()
    if len(f.terms) != dense_monomial_count(f.nvars, d):
        return False
    return all(c > 0 for c in f.terms.values())


@dataclass
class PositivityPattern:
    """Per-power positivity flags for p^m * q, m = 0..m_max."""

    p_id: str
    q_id: str
    m_max: int
    flags: list[bool] = field(default_factory=list)
    first_true: Optional[int] = None
    onset: Optional[int] = None  # window-onset: flags true from here to m_max

    def to_json_dict(self) -> dict:
        return {
            "p": self.p_id,
            "q": self.q_id,
            "m_max": self.m_max,
            "flags": self.flags,
            "first_true": self.first_true,
            "window_onset": self.onset,
        }


def power_scan(p: Polynomial, q: Polynomial, m_max: int,
               dense_cap: int = DEFAULT_DENSE_CAP) -> PositivityPattern:
    """Scan p^m * q for all-positive coefficients, m = 0..m_max.

    Incremental: keeps the running product and multiplies by p at each
    step, since every intermediate power is inspected anyway.  Refuses
    scans whose final dense coefficient count exceeds dense_cap.
    """
    if p.nvars != q.nvars:
        raise ValueError("p and q must share nvars")
    if not p.is_homogeneous() or p.is_zero() or p.degree() == 0:
        raise ValueError("p must be nonconstant homogeneous")
    if not q.is_homogeneous() or q.is_zero():
        raise ValueError("q must be nonzero homogeneous")
    if m_max < 1:
        raise ValueError("m_max must be positive")
    final_count = dense_monomial_count(p.nvars, m_max * p.degree() + q.degree())
    if final_count > dense_cap:
        raise ValueError(
            f"scan refused: dense coefficient count {final_count} exceeds cap {dense_cap}")

    pattern = PositivityPattern(p_id=serialize(p), q_id=serialize(q), m_max=m_max)
    current = q
    for m in range(m_max + 1):
        if m > 0:
            current = current * p
        pattern.flags.append(all_coeffs_positive(current))

    for m, flag in enumerate(pattern.flags):
        if flag:
            pattern.first_true = m
            break
    # window-onset: the start of the trailing all-true run, if any
    if pattern.flags[-1]:
        onset = m_max
        while onset > 0 and pattern.flags[onset - 1]:
            onset -= 1
        pattern.onset = onset
    return pattern


def polya_exponent(g: Polynomial, n_max: int) -> Optional[int]:
    """Least N <= n_max with (x1+...+xl)^N * g all-positive, else None."""
    if not g.is_homogeneous():
        raise ValueError("polya_exponent requires a homogeneous polynomial")
    if g.is_zero() or g.nvars < 1:
        return None
    simplex = Polynomial.sum_of_variables(g.nvars)
    current = g
    for n in range(n_max + 1):
        if n > 0:
            current = current * simplex
        if all_coeffs_positive(current):
            return n
    return None
