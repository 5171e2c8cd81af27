"""Univariate polynomial helpers over Q(i).

Polynomials are coefficient lists, lowest degree first.  Factorization
into irreducibles over Q(i) is delegated to sympy's Gaussian-rational
domain; everything else (division, xgcd, matrix evaluation) is done
directly so the idempotent construction stays exact.
"""

from __future__ import annotations

import sympy

from .linalg import ExactMatrix
from .scalars import GQ, ONE, ZERO

_x = sympy.symbols("x")


def poly_trim(p: list[GQ]) -> list[GQ]:
    while p and not p[-1]:
        p = p[:-1]
    return p


def poly_mul(a: list[GQ], b: list[GQ]) -> list[GQ]:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_divmod(a: list[GQ], b: list[GQ]) -> tuple[list[GQ], list[GQ]]:
    a, b = poly_trim(list(a)), poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv = b[-1].inverse()
    while len(r) >= len(b) and poly_trim(r):
        r = poly_trim(r)
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        c = r[-1] * inv
        q[k] = c
        for i, y in enumerate(b):
            r[k + i] = r[k + i] - c * y
        r = poly_trim(r)
    return poly_trim(q), poly_trim(r)


def poly_xgcd(a: list[GQ], b: list[GQ]) -> tuple[list[GQ], list[GQ], list[GQ]]:
    """(g, s, t) with s a + t b = g, g monic."""
    r0, r1 = poly_trim(list(a)), poly_trim(list(b))
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if r0:
        lead_inv = r0[-1].inverse()
        r0 = [lead_inv * c for c in r0]
        s0 = [lead_inv * c for c in s0]
        t0 = [lead_inv * c for c in t0]
    return r0, s0, t0


def poly_sub(a: list[GQ], b: list[GQ]) -> list[GQ]:
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else ZERO
        y = b[k] if k < len(b) else ZERO
        out.append(x - y)
    return poly_trim(out)


def poly_eval_matrix(p: list[GQ], m: ExactMatrix) -> ExactMatrix:
    """Horner evaluation of p at a square matrix."""
    n = m.rows
    acc = ExactMatrix.zeros(n, n)
    for c in reversed(p):
        acc = acc * m
        if c:
            acc = acc + ExactMatrix.identity(n).scale(c)
    return acc


def _gq_to_sympy(c: GQ):
    re = sympy.Rational(int(c.re.numerator), int(c.re.denominator))
    im = sympy.Rational(int(c.im.numerator), int(c.im.denominator))
    return re + im * sympy.I


def _sympy_to_gq(expr) -> GQ:
    re, im = expr.as_real_imag()
    re, im = sympy.Rational(re), sympy.Rational(im)
    return GQ(f"{re.p}/{re.q}") + GQ(0, 1) * GQ(f"{im.p}/{im.q}")


def factor_over_gaussian_rationals(p: list[GQ]) -> list[tuple[list[GQ], int]]:
    """Monic irreducible factors of p over Q(i) with multiplicities."""
    expr = sum(_gq_to_sympy(c) * _x**k for k, c in enumerate(p))
    poly = sympy.Poly(expr, _x, domain="QQ_I")
    _, factors = poly.factor_list()
    out = []
    for f, mult in factors:
        coeffs = [_sympy_to_gq(c) for c in reversed(f.all_coeffs())]
        lead_inv = coeffs[-1].inverse()
        coeffs = [lead_inv * c for c in coeffs]
        out.append((coeffs, int(mult)))
    return out
