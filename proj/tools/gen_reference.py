#!/usr/bin/env python3
"""Regenerate tests/data/reference.json with sympy.

The values here are computed independently of the C++ library (symbolic
series expansion in sympy) and are checked in; the tests only read them.
"""
import json
import pathlib

import sympy as sp

t, x = sp.symbols("t x")
OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "reference.json"


def coeffs(poly_expr):
    p = sp.Poly(sp.expand(poly_expr), x)
    c = p.all_coeffs()[::-1]
    return [str(sp.Rational(v)) for v in c]


def expansion(f, N):
    """P_n(x) = n! [t^n] f(t) e^{xt}, n = 0..N."""
    s = sp.series(f * sp.exp(x * t), t, 0, N + 1).removeO()
    return [coeffs(sp.factorial(n) * s.coeff(t, n)) for n in range(N + 1)]


def main():
    N = 12
    data = {
        "bernoulli_numbers": [str(sp.bernoulli(n, 0)) for n in range(31)],
        "euler_at_zero": [str(sp.euler(n, 0)) for n in range(31)],
        "stirling_first": [
            [str(sp.functions.combinatorial.numbers.stirling(n, k, kind=1, signed=True)) for k in range(n + 1)]
            for n in range(13)
        ],
        "bernoulli_higher": {},
        "euler_higher": {},
    }
    for r in (1, 2, 3):
        data["bernoulli_higher"][str(r)] = expansion((t / (sp.exp(t) - 1)) ** r, N)
        data["euler_higher"][str(r)] = expansion((2 / (sp.exp(t) + 1)) ** r, N)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1) + "\n")


if __name__ == "__main__":
    main()
