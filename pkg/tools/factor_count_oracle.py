"""One-shot offline oracle: absolute factor counts of P(w)Q(z) - P(z)Q(w).

For a finite Blaschke product B = P/Q the number of connected components of
the curve {B(z) = B(w)} equals the number of absolutely irreducible factors
of f(z, w) = P(w)Q(z) - P(z)Q(w).  This script computes those counts with
sympy for the fixed fixture cases and writes tests/fixtures/factor_counts.json.

It is run once, by hand, and is NOT a test-time dependency: the tests compare
the numerical pipeline against the frozen integers only.

Method: factor f over QQ; a QQ-irreducible factor h splits absolutely into
factors that are defined over the splitting field L of a generic squarefree
fiber h(z0, w) (Galois orbits of components are trivial over L because each
component owns fiber points with coordinates in L), so factoring h over L
gives the absolute factorization.  z0 is chosen to keep the fiber squarefree
and of full w-degree.
"""

from __future__ import annotations

import json
import pathlib
from fractions import Fraction

import sympy as sp

z, w = sp.symbols("z w")


def blaschke_pq(zeros):
    """Numerator/denominator polynomials of a Blaschke product with theta=0."""
    p = sp.Integer(1)
    q = sp.Integer(1)
    for a in zeros:
        a = sp.Rational(a)
        p *= z - a
        q *= 1 - a * z
    return sp.expand(p), sp.expand(q)


def absolute_factor_count(f):
    f = sp.Poly(sp.expand(f), z, w)
    assert sp.gcd(f, f.diff(w)).total_degree() == 0, "f must be squarefree"
    total = 0
    for h, mult in f.factor_list()[1]:
        assert mult == 1
        h = sp.Poly(h, z, w)
        if h.total_degree() <= 1:
            total += 1
            continue
        deg_w = h.degree(w)
        for z0 in range(2, 100):
            fiber = sp.Poly(h.as_expr().subs(z, sp.Rational(z0, 7)), w)
            if fiber.degree() == deg_w and sp.discriminant(fiber, w) != 0:
                break
        else:
            raise RuntimeError("no good fiber found")
        roots = [sp.RootOf(fiber, i) for i in range(fiber.degree())]
        factored = sp.factor_list(h.as_expr(), z, w, extension=roots)
        total += len(factored[1])
    return total


CASES = [
    {"name": "cube", "theta": 0.0, "zeros": [0, 0, 0]},
    {"name": "order3_generic", "theta": 0.0, "zeros": [0, 0, Fraction(1, 2)]},
    {
        "name": "order4_composition",
        "theta": 0.0,
        "zeros": [0, 0, Fraction(1, 2), Fraction(-1, 2)],
    },
]


def main():
    out = []
    for case in CASES:
        p, q = blaschke_pq(case["zeros"])
        f = sp.expand(p.subs(z, w) * q - p * q.subs(z, w))
        count = absolute_factor_count(f)
        print(f"{case['name']}: zeros={case['zeros']} -> {count} absolute factors")
        out.append(
            {
                "name": case["name"],
                "theta": case["theta"],
                "zeros": [[float(a), 0.0] for a in case["zeros"]],
                "absolute_factor_count": count,
            }
        )
    path = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures"
    path.mkdir(parents=True, exist_ok=True)
    (path / "factor_counts.json").write_text(json.dumps(out, indent=2) + "\n")
    print(f"wrote {path / 'factor_counts.json'}")


if __name__ == "__main__":
    main()
