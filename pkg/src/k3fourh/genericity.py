"""Genericity of four (1,1)-curves on P^1 x P^1.

A configuration is a 4-tuple of 2 x 2 matrices ``x^p``; the curve ``H_p`` is
``xi^T x^p eta = 0`` with ``xi = (s, 1)``, ``eta = (t, 1)``.  The open set of
generic configurations is cut out by three families of invariants:

* ``g1``: ``D(pp) = 2 det x^p`` is nonzero (each curve is irreducible);
* ``g2``: ``D(pq)^2 - D(pp) D(qq)`` is nonzero (two curves meet in two
  distinct points);
* ``g3``: ``D(pqr)`` is nonzero (no three curves share a point).

Entries may be exact (``int``/``Fraction``) or complex floating.  Exact input
gives exact answers; floating input uses a relative threshold scaled by the
input norms to the degree of each invariant.
"""
from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import exact_core as ec

Config = Tuple[Tuple[Tuple[object, object], Tuple[object, object]], ...]

REFERENCE_CONFIG = (
    ((0, -1), (1, 0)),
    ((1, 0), (0, -16)),
    ((2, -5), (5, -2)),
    ((4, -3), (27, -64)),
)

FLOAT_RTOL = 1e-9

# rows of the 6 x 4 matrix whose 4 x 4 minors factor through the g2
# discriminant, and the 2 x 2 cross terms of the six nonzero minors
LISTED_MINORS = ((1, 2, 5, 6), (1, 3, 5, 6), (1, 4, 5, 6),
                 (2, 3, 5, 6), (2, 4, 5, 6), (3, 4, 5, 6))


class GenericityError(ValueError):
    pass


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def normalize_config(x) -> Config:
    """Return ``x`` as nested tuples; exact entries become ``Fraction``."""
    if len(x) != 4:
        raise GenericityError("a configuration has four matrices")
    out = []
    for m in x:
        if len(m) != 2 or any(len(r) != 2 for r in m):
            raise GenericityError("each curve is a 2 x 2 matrix")
        out.append(tuple(tuple(Fraction(v) if _is_exact(v) else complex(v) for v in r) for r in m))
    return tuple(out)


def config_is_exact(x) -> bool:
    return all(_is_exact(v) for m in x for r in m for v in r)


def d_pair(x, p: int, q: int):
    """``D(pq) = x11^p x22^q + x22^p x11^q - x12^p x21^q - x21^p x12^q``."""
    a, b = x[p - 1], x[q - 1]
    return a[0][0] * b[1][1] + a[1][1] * b[0][0] - a[0][1] * b[1][0] - a[1][0] * b[0][1]


def g2_invariant(x, p: int, q: int):
    return d_pair(x, p, q) ** 2 - d_pair(x, p, p) * d_pair(x, q, q)


def _flat(m):
    return [m[0][0], m[0][1], m[1][0], m[1][1]]


def _minor3(rows, cols):
    a = [[rows[i][c] for c in cols] for i in range(3)]
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))


def triple_minors(x, p: int, q: int, r: int) -> Dict[str, object]:
    """The four 3 x 3 column minors ``(ijk)`` of the flattened rows."""
    if len({p, q, r}) != 3:
        raise GenericityError("d_triple needs three distinct indices")
    rows = [_flat(x[k - 1]) for k in (p, q, r)]
    return {"".join(str(c + 1) for c in cols): _minor3(rows, cols)
            for cols in itertools.combinations(range(4), 3)}


def d_triple(x, p: int, q: int, r: int):
    """``D(pqr) = (234)(123) - (134)(124)``."""
    m = triple_minors(x, p, q, r)
    return m["234"] * m["123"] - m["134"] * m["124"]


def _scale(x) -> float:
    return max(1.0, max(abs(complex(v)) for m in x for r in m for v in r))


def _nonzero(v, degree: int, x, exact: bool, rtol: float) -> bool:
    if exact:
        return v != 0
    return abs(complex(v)) > rtol * _scale(x) ** degree


def genericity_flags(x, rtol: float = FLOAT_RTOL) -> Dict[str, Dict[str, bool]]:
    """The g1/g2/g3 flags, keyed by index strings such as ``"12"``."""
    x = normalize_config(x)
    exact = config_is_exact(x)
    g1 = {str(p): _nonzero(d_pair(x, p, p), 2, x, exact, rtol) for p in range(1, 5)}
    g2 = {f"{p}{q}": _nonzero(g2_invariant(x, p, q), 4, x, exact, rtol)
          for p, q in itertools.combinations(range(1, 5), 2)}
    g3 = {f"{p}{q}{r}": _nonzero(d_triple(x, p, q, r), 6, x, exact, rtol)
          for p, q, r in itertools.combinations(range(1, 5), 3)}
    return {"g1": g1, "g2": g2, "g3": g3}


def is_generic(x, rtol: float = FLOAT_RTOL) -> bool:
    f = genericity_flags(x, rtol)
    return all(all(d.values()) for d in f.values())


def invariants(x) -> Dict[str, object]:
    """All 4 + 6 + 4 invariants (exact values stay exact)."""
    x = normalize_config(x)
    out = {}
    for p in range(1, 5):
        out[f"D({p}{p})"] = d_pair(x, p, p)
    for p, q in itertools.combinations(range(1, 5), 2):
        out[f"D({p}{q})"] = d_pair(x, p, q)
        out[f"D({p}{q})^2-D({p}{p})D({q}{q})"] = g2_invariant(x, p, q)
    for p, q, r in itertools.combinations(range(1, 5), 3):
        out[f"D({p}{q}{r})"] = d_triple(x, p, q, r)
    return out


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _mul2(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _t2(a):
    return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))


def act(x, g, h, lam) -> Config:
    """``x^p -> lam_p g x^p h^T``."""
    x = normalize_config(x)
    g = normalize_config([g, g, g, g])[0]
    h = normalize_config([h, h, h, h])[0]
    if _det2(g) == 0 or _det2(h) == 0:
        raise GenericityError("g and h must be invertible")
    if len(lam) != 4 or any(l == 0 for l in lam):
        raise GenericityError("lambda needs four nonzero scalars")
    lam = [Fraction(l) if _is_exact(l) else complex(l) for l in lam]
    out = []
    for p in range(4):
        m = _mul2(_mul2(g, x[p]), _t2(h))
        out.append(tuple(tuple(lam[p] * v for v in r) for r in m))
    return tuple(out)


# ---------------------------------------------------------------------------
# characteristic-variety minors
# ---------------------------------------------------------------------------

def characteristic_matrix(a, b) -> List[List[object]]:
    """The 6 x 4 matrix built from two curves ``a = x^1``, ``b = x^2``."""
    def x1(i, j):
        return a[i - 1][j - 1]

    def x2(i, j):
        return b[i - 1][j - 1]

    def c(i, j, k, l):
        return x1(i, j) * x2(k, l) - x1(k, l) * x2(i, j)

    return [
        [x1(1, 2) * x2(2, 1) - x1(2, 1) * x2(1, 2), c(1, 2, 2, 2), x1(2, 2) * x2(2, 1) - x1(2, 1) * x2(2, 2), 0],
        [x1(1, 1) * x2(1, 2) - x1(1, 2) * x2(1, 1), 0, c(1, 1, 2, 2), c(1, 2, 2, 2)],
        [x1(2, 1) * x2(1, 1) - x1(1, 1) * x2(2, 1), x1(2, 2) * x2(1, 1) - x1(1, 1) * x2(2, 2), 0,
         x1(2, 2) * x2(2, 1) - x1(2, 1) * x2(2, 2)],
        [0, x1(1, 1) * x2(1, 2) - x1(1, 2) * x2(1, 1), x1(2, 1) * x2(1, 1) - x1(1, 1) * x2(2, 1),
         x1(2, 1) * x2(1, 2) - x1(1, 2) * x2(2, 1)],
        _flat(a),
        _flat(b),
    ]


def minor_cofactors(a, b) -> Dict[Tuple[int, ...], object]:
    """The 2 x 2 cross terms multiplying the g2 discriminant in each listed minor."""
    def x1(i, j):
        return a[i - 1][j - 1]

    def x2(i, j):
        return b[i - 1][j - 1]

    return {
        (1, 2, 5, 6): x1(1, 2) * x2(2, 2) - x1(2, 2) * x2(1, 2),
        (1, 3, 5, 6): x1(2, 2) * x2(2, 1) - x1(2, 1) * x2(2, 2),
        (1, 4, 5, 6): x1(2, 1) * x2(1, 2) - x1(1, 2) * x2(2, 1),
        (2, 3, 5, 6): x1(1, 1) * x2(2, 2) - x1(2, 2) * x2(1, 1),
        (2, 4, 5, 6): x1(1, 2) * x2(1, 1) - x1(1, 1) * x2(1, 2),
        (3, 4, 5, 6): x1(1, 1) * x2(2, 1) - x1(2, 1) * x2(1, 1),
    }


def random_rational_config(rng: random.Random, bound: int = 9, den: int = 5) -> Config:
    def q():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, den))
    return tuple(tuple(tuple(q() for _ in range(2)) for _ in range(2)) for _ in range(4))


def check_minor_identities(a, b) -> Dict:
    """Check all fifteen 4 x 4 minors for one pair of curves (exact)."""
    M = characteristic_matrix(a, b)
    x = normalize_config([a, b, a, b])
    disc = g2_invariant(x, 1, 2)
    cof = minor_cofactors(a, b)
    failures = []
    for rows in itertools.combinations(range(1, 7), 4):
        m = ec.det_rational([M[r - 1] for r in rows])
        want = cof[rows] * disc if rows in cof else 0
        if m != want:
            failures.append({"rows": list(rows), "minor": str(m), "expected": str(want)})
    return {"ok": not failures, "failures": failures}


def verify_minor_identities(trials: int = 100, seed: int = 0) -> Dict:
    """Run :func:`check_minor_identities` on seeded random rational curves."""
    counterexamples = []
    for t in range(trials):
        rng = random.Random(seed * 1000003 + t)
        x = random_rational_config(rng)
        r = check_minor_identities(x[0], x[1])
        if not r["ok"]:
            counterexamples.append({"trial": t, "a": _to_text(x[0]), "b": _to_text(x[1]),
                                    "failures": r["failures"]})
    return {"trials": trials, "seed": seed, "ok": not counterexamples,
            "counterexamples": counterexamples}


def kernel_dimension(a, b) -> int:
    """``4 - rank`` of the characteristic matrix (exact)."""
    return 4 - ec.rank_rational(characteristic_matrix(a, b))


# ---------------------------------------------------------------------------
# intersection points and I/O
# ---------------------------------------------------------------------------

def intersection_s_values(x, p: int, q: int) -> List[complex]:
    """s-coordinates of ``H_p n H_q``.

    At an intersection point the row vectors ``xi^T x^p`` and ``xi^T x^q``
    are parallel, so ``xi`` is a left eigenvector of ``x^q (x^p)^{-1}``.
    """
    xp = np.array(x[p - 1], dtype=complex)
    xq = np.array(x[q - 1], dtype=complex)
    w, vl = np.linalg.eig((xq @ np.linalg.inv(xp)).T)
    return sorted((complex(vl[0, k] / vl[1, k]) for k in range(2)),
                  key=lambda z: (z.real, z.imag))


def _to_text(m):
    return [[str(v) if _is_exact(v) else [v.real, v.imag] for v in r] for r in m]


def config_to_json(x) -> str:
    x = normalize_config(x)
    return json.dumps({"curves": [_to_text(m) for m in x]})


def _parse_scalar(v):
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise GenericityError(f"bad rational {v!r}") from e
    if isinstance(v, list) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    raise GenericityError(f"bad scalar {v!r}")


def config_from_json(text: str) -> Config:
    try:
        data = json.loads(text)
        curves = data["curves"]
    except (ValueError, KeyError, TypeError) as e:
        raise GenericityError(f"invalid configuration file: {e}") from e
    if not isinstance(curves, list) or len(curves) != 4:
        raise GenericityError("invalid configuration file: need four curves")
    try:
        return normalize_config([[[_parse_scalar(v) for v in r] for r in m] for m in curves])
    except TypeError as e:
        raise GenericityError(f"invalid configuration file: {e}") from e


def genericity_report(x=REFERENCE_CONFIG) -> Dict:
    x = normalize_config(x)
    inv = invariants(x)
    flags = genericity_flags(x)
    return {
        "flags": flags,
        "generic": all(all(d.values()) for d in flags.values()),
        "invariants": {k: (str(v) if _is_exact(v) else [complex(v).real, complex(v).imag])
                       for k, v in inv.items()},
    }
