"""The GKZ system attached to four (1,1)-curves.

The sixteen variables ``x^p_{ij}`` (and their derivatives ``d^p_{ij}``) are
ordered ``(p, i, j)`` lexicographically: ``x^1_11, x^1_12, x^1_21, x^1_22,
x^2_11, ..., x^4_22``.  The 6 x 16 matrix ``A`` has column
``e_p + [i = 1] e_5 + [j = 1] e_6``, i.e. it is the Segre embedding of
P^3 x P^1 x P^1, whose degree is ``5! / (3! 1! 1!) = 20``.

The module provides

* exact polynomials over Q (``dict`` from exponent tuples to ``Fraction``)
  and a Buchberger algorithm for any of the supported monomial orders;
* the toric ideal ``I_A`` computed from a kernel-lattice basis by saturation;
* the multiplicity of ``I_A`` from the Stanley-Reisner complex of a
  squarefree initial ideal, and independently the normalized volume of the
  point configuration via an exact placing triangulation;
* the first-order operators and their ``(-W, W)`` initial forms.
"""
from __future__ import annotations

import hashlib
import heapq
import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import exact_core as ec

Exp = Tuple[int, ...]
Poly = Dict[Exp, Fraction]

NVARS = 16
VARIABLES = [(p, i, j) for p in range(1, 5) for i in (1, 2) for j in (1, 2)]
BETA = (Fraction(-1, 2),) * 4 + (Fraction(-1), Fraction(-1))


class GkzError(ValueError):
    pass


def var_index(p: int, i: int, j: int) -> int:
    return VARIABLES.index((p, i, j))


def var_name(k: int, prefix: str = "d") -> str:
    p, i, j = VARIABLES[k]
    return f"{prefix}{p}_{i}{j}"


# ---------------------------------------------------------------------------
# the matrix A
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GkzData:
    a_matrix: Tuple[Tuple[int, ...], ...]
    beta: Tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return ec.rank_int([list(r) for r in self.a_matrix])


def gkz_matrix() -> GkzData:
    rows = [[0] * NVARS for _ in range(6)]
    for k, (p, i, j) in enumerate(VARIABLES):
        rows[p - 1][k] = 1
        rows[4][k] = 1 if i == 1 else 0
        rows[5][k] = 1 if j == 1 else 0
    return GkzData(tuple(tuple(r) for r in rows), BETA)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic order, optionally refined by a weight.

    ``var_order`` lists the variables from largest to smallest; the last one
    is the variable that reverse lexicographic comparison looks at first.
    With ``weight`` the order compares ``weight . e`` before anything else
    (``weight-then-revlex``).
    """

    tag: str = "revlex"
    var_order: Tuple[int, ...] = tuple(range(NVARS))
    weight: Optional[Tuple[int, ...]] = None

    def key(self, e: Exp):
        rev = tuple(-e[v] for v in reversed(self.var_order))
        k = (sum(e), rev)
        if self.weight is not None:
            return (sum(w * a for w, a in zip(self.weight, e)),) + k
        return k

    def cache_tag(self) -> str:
        s = f"{self.tag}:{','.join(map(str, self.var_order))}"
        if self.weight is not None:
            s += ":w=" + ",".join(map(str, self.weight))
        return s


def revlex(last: Optional[int] = None, n: int = NVARS) -> MonomialOrder:
    """Revlex with the natural variable order, or with ``last`` moved to the end."""
    order = list(range(n))
    if last is not None:
        order.remove(last)
        order.append(last)
    return MonomialOrder("revlex", tuple(order))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def poly(terms: Iterable[Tuple[Fraction, Exp]]) -> Poly:
    out: Poly = {}
    for c, e in terms:
        c = Fraction(c)
        e = tuple(e)
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def binomial(u: Sequence[int], v: Sequence[int]) -> Poly:
    return poly([(1, tuple(u)), (-1, tuple(v))])


def monomial_exp(*idx: int, n: int = NVARS) -> Exp:
    e = [0] * n
    for k in idx:
        e[k] += 1
    return tuple(e)


def leading(f: Poly, order: MonomialOrder) -> Exp:
    return max(f, key=order.key)


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def _axpy(f: Poly, c: Fraction, m: Exp, g: Poly) -> None:
    """``f += c * x^m * g`` in place."""
    for e, a in g.items():
        k = _add(e, m)
        v = f.get(k, 0) + c * a
        if v:
            f[k] = v
        else:
            f.pop(k, None)


def normal_form(f: Poly, basis: Sequence[Poly], order: MonomialOrder,
                leads: Optional[Sequence[Exp]] = None) -> Poly:
    """Fully reduced remainder of ``f`` modulo ``basis``."""
    if leads is None:
        leads = [leading(g, order) for g in basis]
    f = dict(f)
    rem: Poly = {}
    while f:
        lm = leading(f, order)
        c = f[lm]
        for g, lg in zip(basis, leads):
            if _divides(lg, lm):
                _axpy(f, -c / g[lg], _sub(lm, lg), g)
                break
        else:
            rem[lm] = c
            del f[lm]
    return rem


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lf, lg = leading(f, order), leading(g, order)
    m = _lcm(lf, lg)
    out: Poly = {}
    _axpy(out, 1 / f[lf], _sub(m, lf), f)
    _axpy(out, -1 / g[lg], _sub(m, lg), g)
    return out


def _monic(f: Poly, order: MonomialOrder) -> Poly:
    c = f[leading(f, order)]
    return {e: a / c for e, a in f.items()}


def groebner(gens: Sequence[Poly], order: MonomialOrder) -> List[Poly]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are processed by increasing lcm of leading monomials; the product
    criterion and the chain criterion drop unnecessary pairs.  The result is
    monic and sorted by decreasing leading monomial.
    """
    G: List[Poly] = []
    L: List[Exp] = []
    for f in gens:
        f = normal_form(f, G, order, L) if G else dict(f)
        if f:
            G.append(_monic(f, order))
            L.append(leading(G[-1], order))
    pairs = set()
    heap: list = []

    def push(i, j):
        pairs.add((i, j))
        heapq.heappush(heap, (order.key(_lcm(L[i], L[j])), i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    while heap:
        _, i, j = heapq.heappop(heap)
        pairs.discard((i, j))
        m = _lcm(L[i], L[j])
        if all(a == 0 or b == 0 for a, b in zip(L[i], L[j])):
            continue
        if any(k not in (i, j) and _divides(L[k], m)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order, L)
        if h:
            G.append(_monic(h, order))
            L.append(leading(G[-1], order))
            n = len(G) - 1
            for k in range(n):
                push(k, n)
    return reduce_basis(G, order)


def reduce_basis(G: Sequence[Poly], order: MonomialOrder) -> List[Poly]:
    """Minimalize and interreduce a Groebner basis."""
    leads = [leading(g, order) for g in G]
    keep = []
    for k, lk in enumerate(leads):
        if any(_divides(lm, lk) and (lm != lk or m < k) for m, lm in enumerate(leads) if m != k):
            continue
        keep.append(k)
    Gm = [G[k] for k in keep]
    out = []
    for k, g in enumerate(Gm):
        others = Gm[:k] + Gm[k + 1:]
        lg = leading(g, order)
        rest = {e: a for e, a in g.items() if e != lg}
        r = normal_form(rest, others, order) if others else rest
        r[lg] = g[lg]
        out.append(_monic(r, order))
    out.sort(key=lambda f: order.key(leading(f, order)), reverse=True)
    return out


def poly_to_text(f: Poly, prefix: str = "d") -> str:
    """Human-readable form, terms in decreasing exponent order."""
    parts = []
    for e, c in sorted(f.items(), reverse=True):
        mon = "*".join(var_name(k, prefix) + (f"^{e[k]}" if e[k] > 1 else "")
                       for k in range(NVARS) if e[k])
        parts.append(f"{c}" + (f"*{mon}" if mon else ""))
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def is_groebner(G: Sequence[Poly], order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    L = [leading(g, order) for g in G]
    for i, j in itertools.combinations(range(len(G)), 2):
        if normal_form(s_polynomial(G[i], G[j], order), G, order, L):
            return False
    return True


# ---------------------------------------------------------------------------
# toric ideal
# ---------------------------------------------------------------------------

def lattice_binomials(a_matrix) -> List[Poly]:
    """Binomials ``d^{k+} - d^{k-}`` for a basis ``k`` of ``ker_Z A``."""
    out = []
    n = len(a_matrix[0])
    for k in ec.kernel_basis([list(r) for r in a_matrix]):
        out.append(binomial([max(x, 0) for x in k], [max(-x, 0) for x in k]))
    return [f for f in out if f] if n else []


def saturate_by_variable(gens: Sequence[Poly], v: int, n: int) -> List[Poly]:
    """Generators of ``(gens) : x_v^infinity`` for a homogeneous ideal.

    In revlex with ``x_v`` smallest, ``x_v`` divides a homogeneous element
    of the reduced basis iff it divides its leading term, so dividing out
    ``x_v`` from each basis element generates the saturation.
    """
    G = groebner(gens, revlex(last=v, n=n))
    out = []
    for g in G:
        k = min(e[v] for e in g)
        out.append({tuple(x - (k if i == v else 0) for i, x in enumerate(e)): c
                    for e, c in g.items()})
    return out


def toric_generators(a_matrix=None) -> List[Poly]:
    """A generating set of ``I_A`` (kernel lattice saturated by all variables)."""
    a_matrix = gkz_matrix().a_matrix if a_matrix is None else a_matrix
    n = len(a_matrix[0])
    gens = lattice_binomials(a_matrix)
    for v in range(n):
        if not gens:
            break
        gens = saturate_by_variable(gens, v, n)
    return gens


def content_hash(a_matrix, order: MonomialOrder) -> str:
    h = hashlib.sha256()
    h.update(repr(tuple(tuple(r) for r in a_matrix)).encode())
    h.update(order.cache_tag().encode())
    return h.hexdigest()[:16]


def poly_to_line(f: Poly, order: MonomialOrder) -> str:
    terms = sorted(f.items(), key=lambda t: order.key(t[0]), reverse=True)
    return " ".join(f"{c.numerator}/{c.denominator}:{','.join(map(str, e))}" for e, c in terms)


def poly_from_line(line: str) -> Poly:
    terms = []
    for tok in line.split():
        c, e = tok.split(":")
        terms.append((Fraction(c), tuple(int(v) for v in e.split(","))))
    return poly(terms)


def save_basis(path: str, G: Sequence[Poly], order: MonomialOrder, digest: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(f"order={order.tag} hash={digest}\n")
        for g in G:
            fh.write(poly_to_line(g, order) + "\n")
    os.replace(tmp, path)


def load_basis(path: str, order: MonomialOrder, digest: str) -> Optional[List[Poly]]:
    """Read a cached basis; ``None`` if absent, stale or unreadable."""
    try:
        with open(path) as fh:
            header = fh.readline().split()
            if header != [f"order={order.tag}", f"hash={digest}"]:
                return None
            return [poly_from_line(l) for l in fh if l.strip()]
    except (OSError, ValueError):
        return None


def toric_groebner(order: Optional[MonomialOrder] = None, cache_dir: Optional[str] = None,
                   a_matrix=None) -> List[Poly]:
    """Reduced Groebner basis of ``I_A``, cached on disk when ``cache_dir`` is set.

    A cached basis is only accepted if it passes Buchberger's criterion and
    every element is a binomial in the kernel of ``A``.
    """
    a_matrix = gkz_matrix().a_matrix if a_matrix is None else a_matrix
    order = revlex(n=len(a_matrix[0])) if order is None else order
    digest = content_hash(a_matrix, order)
    path = None
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, f"toric_gb_{digest}.txt")
        G = load_basis(path, order, digest)
        if G is not None and G and all(binomial_in_kernel(g, a_matrix) for g in G) \
                and is_groebner(G, order):
            return G
    G = groebner(toric_generators(a_matrix), order)
    if path:
        save_basis(path, G, order, digest)
    return G


def binomial_in_kernel(f: Poly, a_matrix) -> bool:
    """True if ``f`` is ``c (d^u - d^v)`` with ``A u = A v``."""
    if len(f) != 2:
        return False
    (u, cu), (v, cv) = f.items()
    if cu != -cv:
        return False
    return all(sum(r[k] * (u[k] - v[k]) for k in range(len(u))) == 0 for r in a_matrix)


def initial_monomials(G: Sequence[Poly], order: MonomialOrder) -> List[Exp]:
    return [leading(g, order) for g in G]


def is_squarefree(exps: Iterable[Exp]) -> bool:
    return all(max(e) <= 1 for e in exps)


# ---------------------------------------------------------------------------
# multiplicity and volume
# ---------------------------------------------------------------------------

def stanley_reisner_facet_count(initial: Sequence[Exp], n: int, size: int) -> int:
    """Number of ``size``-subsets of the variables containing no initial monomial."""
    supports = [frozenset(k for k, a in enumerate(e) if a) for e in initial]
    count = 0
    for face in itertools.combinations(range(n), size):
        s = set(face)
        if not any(sup <= s for sup in supports):
            count += 1
    return count


def multiplicity(a_matrix=None, order: Optional[MonomialOrder] = None,
                 cache_dir: Optional[str] = None) -> int:
    """Degree of ``I_A`` from its squarefree initial ideal.

    The facets of the Stanley-Reisner complex of dimension ``rank A - 1``
    each contribute 1 to the degree.
    """
    a_matrix = gkz_matrix().a_matrix if a_matrix is None else a_matrix
    n = len(a_matrix[0])
    order = revlex(n=n) if order is None else order
    G = toric_groebner(order, cache_dir, a_matrix) if _has_kernel(a_matrix) else []
    init = initial_monomials(G, order)
    if not is_squarefree(init):
        raise GkzError("initial ideal is not squarefree; facet counting does not apply")
    r = ec.rank_int([list(row) for row in a_matrix])
    return stanley_reisner_facet_count(init, n, r)


def _has_kernel(a_matrix) -> bool:
    return bool(ec.kernel_basis([list(r) for r in a_matrix]))


def lattice_coordinates(a_matrix) -> List[List[int]]:
    """Columns of ``A`` in a basis of the lattice ``ZA`` (r x n integers)."""
    res = ec.snf([list(r) for r in a_matrix])
    r = res.rank
    ua = ec.mat_mul([list(x) for x in res.u], [list(x) for x in a_matrix])
    out = []
    for i in range(r):
        row = []
        for v in ua[i]:
            q, rem = divmod(v, res.d[i])
            if rem:
                raise GkzError("Smith form inconsistency")
            row.append(q)
        out.append(row)
    return out


def placing_triangulation(points: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Placing triangulation of homogeneous integer points (rows are points).

    The points must lie on an affine hyperplane not through the origin and
    span ``R^r``.  Points are placed in the given order; each new point is
    joined to every boundary facet that it lies strictly beyond.
    """
    pts = [list(p) for p in points]
    r = len(pts[0])
    simplex: List[int] = []
    for k in range(len(pts)):
        if ec.rank_int([pts[i] for i in simplex + [k]]) == len(simplex) + 1:
            simplex.append(k)
        if len(simplex) == r:
            break
    if len(simplex) < r:
        raise GkzError("points do not span")
    simplices = [tuple(simplex)]
    boundary: Dict[frozenset, int] = {}
    for v in simplex:
        boundary[frozenset(simplex) - {v}] = v

    def side(facet, q):
        return ec.det_exact([pts[i] for i in sorted(facet)] + [pts[q]])

    for k in range(len(pts)):
        if k in simplex:
            continue
        visible = [F for F, opp in boundary.items() if side(F, k) * side(F, opp) < 0]
        for F in visible:
            del boundary[F]
        for F in visible:
            simplices.append(tuple(sorted(F | {k})))
            for v in F:
                G = (F - {v}) | {k}
                if G in boundary:
                    del boundary[G]
                else:
                    boundary[G] = v
    return simplices


def normalized_volume(a_matrix=None) -> int:
    """Normalized volume of ``conv(A)`` relative to the lattice ``ZA``."""
    a_matrix = gkz_matrix().a_matrix if a_matrix is None else a_matrix
    coords = lattice_coordinates(a_matrix)
    pts = [list(c) for c in zip(*coords)]
    tri = placing_triangulation(pts)
    return sum(abs(ec.det_exact([pts[i] for i in s])) for s in tri)


# ---------------------------------------------------------------------------
# differential operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiffOp:
    """``sum c x^a d^b`` (x to the left), stored as ``{(a, b): c}``."""

    terms: Tuple[Tuple[Tuple[Exp, Exp], Fraction], ...]
    name: str = ""

    @staticmethod
    def from_dict(d: Dict[Tuple[Exp, Exp], Fraction], name: str = "") -> "DiffOp":
        items = sorted(((k, Fraction(v)) for k, v in d.items() if v), key=lambda t: t[0])
        return DiffOp(tuple(items), name)

    def as_dict(self) -> Dict[Tuple[Exp, Exp], Fraction]:
        return dict(self.terms)

    def order(self) -> int:
        return max((sum(b) for (a, b), _ in self.terms), default=0)

    def constant(self) -> Fraction:
        return self.as_dict().get(((0,) * NVARS, (0,) * NVARS), Fraction(0))

    def coefficient_vector(self) -> Dict[Tuple[Exp, Exp], Fraction]:
        return self.as_dict()

    def apply_to_monomial(self, u: Exp) -> Dict[Exp, Fraction]:
        """Apply to ``x^u``; returns the resulting polynomial in ``x``."""
        out: Dict[Exp, Fraction] = {}
        for (a, b), c in self.terms:
            coef = Fraction(c)
            for k in range(NVARS):
                for t in range(b[k]):
                    coef *= (u[k] - t)
            if coef == 0:
                continue
            e = tuple(u[k] - b[k] + a[k] for k in range(NVARS))
            out[e] = out.get(e, 0) + coef
        return {e: c for e, c in out.items() if c}

    def __str__(self):
        parts = []
        for (a, b), c in self.terms:
            mon = "*".join([var_name(k, "x") for k in range(NVARS) for _ in range(a[k])]
                           + [var_name(k, "d") for k in range(NVARS) for _ in range(b[k])])
            parts.append(f"{c}" + (f"*{mon}" if mon else ""))
        return " + ".join(parts) if parts else "0"


_ZERO = (0,) * NVARS


def _xd(k: int, l: int) -> Tuple[Exp, Exp]:
    return monomial_exp(k), monomial_exp(l)


def euler_operators() -> List[DiffOp]:
    """The six rows of ``A theta - beta``."""
    data = gkz_matrix()
    out = []
    for r, row in enumerate(data.a_matrix):
        d = {_xd(k, k): Fraction(1) for k in range(NVARS) if row[k]}
        d[(_ZERO, _ZERO)] = -data.beta[r]
        out.append(DiffOp.from_dict(d, f"euler{r + 1}"))
    return out


def scaling_operators() -> List[DiffOp]:
    """``sum_{jk} x^p_jk d^p_jk + 1/2`` for p = 1..4."""
    out = []
    for p in range(1, 5):
        d = {_xd(var_index(p, i, j), var_index(p, i, j)): Fraction(1)
             for i in (1, 2) for j in (1, 2)}
        d[(_ZERO, _ZERO)] = Fraction(1, 2)
        out.append(DiffOp.from_dict(d, f"scale{p}"))
    return out


def e_op(l: int, m: int) -> DiffOp:
    """``E(l, m) = sum_{p,j} x^p_lj d^p_mj + delta_lm`` (left action)."""
    d = {}
    for p in range(1, 5):
        for j in (1, 2):
            key = _xd(var_index(p, l, j), var_index(p, m, j))
            d[key] = d.get(key, 0) + 1
    if l == m:
        d[(_ZERO, _ZERO)] = Fraction(1)
    return DiffOp.from_dict(d, f"E({l},{m})")


def e_prime_op(l: int, m: int) -> DiffOp:
    """``E'(l, m) = sum_{p,j} x^p_jl d^p_jm + delta_lm`` (right action)."""
    d = {}
    for p in range(1, 5):
        for j in (1, 2):
            key = _xd(var_index(p, j, l), var_index(p, j, m))
            d[key] = d.get(key, 0) + 1
    if l == m:
        d[(_ZERO, _ZERO)] = Fraction(1)
    return DiffOp.from_dict(d, f"E'({l},{m})")


def e1_operators() -> List[DiffOp]:
    """The four off-diagonal operators ``E(1,2), E(2,1), E'(1,2), E'(2,1)``."""
    return [e_op(1, 2), e_op(2, 1), e_prime_op(1, 2), e_prime_op(2, 1)]


def diagonal_operators() -> List[DiffOp]:
    return [e_op(1, 1), e_op(2, 2), e_prime_op(1, 1), e_prime_op(2, 2)]


def _op_matrix(ops: Sequence[DiffOp]):
    keys = sorted({k for op in ops for k in op.as_dict()})
    return [[op.as_dict().get(k, Fraction(0)) for k in keys] for op in ops]


def euler_span_check() -> Dict:
    """Scaling plus diagonal operators span exactly the Euler rows."""
    euler = euler_operators()
    mine = scaling_operators() + diagonal_operators()
    r_e = ec.rank_rational(_op_matrix(euler))
    r_m = ec.rank_rational(_op_matrix(mine))
    r_all = ec.rank_rational(_op_matrix(euler + mine))
    return {"rank_euler": r_e, "rank_scaling_diagonal": r_m, "rank_union": r_all,
            "ok": r_e == r_m == r_all == 6,
            "euler5_is_E(1,1)": euler[4].as_dict() == e_op(1, 1).as_dict(),
            "euler6_is_E'(1,1)": euler[5].as_dict() == e_prime_op(1, 1).as_dict()}


def weyl_weight() -> Tuple[int, ...]:
    """``W = (1 w, 4 w, 9 w, 16 w)`` with ``w = [[1, 2], [0, 4]]`` in variable order."""
    w = {(1, 1): 1, (1, 2): 2, (2, 1): 0, (2, 2): 4}
    return tuple(p * p * w[(i, j)] for p, i, j in VARIABLES)


def term_weight(a: Exp, b: Exp, W: Sequence[int]) -> int:
    return sum(-wk * ak + wk * bk for wk, ak, bk in zip(W, a, b))


def initial_form(op: DiffOp, W: Optional[Sequence[int]] = None) -> DiffOp:
    """Sum of the terms of maximal ``(-W, W)``-weight."""
    W = weyl_weight() if W is None else tuple(W)
    if not op.terms:
        return op
    top = max(term_weight(a, b, W) for (a, b), _ in op.terms)
    return DiffOp(tuple(t for t in op.terms if term_weight(t[0][0], t[0][1], W) == top),
                  f"in({op.name})")


# ---------------------------------------------------------------------------
# second-order operators as symbols
# ---------------------------------------------------------------------------

def e2_symbols() -> List[Tuple[str, Poly]]:
    """Symbols ``d^q_ij d^p_kl - d^q_kl d^p_ij`` and ``d^q_11 d^p_22 - d^q_21 d^p_12``.

    Trivially zero symbols are dropped.
    """
    out = []
    seen = set()
    idx = [(1, 1), (1, 2), (2, 1), (2, 2)]
    for p, q in itertools.product(range(1, 5), repeat=2):
        for (i, j), (k, l) in itertools.product(idx, repeat=2):
            f = binomial(monomial_exp(var_index(q, i, j), var_index(p, k, l)),
                         monomial_exp(var_index(q, k, l), var_index(p, i, j)))
            key = frozenset(f.items())
            if f and key not in seen:
                seen.add(key)
                out.append((f"d{q}_{i}{j}*d{p}_{k}{l}-d{q}_{k}{l}*d{p}_{i}{j}", f))
        f = binomial(monomial_exp(var_index(q, 1, 1), var_index(p, 2, 2)),
                     monomial_exp(var_index(q, 2, 1), var_index(p, 1, 2)))
        key = frozenset(f.items())
        if f and key not in seen:
            seen.add(key)
            out.append((f"d{q}_11*d{p}_22-d{q}_21*d{p}_12", f))
    return out


def e2_operators() -> List[DiffOp]:
    """The second-order operators whose symbols are :func:`e2_symbols`."""
    return [DiffOp.from_dict({(_ZERO, e): c for e, c in f.items()}, name)
            for name, f in e2_symbols()]


def check_e2_membership(G: Optional[Sequence[Poly]] = None,
                        order: Optional[MonomialOrder] = None,
                        cache_dir: Optional[str] = None) -> Dict:
    order = revlex() if order is None else order
    G = toric_groebner(order, cache_dir) if G is None else G
    L = [leading(g, order) for g in G]
    failures = [name for name, f in e2_symbols() if normal_form(f, G, order, L)]
    return {"count": len(e2_symbols()), "failures": failures, "ok": not failures}


def gkz_report(cache_dir: Optional[str] = None) -> Dict:
    data = gkz_matrix()
    order = revlex()
    G = toric_groebner(order, cache_dir)
    init = initial_monomials(G, order)
    return {
        "rank_A": data.rank,
        "beta": [str(b) for b in data.beta],
        "groebner_size": len(G),
        "groebner_degrees": sorted({sum(leading(g, order)) for g in G}),
        "all_binomials_in_kernel": all(binomial_in_kernel(g, data.a_matrix) for g in G),
        "initial_squarefree": is_squarefree(init),
        "multiplicity": stanley_reisner_facet_count(init, NVARS, data.rank),
        "normalized_volume": normalized_volume(data.a_matrix),
        "e2_membership": check_e2_membership(G, order),
        "euler_span": euler_span_check(),
    }
