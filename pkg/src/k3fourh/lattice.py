"""Integral quadratic lattices attached to the double 4H surface.

Contents
--------
* :class:`QuadLattice` and the standard building blocks (U, U(k), D4, E8, <n>).
* The Picard lattice ``P = D4^3 + <-2> + <2>`` and the transcendental lattice
  ``T = U(2) + U(2) + <-2>^4``.
* Discriminant groups and forms, computed from the Smith form of the Gram
  matrix.
* Isometries of ``T``: reflections in (-2)-vectors, the level-2 congruence
  subgroup ``G(2)`` and the kernel of ``O(T) -> O(q_T)``.
* The 18 divisor classes ``E_ij^+-, G_i, F_s, F_t`` on the reference surface
  and the explicit sublattice basis realising ``P`` inside them.
* Gluing ``P`` and ``T`` into an even unimodular lattice of signature (3, 19).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import exact_core as ec


class LatticeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadLattice:
    """A lattice given by a symmetric integer Gram matrix."""

    gram: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise LatticeError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise LatticeError("Gram matrix must be symmetric")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"b{i + 1}" for i in range(n)))
        elif len(self.labels) != n:
            raise LatticeError("one label per basis vector")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def matrix(self) -> List[List[int]]:
        return [list(r) for r in self.gram]

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def inner(self, u, v):
        return ec.bilinear(self.gram, u, v)

    def __add__(self, other: "QuadLattice") -> "QuadLattice":
        return direct_sum(self, other)


def direct_sum(*lattices: QuadLattice) -> QuadLattice:
    gram = ec.block_diag(*[l.matrix() for l in lattices])
    labels = tuple(lab for l in lattices for lab in l.labels)
    if len(set(labels)) != len(labels):
        labels = ()
    return QuadLattice(gram, labels)


def U(k: int = 1) -> QuadLattice:
    """The hyperbolic plane scaled by ``k``: Gram [[0, k], [k, 0]]."""
    return QuadLattice(((0, k), (k, 0)))


def rank_one(n: int) -> QuadLattice:
    """The rank one lattice <n>."""
    return QuadLattice(((n,),))


D4_GRAM = ((-2, 1, 1, 1), (1, -2, 0, 0), (1, 0, -2, 0), (1, 0, 0, -2))


def D4() -> QuadLattice:
    """Negative definite D4 with the branch vertex first."""
    return QuadLattice(D4_GRAM)


def E8() -> QuadLattice:
    """Negative definite E8 (Bourbaki numbering: 2 attached to 4)."""
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = 1
    return QuadLattice(g)


def k3_lattice() -> QuadLattice:
    return direct_sum(E8(), E8(), U(), U(), U())


def lattice_T() -> QuadLattice:
    """U(2) + U(2) + <-2>^4 with basis eps_1..eps_8."""
    return QuadLattice(
        ec.block_diag(U(2).matrix(), U(2).matrix(), *[[[-2]]] * 4),
        tuple(f"eps{i}" for i in range(1, 9)),
    )


def lattice_P() -> QuadLattice:
    """D4^3 + <-2> + <2>."""
    return QuadLattice(
        ec.block_diag(D4().matrix(), D4().matrix(), D4().matrix(), [[-2]], [[2]]),
        tuple([f"L{k}_{i}" for k in (1, 2, 3) for i in range(1, 5)] + ["Delta1", "Delta2"]),
    )


def discriminant(l: QuadLattice) -> int:
    return ec.det_exact(l.gram)


def signature(l: QuadLattice) -> Tuple[int, int]:
    pos, neg, zero = ec.symmetric_signature(l.gram)
    if zero:
        raise LatticeError("degenerate Gram matrix has no signature")
    return pos, neg


# ---------------------------------------------------------------------------
# discriminant groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    """``A_L = L^* / L`` with its discriminant quadratic form.

    Generator ``i`` has order ``invariant_factors[i]`` and is represented by
    the rational vector ``generator_lifts[i]`` (coordinates in the lattice
    basis).  ``q_values[i]`` is ``(g, g) mod 2``.
    """

    lattice: QuadLattice
    invariant_factors: Tuple[int, ...]
    generator_lifts: Tuple[Tuple[Fraction, ...], ...]
    q_values: Tuple[Fraction, ...]
    _vinv: Tuple[Tuple[int, ...], ...] = field(repr=False, default=())
    _d_full: Tuple[int, ...] = field(repr=False, default=())
    _offset: int = field(repr=False, default=0)

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def lift(self, coords: Sequence[int]) -> List[Fraction]:
        """Rational lift of the group element with the given coordinates."""
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for c, g in zip(coords, self.generator_lifts):
            if c:
                for i in range(n):
                    out[i] += c * g[i]
        return out

    def coords(self, y: Sequence[Fraction]) -> Tuple[int, ...]:
        """Group coordinates of a dual-lattice vector ``y`` (lattice basis)."""
        z = ec.mat_vec(self._vinv, [Fraction(x) for x in y])
        out = []
        for k, d in enumerate(self.invariant_factors):
            zi = z[self._offset + k] * d
            if zi.denominator != 1:
                raise LatticeError("vector is not in the dual lattice")
            out.append(int(zi) % d)
        # the unimodular part must be integral
        for k in range(self._offset):
            if z[k].denominator != 1:
                raise LatticeError("vector is not in the dual lattice")
        return tuple(out)

    def q(self, coords: Sequence[int]) -> Fraction:
        y = self.lift(coords)
        return _mod(ec.bilinear(self.lattice.gram, y, y), 2)

    def b(self, c1: Sequence[int], c2: Sequence[int]) -> Fraction:
        return _mod(ec.bilinear(self.lattice.gram, self.lift(c1), self.lift(c2)), 1)

    def elements(self):
        return itertools.product(*[range(d) for d in self.invariant_factors])

    def add(self, c1, c2):
        return tuple((a + b) % d for a, b, d in zip(c1, c2, self.invariant_factors))


def _mod(x: Fraction, m: int) -> Fraction:
    x = Fraction(x)
    return x - m * (x.numerator // (m * x.denominator))


def discriminant_group(l: QuadLattice) -> DiscriminantGroup:
    g = l.matrix()
    res = ec.snf(g)
    if any(d == 0 for d in res.d):
        raise LatticeError("degenerate lattice")
    n = l.rank
    offset = sum(1 for d in res.d if d == 1)
    facs = tuple(d for d in res.d if d != 1)
    lifts = []
    for k, d in enumerate(res.d):
        if d == 1:
            continue
        lifts.append(tuple(Fraction(res.v[i][k], d) for i in range(n)))
    qv = tuple(_mod(ec.bilinear(g, y, y), 2) for y in lifts)
    vinv = tuple(tuple(r) for r in ec.inverse_int_unimodular(res.v))
    return DiscriminantGroup(l, facs, tuple(lifts), qv, vinv, res.d, offset)


# ---------------------------------------------------------------------------
# isometries of T
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsometryZ:
    """An integer matrix ``g`` with ``g^T A g = A`` (acts on column vectors)."""

    g: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(tuple(int(x) for x in r) for r in self.g))

    def matrix(self):
        return [list(r) for r in self.g]

    def __matmul__(self, other: "IsometryZ") -> "IsometryZ":
        return IsometryZ(ec.mat_mul(self.matrix(), other.matrix()))


def is_isometry(g, l: QuadLattice) -> bool:
    m = g.matrix() if isinstance(g, IsometryZ) else g
    return ec.mat_mul(ec.mat_mul(ec.transpose(m), l.matrix()), m) == l.matrix()


def _check_isometry(g: IsometryZ, l: QuadLattice):
    if not is_isometry(g, l):
        raise LatticeError("matrix is not an isometry of the lattice")


def is_in_G2(g: IsometryZ, l: Optional[QuadLattice] = None) -> bool:
    """True iff ``g`` is an isometry congruent to the identity mod 2."""
    l = lattice_T() if l is None else l
    _check_isometry(g, l)
    n = l.rank
    return all((g.g[i][j] - (i == j)) % 2 == 0 for i in range(n) for j in range(n))


def reflection(alpha: Sequence[int], l: Optional[QuadLattice] = None) -> IsometryZ:
    """``x -> x + (x, alpha) alpha`` for a (-2)-vector ``alpha``."""
    l = lattice_T() if l is None else l
    alpha = [int(a) for a in alpha]
    if l.inner(alpha, alpha) != -2:
        raise LatticeError("reflection needs (alpha, alpha) = -2")
    ga = ec.mat_vec(l.matrix(), alpha)  # x -> (x, alpha) is the row ga
    n = l.rank
    return IsometryZ([[int(i == j) + alpha[i] * ga[j] for j in range(n)] for i in range(n)])


def acts_trivially_on_qT(g: IsometryZ, l: Optional[QuadLattice] = None,
                         disc: Optional[DiscriminantGroup] = None) -> bool:
    """True iff ``g`` fixes every discriminant generator modulo the lattice."""
    l = lattice_T() if l is None else l
    _check_isometry(g, l)
    disc = discriminant_group(l) if disc is None else disc
    m = g.matrix()
    for y in disc.generator_lifts:
        gy = ec.mat_vec(m, list(y))
        if any((a - b).denominator != 1 for a, b in zip(gy, y)):
            return False
    return True


def minus2_vectors(l: Optional[QuadLattice] = None, box: int = 1) -> List[Tuple[int, ...]]:
    """All vectors with entries in [-box, box] of norm -2 (up to sign)."""
    l = lattice_T() if l is None else l
    out = []
    for v in itertools.product(range(-box, box + 1), repeat=l.rank):
        if any(v) and l.inner(v, v) == -2:
            first = next(x for x in v if x)
            if first > 0:
                out.append(v)
    return out


def _perm_matrix(perm, signs=None):
    n = len(perm)
    signs = signs or [1] * n
    m = [[0] * n for _ in range(n)]
    for i, p in enumerate(perm):
        m[p][i] = signs[i]
    return m


def t_generators() -> List[Tuple[str, IsometryZ]]:
    """Named generators used for random words in ``O(T)``."""
    gens = []
    base = list(range(8))
    for a, b in ((0, 1), (2, 3)):
        p = base[:]
        p[a], p[b] = p[b], p[a]
        gens.append((f"swap{a + 1}{b + 1}", IsometryZ(_perm_matrix(p))))
    p = [2, 3, 0, 1, 4, 5, 6, 7]
    gens.append(("swapU2blocks", IsometryZ(_perm_matrix(p))))
    for a, b in itertools.combinations(range(4, 8), 2):
        p = base[:]
        p[a], p[b] = p[b], p[a]
        gens.append((f"perm{a + 1}{b + 1}", IsometryZ(_perm_matrix(p))))
    for a in range(4, 8):
        s = [1] * 8
        s[a] = -1
        gens.append((f"neg{a + 1}", IsometryZ(_perm_matrix(base, s))))
    for v in minus2_vectors():
        gens.append(("refl" + ",".join(map(str, v)), reflection(v)))
    return gens


def random_isometry_words(n: int, seed: int, max_len: int = 6):
    """``n`` random products of generators, deterministic in ``seed``.

    A generator family (U(2) swaps, block swap, permutations and sign changes
    of the (-2) summands, reflections) is drawn uniformly first, then a
    member of it, so that both members and non-members of G(2) occur often.
    """
    rng = random.Random(seed)
    families: Dict[str, list] = {}
    for name, h in t_generators():
        fam = name.rstrip("0123456789,-") if not name.startswith("refl") else "refl"
        families.setdefault(fam, []).append((name, h))
    fam_names = sorted(families)
    out = []
    for _ in range(n):
        k = rng.randint(1, max_len)
        names = []
        g = IsometryZ(ec.identity(8))
        for _ in range(k):
            fam = families[fam_names[rng.randrange(len(fam_names))]]
            name, h = fam[rng.randrange(len(fam))]
            names.append(name)
            g = g @ h
        out.append(("*".join(names), g))
    return out


# ---------------------------------------------------------------------------
# divisor classes on the reference surface
# ---------------------------------------------------------------------------

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def divisor_labels() -> List[str]:
    labs = []
    for i, j in PAIRS:
        labs += [f"E{i}{j}+", f"E{i}{j}-"]
    labs += [f"G{i}" for i in range(1, 5)] + ["Fs", "Ft"]
    return labs


def divisor_gram18() -> QuadLattice:
    """Intersection matrix of the 18 divisor generators (zero by default)."""
    labs = divisor_labels()
    idx = {l: k for k, l in enumerate(labs)}
    g = [[0] * 18 for _ in range(18)]

    def put(a, b, v):
        g[idx[a]][idx[b]] = g[idx[b]][idx[a]] = v

    for i in range(1, 5):
        put(f"G{i}", f"G{i}", -2)
        put(f"G{i}", "Fs", 1)
        put(f"G{i}", "Ft", 1)
    put("Fs", "Ft", 2)
    for i, j in PAIRS:
        for s in "+-":
            put(f"E{i}{j}{s}", f"E{i}{j}{s}", -2)
            put(f"G{i}", f"E{i}{j}{s}", 1)
            put(f"G{j}", f"E{i}{j}{s}", 1)
    return QuadLattice(g, tuple(labs))


def divisor_vector(**coeffs) -> List[int]:
    """Coefficient vector from keyword labels, e.g. ``divisor_vector(Fs=1, E12p=-1)``.

    Labels use ``p``/``m`` for the superscripts + and -.
    """
    labs = divisor_labels()
    v = [0] * 18
    for k, c in coeffs.items():
        lab = k.replace("p", "+").replace("m", "-")
        v[labs.index(lab)] += c
    return v


def picard_basis_vectors() -> List[Tuple[str, List[int]]]:
    """The 14 vectors spanning D4^3 + <-2> + <2> inside the divisor span."""
    out = []
    for k, (i, other) in enumerate(((1, "E23p"), (2, "E13p"), (3, "E12p")), start=1):
        out.append((f"L{k}_1", divisor_vector(**{f"G{i}": 1})))
        out.append((f"L{k}_2", divisor_vector(**{f"E{i}4p": 1})))
        out.append((f"L{k}_3", divisor_vector(**{f"E{i}4m": 1})))
        out.append((f"L{k}_4", divisor_vector(Ft=1, **{other: -1})))
    out.append(("Delta1", divisor_vector(Fs=1, Ft=1, E12p=-1, E13p=-1, E23p=-1)))
    out.append(("Delta2", divisor_vector(G1=1, G2=1, G3=1, G4=-1, Fs=1, Ft=3,
                                         E12p=-1, E13p=-1, E23p=-1)))
    return out


def relation_p2_vectors() -> List[List[int]]:
    """``Fs + Ft - 2 G_i - sum_{j != i} (E_ij^+ + E_ij^-)`` for i = 1..4."""
    out = []
    for i in range(1, 5):
        kw = {"Fs": 1, "Ft": 1, f"G{i}": -2}
        v = divisor_vector(**kw)
        for a, b in PAIRS:
            if i in (a, b):
                v = [x + y for x, y in zip(v, divisor_vector(**{f"E{a}{b}p": -1, f"E{a}{b}m": -1}))]
        out.append(v)
    return out


def picard_basis_check() -> Dict:
    """Check that the explicit 14 vectors realise D4^3 + <-2> + <2>."""
    g18 = divisor_gram18()
    vecs = picard_basis_vectors()
    gram14 = [[g18.inner(u, v) for _, v in vecs] for _, u in vecs]
    expected = lattice_P().matrix()
    mismatches = [(vecs[i][0], vecs[j][0], gram14[i][j], expected[i][j])
                  for i in range(14) for j in range(14) if gram14[i][j] != expected[i][j]]
    rank18 = ec.rank_int(g18.matrix())
    rel = relation_p2_vectors()
    rel_in_kernel = all(ec.mat_vec(g18.matrix(), v) == [0] * 18 for v in rel)
    rel_rank = ec.rank_int(rel)
    return {
        "gram14": gram14,
        "matches_D4^3+<-2>+<2>": not mismatches,
        "mismatches": mismatches,
        "rank_gram18": rank18,
        "relation_p2_in_kernel": rel_in_kernel,
        "relation_p2_rank": rel_rank,
        "Delta1^2": gram14[12][12],
        "Delta2^2": gram14[13][13],
        "Delta1.Delta2": gram14[12][13],
        "ok": (not mismatches) and rank18 == 14 and rel_in_kernel and rel_rank == 4,
    }


# ---------------------------------------------------------------------------
# gluing P and T
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GlueData:
    """Generators of a subgroup ``H`` of ``A_P + A_T``.

    Each generator is a pair of coordinate tuples (P part, T part) in the
    generator bases of :func:`discriminant_group`.
    """

    generators: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]


def _span(gens, add, zero):
    seen = {zero}
    frontier = [zero]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = add(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def verify_glue(h: GlueData, P: Optional[QuadLattice] = None,
                T: Optional[QuadLattice] = None) -> Dict:
    P = lattice_P() if P is None else P
    T = lattice_T() if T is None else T
    dp, dt = discriminant_group(P), discriminant_group(T)
    zero = (tuple(0 for _ in dp.invariant_factors), tuple(0 for _ in dt.invariant_factors))

    def add(x, y):
        return (dp.add(x[0], y[0]), dt.add(x[1], y[1]))

    elems = _span([tuple(map(tuple, g)) for g in h.generators], add, zero)
    failures = []
    if len(elems) ** 2 != dp.order * dt.order:
        failures.append(f"order: |H|={len(elems)}, need |H|^2=|A_P||A_T|={dp.order * dt.order}")
    bad = [e for e in elems if (dp.q(e[0]) + dt.q(e[1])) % 2 != 0]
    if bad:
        failures.append(f"isotropy: {len(bad)} elements with nonzero q")
    if len({e[0] for e in elems}) != len(elems) or len({e[0] for e in elems}) != dp.order:
        failures.append("projection H -> A_P is not bijective")
    if len({e[1] for e in elems}) != len(elems) or len({e[1] for e in elems}) != dt.order:
        failures.append("projection H -> A_T is not bijective")
    return {"order": len(elems), "ok": not failures, "failures": failures}


def find_glue(P: Optional[QuadLattice] = None, T: Optional[QuadLattice] = None) -> GlueData:
    """Depth-first search for an anti-isometry ``phi: A_P -> A_T``.

    The glue group is the graph of ``phi``.  Only elementary abelian
    2-groups are supported (which is the case for P and T).
    """
    P = lattice_P() if P is None else P
    T = lattice_T() if T is None else T
    dp, dt = discriminant_group(P), discriminant_group(T)
    if dp.invariant_factors != dt.invariant_factors or any(d != 2 for d in dp.invariant_factors):
        raise LatticeError("search only implemented for isomorphic (Z/2)^n groups")
    n = len(dp.invariant_factors)
    tel = [e for e in dt.elements() if any(e)]
    qT = {e: dt.q(e) for e in tel}
    unit = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    qP = [dp.q(u) for u in unit]
    bP = [[dp.b(unit[i], unit[j]) for j in range(n)] for i in range(n)]
    bT_cache: Dict = {}

    def bT(x, y):
        key = (x, y)
        if key not in bT_cache:
            bT_cache[key] = dt.b(x, y)
        return bT_cache[key]

    def neg(x, m):
        return _mod(-x, m)

    images: List[Tuple[int, ...]] = []
    span_sets: List[set] = [{tuple([0] * n)}]

    def rec(k):
        if k == n:
            return True
        for e in tel:
            if qT[e] != neg(qP[k], 2):
                continue
            if e in span_sets[-1]:
                continue
            if any(bT(images[i], e) != neg(bP[i][k], 1) for i in range(k)):
                continue
            images.append(e)
            span_sets.append(span_sets[-1] | {dt.add(s, e) for s in span_sets[-1]})
            if rec(k + 1):
                return True
            images.pop()
            span_sets.pop()
        return False

    if not rec(0):
        raise LatticeError("no glue group found")
    return GlueData(tuple((unit[k], images[k]) for k in range(n)))


def glue_to_text(h: GlueData, P=None, T=None) -> str:
    """One generator per line: 16 rationals (P part then T part)."""
    P = lattice_P() if P is None else P
    T = lattice_T() if T is None else T
    dp, dt = discriminant_group(P), discriminant_group(T)
    lines = []
    for cp, ct in h.generators:
        vals = [Fraction(c, d) for c, d in zip(cp, dp.invariant_factors)]
        vals += [Fraction(c, d) for c, d in zip(ct, dt.invariant_factors)]
        lines.append(" ".join(str(v) for v in vals))
    return "\n".join(lines) + "\n"


def glue_from_text(text: str, P=None, T=None) -> GlueData:
    P = lattice_P() if P is None else P
    T = lattice_T() if T is None else T
    dp, dt = discriminant_group(P), discriminant_group(T)
    n1, n2 = len(dp.invariant_factors), len(dt.invariant_factors)
    gens = []
    for line in text.splitlines():
        if not line.strip():
            continue
        vals = [Fraction(t) for t in line.split()]
        if len(vals) != n1 + n2:
            raise LatticeError(f"expected {n1 + n2} coordinates per line")
        cp = tuple(int(v * d) % d for v, d in zip(vals[:n1], dp.invariant_factors))
        ct = tuple(int(v * d) % d for v, d in zip(vals[n1:], dt.invariant_factors))
        gens.append((cp, ct))
    return GlueData(tuple(gens))


def load_or_find_glue(cache_file: Optional[Path] = None) -> GlueData:
    """Read the glue group from ``cache_file`` if present, else search and store."""
    if cache_file is not None and Path(cache_file).exists():
        h = glue_from_text(Path(cache_file).read_text())
        if verify_glue(h)["ok"]:
            return h
    h = find_glue()
    if cache_file is not None:
        Path(cache_file).parent.mkdir(parents=True, exist_ok=True)
        Path(cache_file).write_text(glue_to_text(h))
    return h


def overlattice(h: GlueData, P=None, T=None) -> QuadLattice:
    """The lattice generated by ``P + T`` and lifts of the glue generators."""
    P = lattice_P() if P is None else P
    T = lattice_T() if T is None else T
    dp, dt = discriminant_group(P), discriminant_group(T)
    n = P.rank + T.rank
    gram = ec.block_diag(P.matrix(), T.matrix())
    gens = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for cp, ct in h.generators:
        gens.append(dp.lift(cp) + dt.lift(ct))
    den = ec.lcm_denominators(x for g in gens for x in g)
    basis = ec.hermite_row_basis([[int(x * den) for x in g] for g in gens])
    bt = ec.transpose(basis)
    g = ec.mat_mul(ec.mat_mul(basis, gram), bt)
    out = []
    for row in g:
        r = []
        for x in row:
            q = Fraction(x, den * den)
            if q.denominator != 1:
                raise LatticeError("overlattice is not integral")
            r.append(int(q))
        out.append(r)
    return QuadLattice(out)


def overlattice_report(h: GlueData) -> Dict:
    L = overlattice(h)
    sig = signature(L)
    det = discriminant(L)
    return {"rank": L.rank, "even": L.is_even(), "det": det, "signature": sig,
            "ok": L.rank == 22 and L.is_even() and abs(det) == 1 and sig == (3, 19)}
