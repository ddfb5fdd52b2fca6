"""The even Clifford algebra of the transcendental lattice and its Riemann form.

``T = U(2) + U(2) + <-2>^4`` with basis ``eps_1..eps_8`` is diagonalised over
``Q`` by

    e_1 = (eps_1 + eps_2)/2,  e_2 = (eps_3 + eps_4)/2,
    e_3 = (eps_1 - eps_2)/2,  e_4 = (eps_3 - eps_4)/2,  e_{4+i} = eps_{4+i},

with squares ``q = (1, 1, -1, -1, -2, -2, -2, -2)``.  The even Clifford
algebra ``C+`` is 128-dimensional, spanned by the monomials ``e_S`` for the
even subsets ``S`` of ``{1..8}`` (stored as bitmasks, bit ``i-1`` for
``e_i``).

A period point ``eta`` (in ``eps`` coordinates, ``eta^T A eta = 0``,
``conj(eta)^T A eta > 0``) gives ``s = Re eta``, ``t = Im eta`` with
``Q(s) = Q(t) > 0`` and ``(s, t) = 0``; ``m(eta) = s t / Q(s)`` squares to
``-1`` and left multiplication by it is a complex structure ``J`` on
``C+ (x) R``.  The alternating form ``E(x, y) = tr(alpha x^iota y)`` with
``alpha = 4 e_2 e_1`` and the regular trace is then checked to be a
Riemann form.

Exact computations use :class:`fractions.Fraction` (or ``int``); the floating
checks use numpy matrices of left/right multiplication.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import exact_core as ec
from .lattice import lattice_T


class KugaSatakeError(ValueError):
    """Invalid period point or a failed structural check."""


N = 8
Q_DIAG = (1, 1, -1, -1, -2, -2, -2, -2)
MASKS: Tuple[int, ...] = tuple(m for m in range(1 << N) if bin(m).count("1") % 2 == 0)
DIM = len(MASKS)
INDEX: Dict[int, int] = {m: k for k, m in enumerate(MASKS)}
OMEGA_MASK = (1 << N) - 1


def _mask(*indices: int) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def _bits(m: int) -> List[int]:
    return [i + 1 for i in range(N) if m >> i & 1]


def monomial_product(s: int, t: int) -> Tuple[int, int]:
    """``e_S e_T = c e_{S xor T}``; returns ``(S xor T, c)``.

    Moving each ``e_j`` of ``T`` left past the larger indices of ``S`` costs
    a sign per transposition; repeated generators contribute ``q_i``.
    """
    swaps = 0
    for j in _bits(t):
        swaps += bin(s >> j).count("1")
    c = -1 if swaps % 2 else 1
    for i in _bits(s & t):
        c *= Q_DIAG[i - 1]
    return s ^ t, c


_MUL_IDX = np.empty((DIM, DIM), dtype=np.int64)
_MUL_COEF = np.empty((DIM, DIM), dtype=np.int64)
for _a, _s in enumerate(MASKS):
    for _b, _t in enumerate(MASKS):
        _m, _c = monomial_product(_s, _t)
        _MUL_IDX[_a, _b] = INDEX[_m]
        _MUL_COEF[_a, _b] = _c


# ---------------------------------------------------------------------------
# change of basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrthoChange:
    """``m8``: column ``k`` holds ``e_{k+1}`` in ``eps`` coordinates."""

    m8: Tuple[Tuple[Fraction, ...], ...]

    def matrix(self) -> List[List[Fraction]]:
        return [list(r) for r in self.m8]

    def inverse(self) -> List[List[Fraction]]:
        """Column ``k`` holds ``eps_{k+1}`` in ``e`` coordinates."""
        return ec.inverse_rational(self.matrix())


def ortho_basis() -> OrthoChange:
    """The rational orthogonalising basis, validated exactly."""
    h = Fraction(1, 2)
    cols = [
        [h, h, 0, 0, 0, 0, 0, 0],
        [0, 0, h, h, 0, 0, 0, 0],
        [h, -h, 0, 0, 0, 0, 0, 0],
        [0, 0, h, -h, 0, 0, 0, 0],
    ]
    for i in range(4):
        v = [0] * 8
        v[4 + i] = 1
        cols.append(v)
    m8 = [[Fraction(cols[j][i]) for j in range(8)] for i in range(8)]
    gram = ec.mat_mul(ec.mat_mul(ec.transpose(m8), lattice_T().matrix()), m8)
    want = [[Q_DIAG[i] if i == j else 0 for j in range(8)] for i in range(8)]
    if gram != want:
        raise KugaSatakeError("orthogonalising basis fails the Gram identity")
    if ec.det_rational(m8) == 0:
        raise KugaSatakeError("orthogonalising basis is singular")
    return OrthoChange(tuple(tuple(r) for r in m8))


def eps_to_e(v: Sequence) -> List:
    """Coordinates in the ``e`` basis of ``sum v_i eps_i``."""
    inv = _EPS_IN_E
    return [sum(inv[i][j] * v[j] for j in range(8)) for i in range(8)]


def e_to_eps(c: Sequence) -> List:
    m8 = _M8
    return [sum(m8[i][j] * c[j] for j in range(8)) for i in range(8)]


_M8 = ortho_basis().matrix()
_EPS_IN_E = ortho_basis().inverse()


# ---------------------------------------------------------------------------
# algebra elements
# ---------------------------------------------------------------------------

class CliffordElem:
    """An element of ``C+``: 128 coefficients over the even monomials.

    Coefficients may be ``int``, ``Fraction``, ``float`` or ``complex``; all
    operations are generic in the scalar type.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = list(coeffs)
        if len(coeffs) != DIM:
            raise KugaSatakeError(f"expected {DIM} coefficients")
        self.coeffs = coeffs

    @classmethod
    def zero(cls) -> "CliffordElem":
        return cls([0] * DIM)

    @classmethod
    def monomial(cls, *indices: int, coeff=1) -> "CliffordElem":
        m = _mask(*indices)
        if m not in INDEX or len(set(indices)) != len(indices):
            raise KugaSatakeError("monomials need an even number of distinct indices")
        sign = 1
        # e_{i1} ... e_{ik} in the given order -> sorted monomial
        idx = list(indices)
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if idx[a] > idx[b]:
                    sign = -sign
        c = [0] * DIM
        c[INDEX[m]] = sign * coeff
        return cls(c)

    @classmethod
    def scalar(cls, c) -> "CliffordElem":
        out = [0] * DIM
        out[0] = c
        return cls(out)

    def __getitem__(self, mask: int):
        return self.coeffs[INDEX[mask]]

    def __add__(self, other: "CliffordElem") -> "CliffordElem":
        return CliffordElem([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CliffordElem") -> "CliffordElem":
        return CliffordElem([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CliffordElem":
        return CliffordElem([-a for a in self.coeffs])

    def scale(self, c) -> "CliffordElem":
        return CliffordElem([c * a for a in self.coeffs])

    def __mul__(self, other: "CliffordElem") -> "CliffordElem":
        return cliff_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, CliffordElem) and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def support(self) -> Dict[int, object]:
        return {MASKS[k]: c for k, c in enumerate(self.coeffs) if c != 0}

    def array(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs])

    def __repr__(self) -> str:
        terms = []
        for m, c in self.support().items():
            name = "e" + "".join(str(i) for i in _bits(m)) if m else "1"
            terms.append(f"{c}*{name}")
        return "CliffordElem(" + (" + ".join(terms) if terms else "0") + ")"


def cliff_mul(a: CliffordElem, b: CliffordElem) -> CliffordElem:
    """Product in ``C+`` (bilinear extension of the monomial rule)."""
    out = [0] * DIM
    bs = [(k, c) for k, c in enumerate(b.coeffs) if c != 0]
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        row_i, row_c = _MUL_IDX[i], _MUL_COEF[i]
        for k, cb in bs:
            out[row_i[k]] += int(row_c[k]) * ca * cb
    return CliffordElem(out)


def _degree(k: int) -> int:
    return bin(MASKS[k]).count("1")


def reversal(a: CliffordElem) -> CliffordElem:
    """The anti-automorphism ``iota``: ``e_S -> (-1)^{k(k-1)/2} e_S``."""
    return CliffordElem([c if (_degree(k) * (_degree(k) - 1) // 2) % 2 == 0 else -c
                         for k, c in enumerate(a.coeffs)])


def star(a: CliffordElem) -> CliffordElem:
    """The automorphism induced by ``e_1 -> -e_1`` (other ``e_i`` fixed)."""
    return CliffordElem([-c if MASKS[k] & 1 else c for k, c in enumerate(a.coeffs)])


def vec_product(u: Sequence, v: Sequence) -> CliffordElem:
    """Clifford product ``u v`` of two vectors given in ``e`` coordinates."""
    out = [0] * DIM
    out[0] = sum(u[i] * v[i] * Q_DIAG[i] for i in range(N))
    for i in range(N):
        for j in range(i + 1, N):
            c = u[i] * v[j] - u[j] * v[i]
            if c != 0:
                out[INDEX[_mask(i + 1, j + 1)]] += c
    return CliffordElem(out)


def quad_form(u: Sequence, v: Optional[Sequence] = None):
    """``(u, v)`` in ``e`` coordinates (``Q(u) = (u, u)`` if ``v`` is omitted)."""
    v = u if v is None else v
    return sum(Q_DIAG[i] * u[i] * v[i] for i in range(N))


# ---------------------------------------------------------------------------
# matrices of multiplication operators (floating or exact)
# ---------------------------------------------------------------------------

def left_matrix(a: CliffordElem, exact: bool = False) -> np.ndarray:
    """Matrix of ``x -> a x`` on the monomial basis."""
    L = np.zeros((DIM, DIM), dtype=object if exact else complex)
    cols = np.arange(DIM)
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        for k in cols:
            L[_MUL_IDX[i, k], k] += int(_MUL_COEF[i, k]) * c
    return L if exact else _realify(L)


def right_matrix(a: CliffordElem, exact: bool = False) -> np.ndarray:
    """Matrix of ``x -> x a`` on the monomial basis."""
    R = np.zeros((DIM, DIM), dtype=object if exact else complex)
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        for k in range(DIM):
            R[_MUL_IDX[k, i], k] += int(_MUL_COEF[k, i]) * c
    return R if exact else _realify(R)


def _realify(m: np.ndarray) -> np.ndarray:
    return m.real.copy() if np.all(m.imag == 0) else m


# ---------------------------------------------------------------------------
# period points and complex structures
# ---------------------------------------------------------------------------

ETA0 = (1, 1, 1j, 1j, 0, 0, 0, 0)


def gram_A() -> np.ndarray:
    return np.array(lattice_T().matrix(), dtype=float)


def component_sign(eta: Sequence[complex]) -> int:
    """Sign of ``Im(eta_3/eta_1)``: distinguishes the two components."""
    eta = np.asarray(eta, dtype=complex)
    if eta[0] == 0:
        raise KugaSatakeError("eta_1 = 0: component sign undefined")
    return int(np.sign((eta[2] / eta[0]).imag))


def check_eta(eta: Sequence[complex], tol: float = 1e-8) -> np.ndarray:
    """Validate a period point; returns it as a complex array."""
    eta = np.asarray(eta, dtype=complex)
    if eta.shape != (8,):
        raise KugaSatakeError("eta needs 8 coordinates")
    A = gram_A()
    norm = float(np.vdot(eta, eta).real)
    if norm == 0:
        raise KugaSatakeError("eta = 0")
    if abs(eta @ A @ eta) > tol * norm:
        raise KugaSatakeError("eta violates the quadric relation")
    if (np.conj(eta) @ A @ eta).real <= 0:
        raise KugaSatakeError("eta violates the positivity relation")
    return eta


def split_eta(eta: Sequence[complex], tol: float = 1e-8) -> Tuple[np.ndarray, np.ndarray]:
    """Real and imaginary parts of ``eta`` in ``e`` coordinates."""
    eta = check_eta(eta, tol)
    inv = np.array(_EPS_IN_E, dtype=float)
    s, t = inv @ eta.real, inv @ eta.imag
    qs, qt, st = quad_form(s), quad_form(t), quad_form(s, t)
    scale = max(abs(qs), abs(qt))
    if abs(qs - qt) > tol * scale or abs(st) > tol * scale:
        raise KugaSatakeError("invalid period point: Q(s) != Q(t) or (s, t) != 0")
    if qs <= 0:
        raise KugaSatakeError("wrong component: Q(s) <= 0")
    return s, t


def m_of_eta(eta: Sequence[complex], tol: float = 1e-8) -> CliffordElem:
    """``m(eta) = s t / Q(s)``, a square root of ``-1`` in ``C+ (x) R``."""
    s, t = split_eta(eta, tol)
    m = vec_product(list(s), list(t))
    return CliffordElem([c / quad_form(s) for c in m.coeffs])


def complex_structure(eta: Sequence[complex], tol: float = 1e-8) -> np.ndarray:
    """128 x 128 real matrix ``J`` of left multiplication by ``m(eta)``."""
    return left_matrix(m_of_eta(eta, tol)).real


def sigma_on_eta(eta: Sequence[complex]) -> np.ndarray:
    """``(eta_1, eta_2, ...) -> (-eta_2, -eta_1, eta_3, ...)``."""
    eta = np.array(eta, dtype=complex)
    out = eta.copy()
    out[0], out[1] = -eta[1], -eta[0]
    return out


def random_eta(rng: np.random.Generator, component: int = 1, spread: float = 0.5) -> np.ndarray:
    """A random point of ``D^+`` (``component = 1``) or ``D^-`` (``-1``).

    ``s`` and ``t`` are drawn near ``2 e_1`` and ``2 e_2`` and made
    orthogonal of equal length by Gram--Schmidt for ``Q``.
    """
    for _ in range(1000):
        s = spread * rng.standard_normal(8)
        t = spread * rng.standard_normal(8)
        s[0] += 2
        t[1] += 2
        if quad_form(s) <= 0:
            continue
        t = t - quad_form(s, t) / quad_form(s) * s
        qt = quad_form(t)
        if qt <= 0:
            continue
        t = t * np.sqrt(quad_form(s) / qt)
        m8 = np.array(_M8, dtype=float)
        eta = m8 @ (s + 1j * t)
        if component_sign(eta) != component:
            eta = np.conj(eta)
        if component_sign(eta) == component:
            return eta
    raise KugaSatakeError("could not sample a period point")


# ---------------------------------------------------------------------------
# Riemann form
# ---------------------------------------------------------------------------

ALPHA = CliffordElem.monomial(2, 1, coeff=4)


def reg_trace(z: CliffordElem):
    """Trace of left multiplication on ``C+``: ``128 * (coefficient of 1)``."""
    return DIM * z.coeffs[0]


def riemann_form(x: CliffordElem, y: CliffordElem, family: int = 1):
    """``E(x, y) = tr(alpha x^iota y)``; ``family = -1`` gives ``E^- = -E``."""
    return family * reg_trace(cliff_mul(cliff_mul(ALPHA, reversal(x)), y))


def riemann_matrix(exact: bool = False) -> np.ndarray:
    """Matrix ``M`` with ``E(x, y) = x^T M y`` on monomial coordinates.

    ``E(e_S, e_T) = 128 * [alpha e_S^iota e_T]_1`` is non-zero only when
    ``e_S e_T`` is proportional to ``e_1 e_2``.
    """
    M = np.zeros((DIM, DIM), dtype=object if exact else float)
    for a in range(DIM):
        ea = CliffordElem.monomial(*_bits(MASKS[a])) if MASKS[a] else CliffordElem.scalar(1)
        left = cliff_mul(ALPHA, reversal(ea))
        for i, c in enumerate(left.coeffs):
            if c == 0:
                continue
            # [e_i e_T]_1 != 0 iff T = i
            M[a, i] += DIM * c * int(_MUL_COEF[i, i])
    return M


# ---------------------------------------------------------------------------
# lattice and centre
# ---------------------------------------------------------------------------

def eps_vector(i: int) -> List[Fraction]:
    """``eps_i`` in ``e`` coordinates."""
    return [_EPS_IN_E[r][i - 1] for r in range(8)]


def eps_monomial(subset: Sequence[int]) -> CliffordElem:
    """``eps_{i1} eps_{i2} ... `` (sorted) expanded in ``e`` monomials."""
    idx = sorted(subset)
    if len(idx) % 2:
        raise KugaSatakeError("odd subsets are not in C+")
    out = CliffordElem.scalar(Fraction(1))
    for a in range(0, len(idx), 2):
        out = cliff_mul(out, vec_product(eps_vector(idx[a]), eps_vector(idx[a + 1])))
    return out


def lattice_basis_Cplus() -> List[CliffordElem]:
    """The 128 products ``eps_S``, ``|S|`` even, in monomial order."""
    return [eps_monomial(_bits(m)) for m in MASKS]


def lattice_matrix() -> List[List[Fraction]]:
    """Columns: coordinates of ``eps_S`` in the ``e_S`` basis."""
    basis = lattice_basis_Cplus()
    return [[Fraction(basis[j].coeffs[i]) for j in range(DIM)] for i in range(DIM)]


def generators() -> List[CliffordElem]:
    """``e_i e_j`` for ``i < j``: these generate ``C+`` as an algebra."""
    return [CliffordElem.monomial(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]


def center_basis() -> List[List[Fraction]]:
    """Exact nullspace of the commutator system ``[z, e_i e_j] = 0``."""
    rows = set()
    for g in generators():
        C = left_matrix(g, exact=True) - right_matrix(g, exact=True)
        for r in C:
            nz = [k for k in range(DIM) if r[k] != 0]
            if not nz:
                continue
            lead = Fraction(r[nz[0]])
            rows.add(tuple(Fraction(v) / lead for v in r))
    return ec.nullspace_rational([list(r) for r in sorted(rows)])


def omega() -> CliffordElem:
    return CliffordElem.monomial(*range(1, N + 1))


def is_perfect_square(q: Fraction) -> Optional[Fraction]:
    """Exact rational square root of ``q`` or ``None``."""
    from math import isqrt
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    return Fraction(a, b) if a * a == q.numerator and b * b == q.denominator else None


def ideal_dimension(z: CliffordElem) -> int:
    """Rank of ``x -> x z`` (the two-sided ideal ``C+ z`` for central ``z``)."""
    R = right_matrix(z, exact=True)
    return ec.rank_rational([[Fraction(v) for v in row] for row in R])


def center_and_split() -> Dict:
    """Centre of ``C+``, ``omega^2`` and the two central idempotents."""
    basis = center_basis()
    w = omega()
    w2 = cliff_mul(w, w)
    w2_scalar = w2.coeffs[0] if all(c == 0 for c in w2.coeffs[1:]) else None
    report: Dict = {
        "center_dimension": len(basis),
        "center_masks": sorted({MASKS[k] for v in basis for k in range(DIM) if v[k] != 0}),
        "omega_squared": None if w2_scalar is None else str(w2_scalar),
    }
    root = None if w2_scalar is None else is_perfect_square(w2_scalar)
    ok = len(basis) == 2 and report["center_masks"] == [0, OMEGA_MASK] and root is not None and root > 0
    if root:
        one = CliffordElem.scalar(Fraction(1))
        half = Fraction(1, 2)
        idem = [(one + w.scale(Fraction(sgn) / root)).scale(half) for sgn in (1, -1)]
        report["idempotents"] = [f"(1 {'+' if sgn > 0 else '-'} omega/{root})/2" for sgn in (1, -1)]
        checks = {
            "idempotent": all(cliff_mul(f, f) == f for f in idem),
            "orthogonal": cliff_mul(idem[0], idem[1]) == CliffordElem.zero(),
            "sum_is_one": idem[0] + idem[1] == one,
            "central": all(cliff_mul(f, g) == cliff_mul(g, f) for f in idem for g in generators()),
        }
        report["idempotent_checks"] = checks
        report["factor_dimensions"] = [ideal_dimension(f) for f in idem]
        ok = ok and all(checks.values()) and report["factor_dimensions"] == [64, 64]
    report["ok"] = bool(ok)
    return report


# ---------------------------------------------------------------------------
# property suites
# ---------------------------------------------------------------------------

def random_element(rng: random.Random, terms: int = 12, height: int = 5) -> CliffordElem:
    """Sparse random element with small rational coefficients."""
    c = [0] * DIM
    for _ in range(terms):
        c[rng.randrange(DIM)] += Fraction(rng.randint(-height, height), rng.randint(1, height))
    return CliffordElem(c)


def algebra_report(seed: int = 0, trials: int = 100) -> Dict:
    """Exact associativity, reversal and ``star`` suites."""
    rng = random.Random(seed)
    assoc = anti = star_ok = 0
    for _ in range(trials):
        a, b, c = (random_element(rng) for _ in range(3))
        ab = cliff_mul(a, b)
        assoc += cliff_mul(ab, c) == cliff_mul(a, cliff_mul(b, c))
        anti += reversal(ab) == cliff_mul(reversal(b), reversal(a))
        star_ok += star(ab) == cliff_mul(star(a), star(b))
    e12 = CliffordElem.monomial(1, 2)
    return {
        "dimension": DIM,
        "trials": trials,
        "associative": assoc,
        "anti_automorphism": anti,
        "star_automorphism": star_ok,
        "e12_squared": str(cliff_mul(e12, e12).coeffs[0]),
        "ok": assoc == anti == star_ok == trials and DIM == 128,
    }


def lattice_integrality() -> Dict:
    """``E`` on the lattice basis ``eps_S``: exact values and normalisation."""
    import math
    L = lattice_matrix()
    if any(v.denominator != 1 for row in L for v in row):
        raise KugaSatakeError("lattice basis is not integral in the e-monomials")
    B = np.array([[int(v) for v in row] for row in L], dtype=np.int64)
    M = np.array(riemann_matrix(exact=True), dtype=np.int64)
    # int64 is exact here: bound every partial sum before multiplying
    bound = DIM * DIM * int(np.abs(B).max()) ** 2 * int(np.abs(M).max())
    if bound >= 2 ** 62:
        raise KugaSatakeError("integer overflow bound exceeded")
    G = B.T @ M @ B
    g = int(np.gcd.reduce(np.abs(G).ravel()))
    return {
        "integral": True,
        "skew": bool(np.array_equal(G, -G.T)),
        "gcd": g,
        "normalization": str(Fraction(1, g)) if g else None,
        "lattice_det": str(ec.det_exact(B.tolist())),
    }


def riemann_report(etas: Optional[Sequence[Sequence[complex]]] = None, seed: int = 0,
                   samples: int = 200, tol: float = 1e-8) -> Dict:
    """Complex structure and Riemann-form checks at period points.

    By default ``eta_0`` and five random points of ``D^+`` are tested, plus
    the image of ``eta_0`` under ``sigma`` (a point of ``D^-``).  For each point the report holds
    ``|J^2 + I|``, the ``J``-invariance defect of ``E``, and the sign of
    ``E(x, J x)`` over ``samples`` random ``x``.
    """
    rng = np.random.default_rng(seed)
    if etas is None:
        etas = [ETA0] + [random_eta(rng, 1) for _ in range(5)] + [sigma_on_eta(ETA0)]
    M = riemann_matrix()
    x = rng.standard_normal((samples, DIM))
    points = []
    for eta in etas:
        eta = np.asarray(eta, dtype=complex)
        J = complex_structure(eta, tol)
        comp = component_sign(eta)
        sq = float(np.max(np.abs(J @ J + np.eye(DIM))))
        inv = float(np.max(np.abs(J.T @ M @ J - M)) / np.max(np.abs(M)))
        vals = np.einsum("ni,ij,jn->n", x, M @ J, x.T)
        signs = sorted({int(np.sign(v)) for v in vals})
        points.append({
            "eta": [[float(z.real), float(z.imag)] for z in eta],
            "component": comp,
            "j_squared_defect": sq,
            "j_invariance_defect": inv,
            "definite_sign": signs[0] if len(signs) == 1 else 0,
            "min_abs_value": float(np.min(np.abs(vals))),
        })
    skew = float(np.max(np.abs(M + M.T)))
    plus = [p["definite_sign"] for p in points if p["component"] == 1]
    minus = [p["definite_sign"] for p in points if p["component"] == -1]
    consistent = (all(s != 0 for s in plus + minus)
                  and len(set(plus)) <= 1 and len(set(minus)) <= 1
                  and not (plus and minus and plus[0] == minus[0]))
    eta0 = np.array(ETA0, dtype=complex)
    m0 = m_of_eta(eta0)
    e12 = CliffordElem.monomial(1, 2)
    m0_err = float(np.max(np.abs(m0.array() - e12.array())))
    m0_sq = cliff_mul(m0, m0)
    sig = sigma_on_eta(eta0)
    return {
        "points": points,
        "skew_defect": skew,
        "m_eta0_error": m0_err,
        "m_eta0_squared_plus_one": float(np.max(np.abs((m0_sq + CliffordElem.scalar(1)).array()))),
        "sigma_eta0": [[float(z.real), float(z.imag)] for z in sig],
        "sigma_component": component_sign(sig),
        "sign_plus": plus[0] if plus else None,
        "sign_minus": minus[0] if minus else None,
        "ok": bool(skew == 0 and consistent and m0_err < 1e-12
                   and all(p["j_squared_defect"] < 1e-10 and p["j_invariance_defect"] < tol
                           for p in points)
                   and component_sign(eta0) == 1 and component_sign(sig) == -1),
    }
