"""Periods of the holomorphic 2-form over the transcendental cycles.

For a configuration ``x`` the surface is ``w^2 = prod_p (a_p(s) t + b_p(s))``
with ``a_p = x11 s + x21`` and ``b_p = x12 s + x22``; the branch points in the
fibre over ``s`` are ``t_p(s) = -b_p / a_p``.  The holomorphic form is
``ds dt / w``, so the period over a 2-chain fibred over a path in the
``s``-line is the path integral of the elliptic fibre periods ``omega_c(s)``.

Fibre periods
-------------
The loop around the straight segment ``[t_p, t_q]`` is computed with the
substitution ``t = m + h cos(theta)`` which removes both endpoint square
roots; the remaining integrand is smooth and periodic, so the trapezoid rule
converges geometrically.  The other two square-root factors use branch cuts
pointing away from the segment.  The result is correct up to an overall
sign, which is never needed: values are always *snapped* onto the lattice
spanned by two such loops sharing an endpoint (a basis of H_1 of the fibre).

Continuation
------------
A period is continued along a path by linear prediction from the two
previous nodes, followed by snapping the prediction to the nearest point of
the local period lattice.  A step is accepted only if the correction is
small compared with the shortest lattice vector; otherwise it is subdivided.

Cycles
------
For the fibre ``s_j`` with vanishing cycle ``delta_j`` let
``theta_j = int_{r(j)} omega_{delta_j} ds`` along the straight ray ``r(j)``
from ``s0 = 4i`` to ``s_j``; ``omega_delta`` is analytic at ``s_j`` so no
endpoint treatment is needed.  With the thimble coefficients ``k`` of a
closed chain (see :mod:`k3fourh.fibration`), its period is
``-sum_n k_n theta_{j(n)}``.  The same numbers are obtained independently by
integrating the continued period directly along the lasso polylines.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import fibration as fb

S0 = 4j
REFERENCE = np.array(fb.REFERENCE_X, dtype=complex)

# fixed numerical parameters
SEG_RTOL = 1e-14
SEG_NMIN = 32
SEG_NMAX = 1 << 15
GL_NODES = 16
PANEL_LEN = 0.5
GRID_MAX = 0.05
GRID_REL = 0.1
SNAP_FRACTION = 0.3


class PeriodError(RuntimeError):
    pass


def config_array(x) -> np.ndarray:
    a = np.array(x, dtype=complex)
    if a.shape != (4, 2, 2):
        raise PeriodError("a configuration is a 4 x 2 x 2 array")
    return a


def branch_coefficients(x, s) -> Tuple[np.ndarray, np.ndarray]:
    """``a_p(s), b_p(s)`` with shape ``(4,) + shape(s)``."""
    x = config_array(x)
    s = np.asarray(s, dtype=complex)
    ex = (slice(None),) + (None,) * s.ndim
    a = x[:, 0, 0][ex] * s + x[:, 1, 0][ex]
    b = x[:, 0, 1][ex] * s + x[:, 1, 1][ex]
    return a, b


def branch_points_t(s: complex, x=REFERENCE) -> np.ndarray:
    """The four branch points ``t_p(s) = -(x12 s + x22) / (x11 s + x21)``."""
    a, b = branch_coefficients(x, complex(s))
    scale = np.abs(a) + np.abs(b)
    if np.any(np.abs(a) <= 1e-14 * scale):
        raise PeriodError(f"a branch point is at t = infinity for s = {s}")
    return -b / a


# ---------------------------------------------------------------------------
# fibre periods
# ---------------------------------------------------------------------------

def _sqrt_away(z, d):
    """Square root of ``z`` with its cut along the ray in direction ``d``."""
    rot = -np.conj(d) / np.abs(d)
    return np.sqrt(z * rot) / np.sqrt(rot)


def segment_loop_period(a, b, p: int, q: int, n: int) -> np.ndarray:
    """Loop period around ``[t_p, t_q]`` by the n-point trapezoid rule.

    ``a, b`` have shape ``(4, K)`` (coefficients of the four linear factors)
    and ``p, q`` are 0-based.  Returns shape ``(K,)``; the sign is arbitrary.
    """
    t = -b / a
    tp, tq = t[p], t[q]
    m = 0.5 * (tp + tq)
    h = 0.5 * (tq - tp)
    th = 2 * np.pi * np.arange(n) / n
    tt = m[:, None] + h[:, None] * np.cos(th)[None, :]
    g = np.ones_like(tt)
    for r in range(4):
        if r in (p, q):
            continue
        g = g / (np.sqrt(a[r])[:, None] * _sqrt_away(tt - t[r][:, None], (t[r] - m)[:, None]))
    return 2j * np.pi * g.mean(axis=1) / np.sqrt(a[p] * a[q])


def converged_segment_period(a, b, p: int, q: int, rtol: float = SEG_RTOL) -> np.ndarray:
    """:func:`segment_loop_period` with the node count doubled to convergence."""
    K = a.shape[1]
    out = np.empty(K, dtype=complex)
    todo = np.arange(K)
    n = SEG_NMIN
    prev = segment_loop_period(a, b, p, q, n)
    while todo.size:
        n *= 2
        if n > SEG_NMAX:
            raise PeriodError(f"fibre period did not converge (pair {p + 1},{q + 1})")
        cur = segment_loop_period(a[:, todo], b[:, todo], p, q, n)
        ok = np.abs(cur - prev) <= rtol * np.abs(cur) + 1e-300
        out[todo[ok]] = cur[ok]
        todo = todo[~ok]
        prev = cur[~ok]
    return out


_COMBOS = [(p, q, r) for p in range(4) for q, r in itertools.combinations([k for k in range(4) if k != p], 2)]


def _clearance(t, p, q):
    """Distance of the other branch points to ``[t_p, t_q]`` over its length."""
    A, B = t[p], t[q]
    L = np.abs(B - A)
    best = np.full(A.shape, np.inf)
    for r in range(4):
        if r in (p, q):
            continue
        u = np.real((t[r] - A) * np.conj(B - A)) / L ** 2
        u = np.clip(u, 0.0, 1.0)
        best = np.minimum(best, np.abs(t[r] - (A + u * (B - A))) / L)
    return best


def local_basis(x, s) -> Tuple[np.ndarray, np.ndarray]:
    """Two fibre periods spanning the period lattice at each ``s``.

    Loops around ``[t_p, t_q]`` and ``[t_p, t_r]`` meet once, so they form a
    basis; the triple with the best-conditioned segments is used.
    """
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    a, b = branch_coefficients(x, s)
    t = -b / a
    cond = np.array([np.minimum(_clearance(t, p, q), _clearance(t, p, r)) for p, q, r in _COMBOS])
    choice = np.argmax(cond, axis=0)
    b1 = np.empty(s.shape, dtype=complex)
    b2 = np.empty(s.shape, dtype=complex)
    for c in np.unique(choice):
        idx = np.nonzero(choice == c)[0]
        p, q, r = _COMBOS[c]
        b1[idx] = converged_segment_period(a[:, idx], b[:, idx], p, q)
        b2[idx] = converged_segment_period(a[:, idx], b[:, idx], p, r)
    return b1, b2


def _reduce(b1: complex, b2: complex) -> Tuple[complex, complex]:
    """Lagrange-Gauss reduction of a rank-2 lattice in C."""
    if abs(b1) > abs(b2):
        b1, b2 = b2, b1
    while True:
        mu = round((b2 * b1.conjugate()).real / abs(b1) ** 2)
        b2 = b2 - mu * b1
        if abs(b2) >= abs(b1):
            return b1, b2
        b1, b2 = b2, b1


def snap(pred: complex, b1: complex, b2: complex) -> Tuple[complex, float]:
    """Nearest lattice point to ``pred`` and the length of the shortest vector."""
    r1, r2 = _reduce(b1, b2)
    M = np.array([[r1.real, r2.real], [r1.imag, r2.imag]])
    c = np.linalg.solve(M, [pred.real, pred.imag])
    c0 = np.round(c)
    best = None
    for d1, d2 in itertools.product((-1, 0, 1), repeat=2):
        v = (c0[0] + d1) * r1 + (c0[1] + d2) * r2
        if best is None or abs(v - pred) < abs(best - pred):
            best = v
    return complex(best), abs(r1)


# ---------------------------------------------------------------------------
# continuation along paths
# ---------------------------------------------------------------------------

def _pair_roots(x, pair: Tuple[int, int]) -> np.ndarray:
    """The two ``s`` where curves ``p, q`` meet (roots of the pair quadratic)."""
    p, q = pair
    xp, xq = x[p - 1], x[q - 1]
    A = xp[0, 1] * xq[0, 0] - xq[0, 1] * xp[0, 0]
    B = xp[0, 1] * xq[1, 0] + xp[1, 1] * xq[0, 0] - xq[0, 1] * xp[1, 0] - xq[1, 1] * xp[0, 0]
    C = xp[1, 1] * xq[1, 0] - xq[1, 1] * xp[1, 0]
    if abs(A) < 1e-14 * (abs(B) + abs(C)):
        raise PeriodError(f"curves {p},{q} meet at s = infinity")
    return np.roots([A, B, C])


_PAIRS = sorted({f.pair for f in fb.reference_fibers()})
_PAIR_FIBERS = {pq: [f.index - 1 for f in fb.reference_fibers() if f.pair == pq] for pq in _PAIRS}
REFERENCE_SING = np.array([complex(f.s) for f in fb.reference_fibers()])


def _match_roots(x, prev: np.ndarray) -> np.ndarray:
    out = np.empty(12, dtype=complex)
    for pq, (j1, j2) in _PAIR_FIBERS.items():
        r = _pair_roots(x, pq)
        if abs(r[0] - prev[j1]) + abs(r[1] - prev[j2]) <= abs(r[1] - prev[j1]) + abs(r[0] - prev[j2]):
            out[j1], out[j2] = r[0], r[1]
        else:
            out[j1], out[j2] = r[1], r[0]
    return out


def _ray_side(z, sj):
    """Signed side of ``z`` w.r.t. the ray ``s0 -> sj`` and its ray parameter."""
    d = sj - S0
    w = (z - S0) * np.conj(d)
    return w.imag, w.real / abs(d) ** 2


@dataclass(frozen=True)
class Tracking:
    """Singular values and ``alpha`` periods continued from the reference."""

    sing: np.ndarray
    alpha: Tuple[complex, complex]
    steps: int


def _raw_alpha(x) -> Tuple[complex, complex]:
    a, b = branch_coefficients(x, np.array([S0]))
    return (complex(converged_segment_period(a, b, 0, 1)[0]),
            complex(-converged_segment_period(a, b, 0, 2)[0]))


TRACK_MAX_STEP = 0.05
_TRACK_CACHE: Dict[bytes, Tracking] = {}


def track(x) -> Tracking:
    """Follow ``x(tau) = ref + tau (x - ref)`` from the reference to ``x``.

    Singular values are matched by continuity, the signs of the ``alpha``
    periods likewise.  An error is raised if some ``s_k`` sweeps across a
    ray ``r(j)`` or reaches ``s0``: the cycles built at the reference would
    then no longer be the continued ones.
    """
    x = config_array(x)
    key = x.tobytes()
    if key in _TRACK_CACHE:
        return _TRACK_CACHE[key]
    sing = REFERENCE_SING.copy()
    alpha = _REF_ALPHA()
    tau, dt, steps = 0.0, 0.25, 0
    if not np.array_equal(x, REFERENCE):
        while tau < 1.0:
            t1 = min(1.0, tau + dt)
            xt = REFERENCE + t1 * (x - REFERENCE)
            new = _match_roots(xt, sing)
            raw = _raw_alpha(xt)
            move = np.max(np.abs(new - sing))
            rel = max(min(abs(raw[k] - alpha[k]), abs(raw[k] + alpha[k])) / abs(alpha[k]) for k in (0, 1))
            if move > TRACK_MAX_STEP or rel > 0.1:
                dt /= 2
                if dt < 1e-9:
                    raise PeriodError("could not follow the deformation from the reference")
                continue
            _check_rays(sing, new)
            alpha = tuple(r if abs(r - a) <= abs(r + a) else -r for r, a in zip(raw, alpha))
            sing = new
            tau = t1
            steps += 1
            dt = min(2 * dt, 0.25)
    res = Tracking(sing, alpha, steps)
    if len(_TRACK_CACHE) > 4096:
        _TRACK_CACHE.clear()
    _TRACK_CACHE[key] = res
    return res


def _check_rays(old: np.ndarray, new: np.ndarray) -> None:
    for k in range(12):
        if abs(new[k] - S0) < 1e-6:
            raise PeriodError(f"s_{k + 1} reached the base point")
        for j in range(12):
            if j == k:
                continue
            s_old, u_old = _ray_side(old[k], old[j])
            s_new, u_new = _ray_side(new[k], new[j])
            if s_old * s_new <= 0 and (0 <= u_old <= 1 or 0 <= u_new <= 1):
                raise PeriodError(f"s_{k + 1} crosses the ray to s_{j + 1}; "
                                  f"x is outside the region where the cycles are continued")


def _singular_values(x) -> np.ndarray:
    return track(x).sing


def singular_values(x=REFERENCE) -> np.ndarray:
    """Singular ``s`` of ``x`` in the order of the reference fibres."""
    return track(x).sing


def _refine_grid(nodes: np.ndarray, sing: np.ndarray, skip: Optional[int] = None) -> np.ndarray:
    """Insert points so consecutive spacing respects distance to singular values."""
    others = sing if skip is None else np.delete(sing, skip)
    out = [nodes[0]]
    for z0, z1 in zip(nodes[:-1], nodes[1:]):
        mid = 0.5 * (z0 + z1)
        dist = np.min(np.abs(others - mid)) - 0.5 * abs(z1 - z0)
        hmax = min(GRID_MAX, GRID_REL * max(dist, 1e-3))
        k = max(1, int(math.ceil(abs(z1 - z0) / hmax)))
        for i in range(1, k + 1):
            out.append(z0 + (z1 - z0) * i / k)
    return np.array(out)


def continue_period(x, nodes: np.ndarray, w_start: complex, depth: int = 10) -> np.ndarray:
    """Continue a fibre period from ``nodes[0]`` through ``nodes`` (in order).

    Returns the values at all nodes.  Steps whose snap correction is not
    small relative to the lattice are subdivided.
    """
    nodes = np.asarray(nodes, dtype=complex)
    b1, b2 = local_basis(x, nodes)
    vals = np.empty(len(nodes), dtype=complex)
    vals[0] = w_start
    hist = [(nodes[0], w_start)]

    def step(s_new, bb1, bb2, depth_left):
        (sa, wa) = hist[-1]
        if len(hist) >= 2:
            sb, wb = hist[-2]
            pred = wa + (wa - wb) * (s_new - sa) / (sa - sb)
        else:
            pred = wa
        w, short = snap(pred, bb1, bb2)
        if abs(w - pred) <= SNAP_FRACTION * short:
            hist.append((s_new, w))
            return w
        if depth_left == 0:
            raise PeriodError(f"continuation failed near s = {s_new}")
        sub = sa + (s_new - sa) * np.arange(1, 5) / 4
        c1, c2 = local_basis(x, sub)
        for k in range(4):
            w = step(sub[k], c1[k], c2[k], depth_left - 1)
        return w

    for k in range(1, len(nodes)):
        vals[k] = step(nodes[k], b1[k], b2[k], depth)
        if len(hist) > 4:
            del hist[:-2]
    return vals


def _gl(n: int):
    return np.polynomial.legendre.leggauss(n)


def alpha_periods(x=REFERENCE) -> Tuple[complex, complex]:
    """Periods of ``alpha_1, alpha_2`` at ``s0``.

    ``alpha_1`` is the loop around ``[t_1, t_2]`` and ``alpha_2`` minus the loop
    around ``[t_1, t_3]`` (branch points indexed by curve), oriented so that
    ``Im(omega_2 / omega_1) > 0`` at the reference; for other ``x`` the signs
    follow by continuity (see :func:`track`).
    """
    return track(x).alpha


_REF_CACHE: Dict[str, object] = {}


def _REF_ALPHA():
    if "alpha" not in _REF_CACHE:
        w1, w2 = _raw_alpha(REFERENCE)
        if (w2 / w1).imag <= 0:
            raise PeriodError("reference orientation check failed")
        _REF_CACHE["alpha"] = (w1, w2)
    return _REF_CACHE["alpha"]


def inner_period(s: complex, c: Sequence[int], x=REFERENCE, path: Optional[Sequence[complex]] = None) -> complex:
    """Fibre period of the class ``c`` (fixed at ``s0``) continued to ``s``.

    The default path is the straight segment from ``s0``.
    """
    w1, w2 = alpha_periods(x)
    start = c[0] * w1 + c[1] * w2
    path = [S0, complex(s)] if path is None else [complex(z) for z in path]
    nodes = _refine_grid(np.array(path), _singular_values(x))
    return complex(continue_period(x, nodes, start)[-1])


# ---------------------------------------------------------------------------
# thimble integrals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RayMesh:
    """Panel breakpoints in the ray parameter ``u`` in [0, 1] for fibre ``j``."""

    j: int
    breaks: Tuple[float, ...]
    n: int = GL_NODES


def default_mesh(j: int) -> RayMesh:
    L = abs(fb.reference_fibers()[j - 1].s - S0)
    m = max(2, int(math.ceil(L / PANEL_LEN)))
    return RayMesh(j, tuple(np.linspace(0, 1, m + 1)))


def _mesh_nodes(mesh: RayMesh):
    xg, wg = _gl(mesh.n)
    us, ws = [], []
    for u0, u1 in zip(mesh.breaks[:-1], mesh.breaks[1:]):
        us.append(u0 + (u1 - u0) * (xg + 1) / 2)
        ws.append((u1 - u0) / 2 * wg)
    return np.concatenate(us), np.concatenate(ws)


def _ray_values(x, j: int, u: np.ndarray, sing: np.ndarray, alpha) -> np.ndarray:
    """Continued ``omega_{delta_j}`` at ray parameters ``u`` (sorted)."""
    sj = sing[j - 1]
    d = fb.vanishing_cycle(j)
    start = d[0] * alpha[0] + d[1] * alpha[1]
    targets = S0 + u * (sj - S0)
    base = np.concatenate([[S0], targets])
    grid = _refine_grid(base, sing, skip=j - 1)
    # positions of the targets inside the refined grid
    pos = np.searchsorted(np.abs(grid - S0), np.abs(targets - S0) - 1e-15)
    vals = continue_period(x, grid, start)
    return vals[pos]


def thimble_integrals(x=REFERENCE, meshes: Optional[Dict[int, RayMesh]] = None) -> np.ndarray:
    """``theta_j = int_{r(j)} omega_{delta_j} ds`` for j = 1..12."""
    x = config_array(x)
    sing = _singular_values(x)
    alpha = alpha_periods(x)
    meshes = reference_meshes() if meshes is None else meshes
    out = np.empty(12, dtype=complex)
    for j in range(1, 13):
        u, w = _mesh_nodes(meshes[j])
        vals = _ray_values(x, j, u, sing, alpha)
        out[j - 1] = (sing[j - 1] - S0) * np.dot(w, vals)
    return out


def adapt_mesh(j: int, x=REFERENCE, tol: float = 1e-13, max_rounds: int = 6) -> Tuple[RayMesh, float]:
    """Bisect panels until each agrees with its two halves to ``tol``.

    Returns the mesh and the final estimated absolute error.
    """
    x = config_array(x)
    sing = _singular_values(x)
    alpha = alpha_periods(x)
    mesh = default_mesh(j)
    for _ in range(max_rounds):
        br = np.array(mesh.breaks)
        halves = np.sort(np.concatenate([br, 0.5 * (br[:-1] + br[1:])]))
        fine = RayMesh(j, tuple(halves), mesh.n)
        uc, wc = _mesh_nodes(mesh)
        uf, wf = _mesh_nodes(fine)
        allu = np.concatenate([uc, uf])
        order = np.argsort(allu)
        vals = np.empty_like(allu, dtype=complex)
        vals[order] = _ray_values(x, j, allu[order], sing, alpha)
        vc, vf = vals[:len(uc)], vals[len(uc):]
        n = mesh.n
        coarse = (wc * vc).reshape(-1, n).sum(axis=1)
        finep = (wf * vf).reshape(-1, 2 * n).sum(axis=1)
        scale = abs(sing[j - 1] - S0)
        err = np.abs(coarse - finep) * scale
        total = abs(finep.sum()) * scale
        bad = err > tol * max(total, 1e-300)
        if not bad.any():
            return mesh, float(err.sum())
        newb = [br[0]]
        for k in range(len(br) - 1):
            if bad[k]:
                newb.append(0.5 * (br[k] + br[k + 1]))
            newb.append(br[k + 1])
        mesh = RayMesh(j, tuple(newb), n)
    raise PeriodError(f"ray quadrature for s_{j} did not converge")


def reference_meshes() -> Dict[int, RayMesh]:
    """Adapted meshes at the reference, reused (frozen) for nearby ``x``."""
    if "meshes" not in _REF_CACHE:
        _REF_CACHE["meshes"] = {j: adapt_mesh(j)[0] for j in range(1, 13)}
    return _REF_CACHE["meshes"]


# ---------------------------------------------------------------------------
# periods of cycles
# ---------------------------------------------------------------------------

def chain_coefficients() -> np.ndarray:
    """8 x 12 matrix ``K`` with ``u(Gamma_i) = -sum_j K_ij theta_j``."""
    if "coef" not in _REF_CACHE:
        _REF_CACHE["coef"] = np.array(
            [fb.fiber_thimble_periods_vector(fb.build_gamma(i)) for i in range(1, 9)])
    return _REF_CACHE["coef"]


def gram_matrix() -> np.ndarray:
    if "gram" not in _REF_CACHE:
        _REF_CACHE["gram"] = fb.gram_gamma()
    return _REF_CACHE["gram"]


def period_over_chain(ch: fb.TwoChain, x=REFERENCE, method: str = "thimble",
                      theta: Optional[np.ndarray] = None) -> complex:
    """Period of ``ds dt / w`` over a closed or thimble chain.

    ``method="thimble"`` uses the thimble decomposition and the ray
    integrals; ``method="direct"`` integrates the continued fibre period along
    every track's base polyline.
    """
    if not ch.tracks:
        return 0j
    if method == "thimble":
        theta = thimble_integrals(x) if theta is None else theta
        k = fb.thimble_vector(ch)
        return complex(-np.dot(k[0::2] + k[1::2], theta))
    if method != "direct":
        raise PeriodError(f"unknown method {method!r}")
    return complex(sum(t.multiplicity * _direct_track(t, x) for t in ch.tracks))


def _direct_track(t: fb.Track, x) -> complex:
    x = config_array(x)
    sing = _singular_values(x)
    w1, w2 = alpha_periods(x)
    c = t.start_class
    start = c[0] * w1 + c[1] * w2
    base = [complex(z) for z in t.base]
    if t.is_thimble:
        base[-1] = complex(sing[t.terminal - 1])
    xg, wg = _gl(GL_NODES)
    nodes = [base[0]]
    weights = [0.0]
    last = len(base) - 2
    for e, (z0, z1) in enumerate(zip(base[:-1], base[1:])):
        L = abs(z1 - z0)
        if L == 0:
            continue
        m = max(1, int(math.ceil(L / (PANEL_LEN / 2))))
        for k in range(m):
            a0 = z0 + (z1 - z0) * k / m
            a1 = z0 + (z1 - z0) * (k + 1) / m
            nodes.extend(a0 + (a1 - a0) * (xg + 1) / 2)
            weights.extend((a1 - a0) / 2 * wg)
        if not (t.is_thimble and e == last):
            # the fibre over a thimble's endpoint is singular
            nodes.append(z1)
            weights.append(0.0)
    nodes = np.array(nodes)
    weights = np.array(weights, dtype=complex)
    skip = None if not t.is_thimble else t.terminal - 1
    grid = _refine_grid(nodes, sing, skip=skip)
    # every original node is a grid point; locate them in order
    idx = []
    k = 0
    for z in nodes:
        while abs(grid[k] - z) > 1e-14 * (1 + abs(z)):
            k += 1
        idx.append(k)
    vals = continue_period(x, grid, start)
    return complex(np.dot(weights, vals[np.array(idx)]))


@dataclass
class PeriodVector:
    v: np.ndarray
    eta: np.ndarray

    def bilinear_residual(self) -> float:
        A = gram_matrix()
        return float(abs(self.eta @ A @ self.eta) / np.linalg.norm(self.eta) ** 2)

    def positivity(self) -> float:
        A = gram_matrix()
        return float((np.conj(self.eta) @ A @ self.eta).real)

    def component_sign(self) -> int:
        return int(np.sign((self.eta[2] / self.eta[0]).imag))


def period_vector(x=REFERENCE, theta: Optional[np.ndarray] = None) -> PeriodVector:
    """Periods over ``Gamma_1..Gamma_8`` and ``eta = A^{-1} v``."""
    theta = thimble_integrals(x) if theta is None else theta
    v = -chain_coefficients() @ theta
    eta = np.linalg.solve(gram_matrix().astype(float), v)
    return PeriodVector(v, eta)


def periods(x=REFERENCE) -> np.ndarray:
    return period_vector(x).v


# ---------------------------------------------------------------------------
# group actions and finite differences
# ---------------------------------------------------------------------------

def act(x, g=None, h=None, lam=None) -> np.ndarray:
    """``x^p -> lam_p g x^p h^T`` in floating point."""
    x = config_array(x)
    g = np.eye(2) if g is None else np.asarray(g, dtype=complex)
    h = np.eye(2) if h is None else np.asarray(h, dtype=complex)
    lam = np.ones(4) if lam is None else np.asarray(lam, dtype=complex)
    return np.array([lam[p] * g @ x[p] @ h.T for p in range(4)])


def _var(k: int) -> Tuple[int, int, int]:
    p, r = divmod(k, 4)
    return p, r // 2, r % 2


def _shift(x, shifts: Dict[int, complex]) -> np.ndarray:
    y = config_array(x).copy()
    for k, d in shifts.items():
        p, i, j = _var(k)
        y[p, i, j] += d
    return y


class PeriodCache:
    """Memoized period vectors keyed by the rounded configuration."""

    def __init__(self):
        self._store: Dict[bytes, np.ndarray] = {}

    def __call__(self, x) -> np.ndarray:
        x = config_array(x)
        key = np.round(x, 15).tobytes()
        if key not in self._store:
            self._store[key] = periods(x)
        return self._store[key]


def derivative(u, x, b: Sequence[int], h: float) -> np.ndarray:
    """``d^b u`` at ``x`` for ``|b| <= 2`` by central differences + Richardson."""
    idx = [k for k in range(16) for _ in range(b[k])]

    def est(hh):
        if len(idx) == 0:
            return u(x)
        if len(idx) == 1:
            k = idx[0]
            return (u(_shift(x, {k: hh})) - u(_shift(x, {k: -hh}))) / (2 * hh)
        if len(idx) == 2 and idx[0] == idx[1]:
            k = idx[0]
            return (u(_shift(x, {k: hh})) - 2 * u(x) + u(_shift(x, {k: -hh}))) / hh ** 2
        if len(idx) == 2:
            k, l = idx
            return (u(_shift(x, {k: hh, l: hh})) - u(_shift(x, {k: hh, l: -hh}))
                    - u(_shift(x, {k: -hh, l: hh})) + u(_shift(x, {k: -hh, l: -hh}))) / (4 * hh ** 2)
        raise PeriodError("only derivatives up to order two are supported")

    return (4 * est(h / 2) - est(h)) / 3


def fd_residual(op, x0=REFERENCE, h: Optional[float] = None, u=None) -> float:
    """Relative residual ``|op u| / sum |terms|`` over all eight periods.

    ``op`` is a :class:`k3fourh.gkz.DiffOp`; default steps are ``1e-4`` for
    first-order and ``1e-3`` for second-order operators.
    """
    x0 = config_array(x0)
    u = PeriodCache() if u is None else u
    if not op.terms:
        return 0.0
    if h is None:
        h = 1e-4 if op.order() <= 1 else 1e-3
    total = np.zeros(8, dtype=complex)
    mag = 0.0
    for (a, b), c in op.terms:
        coef = complex(c)
        for k in range(16):
            if a[k]:
                p, i, j = _var(k)
                coef *= x0[p, i, j] ** a[k]
        if coef == 0:
            continue
        term = coef * derivative(u, x0, b, h)
        total += term
        mag += float(np.linalg.norm(term))
    if mag == 0.0:
        return 0.0
    return float(np.linalg.norm(total) / mag)


def homogeneity_exponents(x0=REFERENCE, eps: float = 1e-3) -> np.ndarray:
    """Fitted exponents ``e_p`` in ``u(lam o x) = lam_p^{e_p} u(x)``.

    Uses ``lam_p = 1 +- eps`` and the log-derivative by central differences;
    returns a 4 x 8 array (curve, period).
    """
    u0 = periods(x0)
    out = np.empty((4, 8))
    for p in range(4):
        lam_p = np.ones(4)
        lam_m = np.ones(4)
        lam_p[p] = 1 + eps
        lam_m[p] = 1 - eps
        up = periods(act(x0, lam=lam_p))
        um = periods(act(x0, lam=lam_m))
        out[p] = (np.log(up / u0) - np.log(um / u0)).real / (math.log1p(eps) - math.log1p(-eps))
    return out


def equivariance_errors(x0=REFERENCE, count: int = 20, size: float = 0.01, seed: int = 0) -> Dict:
    """Relative errors of ``u(g x) = det(g)^-1 u(x)`` and ``u(x h^T) = det(h)^-1 u(x)``."""
    rng = np.random.default_rng(seed)
    u0 = periods(x0)
    left, right = [], []
    for _ in range(count):
        g = np.eye(2) + size * rng.standard_normal((2, 2))
        h = np.eye(2) + size * rng.standard_normal((2, 2))
        ug = periods(act(x0, g=g))
        uh = periods(act(x0, h=h))
        left.append(float(np.max(np.abs(ug * np.linalg.det(g) - u0)) / np.max(np.abs(u0))))
        right.append(float(np.max(np.abs(uh * np.linalg.det(h) - u0)) / np.max(np.abs(u0))))
    return {"left": left, "right": right, "max": max(left + right)}


def random_nearby(x0=REFERENCE, size: float = 0.02, rng=None) -> np.ndarray:
    rng = np.random.default_rng(0) if rng is None else rng
    x0 = config_array(x0)
    d = rng.standard_normal((4, 2, 2)) + 1j * rng.standard_normal((4, 2, 2))
    return x0 + size * d


def independence_singular_values(points: int = 12, size: float = 0.05, seed: int = 0) -> np.ndarray:
    """Singular values of the 8 x points matrix of periods at random nearby x.

    Draws whose singular values leave the region where the reference cycles
    are continued (see :func:`track`) are rejected and redrawn.
    """
    rng = np.random.default_rng(seed)
    cols = []
    draws = 0
    while len(cols) < points:
        draws += 1
        if draws > 20 * points:
            raise PeriodError("too many rejected sample points; decrease size")
        try:
            v = periods(random_nearby(REFERENCE, size, rng))
        except PeriodError:
            continue
        cols.append(v / np.linalg.norm(v))
    return np.linalg.svd(np.array(cols).T, compute_uv=False)


# ---------------------------------------------------------------------------
# elliptic-integral oracle
# ---------------------------------------------------------------------------

def agm(a: float, b: float) -> float:
    for _ in range(64):
        if abs(a - b) <= 4e-16 * abs(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellipk_agm(k: float) -> float:
    """Complete elliptic integral of the first kind ``K(k) = pi / (2 agm(1, k'))``."""
    return math.pi / (2 * agm(1.0, math.sqrt(1 - k * k)))


def legendre_ratio(k: float) -> Tuple[float, float]:
    """Computed ``|omega[-k',k']| / |omega[k',1]|`` on ``w^2 = (t^2-1)(t^2-k'^2)``
    and the oracle ``2 K(k') / K(k)``."""
    kp = math.sqrt(1 - k * k)
    roots = np.array([-1.0, -kp, kp, 1.0], dtype=complex)
    a = np.ones((4, 1), dtype=complex)
    b = -roots[:, None]
    inner = converged_segment_period(a, b, 1, 2)[0]
    outer = converged_segment_period(a, b, 2, 3)[0]
    return abs(inner) / abs(outer), 2 * ellipk_agm(kp) / ellipk_agm(k)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def pde_residuals(ops: str = "all", x0=REFERENCE, e2_samples: int = 10, seed: int = 0) -> Dict:
    """``fd_residual`` of the Euler, first-order and sampled second-order operators.

    ``ops`` is one of ``euler``, ``e1`` (the eight ``E``/``E'`` operators),
    ``e2`` or ``all``.  Second-order operators are drawn without
    replacement with a seeded generator.
    """
    from . import gkz
    if ops not in ("euler", "e1", "e2", "all"):
        raise PeriodError(f"unknown operator family {ops!r}")
    u = PeriodCache()
    out: Dict[str, Dict[str, float]] = {}
    if ops in ("euler", "all"):
        out["euler"] = {op.name: fd_residual(op, x0, u=u) for op in gkz.euler_operators()}
    if ops in ("e1", "all"):
        first = gkz.e1_operators() + gkz.diagonal_operators()
        out["e1"] = {op.name: fd_residual(op, x0, u=u) for op in first}
    if ops in ("e2", "all"):
        e2 = gkz.e2_operators()
        pick = np.random.default_rng(seed).choice(len(e2), size=min(e2_samples, len(e2)), replace=False)
        out["e2"] = {e2[k].name: fd_residual(e2[k], x0, u=u) for k in sorted(pick)}
    return out


def bilinear_report(x=REFERENCE) -> Dict:
    pv = period_vector(x)
    return {
        "periods": [[z.real, z.imag] for z in pv.v],
        "eta": [[z.real, z.imag] for z in pv.eta],
        "bilinear_residual": pv.bilinear_residual(),
        "positivity": pv.positivity(),
        "component_sign": pv.component_sign(),
    }
