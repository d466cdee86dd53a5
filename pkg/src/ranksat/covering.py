"""Covering radii, saturation radii, and the cross-validating oracles.

Three independent routes to the same number:

* `saturation_radius` sweeps coefficient vectors lambda = gamma * M by
  rank layer and marks the ambient targets G lambda^T (the coefficient
  characterization of saturation).
* `saturation_radius_geometric` marks projective points covered by
  F_{q^m}-spans of subsets of the linear set, level by level.
* `rank_covering_radius` runs the same rank-layered sweep against a
  parity-check matrix, so the radius of the dual code of an associated
  code can be compared with both of the above.

All sweeps are exact and refuse (raising BudgetExceeded) instead of
sampling when the declared budget does not cover them.
"""

from __future__ import annotations

import hashlib
import json

import numpy as np

from . import fqlinalg
from .gftower import FieldTower, expand
from .linalg import (BudgetExceeded, DEFAULT_BUDGET, RankCode, as_matrix,
                     ext_matmul, ext_rank, min_rank_distance, rank_weight,
                     rank_support)
from .qsystem import (PointIndexer, QSystem, SystemError_, linear_set,
                      is_scattered)

WITNESS_CAP = 1 << 12


class ConsistencyError(AssertionError):
    """A covering-radius inequality that must always hold failed; the
    message names the violated inequality."""


_tuple_cache: dict = {}


def _all_tuples(Q: int, w: int, nonzero: bool = False) -> np.ndarray:
    """((Q or Q-1)^w, w) array of all coordinate tuples, cached."""
    key = (Q, w, nonzero)
    if key not in _tuple_cache:
        vals = np.arange(1, Q) if nonzero else np.arange(Q)
        if w == 0:
            arr = np.zeros((1, 0), dtype=np.int64)
        else:
            grids = np.meshgrid(*([vals] * w), indexing="ij")
            arr = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
        _tuple_cache[key] = arr
    return _tuple_cache[key]


# ----------------------------------------------------------------------
# Rank-layered syndrome sweep (shared by covering radius / saturation)
# ----------------------------------------------------------------------

def _rank_layer_sweep(H, tower: FieldTower, budget: int,
                      collect_witnesses: bool = False):
    """Smallest w such that {H x^T : wt_rk(x) <= w} is the full space.

    x runs over gamma * M with M one RREF representative per F_q-row
    space of dimension w and gamma over all of F_{q^m}^w; duplicate
    syndromes are harmless because marking is idempotent.

    Returns (w, info) where info carries the covered bitmap history
    needed for certificates: `first_touch` maps each syndrome index to
    (level, M matrix, gamma index) when collect_witnesses is set, and
    `tightness_index` is the smallest syndrome index still uncovered at
    level w-1.
    """
    H = np.atleast_2d(np.asarray(H, dtype=np.int64))
    r, n = H.shape
    Q = tower.order
    q = tower.base.q
    total = Q ** r
    if total > budget:
        raise BudgetExceeded(
            f"syndrome space q^(m r) = {total} exceeds budget {budget}",
            completed_level=-1, coverage=0.0)
    qpow_r = np.array([Q ** (r - 1 - i) for i in range(r)], dtype=np.int64)
    covered = np.zeros(total, dtype=bool)
    covered[0] = True
    first_touch = {} if collect_witnesses else None
    tightness_index = None
    work = 1
    w = 0
    while not covered.all():
        # the first uncovered syndrome before starting level w+1 is the
        # tightness witness if that level completes the cover
        tightness_index = int(np.argmin(covered))
        w += 1
        if w > min(n, tower.m):
            raise RuntimeError("sweep failed to terminate (unreachable)")
        layer = fqlinalg.count_subspaces(n, w, q) * Q ** w
        work += layer
        if work > budget:
            raise BudgetExceeded(
                f"enumeration through rank {w} needs {work} > budget {budget}",
                completed_level=w - 1,
                coverage=float(covered.sum()) / total)
        gammas = _all_tuples(Q, w)
        for _, batch in fqlinalg.rref_subspaces(n, w, tower.base):
            for M in batch:
                B = ext_matmul(H, M.T.astype(np.int64), tower)  # r x w
                S = np.zeros((gammas.shape[0], r), dtype=np.int64)
                for j in range(w):
                    S = tower.add_arr(
                        S, tower.mul_arr(gammas[:, j][:, None],
                                         B[:, j][None, :]))
                idx = S @ qpow_r
                if collect_witnesses:
                    fresh = ~covered[idx]
                    if fresh.any():
                        uniq, upos = np.unique(idx[fresh],
                                               return_index=True)
                        gpos = np.nonzero(fresh)[0][upos]
                        for t, g in zip(uniq, gpos):
                            ti = int(t)
                            if ti not in first_touch:
                                first_touch[ti] = (w, M.copy(), int(g))
                covered[idx] = True
    return w, {"first_touch": first_touch,
               "tightness_index": tightness_index,
               "syndrome_power": r}


def rank_covering_radius(code: RankCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact rank-metric covering radius by syndrome sweep."""
    H = code.parity_check
    if H.shape[0] == 0:
        return 0
    w, _ = _rank_layer_sweep(H, code.tower, budget)
    return w


# ----------------------------------------------------------------------
# Saturation radius (coefficient form) with certificates
# ----------------------------------------------------------------------

class SaturationCertificate:
    """Replayable evidence for a measured saturation radius.

    `witnesses` maps a target vector (tuple of element codes) to the
    coefficient vector lambda with G lambda^T = target and
    wt_rk(lambda) <= rho; `tightness` is a target that no rank-(rho-1)
    coefficient vector reaches.
    """

    def __init__(self, rho: int, k: int, n: int, tower: FieldTower,
                 witnesses: dict, tightness, system_hash: str = ""):
        self.rho = rho
        self.k = k
        self.n = n
        self.tower = tower
        self.witnesses = witnesses          # tuple(target) -> tuple(lambda)
        self.tightness = tightness          # tuple(target) or None (rho == 0)
        self.system_hash = system_hash

    def verify(self, sys: QSystem, budget: int = DEFAULT_BUDGET) -> bool:
        """Re-check every stored witness and the tightness vector."""
        G, tower = sys.generator, sys.tower
        for target, lam in self.witnesses.items():
            lam = np.array(lam, dtype=np.int64)
            if rank_weight(lam, tower) > self.rho:
                return False
            got = ext_matmul(G, lam.reshape(-1, 1), tower).ravel()
            if tuple(int(x) for x in got) != tuple(target):
                return False
        if self.rho > 0 and self.tightness is not None:
            # replay the sweep one level short and confirm the miss
            Q = tower.order
            qpow = np.array([Q ** (self.k - 1 - i) for i in range(self.k)],
                            dtype=np.int64)
            t_idx = int(np.array(self.tightness, dtype=np.int64) @ qpow)
            covered = _coverage_through_level(G, tower, self.rho - 1, budget)
            if covered[t_idx]:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "system_hash": self.system_hash,
            "rho": self.rho,
            "k": self.k,
            "n": self.n,
            "witnesses": [{"target": list(map(int, t)),
                           "lambda": list(map(int, l))}
                          for t, l in sorted(self.witnesses.items())],
            "tightness": (list(map(int, self.tightness))
                          if self.tightness is not None else None),
        }

    @classmethod
    def from_json(cls, data: dict, tower: FieldTower) -> "SaturationCertificate":
        wit = {tuple(w["target"]): tuple(w["lambda"])
               for w in data.get("witnesses", [])}
        tight = data.get("tightness")
        return cls(int(data["rho"]), int(data["k"]), int(data["n"]), tower,
                   wit, tuple(tight) if tight is not None else None,
                   data.get("system_hash", ""))


def _coverage_through_level(G, tower: FieldTower, w_max: int, budget: int
                            ) -> np.ndarray:
    """Bitmap of targets reachable with coefficient rank <= w_max."""
    G = np.atleast_2d(np.asarray(G, dtype=np.int64))
    k, n = G.shape
    Q = tower.order
    total = Q ** k
    if total > budget:
        raise BudgetExceeded(f"target space {total} exceeds budget {budget}")
    qpow = np.array([Q ** (k - 1 - i) for i in range(k)], dtype=np.int64)
    covered = np.zeros(total, dtype=bool)
    covered[0] = True
    for w in range(1, w_max + 1):
        gammas = _all_tuples(Q, w)
        for _, batch in fqlinalg.rref_subspaces(n, w, tower.base):
            for M in batch:
                B = ext_matmul(G, M.T.astype(np.int64), tower)
                S = np.zeros((gammas.shape[0], k), dtype=np.int64)
                for j in range(w):
                    S = tower.add_arr(
                        S, tower.mul_arr(gammas[:, j][:, None],
                                         B[:, j][None, :]))
                covered[S @ qpow] = True
    return covered


def system_hash(sys: QSystem) -> str:
    payload = json.dumps({"q": sys.tower.base.q, "m": sys.tower.m,
                          "modulus": list(sys.tower.modulus),
                          "generator": sys.generator.tolist()},
                         sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def saturation_radius(sys: QSystem, budget: int = DEFAULT_BUDGET,
                      witness_cap: int = WITNESS_CAP
                      ) -> tuple[int, SaturationCertificate]:
    """Smallest rho such that every ambient vector is G lambda^T for some
    lambda of rank <= rho, plus a replayable certificate."""
    tower = sys.tower
    G = sys.generator
    Q = tower.order
    total = Q ** sys.k
    collect = total <= witness_cap
    rho, info = _rank_layer_sweep(G, tower, budget, collect_witnesses=collect)
    qpow = np.array([Q ** (sys.k - 1 - i) for i in range(sys.k)],
                    dtype=np.int64)

    def decode_target(idx: int):
        return tuple(int((idx // qpow[i]) % Q) for i in range(sys.k))

    witnesses = {}
    if collect and info["first_touch"]:
        for t_idx, (w, M, g) in sorted(info["first_touch"].items()):
            gamma = _all_tuples(Q, w)[g]
            lam = np.zeros(sys.n, dtype=np.int64)
            for i in range(w):
                lam = tower.add_arr(lam, tower.mul_scalar(
                    int(gamma[i]), M[i].astype(np.int64)))
            witnesses[decode_target(t_idx)] = tuple(int(x) for x in lam)
    tight = (decode_target(info["tightness_index"])
             if info["tightness_index"] is not None else None)
    cert = SaturationCertificate(rho, sys.k, sys.n, tower, witnesses, tight,
                                 system_hash(sys))
    return rho, cert


# ----------------------------------------------------------------------
# Saturation radius (geometric form): span marking over the linear set
# ----------------------------------------------------------------------

_FRONTIER_CHUNK = 1 << 16
_WORK_HARD_CAP = 1 << 33


def saturation_radius_geometric(sys: QSystem,
                                budget: int = DEFAULT_BUDGET) -> int:
    """Smallest rho such that spans of rho points of L_U cover PG(k-1, q^m).

    Marks covered points level by level: level 1 marks L_U itself, and
    level w+1 marks every point on a line through a point of L_U and a
    point first covered at level w (which is exactly the union of spans
    of (w+1)-subsets).
    """
    tower = sys.tower
    k = sys.k
    Q = tower.order
    q = tower.base.q
    if k == 0:
        return 0
    indexer = PointIndexer(tower, k)
    if indexer.total > budget:
        raise BudgetExceeded(
            f"PG(k-1, q^m) has {indexer.total} points > budget {budget}")
    if q ** sys.n > budget:
        raise BudgetExceeded(
            f"linear set sweep needs q^n = {q ** sys.n} > budget {budget}")
    vecs = sys.vectors(budget)
    _, idx, _ = indexer.canonicalize(vecs)
    covered = np.zeros(indexer.total, dtype=bool)
    covered[idx] = True
    L_idx = np.unique(idx)
    L_reps = indexer.decode(L_idx)
    ell = L_reps.shape[0]
    if covered.all():
        return 1
    frontier = L_reps
    mus = np.arange(1, Q, dtype=np.int64)
    level = 1
    while True:
        level += 1
        if level > k + 1:
            raise RuntimeError("span sweep failed to terminate (unreachable)")
        if frontier.shape[0] * ell * (Q - 1) > _WORK_HARD_CAP:
            raise BudgetExceeded(
                f"level-{level} span sweep too large "
                f"({frontier.shape[0]} x {ell} x {Q - 1} candidates)",
                completed_level=level - 1,
                coverage=float(covered.sum()) / indexer.total)
        before = covered.copy()
        done = False
        for u in L_reps:
            scaled = tower.mul_arr(mus[:, None], u[None, :])    # (Q-1, k)
            for lo in range(0, frontier.shape[0], _FRONTIER_CHUNK):
                chunk = frontier[lo:lo + _FRONTIER_CHUNK]
                cand = tower.add_arr(chunk[None, :, :],
                                     scaled[:, None, :]).reshape(-1, k)
                _, cidx, _ = indexer.canonicalize(cand)
                covered[cidx] = True
            if covered.all():
                done = True
                break
        if done or covered.all():
            return level
        newly = np.nonzero(covered & ~before)[0]
        if newly.size == 0:
            raise RuntimeError(
                "no progress in span sweep; system does not saturate "
                "(unreachable for valid systems)")
        frontier = indexer.decode(newly)


# ----------------------------------------------------------------------
# Hamming covering radius (for the projective-code bridge)
# ----------------------------------------------------------------------

def hamming_covering_radius(generator, tower: FieldTower,
                            budget: int = DEFAULT_BUDGET) -> int:
    """Exact Hamming covering radius of the code generated by `generator`,
    by coset-leader syndrome sweep in Hamming-weight layers."""
    from itertools import combinations

    from math import comb
    Gm = as_matrix(tower, generator)
    code = RankCode(tower, Gm)
    H = code.parity_check
    r, N = H.shape[0], Gm.shape[1]
    if r == 0:
        return 0
    Q = tower.order
    total = Q ** r
    if total > budget:
        raise BudgetExceeded(
            f"syndrome space {total} exceeds budget {budget}")
    qpow = np.array([Q ** (r - 1 - i) for i in range(r)], dtype=np.int64)
    covered = np.zeros(total, dtype=bool)
    covered[0] = True
    work = 1
    w = 0
    while not covered.all():
        w += 1
        if w > N:
            raise RuntimeError("Hamming sweep failed to terminate")
        work += comb(N, w) * (Q - 1) ** w
        if work > budget:
            raise BudgetExceeded(
                f"Hamming enumeration through weight {w} needs {work} > "
                f"budget {budget}", completed_level=w - 1,
                coverage=float(covered.sum()) / total)
        vals = _all_tuples(Q, w, nonzero=True)
        for support in combinations(range(N), w):
            S = np.zeros((vals.shape[0], r), dtype=np.int64)
            for j, col in enumerate(support):
                S = tower.add_arr(S, tower.mul_arr(
                    vals[:, j][:, None], H[:, col][None, :]))
            covered[S @ qpow] = True
    return w


# ----------------------------------------------------------------------
# Maximality and bound-consistency oracles
# ----------------------------------------------------------------------

def is_maximal(code: RankCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Supercode criterion: maximal iff rho_rk(C) <= d_rk(C) - 1."""
    d = min_rank_distance(code, budget)
    rho = rank_covering_radius(code, budget)
    return rho <= d - 1


def check_bound_consistency(code: RankCode, budget: int = DEFAULT_BUDGET,
                            supercode: RankCode | None = None) -> dict:
    """Assert the classical covering-radius inequalities for this code.

    Raises ConsistencyError naming the first violated inequality; the
    returned report lists every computed quantity.  Zero and full codes
    are exempt from the diameter inequality.
    """
    from .linalg import weight_spectrum
    tower = code.tower
    n, k, m = code.n, code.k, tower.m
    report: dict = {"n": n, "k": k}
    if 0 < k:
        d = min_rank_distance(code, budget)
        spec = weight_spectrum(code, budget)
        report["d_rk"] = d
        report["s_rk"] = len(spec)
        rho_dual = rank_covering_radius(code.dual(), budget)
        report["rho_dual"] = rho_dual
        if rho_dual > len(spec):
            raise ConsistencyError(
                f"external distance bound violated: rho_rk(C_dual) = "
                f"{rho_dual} > s_rk(C) = {len(spec)}")
        if rho_dual > min(n, m) - d + 1:
            raise ConsistencyError(
                f"dual distance bound violated: rho_rk(C_dual) = {rho_dual} "
                f"> min(n, m) - d + 1 = {min(n, m) - d + 1}")
    rho = rank_covering_radius(code, budget)
    report["rho"] = rho
    if 0 < k < n:
        d = report["d_rk"]
        if not d - 1 < 2 * rho:
            raise ConsistencyError(
                f"diameter bound violated: d - 1 = {d - 1} >= 2 rho = {2 * rho}")
    if supercode is not None:
        d_sup = min_rank_distance(supercode, budget)
        rho_sup = rank_covering_radius(supercode, budget)
        report["d_rk_supercode"] = d_sup
        report["rho_supercode"] = rho_sup
        if rho < d_sup:
            raise ConsistencyError(
                f"supercode distance bound violated: rho_rk(C) = {rho} < "
                f"d_rk(D) = {d_sup}")
        if rho < rho_sup:
            raise ConsistencyError(
                f"monotonicity violated: rho_rk(C) = {rho} < rho_rk(D) = "
                f"{rho_sup}")
    return report


# ----------------------------------------------------------------------
# Cutting blocking sets / minimal codes
# ----------------------------------------------------------------------

def is_linear_cutting_blocking_set(sys: QSystem,
                                   budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the span of H intersect U is H for every hyperplane H.

    The intersection is computed on coefficient space: the single
    F_{q^m}-linear constraint h . (G c) = 0 expands to m F_q-linear
    constraints on c in F_q^n, so no sweep over U is needed.
    """
    tower = sys.tower
    G = sys.generator
    k, n = sys.k, sys.n
    indexer = PointIndexer(tower, k)
    if indexer.total > budget:
        raise BudgetExceeded(
            f"{indexer.total} hyperplanes exceed budget {budget}")
    for start in range(0, indexer.total, 4096):
        idxs = np.arange(start, min(start + 4096, indexer.total))
        normals = indexer.decode(idxs)
        for h in normals:
            row = ext_matmul(h[None, :], G, tower).ravel()   # h G, length n
            constraints = expand(row, tower).T               # m x n over F_q
            K = fqlinalg.kernel(constraints, tower.base)     # coeffs of H^U
            if K.shape[0] == 0:
                return False
            V = ext_matmul(G, K.T.astype(np.int64), tower)   # k x dim
            if ext_rank(V, tower) != k - 1:
                return False
    return True


def is_minimal_rank_code(code: RankCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Support-containment test over projectively inequivalent codewords."""
    tower = code.tower
    Q = tower.order
    if Q ** code.k > budget:
        raise BudgetExceeded(
            f"codeword sweep needs {Q ** code.k} > budget {budget}")
    words = code.codewords(budget)
    indexer = PointIndexer(tower, code.n)
    reps, idx, _ = indexer.canonicalize(words)
    _, first = np.unique(idx, return_index=True)
    reps = reps[first]
    supports = [rank_support(r, tower) for r in reps]
    by_dim: dict[int, list] = {}
    seen: dict = {}
    for s in supports:
        if s in seen:
            return False            # two inequivalent words, equal support
        seen[s] = True
        by_dim.setdefault(s.dim, []).append(s)
    dims = sorted(by_dim)
    field = tower.base
    for i, d1 in enumerate(dims):
        for d2 in dims[i + 1:]:
            for small in by_dim[d1]:
                for big in by_dim[d2]:
                    if big.contains(small, field):
                        return False
    return True


# ----------------------------------------------------------------------
# Puncturing non-scattered systems
# ----------------------------------------------------------------------

def puncture_nonscattered(sys: QSystem, budget: int = DEFAULT_BUDGET,
                          verify_budget: int | None = None) -> QSystem:
    """Drop one basis direction of a repeated projective point.

    Requires a non-scattered linear set; returns the [n-1, k] system
    spanned by a basis u_1 .. u_{n-1} such that the removed vector is an
    F_{q^m}-multiple (lambda not in F_q) of a member of the new system.
    When verify_budget is given, asserts radius(new) <= radius(old) + 1.
    """
    tower = sys.tower
    ls = linear_set(sys, budget)
    if is_scattered(ls):
        raise SystemError_("system is scattered; nothing to puncture")
    heavy = int(np.argmax(ls.weights >= 2))
    point = ls.points[heavy]
    indexer = PointIndexer(tower, sys.k)
    target_idx = indexer.index_of(point)
    vecs = sys.vectors(budget)
    _, idx, keep = indexer.canonicalize(vecs)
    fibre = vecs[np.nonzero(keep)[0][idx == target_idx]]
    u_a = fibre[0]
    u_b = None
    for cand in fibre[1:]:
        # F_q-dependent on u_a iff cand = c u_a with c in F_q
        if not any(np.array_equal(cand, tower.mul_scalar(c, u_a))
                   for c in range(1, tower.base.q)):
            u_b = cand
            break
    assert u_b is not None, "weight >= 2 point must carry independent vectors"
    from .qsystem import expanded_columns
    cols = expanded_columns(sys.generator, tower)
    c_a = fqlinalg.solve(cols, expand(u_a, tower).reshape(-1), tower.base)
    c_b = fqlinalg.solve(cols, expand(u_b, tower).reshape(-1), tower.base)
    # functional vanishing on c_a but not on c_b
    K = fqlinalg.kernel(c_a.reshape(1, -1), tower.base)
    phi = None
    for row in K:
        if int(fqlinalg.matvec(row.reshape(1, -1), c_b, tower.base)[0]) != 0:
            phi = row
            break
    assert phi is not None, "c_b should be independent of c_a"
    K2 = fqlinalg.kernel(phi.reshape(1, -1), tower.base)   # (n-1) x n
    newG = ext_matmul(sys.generator, K2.T.astype(np.int64), tower)
    punctured = QSystem(tower, newG)
    if verify_budget is not None:
        rho_old, _ = saturation_radius(sys, verify_budget)
        rho_new, _ = saturation_radius(punctured, verify_budget)
        assert rho_new <= rho_old + 1, (rho_new, rho_old)
    return punctured
