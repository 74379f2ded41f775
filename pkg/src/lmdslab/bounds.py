"""Closed-form bounds, thresholds and the greedy hitting-set procedure.

Everything is exact integer/rational arithmetic except the entropy-based
quantities, which are binary floats documented to 1e-12 comparison
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import BadEpsilon, BadParameters

FLOAT_TOL = 1e-12


def volume(q: int, n: int, tau: int) -> int:
    """|B(n, tau)| = sum_{i<=tau} C(n,i) (q-1)^i, exact."""
    if not 0 <= tau <= n:
        raise BadParameters(f"need 0 <= tau <= n, got tau={tau}, n={n}")
    return sum(comb(n, i) * (q - 1) ** i for i in range(tau + 1))


@dataclass
class SingletonReport:
    tau_base: int        # floor((L(n-k) + L - 1) / (L+1))
    tau_improved: int    # floor(L(n-k) / (L+1))
    u: int
    r: int               # remainder convention: r in [1, L+1]
    improved_applies: bool
    case: str | None     # first matching corollary case label, or None


def remainder_split(n_minus_k: int, L: int) -> tuple[int, int]:
    """n-k = (L+1)u + r with r in [1, L+1] (full-block remainder)."""
    r = (n_minus_k - 1) % (L + 1) + 1
    u = (n_minus_k - r) // (L + 1)
    return u, r


def corollary_case(n: int, k: int, L: int) -> str | None:
    """First matching sufficient case (a)-(d) for the improved bound."""
    if k >= L:
        return "a"
    if k >= 2:
        h = 0
        while comb(k + h, k - 1) < L:
            h += 1
        if n >= (L + 1) * h + k:
            return "b"
    if k >= 2 and (n - k) % (L + 1) in (0, L - 1, L):
        return "c"
    if n - k - 1 <= L <= comb(n - 1, k - 1):
        return "d"
    return None


def singleton_report(n: int, k: int, L: int) -> SingletonReport:
    """Both Singleton-type list-decoding radii and the improvement test."""
    if not (1 <= k < n) or L < 1:
        raise BadParameters(f"need 1 <= k < n and L >= 1, got n={n}, k={k}, L={L}")
    nk = n - k
    tau_base = (L * nk + L - 1) // (L + 1)
    tau_improved = (L * nk) // (L + 1)
    u, r = remainder_split(nk, L)
    applies = L <= comb(k - 1 + u + r, k - 1)
    return SingletonReport(
        tau_base=tau_base,
        tau_improved=tau_improved,
        u=u,
        r=r,
        improved_applies=applies,
        case=corollary_case(n, k, L),
    )


def strongly_bound_applies(n: int, k: int, L: int) -> bool:
    """Range of the average-radius improvement: L <= C(n-1, k-1)."""
    return L <= comb(n - 1, k - 1)


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def q_ary_entropy(q: int, x: float) -> float:
    """H_q(x): increasing from 0 to 1 on [0, (q-1)/q], then constant 1."""
    top = (q - 1) / q
    if x <= 0.0:
        return 0.0
    if x >= top:
        return 1.0
    return (binary_entropy(x) + x * math.log2(q - 1)) / math.log2(q)


def eta(q: int, eps: float) -> float:
    """eta_q(eps) = h((q-1)/q (1-eps)) - (1-eps) h(1/q)."""
    return binary_entropy((q - 1) / q * (1.0 - eps)) - (1.0 - eps) * binary_entropy(1.0 / q)


def eta_threshold(q: int, n: int, eps: float) -> tuple[float, float]:
    """(eta_q(eps), list-size threshold 2^(eta n) / sqrt(2n)).

    Below the threshold, attaining the improved radius forces L < q-1.
    """
    if not 0.0 < eps <= 0.5:
        raise BadEpsilon(f"eps = {eps} outside (0, 1/2]")
    e = eta(q, eps)
    return e, 2.0 ** (e * n) / math.sqrt(2 * n)


@dataclass
class Thresholds:
    nesting: Fraction | None   # L below this: L-MDS implies l-MDS for l <= L
    high_l: int                # L at or above this: every MDS code is L-MDS
    large_l_field: int         # q at or above this: not (n-k, L)-decodable for L < C(n,k)


def thresholds(n: int, k: int) -> Thresholds:
    if not 1 <= k <= n:
        raise BadParameters(f"need 1 <= k <= n, got n={n}, k={k}")
    denom = comb(math.ceil((n + k) / 2) - 2, k - 1)
    if denom == 0:
        nesting = None  # ratio unbounded; the nesting range is unrestricted
    else:
        nesting = max(Fraction(comb(n - 1, k - 1), denom), Fraction(k)) + 1
    return Thresholds(
        nesting=nesting,
        high_l=comb(n, k) - k * (n - k),
        large_l_field=comb(n, k + 1) if k < n else 0,
    )


def vartheta_seq(n: int, k: int) -> list[Fraction]:
    """theta_w = (C(n-w, k) - (n-k-w+1)) / (n-k-w) for w in [0 : n-k-1];
    all-zero for k = 1 and strictly decreasing for k > 1."""
    if not 1 <= k < n:
        raise BadParameters(f"need 1 <= k < n, got n={n}, k={k}")
    out = []
    for w in range(n - k):
        out.append(Fraction(comb(n - w, k) - (n - k - w + 1), n - k - w))
    return out


# ---------------------------------------------------------------------------
# hitting sets
# ---------------------------------------------------------------------------


@dataclass
class HittingSetResult:
    x: tuple[int, ...]
    hits_all: bool
    guaranteed: bool   # the greedy bound l < max(C(w,t)/C(w-s,t), t+1) held


def hitting_set_guaranteed(w: int, s: int, t: int, l: int) -> bool:
    denom = comb(w - s, t) if w - s >= t else 0
    if denom == 0:
        return True  # ratio unbounded
    return l < max(Fraction(comb(w, t), denom), Fraction(t + 1))


def hitting_set(subsets: Sequence[Sequence[int]], w: int, s: int, t: int
                ) -> HittingSetResult:
    """Greedy max-coverage selection of at most t points hitting all subsets.

    Each iteration picks the element of [w] contained in the most remaining
    subsets (ties to the smallest element).  Success is guaranteed whenever
    l < max(C(w,t)/C(w-s,t), t+1); outside that range the greedy still runs
    and reports what it found.
    """
    sets = [frozenset(S) for S in subsets]
    for S in sets:
        if not S or not all(0 <= x < w for x in S):
            raise BadParameters("subsets must be nonempty subsets of [0, w)")
        if len(S) < s:
            raise BadParameters(f"subset {sorted(S)} smaller than s = {s}")
    guaranteed = hitting_set_guaranteed(w, s, t, len(sets))
    chosen: list[int] = []
    remaining = list(sets)
    available = set(range(w))
    for _ in range(t):
        if not remaining:
            break
        best_y, best_hits = None, -1
        for y in sorted(available):
            hits = sum(1 for S in remaining if y in S)
            if hits > best_hits:
                best_y, best_hits = y, hits
        chosen.append(best_y)
        available.discard(best_y)
        remaining = [S for S in remaining if best_y not in S]
    return HittingSetResult(
        x=tuple(chosen),
        hits_all=not remaining,
        guaranteed=guaranteed,
    )


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------


def bound_report(n: int, k: int, q: int | None = None, L: int | None = None,
                 eps: float | None = None, tau: int | None = None) -> dict:
    """Everything computable for the given parameter set, JSON-ready."""
    out: dict = {"n": n, "k": k}
    if q is not None:
        out["q"] = q
    if L is not None:
        out["L"] = L
    th = thresholds(n, k)
    out["high_l_threshold"] = th.high_l
    out["large_l_field_bound"] = th.large_l_field
    out["nesting_threshold"] = (
        None if th.nesting is None
        else {"num": th.nesting.numerator, "den": th.nesting.denominator}
    )
    if k < n:
        out["vartheta"] = [{"num": f.numerator, "den": f.denominator} for f in vartheta_seq(n, k)]
    if L is not None and k < n:
        rep = singleton_report(n, k, L)
        out["singleton"] = {
            "tau_base": rep.tau_base,
            "tau_improved": rep.tau_improved,
            "u": rep.u,
            "r": rep.r,
            "improved_applies": rep.improved_applies,
            "case": rep.case,
        }
        out["strongly_bound_applies"] = strongly_bound_applies(n, k, L)
    if q is not None and tau is not None:
        v = volume(q, n, tau)
        out["volume"] = v
        if L is not None:
            out["sphere_packing_max_size"] = L * q**n // v
        out["q_ary_entropy_at_tau"] = q_ary_entropy(q, tau / n)
    if q is not None and eps is not None:
        e, thr = eta_threshold(q, n, eps)
        out["eta"] = e
        out["eta_list_threshold"] = thr
    return out
