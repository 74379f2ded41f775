"""Exhaustive coset analysis: weight profiles and list-decodability testers.

Everything here reduces to one enumeration primitive: walk the Hamming ball
B(n, cap) in a fixed order (weight-major, support in colex, values in
canonical field order), bucket vectors by syndrome, and aggregate weight
counts per bucket.  Prime fields get a vectorized numpy path; extension
fields fall back to a generic walker, which is plenty for the toy sizes
where extension-field cosets are ever enumerated.

Syndromes are packed into single integers little-endian base q, matching
LinearCode.syndrome_key.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import matgf
from .codes import LinearCode, min_distance, is_mds
from .errors import BudgetExceeded, NotMDS

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 21


def ball_volume(q: int, n: int, radius: int) -> int:
    return sum(comb(n, i) * (q - 1) ** i for i in range(radius + 1))


# ---------------------------------------------------------------------------
# result types
# ---------------------------------------------------------------------------


@dataclass
class CosetProfile:
    """Per-syndrome weight statistics.

    Full mode records the whole distribution (A_w for w in [0:n]); capped
    mode records the sorted lightest weights (up to list_cap of them, all
    <= weight_cap) plus whether the unseen tail starts above the cap.
    """

    syndrome: int
    weight_distribution: tuple[int, ...] | None = None
    lightest_weights: tuple[int, ...] | None = None
    tail_above_cap: bool | None = None
    vector_count: int = 0

    def to_json(self) -> dict:
        out = {"syndrome": self.syndrome, "vector_count": self.vector_count}
        if self.weight_distribution is not None:
            out["weight_distribution"] = list(self.weight_distribution)
        if self.lightest_weights is not None:
            out["lightest_weights"] = list(self.lightest_weights)
            out["tail_above_cap"] = self.tail_above_cap
        return out


@dataclass
class Witness:
    """Concrete violation certificate.

    kind "coset-vectors": `vectors` share the syndrome `syndrome`.
    kind "subset-triple": `subsets` are the disjoint block supports of a
    singular block matrix; `punctured` records coordinates removed first.
    """

    kind: str
    vectors: tuple[tuple[int, ...], ...] | None = None
    syndrome: int | None = None
    subsets: tuple[tuple[int, ...], ...] | None = None
    punctured: tuple[int, ...] | None = None
    violated: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "violated": dict(self.violated)}
        if self.vectors is not None:
            out["vectors"] = [list(v) for v in self.vectors]
            out["syndrome"] = self.syndrome
        if self.subsets is not None:
            out["subsets"] = [list(s) for s in self.subsets]
        if self.punctured is not None:
            out["punctured"] = list(self.punctured)
        return out


@dataclass
class LMdsReport:
    """Outcome of the per-L violation sweep.

    `violating` are L with a certified violation, `uncertain` are L where a
    capped profile cannot exclude one (never populated in full mode).  `l0`
    is the smallest L such that the code is L'-MDS for every L' >= L;
    `l0_certified` says whether the monotone-tail argument pinned it down.
    """

    violating: set[int]
    uncertain: set[int]
    l0: int
    l0_certified: bool
    l_max: int

    def to_json(self) -> dict:
        return {
            "violating": sorted(self.violating),
            "uncertain": sorted(self.uncertain),
            "l0": self.l0,
            "l0_certified": self.l0_certified,
            "l_max": self.l_max,
        }


# ---------------------------------------------------------------------------
# enumeration primitive
# ---------------------------------------------------------------------------


def _supports_colex(n: int, w: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(n), w), key=lambda t: t[::-1])


def _np_parity(code: LinearCode) -> np.ndarray:
    return np.array(code.H.to_encodings(), dtype=np.int64).reshape(code.n - code.k, code.n)


def _syndrome_radix(q: int, r: int) -> np.ndarray:
    return np.array([q**i for i in range(r)], dtype=np.int64)


def _check_budget(code: LinearCode, cap: int, budget: int, what: str) -> int:
    vol = ball_volume(code.field.order, code.n, cap)
    if vol > budget:
        raise BudgetExceeded(vol, budget, what)
    n_syn = code.field.order ** (code.n - code.k)
    if n_syn > max(budget, 1 << 29):
        raise BudgetExceeded(n_syn, budget, "syndrome table")
    return vol


def _value_blocks(q: int, w: int) -> Iterator[tuple[int, int]]:
    total = (q - 1) ** w
    for lo in range(0, total, _CHUNK):
        yield lo, min(lo + _CHUNK, total)


def _np_value_digits(idx: np.ndarray, q: int, w: int) -> np.ndarray:
    """Nonzero value tuples for index block, canonical order (last coord fastest)."""
    vals = np.empty((idx.size, w), dtype=np.int64)
    for pos in range(w):
        vals[:, pos] = (idx // (q - 1) ** (w - 1 - pos)) % (q - 1) + 1
    return vals


def weight_counts(code: LinearCode, cap: int, budget: int = DEFAULT_BUDGET):
    """Per-syndrome weight histogram over B(n, cap).

    Returns a (q^(n-k), cap+1) int64 array for prime fields, or a dict
    syndrome -> list for extension fields.  cap = n enumerates the whole
    space (full coset profiles).
    """
    _check_budget(code, cap, budget, "weight profile")
    if code.field.is_prime_field:
        return _weight_counts_prime(code, cap)
    return _weight_counts_generic(code, cap)


def _weight_counts_prime(code: LinearCode, cap: int) -> np.ndarray:
    q, n, r = code.field.p, code.n, code.n - code.k
    H = _np_parity(code)
    radix = _syndrome_radix(q, r)
    n_syn = q**r
    # big tables (GF(73) has 73^4 syndromes) get int32 to stay in memory
    dtype = np.int64 if n_syn * (cap + 1) <= (1 << 27) else np.int32
    counts = np.zeros((n_syn, cap + 1), dtype=dtype, order="F")
    counts[0, 0] = 1  # the zero vector
    for w in range(1, cap + 1):
        col = counts[:, w]
        for sup in itertools.combinations(range(n), w):
            Hsub = H[:, sup]  # r x w
            for lo, hi in _value_blocks(q, w):
                idx = np.arange(lo, hi, dtype=np.int64)
                vals = _np_value_digits(idx, q, w)
                syn = vals @ Hsub.T % q
                keys = syn @ radix
                np.add(col, np.bincount(keys, minlength=n_syn), out=col, casting="unsafe")
    return counts


def _weight_counts_generic(code: LinearCode, cap: int) -> dict[int, list[int]]:
    field, n = code.field, code.n
    lv = field.level
    q = field.order
    Hcols = list(zip(*code.H.data)) if code.H.rows else [() for _ in range(n)]
    counts: dict[int, list[int]] = {}
    nonzero = [lv.decode(v) for v in range(1, q)]
    r = code.n - code.k

    def key_of(syn_reps) -> int:
        key = 0
        for s in reversed(syn_reps):
            key = key * q + lv.encode(s)
        return key

    zero_syn = key_of((lv.zero,) * r)
    counts.setdefault(zero_syn, [0] * (cap + 1))[0] = 1
    for w in range(1, cap + 1):
        for sup in itertools.combinations(range(n), w):
            cols = [Hcols[j] for j in sup]
            for vals in itertools.product(nonzero, repeat=w):
                syn = [lv.zero] * r
                for v, col in zip(vals, cols):
                    for i in range(r):
                        if col[i] != lv.zero:
                            syn[i] = lv.add(syn[i], lv.mul(v, col[i]))
                k = key_of(syn)
                if k not in counts:
                    counts[k] = [0] * (cap + 1)
                counts[k][w] += 1
    return counts


def vectors_with_syndrome(code: LinearCode, syndrome_key: int, cap: int,
                          limit: int, budget: int = DEFAULT_BUDGET
                          ) -> list[tuple[int, ...]]:
    """First `limit` vectors of the coset, enumeration order, weight <= cap."""
    _check_budget(code, cap, budget, "witness extraction")
    q, n = code.field.order, code.n
    out: list[tuple[int, ...]] = []
    if syndrome_key == 0 and limit > len(out):
        out.append(tuple([0] * n))
    if code.field.is_prime_field:
        H = _np_parity(code)
        radix = _syndrome_radix(q, code.n - code.k)
        for w in range(1, cap + 1):
            for sup in _supports_colex(n, w):
                Hsub = H[:, sup]
                for lo, hi in _value_blocks(q, w):
                    idx = np.arange(lo, hi, dtype=np.int64)
                    vals = _np_value_digits(idx, q, w)
                    keys = (vals @ Hsub.T % q) @ radix
                    hits = np.flatnonzero(keys == syndrome_key)
                    for h in hits:
                        vec = [0] * n
                        for pos, j in enumerate(sup):
                            vec[j] = int(vals[h, pos])
                        out.append(tuple(vec))
                        if len(out) >= limit:
                            return out
            if len(out) >= limit:
                return out
        return out
    # generic path
    lv = code.field.level
    nonzero = list(range(1, q))
    for w in range(1, cap + 1):
        for sup in _supports_colex(n, w):
            for vals in itertools.product(nonzero, repeat=w):
                vec = [0] * n
                for pos, j in enumerate(sup):
                    vec[j] = vals[pos]
                if code.syndrome_key(vec) == syndrome_key:
                    out.append(tuple(vec))
                    if len(out) >= limit:
                        return out
    return out


def _counts_items(counts) -> Iterator[tuple[int, Sequence[int]]]:
    """(syndrome, histogram) pairs with at least one vector."""
    if isinstance(counts, dict):
        yield from sorted(counts.items())
    else:
        totals = counts.sum(axis=1)
        for s in np.flatnonzero(totals):
            yield int(s), counts[s]


# ---------------------------------------------------------------------------
# spec operations
# ---------------------------------------------------------------------------


def profile_cosets(code: LinearCode, mode: str = "full", weight_cap: int | None = None,
                   list_cap: int | None = None, budget: int = DEFAULT_BUDGET
                   ) -> dict[int, CosetProfile]:
    """Bucket the ambient space (or a ball) by syndrome.

    mode "full" enumerates all q^n vectors and returns complete weight
    distributions; mode "capped" enumerates B(n, weight_cap) and returns
    per-coset lightest-weight lists truncated to list_cap entries.
    """
    n, q = code.n, code.field.order
    if mode == "full":
        counts = weight_counts(code, n, budget)
        profiles = {}
        size = q**code.k
        if isinstance(counts, dict):
            items = sorted(counts.items())
        else:
            items = ((int(s), counts[s]) for s in range(counts.shape[0]))
        for s, hist in items:
            profiles[s] = CosetProfile(
                syndrome=s,
                weight_distribution=tuple(int(x) for x in hist),
                vector_count=size,
            )
        return profiles
    if mode != "capped":
        raise ValueError(f"mode must be 'full' or 'capped', got {mode!r}")
    if weight_cap is None:
        raise ValueError("capped mode needs weight_cap")
    list_cap = list_cap if list_cap is not None else 64
    n_syn = q ** (code.n - code.k)
    if n_syn > budget:
        raise BudgetExceeded(n_syn, budget, "profile table")
    counts = weight_counts(code, weight_cap, budget)
    profiles = {}
    if isinstance(counts, dict):
        items = sorted(counts.items())
    else:
        items = ((int(s), counts[s]) for s in range(counts.shape[0]))
    for s, hist in items:
        t = int(sum(hist))
        weights = []
        for w, c in enumerate(hist):
            take = min(int(c), list_cap - len(weights))
            weights.extend([w] * take)
            if len(weights) >= list_cap:
                break
        profiles[s] = CosetProfile(
            syndrome=s,
            lightest_weights=tuple(weights),
            tail_above_cap=(t <= list_cap),
            vector_count=t,
        )
    return profiles


def is_list_decodable(code: LinearCode, tau: int, L: int,
                      budget: int = DEFAULT_BUDGET) -> tuple[bool, Witness | None]:
    """No syndrome bucket of B(n, tau) may hold more than L vectors.

    The witness (L+1 vectors of one coset, all of weight <= tau) is the
    enumeration-order-first one: buckets are filled weight-major / support
    colex / value order and the first bucket to exceed L wins.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    _check_budget(code, tau, budget, "list-decodability test")
    q, n, r = code.field.order, code.n, code.n - code.k
    if code.field.is_prime_field:
        H = _np_parity(code)
        radix = _syndrome_radix(q, r)
        n_syn = q**r
        counts = np.zeros(n_syn, dtype=np.int64)
        counts[0] = 1
        for w in range(1, tau + 1):
            for sup in _supports_colex(n, w):
                Hsub = H[:, sup]
                for lo, hi in _value_blocks(q, w):
                    idx = np.arange(lo, hi, dtype=np.int64)
                    vals = _np_value_digits(idx, q, w)
                    keys = (vals @ Hsub.T % q) @ radix
                    block = np.bincount(keys, minlength=n_syn)
                    counts += block
                    over = np.flatnonzero(counts > L)
                    if over.size:
                        # earliest crossing inside this block decides the witness
                        best = None
                        for s in over:
                            needed = int(L + 1 - (counts[s] - block[s]))
                            pos = np.flatnonzero(keys == s)[needed - 1]
                            if best is None or pos < best[0]:
                                best = (int(pos), int(s))
                        syn = best[1]
                        vecs = vectors_with_syndrome(code, syn, tau, L + 1, budget)
                        return False, Witness(
                            kind="coset-vectors",
                            vectors=tuple(vecs),
                            syndrome=syn,
                            violated={"list_size": L, "radius": tau,
                                      "bucket_size": int(counts[syn])},
                        )
        return True, None
    # generic fallback
    counts = weight_counts(code, tau, budget)
    for s, hist in sorted(counts.items()):
        if sum(hist) > L:
            vecs = vectors_with_syndrome(code, s, tau, L + 1, budget)
            return False, Witness(
                kind="coset-vectors", vectors=tuple(vecs), syndrome=s,
                violated={"list_size": L, "radius": tau, "bucket_size": int(sum(hist))},
            )
    return True, None


def _strong_cap(code: LinearCode, T: int, L: int) -> int:
    """Weight bound for members of a violating (L+1)-tuple.

    Any two distinct same-coset vectors differ by a nonzero codeword, so
    their weights sum to at least d; pairing up the other L vectors gives
    w_i <= T - floor(L/2) d.  Falls back to T when d is unknown.
    """
    cap = min(code.n, T)
    d = code._d
    if d is None and code._mds:
        d = code.n - code.k + 1
    if d is not None:
        cap = min(cap, T - (L // 2) * d)
    return cap


def is_strongly_list_decodable(code: LinearCode, T: int, L: int,
                               budget: int = DEFAULT_BUDGET
                               ) -> tuple[bool, Witness | None]:
    """Average-radius test: every L+1 distinct same-coset vectors must have
    weight sum exceeding T (T encodes (L+1)*tau exactly).

    Only vectors of weight <= cap can participate in a violation, where cap
    is min(n, T) tightened by the minimum distance when known, so the
    enumeration stays on B(n, cap).
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    if T < 0:
        return True, None
    cap = _strong_cap(code, T, L)
    if cap < 0:
        return True, None
    counts = weight_counts(code, cap, budget)
    best = None  # (sum, syndrome)
    for s, hist in _counts_items(counts):
        t = int(sum(hist))
        if t < L + 1:
            continue
        # sum of the L+1 lightest weights
        remaining = L + 1
        total = 0
        for w, c in enumerate(hist):
            take = min(int(c), remaining)
            total += take * w
            remaining -= take
            if remaining == 0:
                break
        if total <= T and (best is None or (total, s) < best):
            best = (total, int(s))
    if best is None:
        return True, None
    total, syn = best
    vecs = vectors_with_syndrome(code, syn, cap, L + 1, budget)
    return False, Witness(
        kind="coset-vectors",
        vectors=tuple(vecs),
        syndrome=syn,
        violated={"weight_sum": total, "bound": T, "list_size": L},
    )


def is_lightly_list_decodable_bruteforce(code: LinearCode, T: int, L: int,
                                         budget: int = DEFAULT_BUDGET,
                                         weight_cap: int | None = None
                                         ) -> tuple[bool, Witness | None]:
    """Disjoint-support variant, exhausted over (L+1)-tuples per coset.

    A violation needs L+1 nonzero same-coset vectors with pairwise disjoint
    supports, each of weight <= d-1, total weight <= T.  weight_cap
    overrides the d-1 member bound for experimentation.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    d = code._d if code._d is not None else min_distance(code, budget)
    member_cap = d - 1 if weight_cap is None else weight_cap
    cap = min(member_cap, T - L, code.n)  # the other L members weigh >= 1 each
    if cap < 1:
        return True, None
    _check_budget(code, cap, budget, "light list-decodability test")
    buckets: dict[int, list[tuple[int, int, tuple[int, ...]]]] = {}
    for key, wt, mask, vec in _ball_vectors_keyed(code, cap):
        buckets.setdefault(key, []).append((wt, mask, vec))
    for key in sorted(buckets):
        found = _disjoint_tuple_search(buckets[key], L + 1, T)
        if found is not None:
            vecs = tuple(item[2] for item in found)
            return False, Witness(
                kind="coset-vectors",
                vectors=vecs,
                syndrome=key,
                violated={"weight_sum": sum(item[0] for item in found), "bound": T,
                          "list_size": L},
            )
    return True, None


def _ball_vectors_keyed(code: LinearCode, cap: int) -> Iterator[tuple]:
    """(syndrome_key, weight, support_mask, vector) over nonzero B(n, cap),
    in enumeration order."""
    q, n = code.field.order, code.n
    if code.field.is_prime_field:
        H = _np_parity(code)
        radix = _syndrome_radix(q, code.n - code.k)
        for w in range(1, cap + 1):
            for sup in _supports_colex(n, w):
                mask = 0
                for j in sup:
                    mask |= 1 << j
                Hsub = H[:, sup]
                for lo, hi in _value_blocks(q, w):
                    idx = np.arange(lo, hi, dtype=np.int64)
                    vals = _np_value_digits(idx, q, w)
                    keys = (vals @ Hsub.T % q) @ radix
                    for row, key in enumerate(keys.tolist()):
                        vec = [0] * n
                        for pos, j in enumerate(sup):
                            vec[j] = int(vals[row, pos])
                        yield key, w, mask, tuple(vec)
        return
    for w in range(1, cap + 1):
        for sup in _supports_colex(n, w):
            mask = 0
            for j in sup:
                mask |= 1 << j
            for vals in itertools.product(range(1, q), repeat=w):
                vec = [0] * n
                for pos, j in enumerate(sup):
                    vec[j] = vals[pos]
                yield code.syndrome_key(vec), w, mask, tuple(vec)


def _disjoint_tuple_search(items: list, size: int, T: int):
    """First (in enumeration order) `size`-subset with pairwise-disjoint
    supports and weight sum <= T; items are (weight, mask, vec) in order."""
    m = len(items)
    if m < size:
        return None
    # suffix minimal weights for pruning: items are weight-sorted already
    chosen: list = []

    def dfs(start: int, used_mask: int, weight: int):
        if len(chosen) == size:
            return list(chosen)
        need = size - len(chosen)
        for i in range(start, m - need + 1):
            wt, mask, vec = items[i]
            # remaining picks are at least as heavy as item i each
            if weight + wt + (need - 1) * wt > T:
                return None
            if mask & used_mask:
                continue
            chosen.append(items[i])
            hit = dfs(i + 1, used_mask | mask, weight + wt)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return dfs(0, 0, 0)


def l_mds_profile(code: LinearCode, l_max: int, budget: int = DEFAULT_BUDGET,
                  mode: str = "auto") -> LMdsReport:
    """Violating list sizes and the stabilization threshold L0.

    L is violating iff some coset has L+1 lightest weights summing to at
    most L(n-k).  Weights above n-k only help, so a capped profile at
    weight_cap = n-k decides every L exactly for the light range and
    certifies the tail by the +1-per-step deficit argument; a full profile
    (q^n within budget) makes everything exact.
    """
    n, k, q = code.n, code.k, code.field.order
    nk = n - k
    full_cost = q**n
    if mode == "auto":
        mode = "full" if full_cost <= budget else "capped"
    if mode == "full":
        counts = weight_counts(code, n, budget)
        exact_tail = True
    else:
        counts = weight_counts(code, nk, budget)
        exact_tail = False

    violating: set[int] = set()
    uncertain: set[int] = set()
    max_violating = 0
    max_uncertain = 0
    for s in _flag_cosets(counts, nk):
        hist = counts[s]
        j_lo, j_hi, unc_hi = _violation_range(list(hist), nk, exact_tail)
        if j_lo is None:
            continue
        # tuple size j violates the L = j-1 test
        violating.update(range(max(1, j_lo - 1), j_hi - 1))
        max_violating = max(max_violating, j_hi - 2)
        if unc_hi is not None:
            uncertain.update(range(max(1, j_hi - 1), unc_hi - 1))
            max_uncertain = max(max_uncertain, unc_hi - 2)
    uncertain -= violating
    top = max(max_violating, max_uncertain)
    l0 = top + 1 if top else 1
    certified = exact_tail or not uncertain
    return LMdsReport(
        violating={L for L in violating if L <= l_max},
        uncertain={L for L in uncertain if L <= l_max},
        l0=l0,
        l0_certified=certified,
        l_max=l_max,
    )


def _flag_cosets(counts, nk: int) -> list[int]:
    """Syndromes whose light-range deficit can reach zero (g(t) <= 0)."""
    if isinstance(counts, dict):
        out = []
        for s, hist in counts.items():
            light = hist[: nk + 1]
            t = sum(light)
            S = sum(w * c for w, c in enumerate(light))
            if t >= 2 and S <= (t - 1) * nk:
                out.append(s)
        return sorted(out)
    light = counts[:, : nk + 1]
    t = light.sum(axis=1)
    S = light @ np.arange(nk + 1, dtype=np.int64)
    mask = (t >= 2) & (S <= (t - 1) * nk)
    return [int(s) for s in np.flatnonzero(mask)]


def _violation_range(hist: list[int], nk: int, exact_tail: bool):
    """Contiguous range of violating j (tuple sizes) for one coset.

    Works on the sorted weight list implied by the histogram.  g(j) =
    (sum of j lightest) - (j-1)*nk is convex, so {g <= 0} is an interval.
    Returns (j_lo, j_hi_exclusive, uncertain_hi_exclusive|None).
    """
    weights: list[int] = []
    for w, c in enumerate(hist):
        weights.extend([w] * int(c))
    t = len(weights)
    g = 0
    j_lo = None
    j_hi = 1
    prefix = 0
    for j in range(1, t + 1):
        prefix += weights[j - 1]
        g = prefix - (j - 1) * nk
        if g <= 0 and j >= 2:
            if j_lo is None:
                j_lo = j
            j_hi = j + 1
        if j_lo is not None and weights[j - 1] > nk and g > 0:
            break  # convex and rising: no further violations
    if not exact_tail and t >= 2:
        # capped histogram: unseen vectors weigh >= nk+1, so g grows by at
        # least 1 per extra pick; violations could persist while g <= 0
        g_t = sum(weights) - (t - 1) * nk
        if g_t <= 0:
            unc_hi = t + (-g_t) + 1  # j in (t, t - g_t], exclusive bound
            return j_lo, j_hi, unc_hi
    return j_lo, j_hi, None


def bonneau_check(code: LinearCode, budget: int = DEFAULT_BUDGET) -> bool:
    """MacWilliams-type identity on every coset of an MDS code:
    sum_{w=0}^{n-k} C(n-w, k) A_w = C(n, k)."""
    if not is_mds(code):
        raise NotMDS("the coset identity requires an MDS code")
    n, k = code.n, code.k
    counts = weight_counts(code, n - k, budget)
    target = comb(n, k)
    coeffs = [comb(n - w, k) for w in range(n - k + 1)]
    if isinstance(counts, dict):
        sums = {s: sum(c * a for c, a in zip(coeffs, hist)) for s, hist in counts.items()}
        return all(v == target for v in sums.values())
    vec = np.array(coeffs, dtype=np.int64)
    sums = counts[:, : n - k + 1] @ vec
    return bool(np.all(sums == target))
