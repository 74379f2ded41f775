"""Linear [n,k] codes over a FieldCtx.

A LinearCode always carries both a parity-check matrix H and a generator
matrix G with G H^T = 0; whichever was not supplied is derived as the
canonical kernel basis, so construction, duals and puncturings are fully
deterministic.  GRS codes additionally remember their locators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from . import matgf
from .errors import (
    BadParameters,
    DimensionDrop,
    LengthExceedsField,
    RankDeficient,
    RepeatedLocator,
    SearchBudgetExceeded,
    TooManyCoordinates,
    ZeroMultiplier,
)
from .fields import FieldCtx, FieldElement
from .matgf import GFMatrix

DEFAULT_DISTANCE_BUDGET = 10**8


@dataclass
class LinearCode:
    field: FieldCtx
    n: int
    k: int
    H: GFMatrix  # (n-k) x n, full rank
    G: GFMatrix  # k x n, full rank
    locators: tuple[int, ...] | None = None
    multipliers: tuple[int, ...] | None = None
    meta: dict = dc_field(default_factory=dict)
    _d: int | None = dc_field(default=None, repr=False)
    _mds: bool | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise BadParameters(f"need 1 <= k <= n, got [{self.n},{self.k}]")
        if self.H.rows != self.n - self.k or (self.H.rows and self.H.cols != self.n):
            raise BadParameters("parity-check matrix has wrong shape")
        if self.G.rows != self.k or self.G.cols != self.n:
            raise BadParameters("generator matrix has wrong shape")
        if not (self.G @ self.H.transpose()).is_zero():
            raise BadParameters("G H^T != 0")

    def __repr__(self):
        return f"[{self.n},{self.k}] code over {self.field.name}"

    def syndrome(self, vector: Sequence) -> tuple[int, ...]:
        """H e^T as a tuple of canonical encodings."""
        reps = self.H.apply_to_vector(vector)
        enc = self.field.level.encode
        return tuple(enc(x) for x in reps)

    def syndrome_key(self, vector: Sequence) -> int:
        """Syndrome packed into one integer, little-endian base q."""
        key = 0
        for s in reversed(self.syndrome(vector)):
            key = key * self.field.order + s
        return key

    def contains(self, vector: Sequence) -> bool:
        z = self.field.level.zero
        return all(x == z for x in self.H.apply_to_vector(vector))


def make_code(field: FieldCtx, H=None, G=None, *, locators=None, multipliers=None,
              meta=None) -> LinearCode:
    """Build a code from a full-rank H or G (the other side is derived)."""
    if H is None and G is None:
        raise BadParameters("need H or G")
    if H is not None and not isinstance(H, GFMatrix):
        H = GFMatrix.from_rows(field, H)
    if G is not None and not isinstance(G, GFMatrix):
        G = GFMatrix.from_rows(field, G)
    if H is not None:
        n = H.cols
        if matgf.rank(H) != H.rows:
            raise RankDeficient("parity-check matrix is rank deficient")
        k = n - H.rows
        if G is None:
            G = matgf.kernel(H, "right")
    else:
        n = G.cols
        if matgf.rank(G) != G.rows:
            raise RankDeficient("generator matrix is rank deficient")
        k = G.rows
        H = matgf.kernel(G, "right")
    if G.rows != k or matgf.rank(G) != k:
        raise RankDeficient("generator matrix is rank deficient")
    return LinearCode(field, n, k, H, G, locators=locators, multipliers=multipliers,
                      meta=dict(meta or {}))


def grs(field: FieldCtx, locators: Sequence, k: int, multipliers: Sequence | None = None
        ) -> LinearCode:
    """GRS code with H[i][j] = v_j a_j^i, i in [0:n-k-1].

    Locators must be distinct and multipliers nonzero; the all-ones default
    loses no generality for the list-decodability questions studied here.
    """
    locs = [field.element(a) for a in locators]
    n = len(locs)
    if n > field.order:
        raise LengthExceedsField(f"n={n} exceeds field size {field.order}")
    if len({a.encoding for a in locs}) != n:
        raise RepeatedLocator("locators must be pairwise distinct")
    if not 1 <= k < n:
        raise BadParameters(f"need 1 <= k < n, got k={k}, n={n}")
    if multipliers is None:
        mults = [field.one] * n
    else:
        mults = [field.element(v) for v in multipliers]
        if len(mults) != n:
            raise BadParameters("need one multiplier per locator")
        if any(not v for v in mults):
            raise ZeroMultiplier("multipliers must be nonzero")
    rows = []
    powers = [field.one] * n
    for _ in range(n - k):
        rows.append([v * p for v, p in zip(mults, powers)])
        powers = [p * a for p, a in zip(powers, locs)]
    H = GFMatrix.from_rows(field, rows)
    code = make_code(field, H=H,
                     locators=tuple(a.encoding for a in locs),
                     multipliers=tuple(v.encoding for v in mults))
    code._mds = True  # classical; is_mds(code, recheck=True) verifies on demand
    return code


def dual(code: LinearCode) -> LinearCode:
    """The dual code; H and G simply swap roles."""
    meta = {"dual_of": code.meta.get("label")} if code.meta.get("label") else {}
    return LinearCode(code.field, code.n, code.n - code.k, H=code.G, G=code.H, meta=meta)


def puncture(code: LinearCode, J: Iterable[int]) -> LinearCode:
    """Delete the coordinates in J; parity check realized as (P H)_{J'}.

    P is the canonical left-kernel basis of (H)_J, so the result is
    deterministic.  |J| = n-k is allowed (the punctured code is the full
    space, distance 1, flagged in meta); larger J is rejected.
    """
    J = sorted(set(J))
    n, k = code.n, code.k
    if any(not 0 <= j < n for j in J):
        raise BadParameters(f"puncture coordinates outside [0, {n})")
    if not J:
        return code
    w = len(J)
    if w > n - k:
        raise TooManyCoordinates(f"|J|={w} exceeds n-k={n - k}")
    Jp = [j for j in range(n) if j not in set(J)]
    Gp = code.G.select_columns(Jp)
    if matgf.rank(Gp) < k:
        raise DimensionDrop(f"puncturing on {J} drops the dimension below k={k}")
    HJ = code.H.select_columns(J)
    P = matgf.kernel(HJ, "left")
    Hstar = ((P @ code.H).select_columns(Jp) if P.rows
             else GFMatrix(code.field, (), cols=len(Jp)))
    Gstar, _ = matgf.rref(Gp)
    meta = {"punctured_on": tuple(J)}
    if w == n - k:
        meta["distance_one"] = True
    out = LinearCode(code.field, n - w, k, H=Hstar, G=Gstar, meta=meta)
    if code._mds:
        out._mds = True  # puncturing an MDS code on <= n-k coordinates stays MDS
        out._d = (n - w) - k + 1
    return out


def is_mds(code: LinearCode, *, recheck: bool = False) -> bool:
    """MDS test by column independence: every n-k columns of H have full rank."""
    if code._mds is not None and not recheck:
        return code._mds
    result = mds_witness(code) is None
    code._mds = result
    if result:
        code._d = code.n - code.k + 1
    return result


def mds_witness(code: LinearCode):
    """First (colex) dependent column set of size n-k with a kernel codeword.

    Returns None when the code is MDS, else (J, codeword-encodings) where
    the codeword is nonzero, supported inside J, so of weight <= n-k.
    """
    r = code.n - code.k
    if r == 0:
        return None
    field = code.field
    for J in sorted(itertools.combinations(range(code.n), r), key=lambda t: t[::-1]):
        sub = code.H.select_columns(J)
        ker = matgf.kernel(sub, "right")
        if ker.rows:
            enc = field.level.encode
            vec = [0] * code.n
            for pos, j in enumerate(J):
                vec[j] = enc(ker.data[0][pos])
            code._mds = False
            return tuple(J), tuple(vec)
    return None


def min_distance(code: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET,
                 use_cache: bool = True) -> int:
    """Exact minimum distance by message-space enumeration.

    With use_cache a previously certified value (e.g. n-k+1 from an MDS
    check) is returned directly; pass use_cache=False to force the brute
    enumeration oracle.
    """
    if use_cache and code._d is not None:
        return code._d
    q, k, n = code.field.order, code.k, code.n
    total = q**k
    if total > budget:
        raise SearchBudgetExceeded(total, budget)
    if code.field.is_prime_field:
        d = _min_distance_prime(code)
    else:
        d = _min_distance_generic(code)
    code._d = d
    return d


def _min_distance_prime(code: LinearCode) -> int:
    p, k, n = code.field.p, code.k, code.n
    G = np.array(code.G.to_encodings(), dtype=np.int64)
    total = p**k
    best = n + 1
    chunk = 1 << 20
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        msgs = np.empty((hi - lo, k), dtype=np.int64)
        for i in range(k):
            msgs[:, i] = (idx // p**i) % p
        words = msgs @ G % p
        wts = np.count_nonzero(words, axis=1)
        if lo == 0:
            wts = wts[1:]  # drop the zero message
        if wts.size:
            best = min(best, int(wts.min()))
    return best


def _min_distance_generic(code: LinearCode) -> int:
    field, k, n = code.field, code.k, code.n
    lv = field.level
    best = n + 1
    rows = code.G.data
    # iterate messages in canonical order, skip zero
    for msg_idx in range(1, field.order**k):
        m = msg_idx
        word = [lv.zero] * n
        for i in range(k):
            m, r = divmod(m, field.order)
            if r:
                c = lv.decode(r)
                row = rows[i]
                word = [lv.add(w, lv.mul(c, x)) for w, x in zip(word, row)]
        wt = sum(1 for x in word if x != lv.zero)
        if wt < best:
            best = wt
    return best


def random_full_rank_matrix(field: FieldCtx, rows: int, cols: int, rng) -> GFMatrix:
    """Uniform full-rank matrix by rejection (entries drawn row-major)."""
    while True:
        m = GFMatrix.from_rows(
            field, [[rng.randrange(field.order) for _ in range(cols)] for _ in range(rows)]
        )
        if matgf.rank(m) == rows:
            return m
