"""Determinant machinery for higher-order MDS testing.

The block matrix M stacks -(H)_{J_0} down its first block column with
(H)_{J_m} on the diagonal; its nonsingularity over all admissible disjoint
subset tuples characterizes light list-decodability, and via puncturing the
full 2-MDS property.  The companion generalized Sylvester matrix S packs
the same information into a rho x rho matrix of shifted coefficient rows of
the block polynomials sigma_m(z) = prod (z - x_l).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from . import matgf
from .codes import LinearCode, dual, grs, is_mds, make_code, mds_witness, puncture
from .cosets import Witness
from .errors import IndexOutOfRange, NotMDS, PreconditionRate, RankDeficient, SpecViolation
from .fields import FieldCtx, FieldElement
from .matgf import GFMatrix


# ---------------------------------------------------------------------------
# partitions and block matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionSpec:
    """A partition (rho_0 <= ... <= rho_L) of L*rho with L <= rho_0, rho_L < rho.

    The consecutive index blocks Upsilon_m partition [sum rho_m]; block m
    holds the variables of the m-th subset in the block-matrix tests.
    """

    rho: int
    parts: tuple[int, ...]

    def __post_init__(self):
        L = len(self.parts) - 1
        if L < 1:
            raise SpecViolation("need at least two parts")
        if sum(self.parts) != L * self.rho:
            raise SpecViolation(f"parts must sum to {L}*rho = {L * self.rho}")
        if list(self.parts) != sorted(self.parts):
            raise SpecViolation("parts must be nondecreasing")
        if self.parts[0] < L:
            raise SpecViolation(f"smallest part must be at least L = {L}")
        if self.parts[-1] >= self.rho:
            raise SpecViolation("parts must stay below rho")

    @property
    def list_size(self) -> int:
        return len(self.parts) - 1

    @property
    def size(self) -> int:
        return sum(self.parts)

    def blocks(self) -> list[range]:
        out = []
        at = 0
        for p in self.parts:
            out.append(range(at, at + p))
            at += p
        return out


def admissible_partitions(rho: int, L: int = 2) -> list[tuple[int, ...]]:
    """All (rho_0 <= ... <= rho_L) summing to L*rho with L <= rho_0, rho_L < rho."""
    out = []
    for parts in itertools.combinations_with_replacement(range(L, rho), L + 1):
        if sum(parts) == L * rho:
            out.append(parts)
    return out


def build_M(H: GFMatrix, subsets: Sequence[Sequence[int]]) -> GFMatrix:
    """Block matrix with -(H)_{J_0} down the first block column and
    (H)_{J_m} on the diagonal; L*rows(H) rows, sum |J_m| columns."""
    n = H.cols
    for J in subsets:
        for j in J:
            if not 0 <= j < n:
                raise IndexOutOfRange(f"column {j} outside [0, {n})")
    L = len(subsets) - 1
    if L < 1:
        raise SpecViolation("need at least two subsets")
    field = H.field
    rho = H.rows
    negJ0 = H.select_columns(tuple(subsets[0])).neg()
    blocks = [H.select_columns(tuple(J)) for J in subsets[1:]]
    widths = [b.cols for b in blocks]
    z = field.level.zero
    rows = []
    for m in range(L):
        for i in range(rho):
            row = list(negJ0.data[i])
            for b_idx, blk in enumerate(blocks):
                if b_idx == m:
                    row.extend(blk.data[i])
                else:
                    row.extend([z] * widths[b_idx])
            rows.append(tuple(row))
    return GFMatrix(field, tuple(rows))


def build_M_alt(H: GFMatrix, subsets: Sequence[Sequence[int]]) -> GFMatrix:
    """The symmetric variant with identity blocks in the first block column;
    when M is square the two determinants coincide."""
    field = H.field
    rho = H.rows
    L = len(subsets) - 1
    ident = GFMatrix.identity(field, rho)
    blocks = [H.select_columns(tuple(J)) for J in subsets]
    widths = [b.cols for b in blocks]
    z = field.level.zero
    rows = []
    for m in range(L + 1):
        for i in range(rho):
            row = list(ident.data[i])
            for b_idx, blk in enumerate(blocks):
                if b_idx == m:
                    row.extend(blk.data[i])
                else:
                    row.extend([z] * widths[b_idx])
            rows.append(tuple(row))
    return GFMatrix(field, tuple(rows))


def vandermonde_rows(field: FieldCtx, points: Sequence, rho: int) -> GFMatrix:
    """(x_l^i) with i in [0:rho-1] down the rows."""
    els = [field.element(x) for x in points]
    rows = []
    powers = [field.one] * len(els)
    for _ in range(rho):
        rows.append(list(powers))
        powers = [p * x for p, x in zip(powers, els)]
    return GFMatrix.from_rows(field, rows)


def moment_matrix(spec: PartitionSpec, field: FieldCtx, x: Sequence) -> GFMatrix:
    """M_rho(x): build_M applied to the Vandermonde rows of the assignment."""
    if len(x) != spec.size:
        raise SpecViolation(f"need {spec.size} assignments, got {len(x)}")
    H = vandermonde_rows(field, x, spec.rho)
    return build_M(H, [tuple(b) for b in spec.blocks()])


def build_S(spec: PartitionSpec, field: FieldCtx, x: Sequence) -> GFMatrix:
    """Generalized Sylvester matrix: stacked shifted coefficient rows of the
    block polynomials sigma_m(z) = prod_{l in block m} (z - x_l)."""
    if len(x) != spec.size:
        raise SpecViolation(f"need {spec.size} assignments, got {len(x)}")
    els = [field.element(v) for v in x]
    rho = spec.rho
    rows = []
    for blk, pm in zip(spec.blocks(), spec.parts):
        # sigma coefficients sigma_{m,0}=1 .. sigma_{m,pm}, highest power first
        sigma = [field.one]
        for l in blk:
            xl = els[l]
            new = [field.zero] * (len(sigma) + 1)
            for i, c in enumerate(sigma):
                new[i] = new[i] + c
                new[i + 1] = new[i + 1] - c * xl
            sigma = new
        for shift in range(rho - pm):
            row = [field.zero] * shift + sigma + [field.zero] * (rho - pm - shift - 1)
            rows.append(row)
    return GFMatrix.from_rows(field, rows)


def n_rho(spec: PartitionSpec) -> int:
    """Number of monomials in the Leibniz expansion of det(M_rho(x))."""
    rho = spec.rho
    total = factorial(rho)
    for pm in spec.parts:
        total = total * factorial(pm) // factorial(rho - pm)
    return total


def n_cap(rho: int) -> int:
    """N(rho) = half the maximal monomial count over admissible partitions."""
    if rho < 3:
        raise SpecViolation("rho must be at least 3")
    best = 0
    for parts in admissible_partitions(rho, 2):
        best = max(best, n_rho(PartitionSpec(rho, parts)))
    assert best % 2 == 0
    return best // 2


def det_s_monomials(spec: PartitionSpec, field: FieldCtx, x: Sequence) -> FieldElement:
    """Independent evaluation of det(S) for rho=3, (2,2,2): the sum of the 12
    signed monomials x_j * prod_{l in block m} x_l with j outside block m."""
    if spec.rho != 3 or spec.parts != (2, 2, 2):
        raise SpecViolation("monomial expansion is specific to rho=3, (2,2,2)")
    els = [field.element(v) for v in x]
    blocks = spec.blocks()
    total = field.zero
    for m in range(3):
        prod = field.one
        for l in blocks[m]:
            prod = prod * els[l]
        for j in blocks[(m + 1) % 3]:
            total = total + els[j] * prod
        for j in blocks[(m + 2) % 3]:
            total = total - els[j] * prod
    return total


def sylvester_equiv_check(spec: PartitionSpec, field: FieldCtx, x: Sequence) -> bool:
    """Whether [det M != 0] agrees with [det S != 0 and in-block entries
    distinct]; expected to hold identically."""
    detM = matgf.det(moment_matrix(spec, field, x))
    detS = matgf.det(build_S(spec, field, x))
    els = [field.element(v).encoding for v in x]
    distinct = all(
        len({els[l] for l in blk}) == len(blk) for blk in spec.blocks()
    )
    return bool(detM) == (bool(detS) and distinct)


def conjecture_residual(spec: PartitionSpec, field: FieldCtx, x: Sequence) -> FieldElement:
    """det(M) - (-1)^s * det(S) * prod of in-block Vandermonde differences.

    Zero at every evaluation supports the conjectured factorization; this
    reports evidence and never asserts.
    """
    els = [field.element(v) for v in x]
    detM = matgf.det(moment_matrix(spec, field, x))
    gamma = matgf.det(build_S(spec, field, x))
    for blk in spec.blocks():
        for l, lp in itertools.combinations(blk, 2):
            gamma = gamma * (els[lp] - els[l])
    s = spec.rho * sum(spec.rho - pm for m, pm in enumerate(spec.parts) if m % 2 == 1)
    if s % 2 == 1:
        gamma = -gamma
    return detM - gamma


# ---------------------------------------------------------------------------
# lightly-2-MDS and 2-MDS testers
# ---------------------------------------------------------------------------


def _disjoint_triples(n: int, parts: tuple[int, int, int]):
    """Unordered triples of disjoint subsets with the given sizes, blocks
    ordered by (size, colex rank of support)."""
    a, b, c = parts

    def colex_key(t):
        return t[::-1]

    for J0 in sorted(itertools.combinations(range(n), a), key=colex_key):
        rest0 = [j for j in range(n) if j not in set(J0)]
        for J1 in sorted(itertools.combinations(rest0, b), key=colex_key):
            if a == b and colex_key(J1) < colex_key(J0):
                continue
            taken = set(J0) | set(J1)
            rest1 = [j for j in rest0 if j not in set(J1)]
            for J2 in sorted(itertools.combinations(rest1, c), key=colex_key):
                if b == c and colex_key(J2) < colex_key(J1):
                    continue
                yield J0, J1, J2


def lightly_2mds_det(code: LinearCode) -> tuple[bool, Witness | None]:
    """Determinant characterization of the lightly-2-MDS property.

    Valid for MDS codes of rate >= 1/2: the code is lightly-2-MDS iff
    M_{J0,J1,J2}(H) is nonsingular for every unordered triple of disjoint
    subsets with 2 <= |J_m| <= n-k-1, sum |J_m| = 2(n-k) (sizes of any two
    then automatically sum to >= n-k+1).
    """
    n, k = code.n, code.k
    if 2 * k < n:
        raise PreconditionRate(f"rate {k}/{n} below 1/2")
    if not is_mds(code):
        raise NotMDS("determinant test requires an MDS code")
    rho = n - k
    for parts in admissible_partitions(rho, 2):
        for triple in _disjoint_triples(n, parts):
            M = build_M(code.H, triple)
            if not matgf.det(M):
                return False, Witness(
                    kind="subset-triple",
                    subsets=tuple(tuple(J) for J in triple),
                    violated={"det": 0, "matrix_order": 2 * rho},
                )
    return True, None


def _gf2_2mds(code: LinearCode) -> tuple[bool, Witness | None]:
    """Binary classification of the 2-MDS property.

    Codes with k = 1 have cosets of size 2, so the three-vector condition
    is vacuous; k = n is MDS; for k = n-1 a violation needs two weight-1
    vectors in the trivial coset, i.e. two zero parity columns.  For
    2 <= k <= n-2 a violating triple always exists and is produced from a
    systematic generator matrix by a three-way case split on the number of
    zero entries in its non-pivot part.
    """
    n, k = code.n, code.k
    if k == 1 or k == n:
        return True, None
    if k == n - 1:
        z = code.field.level.zero
        zero_cols = [j for j in range(n) if all(row[j] == z for row in code.H.data)]
        if len(zero_cols) <= 1:
            return True, None
        a, b = zero_cols[:2]
        e0 = tuple([0] * n)
        e1 = tuple(1 if j == a else 0 for j in range(n))
        e2 = tuple(1 if j == b else 0 for j in range(n))
        return False, Witness(
            kind="coset-vectors", vectors=(e0, e1, e2), syndrome=0,
            violated={"weight_sum": 2, "bound": 2, "list_size": 2},
        )
    R, pivots = matgf.rref(code.G)
    enc = code.field.level.encode
    rows = [[enc(x) for x in row] for row in R.data]
    piv_set = set(pivots)
    free_cols = [j for j in range(n) if j not in piv_set]
    zero_positions = [(i, j) for i in range(k) for j in free_cols if rows[i][j] == 0]

    def add(u, v):
        return tuple((a + b) % 2 for a, b in zip(u, v))

    if len(zero_positions) >= 2:
        # two zeros: the two rows involved (or any second row) are light enough
        i1 = zero_positions[0][0]
        i2 = zero_positions[1][0]
        if i1 == i2:
            i2 = next(i for i in range(k) if i != i1)
        e0 = tuple([0] * n)
        e1, e2 = tuple(rows[i1]), tuple(rows[i2])
    elif len(zero_positions) == 1:
        i1, j1 = zero_positions[0]
        i2 = next(i for i in range(k) if i != i1)
        e0 = tuple(1 if j in free_cols and j != j1 else 0 for j in range(n))
        e1, e2 = add(e0, rows[i1]), add(e0, rows[i2])
    else:
        e0 = tuple(1 if j in free_cols else 0 for j in range(n))
        e1, e2 = add(e0, rows[0]), add(e0, rows[1])
    wsum = sum(map(sum, (e0, e1, e2)))
    return False, Witness(
        kind="coset-vectors",
        vectors=(e0, e1, e2),
        syndrome=code.syndrome_key(e0),
        violated={"weight_sum": wsum, "bound": 2 * (n - k), "list_size": 2},
    )


def is_2mds(code: LinearCode) -> tuple[bool, Witness | None]:
    """Full 2-MDS test through the puncturing characterization.

    MDS codes with min(k, n-k) <= 2 are unconditionally 2-MDS; otherwise
    the code is 2-MDS iff puncturing on every w coordinates with
    max(0, n-2k) <= w <= n-k-3 leaves a lightly-2-MDS code.  Non-MDS codes
    over q > 2 are never 2-MDS; GF(2) uses its own classification.
    """
    n, k = code.n, code.k
    field = code.field
    if field.order == 2:
        return _gf2_2mds(code)
    if not is_mds(code):
        # three scalar multiples (0, c, 2c) of a weight <= n-k codeword violate
        _, cw = mds_witness(code)
        lv = field.level
        two = lv.decode(2)
        scaled = tuple(lv.encode(lv.mul(lv.decode(x), two)) if x else 0 for x in cw)
        return False, Witness(
            kind="coset-vectors",
            vectors=(tuple([0] * n), tuple(cw), scaled),
            syndrome=0,
            violated={"weight_sum": 2 * sum(1 for x in cw if x),
                      "bound": 2 * (n - k), "list_size": 2},
        )
    if min(k, n - k) <= 2:
        return True, None
    lo, hi = max(0, n - 2 * k), n - k - 3
    for w in range(lo, hi + 1):
        for J in sorted(itertools.combinations(range(n), w), key=lambda t: t[::-1]):
            sub = puncture(code, J)
            ok, wit = lightly_2mds_det(sub)
            if not ok:
                jp = [j for j in range(n) if j not in set(J)]
                mapped = tuple(tuple(jp[c] for c in block) for block in wit.subsets)
                return False, Witness(
                    kind="subset-triple",
                    subsets=mapped,
                    punctured=tuple(J),
                    violated=dict(wit.violated),
                )
    return True, None


def random_2mds_fraction(n: int, k: int, field: FieldCtx, samples: int, seed: int
                         ) -> dict:
    """Monte Carlo estimate of the fraction of non-2-MDS linear [n,k] codes.

    Samples uniform full-rank parity-check matrices (rank-deficient draws
    are rejected and redrawn) and runs the determinant-based tester.
    """
    rng = random.Random(seed)
    q = field.order
    bad = 0
    rejected = 0
    for _ in range(samples):
        while True:
            rows = [[rng.randrange(q) for _ in range(n)] for _ in range(n - k)]
            try:
                code = make_code(field, H=rows)
                break
            except RankDeficient:
                rejected += 1
        ok, _ = is_2mds(code)
        if not ok:
            bad += 1
    return {
        "n": n,
        "k": k,
        "q": q,
        "samples": samples,
        "seed": seed,
        "non_2mds": bad,
        "fraction": bad / samples,
        "rank_deficient_redraws": rejected,
    }
