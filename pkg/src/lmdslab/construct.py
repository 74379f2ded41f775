"""Explicit 2-MDS GRS constructions over binary extension towers.

The locators come from a multiplicative Sidon set: shifts beta + b_j of an
element beta generating K over GF(2^h) have pairwise-distinct products over
equal-size multisets, and interpolation polynomials lambda_j through the
odd powers of beta_j turn that distinctness into nonvanishing determinants
for every block-matrix test.  Every "fix arbitrarily" choice is resolved to
canonical-encoding-first so reruns are bit-identical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

from . import matgf
from .codes import LinearCode, grs
from .errors import (
    BudgetExceeded,
    EvenH,
    Exhausted,
    FieldTooSmall,
    NoQualifyingBeta,
    ParameterTooSmall,
    RepeatedPoint,
    SpecViolation,
)
from .fields import (
    FieldCtx,
    FieldElement,
    lagrange_interpolate,
    make_field,
    not_in_proper_subfield,
    poly_eval_level,
)
from .hmds import PartitionSpec, build_S, n_cap


@dataclass
class ConstructionPlan:
    """Record of every choice made by a construction run."""

    rho: int
    h: int
    base_field: dict  # descriptor of K
    final_field: dict  # descriptor of F
    beta: int
    betas: tuple[int, ...]
    shifts: tuple[int, ...]  # b_j, canonical enumeration of GF(2^h)
    xis: tuple[int, ...]
    lambdas: tuple[tuple[int, ...], ...]  # coefficients over K, little-endian
    gamma: int
    mu: int | None
    n_points: int
    locators: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "rho": self.rho,
            "h": self.h,
            "base_field": self.base_field,
            "final_field": self.final_field,
            "beta": self.beta,
            "betas": list(self.betas),
            "shifts": list(self.shifts),
            "xis": list(self.xis),
            "lambdas": [list(l) for l in self.lambdas],
            "gamma": self.gamma,
            "mu": self.mu,
            "n_points": self.n_points,
            "locators": list(self.locators),
        }


def _base_subfield_size(K: FieldCtx, h: int) -> None:
    """K must be a binary tower whose first level is GF(2^h)."""
    if K.p != 2:
        raise SpecViolation("Sidon shifts need characteristic 2")
    if h == 1:
        if not K.steps:
            raise SpecViolation("[K:GF(2)] must be at least 2")
        return
    if not K.steps or K.steps[0][0] != h:
        raise SpecViolation(f"K must contain GF(2^{h}) as its base-extension level")
    if K.total_degree // h < 2:
        raise SpecViolation("[K:GF(2^h)] must be at least 2")


def sidon_elements(K: FieldCtx, h: int) -> tuple[FieldElement, list[FieldElement]]:
    """beta (first canonical element outside every proper subfield) and the
    2^h shifted elements beta_j = beta + b_j over GF(2^h)'s enumeration."""
    _base_subfield_size(K, h)
    beta = None
    for el in K.enumerate_range():
        if not_in_proper_subfield(K, el):
            beta = el
            break
    if beta is None:
        raise NoQualifyingBeta("no generator found (impossible for [K:base] >= 2)")
    betas = []
    for j in range(2**h):
        bj = beta + K.element(j)  # encodings < 2^h are exactly the subfield
        if not bj:
            raise NoQualifyingBeta("a shifted element vanished (impossible)")
        betas.append(bj)
    return beta, betas


def verify_sidon(betas: list[FieldElement], multiset_size: int,
                 budget: int = 10**7) -> bool:
    """Products over equal-size multisets are pairwise distinct."""
    n = len(betas)
    count = comb(n + multiset_size - 1, multiset_size)
    if count > budget:
        raise BudgetExceeded(count, budget, "Sidon verification")
    seen: dict[int, tuple] = {}
    for combo in itertools.combinations_with_replacement(range(n), multiset_size):
        prod = betas[0].field.one
        for i in combo:
            prod = prod * betas[i]
        key = prod.encoding
        if key in seen and seen[key] != combo:
            return False
        seen[key] = combo
    return True


def interpolation_polys(K: FieldCtx, betas: list[FieldElement],
                        xis: list[FieldElement]) -> list[tuple[int, ...]]:
    """Lagrange polynomials lambda_j with lambda_j(xi_i) = beta_j^(2i-1),
    degree < len(xis); coefficients returned as canonical encodings.

    Every value is re-verified after interpolation.
    """
    N = len(xis)
    if len({x.encoding for x in xis}) != N:
        raise RepeatedPoint("interpolation nodes must be distinct")
    lv = K.level
    xs = [x.rep for x in xis]
    out = []
    for bj in betas:
        ys = [(bj ** (2 * i - 1)).rep for i in range(1, N + 1)]
        coeffs = lagrange_interpolate(lv, xs, ys)
        for x, y in zip(xs, ys):
            if poly_eval_level(lv, coeffs, x) != y:
                raise AssertionError("interpolation self-check failed")
        coeffs = list(coeffs) + [lv.zero] * (N - len(coeffs))
        out.append(tuple(lv.encode(c) for c in coeffs))
    return out


def _lift_and_evaluate(F_ctx: FieldCtx, K: FieldCtx, lambdas, gamma: FieldElement
                       ) -> list[FieldElement]:
    """Evaluate K-coefficient polynomials at gamma inside the extension F.

    K elements embed into the tower F with unchanged encodings (they are
    the constant coefficient vectors), so coefficients lift verbatim.
    """
    lvF = F_ctx.level
    locators = []
    for coeffs in lambdas:
        acc = lvF.zero
        for c in reversed(coeffs):
            acc = lvF.add(lvF.mul(acc, gamma.rep), lvF.decode(c))
        locators.append(FieldElement(F_ctx, acc))
    return locators


def _tower_steps(K: FieldCtx) -> list:
    return [(d, mod) for d, mod in K.steps]


def rho3_construction(h: int) -> tuple[LinearCode, ConstructionPlan]:
    """Fine-tuned redundancy-3 construction: a [2^h, 2^h - 3] GRS code over
    GF(2^(32h)) that is 2-MDS, for odd h >= 3.

    K = GF(2^(2h)) over GF(2^h); six interpolation points; the final field
    extends K by the degree-16 polynomial x^16 + x^3 + x^2 + w with w the
    canonical cube root of unity (irreducible over K since h is odd, which
    the field constructor re-verifies).
    """
    if h % 2 == 0:
        raise EvenH(f"h = {h} must be odd")
    if h < 3:
        raise ParameterTooSmall(f"h = {h} must be at least 3")
    n = 2**h
    K = make_field(2, [(h, None), (2, None)])
    beta, betas = sidon_elements(K, h)
    omega = None
    for el in K.enumerate_range():
        if el * el + el + 1 == K.zero:
            omega = el
            break
    assert omega is not None  # 3 divides 2^(2h) - 1
    modulus = [omega.encoding, 0, 1, 1] + [0] * 12 + [1]
    F_ctx = make_field(2, _tower_steps(K) + [(16, tuple(modulus))])
    xis = [K.element(i) for i in range(6)]
    lambdas = interpolation_polys(K, betas, xis)
    gamma = F_ctx.element(K.order)  # the class of x over K: coefficient vector (0,1,0,..)
    locators = _lift_and_evaluate(F_ctx, K, lambdas, gamma)
    if len({a.encoding for a in locators}) != n:
        raise AssertionError("locators collided (analysis rules this out)")
    code = grs(F_ctx, locators, n - 3)
    code.meta["construction"] = "rho3"
    plan = ConstructionPlan(
        rho=3, h=h,
        base_field=K.descriptor(), final_field=F_ctx.descriptor(),
        beta=beta.encoding, betas=tuple(b.encoding for b in betas),
        shifts=tuple(range(n)),
        xis=tuple(x.encoding for x in xis),
        lambdas=tuple(lambdas),
        gamma=gamma.encoding, mu=None, n_points=6,
        locators=tuple(a.encoding for a in locators),
    )
    code.meta["plan"] = plan.to_json()
    return code, plan


def general_construction(rho: int, h: int, max_field_bits: int = 4096
                         ) -> tuple[LinearCode, ConstructionPlan]:
    """General redundancy-rho construction: a [2^h, 2^h - rho] GRS code over
    an extension of K = GF(2^(rho(rho-1)h)) of degree mu = rho(rho-1)(N-1)+1,
    2-MDS by the Sidon-set analysis.

    The final field runs to thousands of bits (2502 already at rho=3, h=3),
    so a bit-size gate guards against accidental huge runs.
    """
    if rho < 3:
        raise ParameterTooSmall(f"rho = {rho} must be at least 3")
    N = n_cap(rho)
    if 2 ** (rho * (rho - 1) * h) < N:
        raise ParameterTooSmall(f"need 2^(rho(rho-1)h) >= N(rho) = {N}")
    n = 2**h
    if n < 2 * rho:
        raise ParameterTooSmall(f"need n = 2^h >= 2 rho = {2 * rho}")
    mu = rho * (rho - 1) * (N - 1) + 1
    bits = mu * rho * (rho - 1) * h
    if bits > max_field_bits:
        raise BudgetExceeded(bits, max_field_bits, "final field bit size")
    K = make_field(2, [(h, None), (rho * (rho - 1), None)])
    beta, betas = sidon_elements(K, h)
    xis = [K.element(i) for i in range(N)]
    lambdas = interpolation_polys(K, betas, xis)
    F_ctx = make_field(2, _tower_steps(K) + [(mu, None)])
    gamma = F_ctx.element(K.order)
    locators = _lift_and_evaluate(F_ctx, K, lambdas, gamma)
    if len({a.encoding for a in locators}) != n:
        raise AssertionError("locators collided (analysis rules this out)")
    code = grs(F_ctx, locators, n - rho)
    code.meta["construction"] = "general"
    plan = ConstructionPlan(
        rho=rho, h=h,
        base_field=K.descriptor(), final_field=F_ctx.descriptor(),
        beta=beta.encoding, betas=tuple(b.encoding for b in betas),
        shifts=tuple(range(n)),
        xis=tuple(x.encoding for x in xis),
        lambdas=tuple(lambdas),
        gamma=gamma.encoding, mu=mu, n_points=N,
        locators=tuple(a.encoding for a in locators),
    )
    code.meta["plan"] = plan.to_json()
    return code, plan


def greedy_rho3(field: FieldCtx, n: int) -> LinearCode:
    """Deterministic greedy locator selection for a 2-MDS [n, n-3] GRS code.

    The first five locators are the canonical first five elements; each
    subsequent candidate (scanned in canonical order past the largest used
    encoding) must keep det(S_{2,2,2}) nonzero for every assignment placing
    it in the first block against five previously chosen locators.  Works
    whenever q > 15 C(n-1, 5).
    """
    if n < 6:
        raise ParameterTooSmall(f"n = {n} must be at least 6")
    need = 15 * comb(n - 1, 5)
    if field.order <= need:
        raise FieldTooSmall(f"q = {field.order} <= 15 C({n - 1},5) = {need}")
    spec = PartitionSpec(3, (2, 2, 2))
    chosen = [field.element(i) for i in range(5)]

    def candidate_ok(cand: FieldElement) -> bool:
        prior = chosen
        for combo in itertools.combinations(range(len(prior)), 5):
            five = [prior[i] for i in combo]
            for x2_idx in range(5):
                x2 = five[x2_idx]
                rest = [five[i] for i in range(5) if i != x2_idx]
                for split in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)):
                    x = [cand, x2, rest[split[0]], rest[split[1]],
                         rest[split[2]], rest[split[3]]]
                    if not matgf.det(build_S(spec, field, x)):
                        return False
        return True

    next_enc = 5
    while len(chosen) < n:
        found = None
        for enc in range(next_enc, field.order):
            cand = field.element(enc)
            if candidate_ok(cand):
                found = cand
                next_enc = enc + 1
                break
        if found is None:
            raise Exhausted("ran out of elements (precondition violated?)")
        chosen.append(found)
    code = grs(field, chosen, n - 3)
    code.meta["construction"] = "greedy_rho3"
    code.meta["locators_selected"] = [a.encoding for a in chosen]
    return code
