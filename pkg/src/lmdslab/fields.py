"""Exact arithmetic in GF(p) and in towers of binary/odd extensions.

A field is described by its prime characteristic and an ordered list of
extension steps; each step carries a monic irreducible modulus over the
previous level.  Elements have a canonical integer encoding obtained by
nested little-endian base-q digit packing, which gives a deterministic
enumeration order that the constructions elsewhere in the package rely on.

Internally each tower level implements add/mul/inv on a compact
representation (machine ints for prime fields and packed GF(2^m),
coefficient tuples otherwise).  Levels of order up to 2^18 in
characteristic two get discrete-log tables, which makes the big towers
(GF(2^96) over GF(64), GF(2^2502) over GF(2^18)) affordable.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Iterator, Sequence

from .errors import (
    CompositeCharacteristic,
    DegreeMismatch,
    DivisionByZero,
    ForeignElement,
    RangeOutOfBounds,
    ReducibleModulus,
)

_TABLE_MAX_ORDER = 1 << 18


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond desk-scale inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # these bases are a proven deterministic set for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of a small integer."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# tower levels
# ---------------------------------------------------------------------------


class _PrimeLevel:
    """GF(p) with residues as plain ints."""

    __slots__ = ("p", "char", "order", "zero", "one")

    def __init__(self, p: int):
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def encode(self, a):
        return a

    def decode(self, i):
        return i


def _generic_pow(lv, a, e: int):
    """Square-and-multiply on an arbitrary level."""
    if e < 0:
        a = lv.inv(a)
        e = -e
    result = lv.one
    base = a
    while e:
        if e & 1:
            result = lv.mul(result, base)
        base = lv.mul(base, base)
        e >>= 1
    return result


# --- packed GF(2) polynomials (ints, bit i = coefficient of x^i) -----------


def gf2poly_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def gf2poly_rem(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    da = a.bit_length() - 1
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length() - 1
    return a


def gf2poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2poly_rem(a, b)
    return a


class _PackedGF2Level:
    """GF(2^m) over the prime level, elements as packed ints."""

    __slots__ = ("char", "degree", "order", "zero", "one", "modulus")

    def __init__(self, degree: int, modulus: int):
        self.char = 2
        self.degree = degree
        self.order = 1 << degree
        self.zero = 0
        self.one = 1
        self.modulus = modulus  # packed, bit `degree` set

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        return gf2poly_rem(gf2poly_mul(a, b), self.modulus)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        # extended Euclid on packed polynomials
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1:
            d = r0.bit_length() - r1.bit_length()
            if d < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << d
            s0 ^= s1 << d
        # r0 is now the gcd (a nonzero constant, i.e. 1)
        return gf2poly_rem(s0, self.modulus)

    def pow(self, a, e):
        return _generic_pow(self, a, e)

    def encode(self, a):
        return a

    def decode(self, i):
        return i


class _ExtensionLevel:
    """Degree-d extension of an arbitrary base level; elements are tuples."""

    __slots__ = ("base", "char", "degree", "order", "zero", "one", "modulus")

    def __init__(self, base, degree: int, modulus: tuple):
        # modulus: tuple of base reps, little-endian, length degree+1, monic
        self.base = base
        self.char = base.char
        self.degree = degree
        self.order = base.order**degree
        self.zero = (base.zero,) * degree
        self.one = (base.one,) + (base.zero,) * (degree - 1)
        self.modulus = modulus

    def add(self, a, b):
        bs = self.base
        return tuple(bs.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        bs = self.base
        return tuple(bs.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        bs = self.base
        return tuple(bs.neg(x) for x in a)

    def mul(self, a, b):
        bs = self.base
        d = self.degree
        zero = bs.zero
        prod = [zero] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                if bj == zero:
                    continue
                prod[i + j] = bs.add(prod[i + j], bs.mul(ai, bj))
        mod = self.modulus
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c == zero:
                continue
            # subtract c * x^(i-d) * modulus  (modulus is monic)
            off = i - d
            for j in range(d):
                mj = mod[j]
                if mj != zero:
                    prod[off + j] = bs.sub(prod[off + j], bs.mul(c, mj))
            prod[i] = zero
        return tuple(prod[:d])

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero("inverse of zero")
        inv_coeffs = poly_invmod(self.base, list(a), list(self.modulus))
        inv_coeffs += [self.base.zero] * (self.degree - len(inv_coeffs))
        return tuple(inv_coeffs)

    def pow(self, a, e):
        return _generic_pow(self, a, e)

    def encode(self, a):
        bs = self.base
        radix = bs.order
        val = 0
        for c in reversed(a):
            val = val * radix + bs.encode(c)
        return val

    def decode(self, i):
        bs = self.base
        radix = bs.order
        out = []
        for _ in range(self.degree):
            i, r = divmod(i, radix)
            out.append(bs.decode(r))
        return tuple(out)


class _TableLevel:
    """Discrete-log wrapper for a small characteristic-2 level.

    Elements become their canonical integer encodings, addition is XOR
    (valid for any binary tower since the packing is carry-free), and
    multiplication uses exp/log tables built once from a generator.
    """

    __slots__ = ("char", "degree", "order", "zero", "one", "_exp", "_log", "_onm1")

    def __init__(self, inner):
        assert inner.char == 2 and inner.order <= _TABLE_MAX_ORDER
        self.char = 2
        self.degree = getattr(inner, "degree", 1)
        self.order = inner.order
        self.zero = 0
        self.one = 1
        onm1 = self.order - 1
        self._onm1 = onm1
        primes = _factorize(onm1)
        g = None
        for cand in range(2, self.order):
            rep = inner.decode(cand)
            if all(inner.pow(rep, onm1 // r) != inner.one for r in primes):
                g = rep
                break
        assert g is not None
        exp = [0] * onm1
        log = [0] * self.order
        acc = inner.one
        for i in range(onm1):
            e = inner.encode(acc)
            exp[i] = e
            log[e] = i
            acc = inner.mul(acc, g)
        self._exp = exp
        self._log = log

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._onm1]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % self._onm1]

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("inverse of zero")
            return 0
        return self._exp[(self._log[a] * (e % self._onm1)) % self._onm1]

    def encode(self, a):
        return a

    def decode(self, i):
        return i


# ---------------------------------------------------------------------------
# dense polynomial helpers over a level (little-endian coefficient lists)
# ---------------------------------------------------------------------------


def poly_trim(lv, f: list) -> list:
    while f and f[-1] == lv.zero:
        f.pop()
    return f


def poly_add(lv, f: list, g: list) -> list:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else lv.zero
        b = g[i] if i < len(g) else lv.zero
        out.append(lv.add(a, b))
    return poly_trim(lv, out)


def poly_sub(lv, f: list, g: list) -> list:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else lv.zero
        b = g[i] if i < len(g) else lv.zero
        out.append(lv.sub(a, b))
    return poly_trim(lv, out)


def poly_mul(lv, f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [lv.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == lv.zero:
            continue
        for j, b in enumerate(g):
            if b == lv.zero:
                continue
            out[i + j] = lv.add(out[i + j], lv.mul(a, b))
    return poly_trim(lv, out)


def poly_divmod(lv, f: list, g: list) -> tuple[list, list]:
    f = poly_trim(lv, list(f))
    g = poly_trim(lv, list(g))
    if not g:
        raise DivisionByZero("polynomial division by zero")
    dg = len(g) - 1
    lead_inv = lv.inv(g[-1])
    q = [lv.zero] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = lv.mul(f[-1], lead_inv)
        off = len(f) - 1 - dg
        q[off] = c
        for j in range(dg + 1):
            f[off + j] = lv.sub(f[off + j], lv.mul(c, g[j]))
        poly_trim(lv, f)
    return poly_trim(lv, q), f


def poly_rem(lv, f: list, g: list) -> list:
    return poly_divmod(lv, f, g)[1]


def poly_gcd(lv, f: list, g: list) -> list:
    f, g = list(f), list(g)
    while g:
        f, g = g, poly_rem(lv, f, g)
    if f:
        c = lv.inv(f[-1])
        f = [lv.mul(c, x) for x in f]
    return f


def poly_invmod(lv, a: list, m: list) -> list:
    """Inverse of a modulo m (m monic, gcd(a, m) = 1)."""
    r0, r1 = list(m), poly_rem(lv, list(a), m)
    s0, s1 = [], [lv.one]
    while r1:
        q, r = poly_divmod(lv, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(lv, s0, poly_mul(lv, q, s1))
    if len(r0) != 1:
        raise DivisionByZero("element not invertible modulo the given polynomial")
    c = lv.inv(r0[0])
    return poly_trim(lv, [lv.mul(c, x) for x in s0])


def poly_eval_level(lv, f: list, x):
    acc = lv.zero
    for c in reversed(f):
        acc = lv.add(lv.mul(acc, x), c)
    return acc


def poly_mulmod(lv, f: list, g: list, m: list) -> list:
    return poly_rem(lv, poly_mul(lv, f, g), m)


def poly_powmod(lv, f: list, e: int, m: list) -> list:
    result = [lv.one]
    base = poly_rem(lv, list(f), m)
    while e:
        if e & 1:
            result = poly_mulmod(lv, result, base, m)
        base = poly_mulmod(lv, base, base, m)
        e >>= 1
    return result


def poly_from_roots(lv, roots: Sequence) -> list:
    f = [lv.one]
    for r in roots:
        f = poly_mul(lv, f, [lv.neg(r), lv.one])
    return f


def lagrange_interpolate(lv, xs: Sequence, ys: Sequence) -> list:
    """Coefficients of the unique degree < len(xs) interpolant."""
    n = len(xs)
    acc = []
    for i in range(n):
        num = [lv.one]
        denom = lv.one
        for j in range(n):
            if j == i:
                continue
            num = poly_mul(lv, num, [lv.neg(xs[j]), lv.one])
            denom = lv.mul(denom, lv.sub(xs[i], xs[j]))
        scale = lv.mul(ys[i], lv.inv(denom))
        acc = poly_add(lv, acc, [lv.mul(scale, c) for c in num])
    return acc


# ---------------------------------------------------------------------------
# irreducibility
# ---------------------------------------------------------------------------


def _is_irreducible_gf2(f: int) -> bool:
    """Packed-int fast path for polynomials over GF(2)."""
    d = f.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if f & 1 == 0:  # divisible by x
        return False
    x = 0b10
    y = x
    for _ in range(d // 2):
        y = gf2poly_rem(gf2poly_mul(y, y), f)  # y <- y^2 mod f
        if gf2poly_gcd(y ^ x, f) != 1:
            return False
    return True


def _is_irreducible(lv, f: list) -> bool:
    """gcd(x^{q^i} - x, f) = 1 for all i <= deg(f)/2 certifies irreducibility."""
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    q = lv.order
    x = [lv.zero, lv.one]
    y = list(x)
    for _ in range(d // 2):
        y = poly_powmod(lv, y, q, f)  # y <- y^q mod f
        if len(poly_gcd(lv, poly_sub(lv, y, x), f)) != 1:
            return False
    return True


def _find_irreducible_level(lv, degree: int) -> list:
    """First monic irreducible of the given degree in canonical coefficient order."""
    if lv.char == 2 and isinstance(lv, _PrimeLevel):
        for c in range(1 << degree):
            f = c | (1 << degree)
            if _is_irreducible_gf2(f):
                return [(f >> i) & 1 for i in range(degree + 1)]
        raise AssertionError("unreachable: irreducibles of every degree exist")
    radix = lv.order
    for c in itertools.count():
        if c >= radix**degree:
            raise AssertionError("unreachable: irreducibles of every degree exist")
        coeffs = []
        cc = c
        for _ in range(degree):
            cc, r = divmod(cc, radix)
            coeffs.append(lv.decode(r))
        f = coeffs + [lv.one]
        if _is_irreducible(lv, f):
            return f


# ---------------------------------------------------------------------------
# public field context
# ---------------------------------------------------------------------------


class FieldElement:
    """An element of a FieldCtx; arithmetic via operators, exact always."""

    __slots__ = ("field", "rep")

    def __init__(self, field: "FieldCtx", rep):
        self.field = field
        self.rep = rep

    @property
    def encoding(self) -> int:
        return self.field._top.encode(self.rep)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field.signature != self.field.signature:
                raise ForeignElement(
                    f"element of {other.field} used in {self.field} arithmetic"
                )
            return other.rep
        if isinstance(other, int):
            return self.field._rep_from_int(other)
        return NotImplemented

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._top.add(self.rep, rep))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._top.sub(self.rep, rep))

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._top.sub(rep, self.rep))

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._top.mul(self.rep, rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._top.mul(self.rep, self.field._top.inv(rep)))

    def __rtruediv__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._top.mul(rep, self.field._top.inv(self.rep)))

    def __neg__(self):
        return FieldElement(self.field, self.field._top.neg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._top.pow(self.rep, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.signature == other.field.signature and self.rep == other.rep
        if isinstance(other, int):
            try:
                return self.rep == self.field._rep_from_int(other)
            except RangeOutOfBounds:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.signature, self.rep))

    def __bool__(self):
        return self.rep != self.field._top.zero

    def __repr__(self):
        return f"{self.field.name}#{self.encoding}"


class FieldCtx:
    """A finite field GF(p^m), possibly built as a tower of extensions.

    Immutable after construction; safe to share.  ``steps`` records the
    tower as (degree, modulus-encodings) pairs with moduli little-endian
    over the previous level.
    """

    __slots__ = ("p", "steps", "total_degree", "order", "name", "_levels", "_top", "_sig")

    def __init__(self, p: int, steps: tuple, levels: list):
        self.p = p
        self.steps = steps  # tuple of (degree, tuple-of-int modulus encodings)
        self.total_degree = 1
        for d, _ in steps:
            self.total_degree *= d
        self.order = p**self.total_degree
        self._levels = levels
        self._top = levels[-1]
        self._sig = (p, steps)
        if not steps:
            self.name = f"GF({p})"
        else:
            self.name = f"GF({p}^{self.total_degree})"

    # -- identity ----------------------------------------------------------

    @property
    def signature(self):
        return self._sig

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other._sig == self._sig

    def __hash__(self):
        return hash(self._sig)

    def __repr__(self):
        return self.name

    @property
    def is_prime_field(self) -> bool:
        return not self.steps

    # -- elements ------------------------------------------------------------

    def _rep_from_int(self, i: int):
        if not 0 <= i < self.order:
            raise RangeOutOfBounds(f"encoding {i} outside [0, {self.order})")
        return self._top.decode(i)

    def element(self, value) -> FieldElement:
        """Wrap a canonical integer encoding (or pass a FieldElement through)."""
        if isinstance(value, FieldElement):
            if value.field.signature != self._sig:
                raise ForeignElement(f"element of {value.field} is not in {self}")
            return value
        return FieldElement(self, self._rep_from_int(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self._top.zero)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self._top.one)

    def enumerate_range(self, start: int = 0, stop: int | None = None) -> Iterator[FieldElement]:
        """Elements in canonical ascending encoding order over [start, stop)."""
        if stop is None:
            stop = self.order
        if not (0 <= start <= stop <= self.order):
            raise RangeOutOfBounds(f"range [{start}, {stop}) outside [0, {self.order})")
        for i in range(start, stop):
            yield FieldElement(self, self._top.decode(i))

    def random_element(self, rng) -> FieldElement:
        return FieldElement(self, self._top.decode(rng.randrange(self.order)))

    # -- level access for sibling modules ------------------------------------

    @property
    def level(self):
        return self._top

    def descriptor(self) -> dict:
        """JSON-ready field descriptor."""
        return {
            "p": self.p,
            "tower": [{"deg": d, "modulus": list(mod)} for d, mod in self.steps],
        }


def _encode_poly(level_below, coeffs: list) -> tuple:
    return tuple(level_below.encode(c) for c in coeffs)


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, steps: tuple) -> FieldCtx:
    levels = [_PrimeLevel(p)]
    resolved = []
    for idx, (degree, modulus_ints) in enumerate(steps):
        below = levels[-1]
        if degree < 2:
            raise DegreeMismatch(f"tower step {idx} has degree {degree}; need >= 2")
        if modulus_ints is None:
            mod_reps = _find_irreducible_level(below, degree)
        else:
            if len(modulus_ints) != degree + 1:
                raise DegreeMismatch(
                    f"tower step {idx}: modulus has {len(modulus_ints)} coefficients, "
                    f"expected {degree + 1}"
                )
            for c in modulus_ints:
                if not 0 <= c < below.order:
                    raise RangeOutOfBounds(
                        f"tower step {idx}: coefficient {c} outside [0, {below.order})"
                    )
            mod_reps = [below.decode(c) for c in modulus_ints]
            if mod_reps[-1] != below.one:
                raise DegreeMismatch(f"tower step {idx}: modulus is not monic")
            if not _is_irreducible(below, mod_reps):
                raise ReducibleModulus(idx)
        if p == 2 and isinstance(below, _PrimeLevel):
            packed = 0
            for i, c in enumerate(mod_reps):
                packed |= (c & 1) << i
            level = _PackedGF2Level(degree, packed)
        else:
            level = _ExtensionLevel(below, degree, tuple(mod_reps))
        if p == 2 and level.order <= _TABLE_MAX_ORDER:
            level = _TableLevel(level)
        levels.append(level)
        resolved.append((degree, _encode_poly(below, mod_reps)))
    return FieldCtx(p, tuple(resolved), levels)


def make_field(p: int, steps: Iterable = ()) -> FieldCtx:
    """Build GF(p) or a tower of extensions on top of it.

    ``steps`` is a list of (degree, modulus) pairs; a modulus of None asks
    for the canonical (lexicographically-first) irreducible.  Supplied
    moduli are coefficient sequences of canonical integers of the previous
    level, little-endian, length degree+1, and are verified irreducible.
    """
    if not is_prime(p):
        raise CompositeCharacteristic(f"{p} is not prime")
    norm = []
    for step in steps:
        degree, modulus = step
        norm.append((int(degree), None if modulus is None else tuple(int(c) for c in modulus)))
    return _make_field_cached(p, tuple(norm))


# ---------------------------------------------------------------------------
# spec-level operations
# ---------------------------------------------------------------------------


def field_op(ctx: FieldCtx, op: str, a, b=None) -> FieldElement:
    """Dispatch a single arithmetic operation on canonical elements.

    ``a`` and ``b`` may be FieldElements of ``ctx`` or canonical integers;
    for ``pow`` the second argument is an arbitrary-precision exponent.
    """
    x = ctx.element(a)
    if op == "neg":
        return -x
    if op == "inv":
        return FieldElement(ctx, ctx._top.inv(x.rep))
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise RangeOutOfBounds("pow exponent must be a nonnegative integer")
        return x**b
    y = ctx.element(b)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown field op {op!r}")


def find_irreducible(ctx: FieldCtx, degree: int) -> tuple[int, ...]:
    """Canonical-first monic irreducible of given degree over ctx.

    Returned as canonical integer coefficients, little-endian, length
    degree+1.  Irreducibility is certified by the gcd test against
    x^{q^i} - x for i up to degree/2.
    """
    if degree < 2:
        raise DegreeMismatch(f"degree {degree} < 2")
    lv = ctx._top
    coeffs = _find_irreducible_level(lv, degree)
    return tuple(lv.encode(c) for c in coeffs)


def is_irreducible(ctx: FieldCtx, coeffs: Sequence[int]) -> bool:
    """gcd-based irreducibility check of a monic polynomial over ctx."""
    lv = ctx._top
    reps = [lv.decode(int(c)) for c in coeffs]
    return _is_irreducible(lv, reps)


def not_in_proper_subfield(ctx: FieldCtx, a) -> bool:
    """True iff the Frobenius orbit of ``a`` has full length.

    The orbit length is the least t > 0 with a^(p^t) = a, which equals the
    degree of a over GF(p); the element lies in no proper subfield exactly
    when that degree is the full extension degree m.
    """
    el = ctx.element(a)
    lv = ctx._top
    p = ctx.p
    x = el.rep
    y = lv.pow(x, p)
    t = 1
    while y != x:
        y = lv.pow(y, p)
        t += 1
    return t == ctx.total_degree


def enumerate_elements(ctx: FieldCtx, start: int = 0, stop: int | None = None):
    """Elements of ctx in canonical ascending order over [start, stop)."""
    return ctx.enumerate_range(start, stop)


def poly_eval(ctx: FieldCtx, coeffs: Sequence, x) -> FieldElement:
    """Evaluate a polynomial with coefficients in ctx at x (Horner)."""
    lv = ctx._top
    reps = [ctx.element(c).rep for c in coeffs]
    return FieldElement(ctx, poly_eval_level(lv, reps, ctx.element(x).rep))
