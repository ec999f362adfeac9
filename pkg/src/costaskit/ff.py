"""Finite fields GF(p^k) with integer-coded elements.

An element of GF(p^k) is coded as an integer in [0, q): the base-p digits
of the code are the polynomial coefficients, constant term least
significant. For k > 1 the field modulus is the smallest monic irreducible
of degree k under that same coding, so every field of a given order has one
canonical representation and all results are reproducible without seeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence


class CompositeCharacteristic(ValueError):
    """The requested field characteristic is not prime."""


class DegreeOutOfRange(ValueError):
    """The extension degree is outside the supported range 1..6."""


class FieldTooLarge(ValueError):
    """The field order exceeds the cap for this operation."""


class NoIrreducibleFound(ValueError):
    """The modulus search exhausted all candidates (unreachable for valid input)."""


class FieldMismatch(ValueError):
    """Elements of distinct fields were combined."""


class DivisionByZero(ZeroDivisionError):
    """Division or inversion of the zero element."""


class ZeroElement(ValueError):
    """A multiplicative-only operation received the zero element."""


class NotPrimitive(ValueError):
    """An element required to generate the unit group does not."""


class EvenModulus(ValueError):
    """A square root modulo 2 was requested."""


_MAX_DEGREE = 6
_MAX_ORDER = 2**31
_PRIMITIVE_SCAN_CAP = 10**6

# Deterministic Miller-Rabin witness set for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for any n the package handles."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _small_primes() -> list[int]:
    # Covers trial division for n < 2^32.
    limit = 1 << 16
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, 256):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return [i for i in range(limit) if sieve[i]]


_TRIAL_PRIMES = _small_primes()


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, multiplicity), ...) ascending."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            m = 0
            while n % p == 0:
                n //= p
                m += 1
            out.append((p, m))
    if n > 1:
        # Remaining cofactor below 2^32 after trial division is prime.
        out.append((n, 1))
    return tuple(out)


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return (p, k) with q = p^k and p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    fs = factorize(q)
    if len(fs) != 1:
        return None
    return fs[0]


def _decode(p: int, k: int, rep: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(rep % p)
        rep //= p
    return out


def _encode(p: int, coeffs: Sequence[int]) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * p + c
    return out


def _poly_has_root(coeffs: Sequence[int], p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _poly_rem_is_zero(dividend: Sequence[int], divisor: Sequence[int], p: int) -> bool:
    # Both monic, coefficient lists LSB first.
    rem = list(dividend)
    dd = len(divisor) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for j in range(dd + 1):
                rem[i - dd + j] = (rem[i - dd + j] - c * divisor[j]) % p
    return all(c == 0 for c in rem[:dd])


def _is_irreducible(coeffs: Sequence[int], p: int, k: int) -> bool:
    if coeffs[0] == 0:
        return k == 1
    if _poly_has_root(coeffs, p):
        return k == 1
    if k <= 3:
        return True
    # Degrees 4..6: a factorization with no linear part forces a monic
    # divisor of degree 2..k//2.
    for d in range(2, k // 2 + 1):
        for t in range(p**d):
            divisor = _decode(p, d, t) + [1]
            if _poly_rem_is_zero(coeffs, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Canonical description of GF(p^k); acts as the element factory."""

    p: int
    k: int
    q: int
    modulus: Optional[tuple[int, ...]]
    q1_factors: tuple[tuple[int, int], ...]

    def element(self, rep: int) -> "FieldElement":
        if not 0 <= rep < self.q:
            raise ValueError(f"element code {rep} outside [0, {self.q})")
        return FieldElement(self, rep)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for rep in range(self.q):
            yield FieldElement(self, rep)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def _make_field_cached(p: int, k: int) -> FieldDescriptor:
    q = p**k
    if q > _MAX_ORDER:
        raise FieldTooLarge(f"field order {q} exceeds {_MAX_ORDER}")
    modulus: Optional[tuple[int, ...]] = None
    if k > 1:
        for t in range(q):
            coeffs = _decode(p, k, t) + [1]
            if _is_irreducible(coeffs, p, k):
                modulus = tuple(coeffs)
                break
        else:
            raise NoIrreducibleFound(f"no monic irreducible of degree {k} over GF({p})")
    return FieldDescriptor(p=p, k=k, q=q, modulus=modulus, q1_factors=factorize(q - 1))


def make_field(p: int, k: int = 1) -> FieldDescriptor:
    """Construct (and cache) GF(p^k). k is capped at 6 and p^k at 2^31."""
    if not is_prime(p):
        raise CompositeCharacteristic(f"characteristic {p} is not prime")
    if not 1 <= k <= _MAX_DEGREE:
        raise DegreeOutOfRange(f"degree {k} outside 1..{_MAX_DEGREE}")
    return _make_field_cached(p, k)


class FieldElement:
    """Immutable element of a FieldDescriptor, supporting field arithmetic.

    Integers mix freely with elements and embed as scalars (n mod p).
    """

    __slots__ = ("field", "rep")

    def __init__(self, field: FieldDescriptor, rep: int):
        if not 0 <= rep < field.q:
            raise ValueError(f"element code {rep} outside [0, {field.q})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other: object) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, other % self.field.p)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "FieldElement":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        f = self.field
        if f.k == 1:
            return FieldElement(f, (self.rep + rhs.rep) % f.p)
        a = _decode(f.p, f.k, self.rep)
        b = _decode(f.p, f.k, rhs.rep)
        return FieldElement(f, _encode(f.p, [(x + y) % f.p for x, y in zip(a, b)]))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        f = self.field
        if f.k == 1:
            return FieldElement(f, -self.rep % f.p)
        a = _decode(f.p, f.k, self.rep)
        return FieldElement(f, _encode(f.p, [-x % f.p for x in a]))

    def __sub__(self, other: object) -> "FieldElement":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "FieldElement":
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> "FieldElement":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        f = self.field
        if f.k == 1:
            return FieldElement(f, self.rep * rhs.rep % f.p)
        return FieldElement(f, _mul_rep(f, self.rep, rhs.rep))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FieldElement":
        if not isinstance(e, int):
            return NotImplemented
        f = self.field
        if self.rep == 0:
            if e == 0:
                return f.one
            if e < 0:
                raise DivisionByZero("zero has no negative powers")
            return f.zero
        e %= f.q - 1
        if f.k == 1:
            return FieldElement(f, pow(self.rep, e, f.p))
        acc = 1
        base = self.rep
        while e:
            if e & 1:
                acc = _mul_rep(f, acc, base)
            base = _mul_rep(f, base, base)
            e >>= 1
        return FieldElement(f, acc)

    def inv(self) -> "FieldElement":
        if self.rep == 0:
            raise DivisionByZero("zero is not invertible")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: object) -> "FieldElement":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self * rhs.inv()

    def __rtruediv__(self, other: object) -> "FieldElement":
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return lhs * self.inv()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == other % self.field.p
        return NotImplemented

    def __lt__(self, other: "FieldElement") -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return self.rep < other.rep

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.k, self.rep))

    def __bool__(self) -> bool:
        return self.rep != 0

    def __repr__(self) -> str:
        return f"GF({self.field.q})[{self.rep}]"


def _mul_rep(f: FieldDescriptor, a: int, b: int) -> int:
    p, k = f.p, f.k
    ca = _decode(p, k, a)
    cb = _decode(p, k, b)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(ca):
        if x:
            for j, y in enumerate(cb):
                prod[i + j] += x * y
    mod = f.modulus
    assert mod is not None
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i] % p
        if c:
            for j in range(k):
                prod[i - k + j] -= c * mod[j]
        prod[i] = 0
    return _encode(p, [c % p for c in prod[:k]])


def multiplicative_order(a: FieldElement) -> int:
    """Order of a in the unit group of its field."""
    if a.rep == 0:
        raise ZeroElement("zero has no multiplicative order")
    t = a.field.q - 1
    for f, _ in a.field.q1_factors:
        while t % f == 0 and a ** (t // f) == a.field.one:
            t //= f
    return t


def is_primitive(a: FieldElement) -> bool:
    """True iff a generates the full unit group."""
    if a.rep == 0:
        raise ZeroElement("zero is not a unit")
    q1 = a.field.q - 1
    return all(a ** (q1 // f) != a.field.one for f, _ in a.field.q1_factors)


def primitive_elements(field: FieldDescriptor) -> list[FieldElement]:
    """All primitive elements of the field, ascending by code."""
    if field.q > _PRIMITIVE_SCAN_CAP:
        raise FieldTooLarge(f"primitive element scan capped at order {_PRIMITIVE_SCAN_CAP}")
    gen = None
    for rep in range(1, field.q):
        cand = FieldElement(field, rep)
        if is_primitive(cand):
            gen = cand
            break
    assert gen is not None, "unit group of a finite field is cyclic"
    q1 = field.q - 1
    reps = []
    acc = field.one
    for i in range(1, q1 + 1):
        acc = acc * gen
        if math.gcd(i, q1) == 1:
            reps.append(acc.rep)
    return [FieldElement(field, r) for r in sorted(reps)]


def log_table(alpha: FieldElement) -> list[Optional[int]]:
    """Discrete logs base alpha: table[code(alpha^i)] = i for i in 1..q-1.

    The identity maps to q-1 and the zero slot holds None.
    """
    if alpha.field.q > _PRIMITIVE_SCAN_CAP:
        raise FieldTooLarge(f"log table capped at order {_PRIMITIVE_SCAN_CAP}")
    if not is_primitive(alpha):
        raise NotPrimitive(f"{alpha!r} does not generate the unit group")
    field = alpha.field
    table: list[Optional[int]] = [None] * field.q
    acc = field.one
    for i in range(1, field.q):
        acc = acc * alpha
        table[acc.rep] = i
    return table


def sqrt_mod_p(a: int, p: int) -> Optional[tuple[int, ...]]:
    """Square roots of a modulo an odd prime p, sorted, or None for a non-residue."""
    if p == 2:
        raise EvenModulus("square roots mod 2 are not supported")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if not 0 <= a < p:
        raise ValueError(f"residue {a} outside [0, {p})")
    if a == 0:
        return (0,)
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return tuple(sorted((r, p - r)))
    # Tonelli-Shanks for p = 1 (mod 4).
    s = p - 1
    e = 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(n, s, p)
    r = e
    while b != 1:
        t = b
        m = 0
        while t != 1:
            t = t * t % p
            m += 1
        gs = pow(g, 1 << (r - m - 1), p)
        x = x * gs % p
        g = gs * gs % p
        b = b * g % p
        r = m
    return tuple(sorted((x, p - x)))


def is_primitive_root(a: int, p: int, p1_factors: Optional[tuple[tuple[int, int], ...]] = None) -> bool:
    """True iff a generates the units mod prime p. Factors of p-1 may be supplied."""
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    a %= p
    if a == 0:
        return False
    if p1_factors is None:
        p1_factors = factorize(p - 1)
    p1 = p - 1
    return all(pow(a, p1 // f, p) != 1 for f, _ in p1_factors)


def smallest_primitive_root(p: int) -> int:
    """Least primitive root modulo prime p (1 for p = 2)."""
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p == 2:
        return 1
    fs = factorize(p - 1)
    g = 2
    while not is_primitive_root(g, p, fs):
        g += 1
    return g
