"""Exact integer arithmetic: quadratic symbols, CRT merging, primality, prime search.

All functions are pure and use arbitrary-precision integers throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConstraintInfeasibleError, InvalidInputError, SearchExhaustedError

# Every composite below this bound is exposed by the 12 Miller-Rabin bases below.
PRIMALITY_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_FULL_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Smaller proven witness sets, keyed by the bound they are valid below.
_MR_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (PRIMALITY_DETERMINISTIC_BOUND, _MR_FULL_BASES),
)

# Product of primes below 100; a single gcd screens small factors cheaply.
_SMALL_PRIME_PRODUCT = math.prod(
    (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
     53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
)

DEFAULT_PRIME_SEARCH_CAP = 10**8


@dataclass(frozen=True)
class ResidueClass:
    """The set of integers congruent to `residue` modulo `modulus`."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidInputError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise InvalidInputError(
                f"residue {self.residue} out of range for modulus {self.modulus}"
            )

    def contains(self, n: int) -> bool:
        return n % self.modulus == self.residue

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n; equals the Legendre symbol for prime n.

    jacobi(a, 1) = 1 by the empty-product convention. Returns 0 iff gcd(a, n) > 1.
    """
    if n <= 0 or n % 2 == 0:
        raise InvalidInputError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def delta_char(m: int) -> int:
    """The character delta(m) = (-1)^((m-1)/2) on odd m: +1 iff m = 1 mod 4."""
    if m % 2 == 0:
        raise InvalidInputError(f"delta is defined on odd integers, got {m}")
    return 1 if m % 4 == 1 else -1


def eta_char(m: int) -> int:
    """The character eta(m) = (-1)^((m^2-1)/8) on odd m: +1 iff m = +-1 mod 8."""
    if m % 2 == 0:
        raise InvalidInputError(f"eta is defined on odd integers, got {m}")
    return 1 if m % 8 in (1, 7) else -1


def crt_merge(classes: Sequence[ResidueClass]) -> ResidueClass:
    """Combine residue classes with pairwise coprime moduli into a single class."""
    classes = list(classes)
    if not classes:
        raise InvalidInputError("crt_merge needs at least one residue class")
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            g = math.gcd(classes[i].modulus, classes[j].modulus)
            if g != 1:
                raise ConstraintInfeasibleError(
                    f"moduli {classes[i].modulus} and {classes[j].modulus} "
                    f"share the factor {g}"
                )
    residue, modulus = classes[0].residue, classes[0].modulus
    for cls in classes[1:]:
        inv = pow(modulus, -1, cls.modulus)
        k = ((cls.residue - residue) * inv) % cls.modulus
        residue += modulus * k
        modulus *= cls.modulus
    return ResidueClass(residue % modulus, modulus)


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for base in bases:
        base %= n
        if base == 0:
            continue
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: deterministic below PRIMALITY_DETERMINISTIC_BOUND.

    Beyond that bound a Baillie-PSW check is used; it has no known
    counterexamples but is not proven, so callers needing certainty on
    huge inputs should treat the answer as probabilistic.
    """
    if n < 2:
        return False
    if n < 64 * 64:
        g = math.gcd(n, _SMALL_PRIME_PRODUCT)
        if g != 1:
            return n == g and is_prime_small(n)
        return True  # no prime factor below 100, and n < 100^2
    if math.gcd(n, _SMALL_PRIME_PRODUCT) != 1:
        return False
    if n < PRIMALITY_DETERMINISTIC_BOUND:
        for bound, bases in _MR_TIERS:
            if n < bound:
                return _miller_rabin(n, bases)
    import sympy  # deferred: only huge inputs need it

    return bool(sympy.isprime(n))


def is_prime_small(n: int) -> bool:
    """Trial-division primality for n below 10^4; used to seed the fast paths."""
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def next_prime_in_class(
    cls: ResidueClass,
    exclude: frozenset[int] | set[int] = frozenset(),
    cap: int = DEFAULT_PRIME_SEARCH_CAP,
    filters: Sequence[tuple[int, frozenset[int]]] = (),
) -> int:
    """Smallest prime in `cls`, not in `exclude`, passing all residue-set filters.

    Each filter (m, allowed) keeps only candidates c with c % m in allowed.
    The scan is strictly ascending from the least positive member of the class,
    so results are deterministic. Raises SearchExhaustedError past `cap`.
    """
    if math.gcd(cls.residue, cls.modulus) != 1:
        raise ConstraintInfeasibleError(
            f"class {cls} has gcd({cls.residue}, {cls.modulus}) > 1; "
            "it contains at most one prime"
        )
    candidate = cls.residue if cls.residue > 0 else cls.modulus
    while candidate <= cap:
        if (
            candidate > 1
            and candidate not in exclude
            and all(candidate % m in allowed for m, allowed in filters)
            and is_prime(candidate)
        ):
            return candidate
        candidate += cls.modulus
    raise SearchExhaustedError(
        f"no admissible prime in {cls} below cap {cap}"
    )


def integer_sqrt(n: int) -> tuple[int, bool]:
    """Floor square root of n >= 0 plus an exactness flag."""
    if n < 0:
        raise InvalidInputError(f"integer_sqrt needs n >= 0, got {n}")
    root = math.isqrt(n)
    return root, root * root == n
