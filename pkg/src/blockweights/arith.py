"""Multiplicative orders, prime power parameters, and valuation helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import ConfigurationError, DomainError

# All enumerations are desk scale; configurations with q**n at or above this
# bound are rejected up front instead of starting a hopeless run.
DESK_LIMIT = 2**62


def is_prime(m: int) -> bool:
    """Trial division primality test, adequate for desk scale inputs."""
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, f) with q = p**f, p prime, f >= 1."""
    if q < 2:
        raise ConfigurationError(f"q must be at least 2, got {q}")
    p = 2
    while q % p != 0:
        p += 1
        if p * p > q:
            p = q
            break
    f = 0
    rest = q
    while rest % p == 0:
        rest //= p
        f += 1
    if rest != 1:
        raise ConfigurationError(f"q = {q} is not a prime power")
    return p, f


def mult_order(b: int, m: int) -> int:
    """Smallest t >= 1 with b**t == 1 (mod m); m = 1 gives 1."""
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    b %= m
    if math.gcd(b, m) != 1:
        raise DomainError(f"{b} is not a unit modulo {m}")
    t = 1
    x = b
    while x != 1:
        x = x * b % m
        t += 1
    return t


def e0_of(q: int, ell: int) -> int:
    """Order of q modulo ell for odd ell, and modulo 4 for ell = 2."""
    if not is_prime(ell):
        raise DomainError(f"ell must be prime, got {ell}")
    if q % ell == 0:
        raise DomainError(f"ell = {ell} divides q = {q}")
    if ell == 2:
        return mult_order(q, 4)
    return mult_order(q, ell)


def ell_valuation_and_parts(x: int, ell: int) -> tuple[int, int, int]:
    """Return (v, ell**v, x / ell**v) for a positive integer x."""
    if x < 1:
        raise DomainError(f"expected a positive integer, got {x}")
    if ell < 2:
        raise DomainError(f"ell must be at least 2, got {ell}")
    v = 0
    part = 1
    while x % ell == 0:
        x //= ell
        v += 1
        part *= ell
    return v, part, x


def ell_part(x: int, ell: int) -> int:
    return ell_valuation_and_parts(x, ell)[1]


def ell_prime_part(x: int, ell: int) -> int:
    return ell_valuation_and_parts(x, ell)[2]


@dataclass(frozen=True)
class InstanceParams:
    """One verification instance: GL_n(eps q) or its SL subgroup, at a prime ell.

    eps = +1 selects the general linear group, eps = -1 the unitary group.
    ell is a prime different from the defining characteristic p.
    """

    p: int
    f: int
    q: int
    eps: int
    ell: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ConfigurationError(f"p must be prime, got {self.p}")
        if self.f < 1 or self.p**self.f != self.q:
            raise ConfigurationError(
                f"q = {self.q} does not equal p**f = {self.p}**{self.f}"
            )
        if self.eps not in (1, -1):
            raise ConfigurationError(f"eps must be +1 or -1, got {self.eps}")
        if not is_prime(self.ell):
            raise ConfigurationError(f"ell must be prime, got {self.ell}")
        if self.ell == self.p:
            raise ConfigurationError(
                f"ell = {self.ell} equals the defining characteristic"
            )
        if self.n < 1:
            raise ConfigurationError(f"n must be at least 1, got {self.n}")
        if self.q**self.n >= DESK_LIMIT:
            raise ConfigurationError(
                f"q**n = {self.q}**{self.n} exceeds the desk scale guard"
            )

    @cached_property
    def e(self) -> int:
        """Multiplicative order of eps*q modulo ell; equals 1 when ell = 2."""
        return mult_order(self.eps * self.q, self.ell)

    @property
    def eq(self) -> int:
        """The signed prime power eps*q acting on semisimple labels."""
        return self.eps * self.q

    @cached_property
    def e_gamma_table(self) -> tuple[int, ...]:
        """e_gamma(d) for every orbit degree d = 1..n, at index d - 1."""
        return tuple(e_gamma(d, self) for d in range(1, self.n + 1))


def make_params(n: int, q: int, eps: int, ell: int) -> InstanceParams:
    """Validate and package one instance configuration."""
    p, f = prime_power_decomposition(q)
    return InstanceParams(p=p, f=f, q=q, eps=eps, ell=ell, n=n)


_E_GAMMA_MEMO: dict[tuple[int, int, int], int] = {}


def e_gamma(d: int, params: InstanceParams) -> int:
    """Multiplicative order of (eps*q)**d modulo ell for a degree d orbit.

    Computed from the definition; the identity e_gamma(d) = e / gcd(e, d)
    is asserted in tests rather than assumed here.
    """
    if d < 1:
        raise DomainError(f"degree must be at least 1, got {d}")
    key = (params.eps * params.q, params.ell, d)
    hit = _E_GAMMA_MEMO.get(key)
    if hit is None:
        hit = _E_GAMMA_MEMO[key] = mult_order(pow(key[0], d, key[1]), key[1])
    return hit
