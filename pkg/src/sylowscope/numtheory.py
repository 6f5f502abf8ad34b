"""Exact integer number theory: cyclotomic values, orders, valuations, Zsigmondy primes.

Everything here is a pure function of its integer arguments. Factorisation and
primality are delegated to :mod:`sympy.ntheory` (trial division, Pollard rho and a
BPSW primality test); cyclotomic values are evaluated through the Moebius product
``Phi_m(q) = prod_{d | m} (q^d - 1)^{mu(m/d)}`` so no polynomial coefficients are
ever expanded.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import gcd

from sympy import divisors, factorint, isprime, multiplicity, n_order, primerange
from sympy import mobius as _sympy_mobius
from sympy import primitive_root as _sympy_primitive_root
from sympy import totient as _sympy_totient

from sylowscope.exceptions import PreconditionError
from sylowscope.models import FactoredInteger, ResidueClassSet

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f``, or ``None`` if q is not a prime power."""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, f),) = factors.items()
    return int(p), int(f)


def factor(n: int) -> FactoredInteger:
    """Fully factor a positive integer."""
    if n < 1:
        raise PreconditionError(f"can only factor positive integers, got {n}")
    if n.bit_length() > 64:
        logger.debug("factoring %d-bit integer", n.bit_length())
    return FactoredInteger({int(p): int(e) for p, e in factorint(n).items()})


def mobius(n: int) -> int:
    """The Moebius function mu(n)."""
    if n < 1:
        raise PreconditionError(f"mobius is defined for n >= 1, got {n}")
    return int(_sympy_mobius(n))


def euler_phi(n: int) -> int:
    """Euler's totient: the count of integers in [1, n] coprime to n."""
    if n < 1:
        raise PreconditionError(f"euler_phi is defined for n >= 1, got {n}")
    return int(_sympy_totient(n))


@lru_cache(maxsize=8192)
def cyclotomic_eval(m: int, q: int) -> int:
    """Evaluate the m-th cyclotomic polynomial at the integer q >= 2."""
    if m < 1 or q < 2:
        raise PreconditionError(f"cyclotomic_eval needs m >= 1 and q >= 2, got m={m}, q={q}")
    numerator = 1
    denominator = 1
    for d in divisors(m):
        mu = mobius(m // d)
        if mu == 1:
            numerator *= q**d - 1
        elif mu == -1:
            denominator *= q**d - 1
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"Moebius product for Phi_{m}({q}) is not exact")
    return value


def padic_val(r: int, n: int) -> int:
    """The largest s with r**s dividing n (r prime, n >= 1)."""
    if n < 1:
        raise PreconditionError(f"padic_val needs a positive integer, got {n}")
    return int(multiplicity(r, n))


def mult_order(q: int, r: int) -> int:
    """The multiplicative order of q modulo the prime r."""
    if q % r == 0:
        raise PreconditionError(
            f"{r} divides {q}: the defining-characteristic case has no multiplicative order"
        )
    return int(n_order(q, r))


def zsigmondy_primes(q: int, m: int) -> frozenset[int]:
    """All primitive prime divisors of q^m - 1, i.e. the primes r with ord_r(q) = m.

    Every such prime divides Phi_m(q), so it is enough to filter the prime factors
    of ``cyclotomic_eval(m, q)`` by their order.
    """
    value = cyclotomic_eval(m, q)
    return frozenset(
        int(r) for r in factorint(value) if q % r and int(n_order(q, r)) == m
    )


def zsigmondy_part(q: int, m: int) -> int:
    """Z_m(q): the part of Phi_m(q) supported on primitive primes (1 if there are none)."""
    value = cyclotomic_eval(m, q)
    part = 1
    for r in zsigmondy_primes(q, m):
        part *= r ** padic_val(r, value)
    return part


def primitive_root(r: int) -> int:
    """The smallest generator of the multiplicative group modulo the odd prime r."""
    if r < 3 or not is_prime(r):
        raise PreconditionError(f"primitive_root needs an odd prime, got {r}")
    return int(_sympy_primitive_root(r))


def order_m_residues(r: int, m: int) -> frozenset[int]:
    """The residues modulo r whose multiplicative order is exactly m."""
    if m < 1 or (r - 1) % m:
        raise PreconditionError(f"no residues of order {m} modulo {r}: {m} does not divide {r - 1}")
    g = primitive_root(r)
    step = (r - 1) // m
    return frozenset(pow(g, step * i, r) for i in range(1, m + 1) if gcd(i, m) == 1)


def lifted_residues(r: int, m: int) -> ResidueClassSet:
    """Classes of q modulo r^2 with ord_r(q) = m and r exactly dividing q^m - 1.

    Each order-m residue e has r lifts e + k*r modulo r^2. Exactly one of them
    satisfies x^m = 1 (mod r^2) and is dropped, so the set has phi(m)*(r-1) members.
    """
    modulus = r * r
    residues = [
        x
        for e in order_m_residues(r, m)
        for x in range(e, modulus, r)
        if pow(x, m, modulus) != 1
    ]
    return ResidueClassSet(modulus=modulus, residues=tuple(sorted(residues)))


def legendre(n: int, r: int) -> int:
    """v_r(n!) by Legendre's formula."""
    total = 0
    power = r
    while power <= n:
        total += n // power
        power *= r
    return total


def lcm2(x: int) -> int:
    """lcm(2, x)."""
    return x if x % 2 == 0 else 2 * x


def prime_powers_upto(bound: int) -> list[int]:
    """All prime powers q with 2 <= q <= bound, ascending."""
    powers = []
    for p in primerange(2, bound + 1):
        q = int(p)
        while q <= bound:
            powers.append(q)
            q *= int(p)
    return sorted(powers)
