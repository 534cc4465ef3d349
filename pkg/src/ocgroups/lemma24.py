"""Brute-force check of which prime powers q^r - 1 divide 2^a * 3^2 * 5 * 7.

Since a is unconstrained, q^r - 1 qualifies exactly when its odd part
divides 315.
"""

from __future__ import annotations

from dataclasses import dataclass, field

ODD_BOUND = 315  # 3^2 * 5 * 7

# (q -> admissible r) as published
EXPECTED = {
    2: (2, 3, 4, 6),
    3: (2, 4),
    **{q: (2,) for q in (5, 7, 11, 13, 17, 19, 29, 31, 41, 71, 127)},
}


@dataclass(frozen=True, order=True)
class DivisibilityPair:
    q: int
    r: int

    @property
    def value(self) -> int:
        return self.q ** self.r - 1


def odd_part(n: int) -> int:
    if n < 1:
        raise ValueError("odd_part needs n >= 1")
    while n % 2 == 0:
        n //= 2
    return n


def two_adic_valuation(n: int) -> int:
    return (n & -n).bit_length() - 1


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i, ok in enumerate(sieve) if ok]


def is_admissible(q: int, r: int) -> bool:
    return ODD_BOUND % odd_part(q ** r - 1) == 0


def admissible_pairs(q_max: int = 1000, r_max: int = 20) -> set[DivisibilityPair]:
    if q_max < 2 or r_max < 2:
        raise ValueError("need q_max >= 2 and r_max >= 2")
    return {DivisibilityPair(q, r)
            for q in primes_up_to(q_max) for r in range(2, r_max + 1) if is_admissible(q, r)}


def literal_divides(pair: DivisibilityPair) -> bool:
    """q^r - 1 | 2^a * 315 with a the 2-adic valuation of q^r - 1."""
    n = pair.value
    return (2 ** two_adic_valuation(n) * ODD_BOUND) % n == 0


def pair_table(pairs) -> dict[int, tuple[int, ...]]:
    table: dict[int, list[int]] = {}
    for p in sorted(pairs):
        table.setdefault(p.q, []).append(p.r)
    return {q: tuple(rs) for q, rs in table.items()}


@dataclass
class CompletenessCertificate:
    bound: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.checks.values())


def completeness_bound(scan_q: int = 10_000, scan_r: int = 20) -> CompletenessCertificate:
    """Why a finite scan finds every admissible pair.

    For odd q one of q - 1, q + 1 is 2 mod 4, so half of it is an odd divisor
    of q^2 - 1 and must divide 315: q <= 2*315 + 1.  For odd r the cofactor
    (q^r - 1)/(q - 1) is odd and never divides 315 once q > 3; for even r,
    q^2 - 1 divides q^r - 1, so q is already bounded by the r = 2 case.
    """
    bound = 2 * ODD_BOUND + 1
    odd_primes = [q for q in primes_up_to(scan_q) if q > 2]
    checks = {
        "bound is 2*315+1": bound == 631,
        "one of q-1, q+1 is 2 mod 4 for odd q": all(
            ((q - 1) % 4 == 2) != ((q + 1) % 4 == 2) for q in odd_primes),
        f"no admissible (q,2) with {bound} < q <= {scan_q}": not any(
            is_admissible(q, 2) for q in odd_primes if q > bound),
        "odd r >= 3, q > 3: odd cofactor does not divide 315": all(
            (q ** r - 1) // (q - 1) % 2 == 1
            and ODD_BOUND % ((q ** r - 1) // (q - 1)) != 0
            for q in odd_primes if 3 < q <= 1000 for r in range(3, scan_r + 1, 2)),
        "even r: q^2-1 divides q^r-1": all(
            (q ** r - 1) % (q * q - 1) == 0
            for q in odd_primes[:200] for r in range(2, scan_r + 1, 2)),
        "r >= 3, 3 < q <= 1000: odd part does not divide 315": not any(
            is_admissible(q, r) for q in odd_primes if 3 < q <= 1000 for r in range(3, scan_r + 1)),
        "no admissible (q,r) with r >= 5 and q odd": not any(
            is_admissible(q, r) for q in odd_primes if q <= 1000 for r in range(5, scan_r + 1)),
    }
    return CompletenessCertificate(bound, checks)


def verify(q_max: int = 1000, r_max: int = 20) -> tuple[bool, dict[int, tuple[int, ...]]]:
    table = pair_table(admissible_pairs(q_max, r_max))
    return table == EXPECTED, table
