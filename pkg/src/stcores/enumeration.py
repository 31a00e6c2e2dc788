"""Exhaustive generation of (s,t)-cores and friends, plus closed-form counts.

For coprime s, t the (s,t)-cores correspond to the nonnegative integer
tuples z of length t with sum s and sum(j * z_j) = 0 mod t.  Each cyclic
rotation orbit of a weak composition contains exactly one such tuple, which
yields both the counting formulas and a faster "necklace" generation
strategy.

The ``iter_*`` functions stream records lazily; the ``enum_*`` wrappers
collect and sort by z so output is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .betaset import ATuple, partition_from_a
from .coords import ZTuple, u_to_z, z_to_a, UTuple
from .errors import NotCoprimeError
from .partition import Partition


@dataclass(frozen=True)
class CoreRecord:
    """One core in all four views: z- and a-coordinates, the partition, and
    its size.  ``stab`` stays None until a stabilizer is attached."""

    z: ZTuple
    a: ATuple
    partition: Partition
    size: int
    stab: int | None = None

    def sort_key(self) -> tuple[int, ...]:
        return self.z.z

    def with_stab(self, stab: int) -> "CoreRecord":
        return replace(self, stab=stab)

    def to_json_dict(self) -> dict:
        d = {
            "z": list(self.z.z),
            "a": list(self.a.a),
            "parts": self.partition.to_json(),
            "size": self.size,
        }
        if self.stab is not None:
            d["stab"] = self.stab
        return d

    def csv_row(self) -> str:
        cells = [
            ",".join(str(v) for v in self.z.z),
            ",".join(str(v) for v in self.a.a),
            self.partition.csv_cell(),
            str(self.size),
        ]
        if self.stab is not None:
            cells.append(str(self.stab))
        return ";".join(cells)


def _require_coprime(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError("parameters must be >= 1")
    if math.gcd(s, t) != 1:
        raise NotCoprimeError(f"{s} and {t} must be coprime")


def record_from_z(zt: ZTuple) -> CoreRecord:
    a = z_to_a(zt)
    p = partition_from_a(a)
    return CoreRecord(z=zt, a=a, partition=p, size=p.size)


def iter_weak_compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``k`` parts, lexicographic order."""
    if k < 1:
        raise ValueError("need at least one part")
    buf = [0] * k

    def rec(pos: int, rem: int) -> Iterator[tuple[int, ...]]:
        if pos == k - 1:
            buf[pos] = rem
            yield tuple(buf)
            return
        for v in range(rem + 1):
            buf[pos] = v
            yield from rec(pos + 1, rem - v)

    yield from rec(0, total)


def canonical_cyclic_rep(x: Sequence[int]) -> int:
    """Index r of the unique rotation (x_r, ..., x_{r+t-1}) satisfying
    sum(j * x_{r+j}) = 0 mod t.

    Exists and is unique because rotating by one step shifts the weighted
    sum by -s mod t, and s = sum(x) is invertible mod t.
    """
    t = len(x)
    s = sum(x)
    _require_coprime(s, t)
    w = sum(j * v for j, v in enumerate(x)) % t
    return (pow(s % t, -1, t) * w) % t


def _iter_necklace_reps(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Aperiodic necklace representatives (lex-least rotations) of weak
    compositions of ``total`` into ``length`` parts.

    When gcd(total, length) = 1 every composition with the right sum is
    aperiodic, so these are exactly one member per rotation orbit.
    """
    n = length
    a = [0] * (n + 1)

    def gen(pos: int, period: int, rem: int) -> Iterator[tuple[int, ...]]:
        if rem < 0:
            return
        if pos > n:
            if period == n and rem == 0:
                yield tuple(a[1:])
            return
        if rem > (n - pos + 1) * total:
            return
        a[pos] = a[pos - period]
        yield from gen(pos + 1, period, rem - a[pos])
        for v in range(a[pos - period] + 1, min(total, rem) + 1):
            a[pos] = v
            yield from gen(pos + 1, pos, rem - v)

    yield from gen(1, 1, total)


def iter_st_cores(s: int, t: int, strategy: str = "filter") -> Iterator[CoreRecord]:
    """Stream all (s,t)-cores.

    strategy="filter" walks every weak composition and keeps the congruent
    ones (lexicographic on z); strategy="necklace" visits one composition
    per rotation orbit and rotates it into place, about t times faster but
    in necklace order.  Arguments are validated eagerly.
    """
    _require_coprime(s, t)
    if strategy == "filter":

        def gen() -> Iterator[CoreRecord]:
            for comp in iter_weak_compositions(s, t):
                if sum(j * v for j, v in enumerate(comp)) % t == 0:
                    yield record_from_z(ZTuple(t, s, comp))

    elif strategy == "necklace":

        def gen() -> Iterator[CoreRecord]:
            for rep in _iter_necklace_reps(s, t):
                r = canonical_cyclic_rep(rep)
                z = rep[r:] + rep[:r]
                yield record_from_z(ZTuple(t, s, z))

    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return gen()


def enum_st_cores(s: int, t: int, strategy: str = "filter") -> list[CoreRecord]:
    """All (s,t)-cores, sorted lexicographically by z."""
    return sorted(iter_st_cores(s, t, strategy), key=CoreRecord.sort_key)


def iter_sc_st_cores(s: int, t: int) -> Iterator[CoreRecord]:
    """Stream all self-conjugate (s,t)-cores via u-coordinates: weak
    compositions of floor(s/2) into floor(t/2) + 1 parts, unfolded."""
    _require_coprime(s, t)

    def gen() -> Iterator[CoreRecord]:
        for comp in iter_weak_compositions(s // 2, t // 2 + 1):
            yield record_from_z(u_to_z(UTuple(t, s, comp)))

    return gen()


def enum_sc_st_cores(s: int, t: int) -> list[CoreRecord]:
    return sorted(iter_sc_st_cores(s, t), key=CoreRecord.sort_key)


def _iter_signed_seqs(total: int, k: int) -> Iterator[tuple[int, ...]]:
    """Sequences in {-1, 0, 1}^k summing to ``total``, lexicographic."""
    buf = [0] * k

    def rec(pos: int, rem: int) -> Iterator[tuple[int, ...]]:
        left = k - pos
        if rem < -left or rem > left:
            return
        if pos == k:
            yield tuple(buf)
            return
        for v in (-1, 0, 1):
            buf[pos] = v
            yield from rec(pos + 1, rem - v)

    yield from rec(0, total)


def iter_triple_sym(m: int, d: int) -> Iterator[CoreRecord]:
    """(m, m+d, m+2d)-cores as (m+d)-cores: extended z-coordinates with
    parameter s = d take values in {-1, 0, 1}."""
    _require_coprime(m, d)
    t = m + d

    def gen() -> Iterator[CoreRecord]:
        for seq in _iter_signed_seqs(d, t):
            if sum(j * v for j, v in enumerate(seq)) % t == 0:
                yield record_from_z(ZTuple(t, d, seq))

    return gen()


def enum_triple_sym(m: int, d: int) -> list[CoreRecord]:
    return sorted(iter_triple_sym(m, d), key=CoreRecord.sort_key)


def iter_triple_asym(m: int, d: int) -> Iterator[CoreRecord]:
    """(m, m+d, m+2d)-cores as (m+d, m)-cores: nonnegative z with the cyclic
    no-two-adjacent-zeros condition z_j + z_{j+1} >= 1."""
    _require_coprime(m, d)
    s, t = m + d, m

    def gen() -> Iterator[CoreRecord]:
        for comp in iter_weak_compositions(s, t):
            if any(comp[j] + comp[(j + 1) % t] < 1 for j in range(t)):
                continue
            if sum(j * v for j, v in enumerate(comp)) % t == 0:
                yield record_from_z(ZTuple(t, s, comp))

    return gen()


def enum_triple_asym(m: int, d: int) -> list[CoreRecord]:
    return sorted(iter_triple_asym(m, d), key=CoreRecord.sort_key)


def count_st(s: int, t: int) -> int:
    """Number of (s,t)-cores: C(s+t, t) / (s+t)."""
    _require_coprime(s, t)
    num = math.comb(s + t, t)
    assert num % (s + t) == 0
    return num // (s + t)


def count_sc(s: int, t: int) -> int:
    """Number of self-conjugate (s,t)-cores: C(floor(s/2)+floor(t/2), floor(t/2))."""
    _require_coprime(s, t)
    return math.comb(s // 2 + t // 2, t // 2)


def _multinomial(n: int, ks: Sequence[int]) -> int:
    assert sum(ks) == n and all(v >= 0 for v in ks)
    out = 1
    rem = n
    for v in ks:
        out *= math.comb(rem, v)
        rem -= v
    return out


def count_triple(m: int, d: int) -> int:
    """Number of (m, m+d, m+2d)-cores:
    (1/(m+d)) * sum_i multinom(m+d; i, i+d, m-2i)."""
    _require_coprime(m, d)
    t = m + d
    total = sum(_multinomial(t, (i, i + d, m - 2 * i)) for i in range(m // 2 + 1))
    assert total % t == 0
    return total // t
