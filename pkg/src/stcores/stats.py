"""Exact sizes, stabilizer orders, weighted averages, and identity checks.

All statistics are exact: sizes are integers, averages are
``fractions.Fraction`` values (arbitrary precision, always reduced), and
every comparison against a closed form is an equality test, never a
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .betaset import ATuple, CTuple
from .coords import UTuple, ZTuple, z_to_u
from .enumeration import CoreRecord, iter_sc_st_cores, iter_st_cores
from .errors import NegativeEntryError, NotCoprimeError

ExactRational = Fraction


def format_rational(q: Fraction) -> str:
    """Canonical string form: ``p/q`` reduced, or plain ``p`` when q = 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def multinomial(n: int, ks: Sequence[int]) -> int:
    """n! / prod(k_i!) for a weak composition of n."""
    out = 1
    rem = n
    for v in ks:
        out *= math.comb(rem, v)
        rem -= v
    assert rem == 0
    return out


def size_from_a(a: ATuple) -> int:
    """Size of the t-core with these a-coordinates:

        |core| = -(t^2 - 1)/24 + (1/2t) * sum_i (a_i - (t-1)/2)^2.

    Evaluated in exact rationals; the result is asserted to be a
    nonnegative integer (anything else means corrupted invariants).
    """
    t = a.t
    half = Fraction(t - 1, 2)
    total = -Fraction(t * t - 1, 24) + Fraction(1, 2 * t) * sum(
        (v - half) ** 2 for v in a.a
    )
    assert total.denominator == 1 and total >= 0, "size formula must give an integer"
    return int(total)


def size_from_c(c: CTuple) -> int:
    """Size of the t-core with these charge coordinates:

        |core| = sum_i ( (t/2) c_i^2 - ((t-1)/2 - i) c_i ),

    valid for zero-sum charge tuples.
    """
    t = c.s
    assert c.total == 0, "size formula needs a zero-sum charge tuple"
    total = sum(
        Fraction(t, 2) * v * v - (Fraction(t - 1, 2) - i) * v
        for i, v in enumerate(c.c)
    )
    assert total.denominator == 1 and total >= 0
    return int(total)


def stab_size(z: ZTuple) -> int:
    """Stabilizer order of an s-core under the residue-preserving action:
    the product of the factorials of its z-coordinates."""
    if not z.is_nonnegative():
        raise NegativeEntryError("stabilizer formula needs z >= 0 (an (s,t)-core)")
    out = 1
    for v in z.z:
        out *= math.factorial(v)
    return out


def stab_size_sc(u: UTuple) -> int:
    """Self-conjugate stabilizer order: 2^{u_0} * prod u_i! for odd t,
    2^{u_0 + u_{t'}} * prod u_i! for even t."""
    if not u.is_nonnegative():
        raise NegativeEntryError("stabilizer formula needs u >= 0")
    exp = u.u[0] if u.t % 2 == 1 else u.u[0] + u.u[-1]
    out = 1 << exp
    for v in u.u:
        out *= math.factorial(v)
    return out


def attach_stabilizers(records: list[CoreRecord], self_conjugate: bool = False) -> list[CoreRecord]:
    """Fill the ``stab`` field of each record (self-conjugate records get
    the symmetric-action stabilizer computed from their u-coordinates)."""
    if self_conjugate:
        return [r.with_stab(stab_size_sc(z_to_u(r.z))) for r in records]
    return [r.with_stab(stab_size(r.z)) for r in records]


def _scaled_weight(rec: CoreRecord, weighted: bool, self_conjugate: bool) -> int:
    """Weight proportional to 1/stab, rescaled to an integer:
    s!/prod(z!) = multinom(s; z) in the general case and
    (s'! 2^{s'}) / stab in the self-conjugate case."""
    if not weighted:
        return 1
    if self_conjugate:
        u = z_to_u(rec.z)
        exp = u.u[0] if u.t % 2 == 1 else u.u[0] + u.u[-1]
        return multinomial(u.s // 2, u.u) * (1 << (u.s // 2 - exp))
    return multinomial(rec.z.s, rec.z.z)


def average_size(s: int, t: int, weighted: bool = False, self_conjugate: bool = False) -> Fraction:
    """Exact average of |core| over the (s,t)-cores (or the self-conjugate
    ones), optionally weighted by inverse stabilizer order.

    Closed forms (all verified by the test suite):
      unweighted, either family: (s-1)(t-1)(s+t+1)/24
      weighted, general:         (s-1)(t^2-1)/24
      weighted, self-conjugate:  the same for odd t, (s-1)(t^2+2)/24 for even t
    """
    records = iter_sc_st_cores(s, t) if self_conjugate else iter_st_cores(s, t)
    num = 0
    den = 0
    for rec in records:
        w = _scaled_weight(rec, weighted, self_conjugate)
        num += w * rec.size
        den += w
    return Fraction(num, den)


def expected_average(s: int, t: int, weighted: bool = False, self_conjugate: bool = False) -> Fraction:
    """The closed form that :func:`average_size` must equal."""
    if math.gcd(s, t) != 1:
        raise NotCoprimeError(f"{s} and {t} must be coprime")
    if not weighted:
        return Fraction((s - 1) * (t - 1) * (s + t + 1), 24)
    if self_conjugate and t % 2 == 0:
        return Fraction((s - 1) * (t * t + 2), 24)
    return Fraction((s - 1) * (t * t - 1), 24)


def moment_sum(s: int, t: int, e: int, weighted: bool = False, self_conjugate: bool = False) -> Fraction:
    """sum of w(core) * |core|^e, with w = 1 or w = 1/stab.  Exact; the
    zeroth unweighted moment is the count."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    records = iter_sc_st_cores(s, t) if self_conjugate else iter_st_cores(s, t)
    total = Fraction(0)
    for rec in records:
        if weighted:
            stab = stab_size_sc(z_to_u(rec.z)) if self_conjugate else stab_size(rec.z)
            total += Fraction(rec.size**e, stab)
        else:
            total += rec.size**e
    return total


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one checked identity, plus enough context to rerun it."""

    name: str
    params: dict
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def check_average(s: int, t: int, weighted: bool = False, self_conjugate: bool = False) -> IdentityReport:
    name = ("weighted-" if weighted else "") + ("sc-" if self_conjugate else "") + "average-size"
    return IdentityReport(
        name=name,
        params={"s": s, "t": t},
        lhs=average_size(s, t, weighted, self_conjugate),
        rhs=expected_average(s, t, weighted, self_conjugate),
    )


def verify_cyclic_sum_identities(s: int, t: int) -> list[IdentityReport]:
    """Evaluate the seven special cyclic sums over the (s,t)-core z-tuples
    by enumeration and compare with the closed forms, exactly.

    Exponential family (f carries the multinomial weight s!/prod(z_j!)):
      constant  -> t^s / t
      linear    -> s t^(s-1) / t        for f = multinom * (1/t) sum z_i
      quadratic -> s(s-1) t^(s-2) / t   for (1/t) sum z_i(z_i-1), and equally
                                        for (1/t) sum z_i z_{i+r}, r != 0

    Ordinary family (no weight):
      constant       -> C(s+t-1, t-1) / t
      linear         -> C(s+t-1, t)   / t
      square quad    -> 2 C(s+t-1, t+1) / t
      mixed quad     -> C(s+t-1, t+1) / t   for each r != 0 mod t
    """
    if math.gcd(s, t) != 1:
        raise NotCoprimeError(f"{s} and {t} must be coprime")
    zs = [rec.z.z for rec in iter_st_cores(s, t)]
    weights = [multinomial(s, z) for z in zs]

    def rot_products(z: tuple[int, ...], r: int) -> int:
        return sum(z[i] * z[(i + r) % t] for i in range(t))

    reports = []

    def add(name: str, lhs: Fraction, rhs: Fraction, **extra) -> None:
        reports.append(IdentityReport(name, {"s": s, "t": t, **extra}, lhs, rhs))

    tq = Fraction(t)
    add("exp-constant", Fraction(sum(weights)), tq**s / t)
    add(
        "exp-linear",
        sum(w * Fraction(sum(z), t) for w, z in zip(weights, zs)),
        s * tq ** (s - 1) / t,
    )
    quad_rhs = s * (s - 1) * tq ** (s - 2) / t
    add(
        "exp-quadratic-square",
        sum(w * Fraction(sum(v * (v - 1) for v in z), t) for w, z in zip(weights, zs)),
        quad_rhs,
    )
    for r in range(1, t):
        add(
            "exp-quadratic-mixed",
            sum(w * Fraction(rot_products(z, r), t) for w, z in zip(weights, zs)),
            quad_rhs,
            r=r,
        )
    add("ord-constant", Fraction(len(zs)), Fraction(math.comb(s + t - 1, t - 1), t))
    add(
        "ord-linear",
        sum(Fraction(sum(z), t) for z in zs),
        Fraction(math.comb(s + t - 1, t), t),
    )
    add(
        "ord-quadratic-square",
        sum(Fraction(sum(v * (v - 1) for v in z), t) for z in zs),
        Fraction(2 * math.comb(s + t - 1, t + 1), t),
    )
    for r in range(1, t):
        add(
            "ord-quadratic-mixed",
            sum(Fraction(rot_products(z, r), t) for z in zs),
            Fraction(math.comb(s + t - 1, t + 1), t),
            r=r,
        )
    return reports
