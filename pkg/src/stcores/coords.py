"""Changes of variables among a-, z-, and u-coordinates.

Fix t >= 1 and s >= 1 coprime to t.  The a-coordinates of a t-core transform
into z-coordinates via

    z_j = (a_{s*j + k} - a_{s*(j+1) + k} + s) / t,    k = (s+1)(t-1)/2,

with indices mod t.  The map is an affine bijection between all t-cores
(a-side: sum t(t-1)/2, congruences a_i = i mod t) and integer tuples with
sum s and sum(j * z_j) = 0 mod t; the (s,t)-cores are exactly the tuples
with every z_j >= 0.  All divisions are exact by construction; a remainder
means corrupted invariants and raises AssertionError, not a recoverable
error.

u-coordinates fold the symmetric z-tuples (z_i = z_{-i}) of self-conjugate
cores down to floor(t/2) + 1 entries summing to floor(s/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .betaset import ATuple
from .errors import InvalidZError, NotCoprimeError, NotSymmetricError, ParityError


def _require_coprime(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError("moduli must be >= 1")
    if math.gcd(s, t) != 1:
        raise NotCoprimeError(f"s={s} and t={t} must be coprime")


def shift_constant(s: int, t: int) -> int:
    """k = (s+1)(t-1)/2, an integer whenever gcd(s, t) = 1."""
    num = (s + 1) * (t - 1)
    assert num % 2 == 0, "k must be an integer for coprime s, t"
    return num // 2


@dataclass(frozen=True)
class ZTuple:
    """t integers summing to s with sum(j * z_j) = 0 mod t.

    Entries may be negative (general t-cores); the (s,t)-core subset is the
    componentwise nonnegative one.
    """

    t: int
    s: int
    z: tuple[int, ...]

    def __post_init__(self):
        _require_coprime(self.s, self.t)
        if len(self.z) != self.t:
            raise InvalidZError(f"expected {self.t} entries, got {len(self.z)}")
        if sum(self.z) != self.s:
            raise InvalidZError(f"entries sum to {sum(self.z)}, expected {self.s}")
        if sum(j * v for j, v in enumerate(self.z)) % self.t != 0:
            raise InvalidZError("sum(j * z_j) is not 0 mod t")

    @property
    def k(self) -> int:
        return shift_constant(self.s, self.t)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.z)

    def to_json_dict(self) -> dict:
        return {"t": self.t, "s": self.s, "z": list(self.z)}


@dataclass(frozen=True)
class UTuple:
    """Folded coordinates for self-conjugate t-cores: floor(t/2) + 1 integers
    summing to floor(s/2)."""

    t: int
    s: int
    u: tuple[int, ...]

    def __post_init__(self):
        _require_coprime(self.s, self.t)
        if len(self.u) != self.t // 2 + 1:
            raise InvalidZError(f"expected {self.t // 2 + 1} entries, got {len(self.u)}")
        if sum(self.u) != self.s // 2:
            raise InvalidZError(f"entries sum to {sum(self.u)}, expected {self.s // 2}")

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.u)

    def to_json_dict(self) -> dict:
        return {"t": self.t, "s": self.s, "u": list(self.u)}


def a_to_z(a: ATuple, s: int) -> ZTuple:
    """Forward change of variables; s must be coprime to the modulus of a."""
    t = a.t
    _require_coprime(s, t)
    k = shift_constant(s, t)
    z = []
    for j in range(t):
        num = a.a[(s * j + k) % t] - a.a[(s * (j + 1) + k) % t] + s
        assert num % t == 0, "coordinate change division must be exact"
        z.append(num // t)
    return ZTuple(t, s, tuple(z))


def z_to_a(z: ZTuple) -> ATuple:
    """Inverse change of variables via the telescoping identity

        a_{k + l*s} - (t-1)/2 = sum_j ((t-1)/2 - j) * z_{j+l}.

    Computed with doubled integers so the half-integers stay exact.
    """
    t, s, k = z.t, z.s, z.k
    a = [0] * t
    for ell in range(t):
        doubled = (t - 1) + sum(((t - 1) - 2 * j) * z.z[(j + ell) % t] for j in range(t))
        assert doubled % 2 == 0, "a-coordinate must be an integer"
        a[(k + ell * s) % t] = doubled // 2
    return ATuple(t, tuple(a))


def is_st_core_a(a: ATuple, s: int) -> bool:
    """Whether the t-core with these a-coordinates is also an s-core:
    a_i >= a_{i+s} - s for every i mod t."""
    t = a.t
    return all(a.a[i] >= a.a[(i + s) % t] - s for i in range(t))


def is_self_conjugate_a(a: ATuple) -> bool:
    """Self-conjugacy in a-coordinates: a_i + a_{-1-i} = t - 1 for all i."""
    t = a.t
    return all(a.a[i] + a.a[(-1 - i) % t] == t - 1 for i in range(t))


def z_to_u(z: ZTuple) -> UTuple:
    """Fold a symmetric z-tuple into u-coordinates.

    Requires z_i = z_{-i}; for even t additionally z_{t/2} even and
    z_0 = s mod 2.  Odd t: u_0 = floor(z_0 / 2), u_i = z_i.  Even t: the
    middle entry halves as well, u_{t/2} = z_{t/2} / 2.
    """
    t, s = z.t, z.s
    tp = t // 2
    for i in range(t):
        if z.z[i] != z.z[(-i) % t]:
            raise NotSymmetricError(f"z[{i}] != z[{t - i}]")
    if z.z[0] % 2 != s % 2:
        raise ParityError("z_0 must have the parity of s")
    if t % 2 == 1:
        u = (z.z[0] // 2,) + z.z[1 : tp + 1]
    else:
        if z.z[tp] % 2 != 0:
            raise ParityError("middle entry must be even when t is even")
        u = (z.z[0] // 2,) + z.z[1:tp] + (z.z[tp] // 2,)
    return UTuple(t, s, u)


def u_to_z(u: UTuple) -> ZTuple:
    """Unfold u-coordinates; exact inverse of :func:`z_to_u`."""
    t, s = u.t, u.s
    tp = t // 2
    z = [0] * t
    z[0] = 2 * u.u[0] + (s % 2)
    if t % 2 == 1:
        for i in range(1, tp + 1):
            z[i] = u.u[i]
            z[t - i] = u.u[i]
    else:
        for i in range(1, tp):
            z[i] = u.u[i]
            z[t - i] = u.u[i]
        if t >= 2:
            z[tp] = 2 * u.u[tp]
    return ZTuple(t, s, tuple(z))
