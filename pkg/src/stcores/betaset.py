"""Beta-sets (the abacus), charge, pushes, and a-coordinates.

The beta-set of a partition is B = {part_i - i : i >= 1}, an infinite set of
integers that is cofinite below and finite above.  We store the canonical
finite encoding: ``members`` = B restricted to the nonnegatives, ``gaps`` =
the negatives missing from B.  The empty partition has both empty, and a
pair encodes a partition exactly when |members| = |gaps| (total charge 0).
Unequal sizes encode a general "good" set, which several operations here
(charge, pushes) accept as well.

Residue classes are always taken with the nonnegative convention, i.e.
``x % s`` lies in 0..s-1 even for negative x, matching Python's ``%``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import NonzeroChargeError, NotACoreError
from .partition import Partition


class BetaSet:
    """Canonical finite encoding of a beta-set / good set."""

    __slots__ = ("_members", "_gaps")

    def __init__(self, members: Iterable[int] = (), gaps: Iterable[int] = ()):
        ms = tuple(sorted(set(members)))
        gs = tuple(sorted(set(gaps)))
        if ms and ms[0] < 0:
            raise ValueError(f"members must be >= 0, got {ms[0]}")
        if gs and gs[-1] > -1:
            raise ValueError(f"gaps must be <= -1, got {gs[-1]}")
        self._members = ms
        self._gaps = gs

    @property
    def members(self) -> tuple[int, ...]:
        return self._members

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def total_charge(self) -> int:
        """|gaps| - |members|; zero exactly for beta-sets of partitions."""
        return len(self._gaps) - len(self._members)

    def __contains__(self, x: int) -> bool:
        """Membership in the encoded infinite set B."""
        if x >= 0:
            return x in set(self._members)
        return x not in set(self._gaps)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BetaSet)
            and self._members == other._members
            and self._gaps == other._gaps
        )

    def __hash__(self) -> int:
        return hash((self._members, self._gaps))

    def __repr__(self) -> str:
        return f"BetaSet(members={list(self._members)!r}, gaps={list(self._gaps)!r})"

    def to_json_dict(self) -> dict:
        return {"members": list(self._members), "gaps": list(self._gaps)}


@dataclass(frozen=True)
class CTuple:
    """Signed charge measure: s integers indexed by Z/sZ.

    The entries sum to the total charge of the underlying good set; zero sum
    characterizes beta-sets of partitions.
    """

    s: int
    c: tuple[int, ...]

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("modulus must be >= 1")
        if len(self.c) != self.s:
            raise ValueError(f"expected {self.s} entries, got {len(self.c)}")

    @property
    def total(self) -> int:
        return sum(self.c)


@dataclass(frozen=True)
class ATuple:
    """An s-set in coordinate form: t integers a_0..a_{t-1} with a_i = i
    (mod t) summing to t(t-1)/2.

    The set {a_i} is the s-set (B + t) \\ B of a t-core; as a set it carries
    one representative per residue class mod t.
    """

    t: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("modulus must be >= 1")
        if len(self.a) != self.t:
            raise ValueError(f"expected {self.t} entries, got {len(self.a)}")
        for i, v in enumerate(self.a):
            if v % self.t != i % self.t:
                raise ValueError(f"a[{i}] = {v} is not congruent to {i} mod {self.t}")
        want = self.t * (self.t - 1) // 2
        if sum(self.a) != want:
            raise ValueError(f"entries sum to {sum(self.a)}, expected {want}")

    def as_set(self) -> frozenset[int]:
        return frozenset(self.a)

    def to_json(self) -> list[int]:
        return list(self.a)


def beta_from_partition(p: Partition) -> BetaSet:
    """Canonical encoding of B = {part_i - i}."""
    n = len(p)
    betas = {p.parts[i] - (i + 1) for i in range(n)}
    members = [b for b in betas if b >= 0]
    gaps = [x for x in range(-n, 0) if x not in betas]
    return BetaSet(members, gaps)


def partition_from_beta(b: BetaSet) -> Partition:
    """Inverse of :func:`beta_from_partition`.

    Raises NonzeroChargeError when the encoding does not have charge zero
    (such encodings belong to shifted good sets, not partitions).
    """
    if b.total_charge != 0:
        raise NonzeroChargeError(f"total charge is {-b.total_charge}, expected 0")
    if not b.gaps and not b.members:
        return Partition()
    # All beta-values down to min(gaps) listed descending; below that the set
    # is saturated and contributes only zero parts.
    floor = min(b.gaps) if b.gaps else -1
    gapset = set(b.gaps)
    window = sorted(b.members, reverse=True) + [
        x for x in range(-1, floor - 1, -1) if x not in gapset
    ]
    parts = [x + i for i, x in enumerate(window, start=1)]
    return Partition(parts)


def charge(b: BetaSet, s: int) -> CTuple:
    """Per-residue-class bead displacement.

    c_{s,i} counts gaps minus members in the class -1-i (mod s); the tuple
    sums to the total charge and is preserved by s-pushes.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    c = [0] * s
    for g in b.gaps:
        c[(-1 - g) % s] += 1
    for m in b.members:
        c[(-1 - m) % s] -= 1
    return CTuple(s, tuple(c))


def hook_count(b: BetaSet, s: int) -> int:
    """Number of rim s-hooks, via |B \\ (B + s)| on the finite encoding."""
    if s < 1:
        raise ValueError("s must be >= 1")
    members, gaps = set(b.members), set(b.gaps)
    count = 0
    for m in b.members:
        x = m - s
        if (x >= 0 and x not in members) or (x < 0 and x in gaps):
            count += 1
    for g in b.gaps:
        # negative beta-value g + s (if present) whose downward push lands on g
        x = g + s
        if x < 0 and x not in gaps:
            count += 1
    return count


def is_s_core(b: BetaSet, s: int) -> bool:
    """The closure criterion: B - s lies within B, i.e. no rim s-hooks."""
    return hook_count(b, s) == 0


def _beta_from_class_maxima(maxima: list[int], s: int) -> BetaSet:
    """Encoding of the down-set whose class-rho maximum is maxima[rho]."""
    members: list[int] = []
    gaps: list[int] = []
    for rho in range(s):
        m = maxima[rho]
        if m >= 0:
            members.extend(range(m, -1, -s))
        else:
            gaps.extend(range(m + s, 0, s))
    return BetaSet(members, gaps)


def s_push(b: BetaSet, s: int) -> BetaSet:
    """Slide every bead down within its residue class until no gaps remain
    below it.

    The result is the beta-set of the s-core and carries the same charge
    s-tuple.  Works for any good set, not just charge zero.
    """
    c = charge(b, s)
    maxima = [rho - s - s * c.c[(-1 - rho) % s] for rho in range(s)]
    return _beta_from_class_maxima(maxima, s)


def t_core(p: Partition, t: int) -> Partition:
    """The t-core via the abacus: push the beta-set, read back the partition."""
    return partition_from_beta(s_push(beta_from_partition(p), t))


def a_coords(p: Partition, s: int) -> ATuple:
    """a-coordinates of an s-core: a_i = s + max(B in class i mod s).

    The resulting set {a_i} equals (B + s) \\ B.  Raises NotACoreError when p
    still has rim s-hooks.
    """
    b = beta_from_partition(p)
    if not is_s_core(b, s):
        raise NotACoreError(f"{p!r} is not a {s}-core")
    gapset = set(b.gaps)
    by_class: list[list[int]] = [[] for _ in range(s)]
    for m in b.members:
        by_class[m % s].append(m)
    a = []
    for rho in range(s):
        if by_class[rho]:
            mx = max(by_class[rho])
        else:
            mx = rho - s
            while mx in gapset:
                mx -= s
        a.append(s + mx)
    return ATuple(s, tuple(a))


def partition_from_a(a: ATuple) -> Partition:
    """Partition of the t-core with the given a-coordinates."""
    t = a.t
    maxima = [0] * t
    for v in a.a:
        maxima[v % t] = v - t
    return partition_from_beta(_beta_from_class_maxima(maxima, t))


def s_set(b: BetaSet, s: int) -> frozenset[int]:
    """(B + s) \\ B computed on the finite encoding.

    For an s-core this is the s-set {a_i}, with exactly one element per
    residue class mod s.  In general the set has s + hook_count(b, s)
    elements (the upward shift adds one net element per class).
    """
    members, gaps = set(b.members), set(b.gaps)
    out = set()
    for m in b.members:
        if m + s not in members:
            out.add(m + s)
    for x in range(-s, 0):
        if x not in gaps and x + s not in members:
            out.add(x + s)
    for g in b.gaps:
        if g - s not in gaps:
            out.add(g)
    return frozenset(out)


def conjugate_beta(b: BetaSet) -> BetaSet:
    """Beta-set of the conjugate: x is in the result iff -1-x is not in B.

    On the canonical encoding this is the swap members <-> gaps under the
    involution x -> -1-x.
    """
    return BetaSet(
        members=(-1 - g for g in b.gaps),
        gaps=(-1 - m for m in b.members),
    )


def random_s_core(s: int, rng: random.Random, bound: int = 5) -> Partition:
    """Random s-core: charge coordinates uniform on [-bound, bound]^s
    conditioned on zero sum (rejection sampling), then converted.

    Charge tuples parameterize s-cores uniquely, so this covers every s-core
    in the box.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    while True:
        c = [rng.randint(-bound, bound) for _ in range(s)]
        if sum(c) == 0:
            break
    a = tuple(i - s * c[(-1 - i) % s] for i in range(s))
    return partition_from_a(ATuple(s, a))
