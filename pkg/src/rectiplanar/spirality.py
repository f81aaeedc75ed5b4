"""Non-negative rectilinear spirality sets and their composition rules.

A set is stored as ``(lo, hi, jump)`` and always has one of the shapes
``[0]``, ``[1]``, ``[1,2]^1``, ``[0,M]^1``, ``[0,M]^2`` or ``[1,M]^2``.
Membership is symmetric: ``s.contains(-x) == s.contains(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product


@dataclass(frozen=True, slots=True)
class SpiralitySet:
    lo: int
    hi: int
    jump: int = 1

    def __post_init__(self):
        if self.is_empty:
            return
        lo, hi, jump = self.lo, self.hi, self.jump
        ok = (
            (lo == hi and lo in (0, 1) and jump == 1)
            or (lo, hi, jump) == (1, 2, 1)
            or (lo == 0 and hi >= 1 and jump == 1)
            or (lo == 0 and hi >= 2 and hi % 2 == 0 and jump == 2)
            or (lo == 1 and hi >= 3 and hi % 2 == 1 and jump == 2)
        )
        if not ok:
            raise ValueError(f"not a rectilinear spirality set shape: {self!r}")

    @property
    def is_empty(self) -> bool:
        return self.hi < self.lo

    @property
    def max(self) -> int:
        return self.hi

    @property
    def is_jump1(self) -> bool:
        return not self.is_empty and self.lo < self.hi and self.jump == 1

    def contains(self, sigma: int) -> bool:
        x = abs(sigma)
        return self.lo <= x <= self.hi and (x - self.lo) % self.jump == 0

    __contains__ = contains

    def values(self) -> list[int]:
        """Non-negative members in increasing order (for tests and diagnostics)."""
        if self.is_empty:
            return []
        return list(range(self.lo, self.hi + 1, self.jump))

    def symmetric_values(self) -> list[int]:
        pos = self.values()
        return sorted({-x for x in pos} | set(pos))

    def __str__(self) -> str:
        if self.is_empty:
            return "empty"
        if self.lo == self.hi:
            return f"[{self.lo}]"
        return f"[{self.lo},{self.hi}]^{self.jump}"

    @classmethod
    def parse(cls, text: str) -> SpiralitySet:
        text = text.strip()
        if text == "empty":
            return EMPTY
        body, _, jump = text.partition("^")
        parts = body.strip("[]").split(",")
        lo = int(parts[0])
        hi = int(parts[-1])
        return cls(lo, hi, int(jump) if jump else 1)


EMPTY = SpiralitySet(0, -1, 1)


def contains(s: SpiralitySet, sigma: int) -> bool:
    return s.contains(sigma)


def from_values(values) -> SpiralitySet:
    """Canonical set for a collection of non-negative values; raises if no shape fits."""
    vals = sorted(set(values))
    if not vals:
        return EMPTY
    lo, hi = vals[0], vals[-1]
    if lo == hi:
        return SpiralitySet(lo, hi)
    jump = 1 if len(vals) == hi - lo + 1 else 2
    s = SpiralitySet(lo, hi, jump)
    if s.values() != vals:
        raise ValueError(f"values {vals} do not form a rectilinear spirality set")
    return s


def _shape(m: int, jump1: bool, has_zero: bool) -> SpiralitySet:
    if jump1:
        return SpiralitySet(0, m, 1) if has_zero else SpiralitySet(1, 2, 1)
    if m <= 1:
        return SpiralitySet(m, m)
    return SpiralitySet(m % 2, m, 2)


# ---------------------------------------------------------------------------
# Q*-nodes
# ---------------------------------------------------------------------------


def qstar_set(ell: int) -> SpiralitySet:
    """A chain of ``ell`` edges can turn once at each internal vertex."""
    if ell < 1:
        raise ValueError("chain length must be positive")
    return SpiralitySet(0, ell - 1, 1)


# ---------------------------------------------------------------------------
# S-nodes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SNodeSummary:
    x: int = 0  # children with set [0]
    y: int = 0  # children with set [1,2]^1
    z: int = 0  # jump-1 children
    mtot: int = 0  # sum of child maxima
    n_children: int = 0
    n_empty: int = 0

    @property
    def any_empty(self) -> bool:
        return self.n_empty > 0


def _weights(s: SpiralitySet) -> tuple[int, int, int, int, int]:
    if s.is_empty:
        return 0, 0, 0, 0, 1
    return (
        int(s.lo == 0 and s.hi == 0),
        int((s.lo, s.hi, s.jump) == (1, 2, 1)),
        int(s.is_jump1),
        s.hi,
        0,
    )


def s_summary(children) -> SNodeSummary:
    x = y = z = mtot = n = ne = 0
    for c in children:
        a, b, c_, d, e = _weights(c)
        x += a
        y += b
        z += c_
        mtot += d
        ne += e
        n += 1
    return SNodeSummary(x, y, z, mtot, n, ne)


def s_summary_replace(summary: SNodeSummary, removed: SpiralitySet, added: SpiralitySet) -> SNodeSummary:
    r = _weights(removed)
    a = _weights(added)
    return SNodeSummary(
        summary.x - r[0] + a[0],
        summary.y - r[1] + a[1],
        summary.z - r[2] + a[2],
        summary.mtot - r[3] + a[3],
        summary.n_children,
        summary.n_empty - r[4] + a[4],
    )


def s_summary_add(summary: SNodeSummary, added: SpiralitySet) -> SNodeSummary:
    a = _weights(added)
    return SNodeSummary(
        summary.x + a[0],
        summary.y + a[1],
        summary.z + a[2],
        summary.mtot + a[3],
        summary.n_children + 1,
        summary.n_empty + a[4],
    )


def s_node_set(summary: SNodeSummary) -> SpiralitySet:
    if summary.any_empty:
        return EMPTY
    m = summary.mtot
    if summary.z > 0:
        if m != 2:
            return SpiralitySet(0, m, 1)
        if summary.x + summary.y == summary.n_children and summary.y == 1:
            return SpiralitySet(1, 2, 1)
        return SpiralitySet(0, 2, 1)
    return _shape(m, False, m % 2 == 0)


# ---------------------------------------------------------------------------
# P-nodes
# ---------------------------------------------------------------------------

# (alpha_u_left, alpha_u_right, alpha_v_left, alpha_v_right); each pole has
# at least one 90-degree outside angle
ALPHAS = tuple(
    (ul, ur, vl, vr)
    for (ul, ur), (vl, vr) in product(((0, 1), (1, 0), (1, 1)), repeat=2)
)


def p3_config(a: SpiralitySet, b: SpiralitySet, c: SpiralitySet, sigma: int):
    """First left-to-right order of the children realizing ``sigma``, or None.

    Returns ``(order, targets)`` with ``order`` a permutation of (0, 1, 2)
    indexing the arguments.
    """
    kids = (a, b, c)
    for order in permutations(range(3)):
        l, m, r = (kids[i] for i in order)
        if l.contains(sigma + 2) and m.contains(sigma) and r.contains(sigma - 2):
            return order, (sigma + 2, sigma, sigma - 2)
    return None


def p3_admits(a: SpiralitySet, b: SpiralitySet, c: SpiralitySet, sigma: int) -> bool:
    return p3_config(a, b, c, sigma) is not None


def p2_config(a: SpiralitySet, b: SpiralitySet, sigma: int):
    """First (order, alphas, targets) realizing ``sigma`` with two children, or None."""
    kids = (a, b)
    for order in ((0, 1), (1, 0)):
        left, right = kids[order[0]], kids[order[1]]
        for al in ALPHAS:
            ul, ur, vl, vr = al
            sl, sr = sigma + ul + vl, sigma - ur - vr
            if left.contains(sl) and right.contains(sr):
                return order, al, (sl, sr)
    return None


def p2_admits(a: SpiralitySet, b: SpiralitySet, sigma: int) -> bool:
    return p2_config(a, b, sigma) is not None


def _finish(admits, m: int) -> SpiralitySet:
    a0, a1, a2 = admits(0), admits(1), admits(2)
    jump1 = (a0 and a1) or (a1 and a2)
    return _shape(m, jump1, a0)


def _small_max(admits) -> int | None:
    for i in range(5):
        if admits(i) and not admits(i + 1) and not admits(i + 2):
            return i
    return None


def p3_set(a: SpiralitySet, b: SpiralitySet, c: SpiralitySet) -> SpiralitySet:
    if a.is_empty or b.is_empty or c.is_empty:
        return EMPTY

    def admits(s: int) -> bool:
        return p3_admits(a, b, c, s)

    if not (admits(0) or admits(1)):
        return EMPTY
    m = _small_max(admits)
    if m is None:
        lo, mid, hi = sorted((a.hi, b.hi, c.hi))
        mbar = min(hi - 2, mid, lo + 2)
        jump1 = (admits(0) and admits(1)) or (admits(1) and admits(2))
        if jump1 or admits(mbar):
            m = mbar
        else:
            m = mbar - 1
    return _finish(admits, m)


def p2_set(a: SpiralitySet, b: SpiralitySet) -> SpiralitySet:
    if a.is_empty or b.is_empty:
        return EMPTY

    def admits(s: int) -> bool:
        return p2_admits(a, b, s)

    if not (admits(0) or admits(1)):
        return EMPTY
    m = _small_max(admits)
    if m is None:
        lo, hi = sorted((a.hi, b.hi))
        if hi >= lo + 2:
            m = lo + 2
        else:
            m = hi if admits(hi) else hi - 1
    return _finish(admits, m)


def p_node_set(children) -> SpiralitySet:
    if len(children) == 2:
        return p2_set(*children)
    if len(children) == 3:
        return p3_set(*children)
    raise ValueError(f"P-node with {len(children)} children")


# ---------------------------------------------------------------------------
# root
# ---------------------------------------------------------------------------


def root_pair(s: SpiralitySet, ell: int) -> tuple[int, int] | None:
    """First ``(sigma, k)`` with ``sigma + k == 4``, ``sigma`` in ``s`` and ``0 <= k < ell``."""
    for sigma in range(5):
        k = 4 - sigma
        if k <= ell - 1 and s.contains(sigma):
            return sigma, k
    return None


def root_feasible(s: SpiralitySet, ell: int) -> bool:
    return root_pair(s, ell) is not None
