"""Resolution trees and bracket polynomials of tied link diagrams.

The double bracket <<D>> of a tied diagram is computed by repeatedly
smoothing *illegal* crossings (same-color crossings via the two-term skein
relation with labels A and 1/A; mixed-color crossings with the over-strand
color index below the under-strand's via the three-term relation with
labels -1, delta, delta where delta = A + 1/A) until no illegal crossing
remains.  Each surviving state contributes

    weight(leaf) * c^(gamma - 1) * (-A^2 - A^-2)^(k - gamma)

where k counts its circles and gamma its colors.  The total does not
depend on the order in which illegal crossings are picked, which
`independence_check` exercises empirically.

The classical Kauffman bracket is provided as an independent oracle: a
direct sum over all 2^n smoothing assignments, sharing no code with the
resolution walk.  `naive_double_bracket` is a second, deliberately plain
recursive expander used to confirm hand-derived values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _backend
from .laurent import A, A_INV, C, DELTA, LOOP, BivariateLaurent
from .diagram import (
    BAR0,
    BAR1,
    ONE as KIND_ONE,
    TWO as KIND_TWO,
    ZERO as KIND_ZERO,
    CrossingClass,
    DiagramError,
    TiedDiagram,
)

__all__ = [
    "AJStateSummary",
    "StateSum",
    "OrderedStrategy",
    "RandomStrategy",
    "MultiColorInputError",
    "EmptyDiagramError",
    "state_value",
    "resolve",
    "double_bracket",
    "kauffman_bracket",
    "naive_double_bracket",
    "writhe",
    "tied_jones",
    "independence_check",
]

KERNEL_LIMIT_ARCS = 64


class MultiColorInputError(DiagramError):
    """The classical Kauffman bracket is only defined for one-color diagrams."""


class EmptyDiagramError(DiagramError):
    """Brackets of the empty diagram are not defined (no circle to normalize)."""


@dataclass(frozen=True)
class AJStateSummary:
    """What a resolved state contributes through: circle and color counts.

    ``k`` is the number of components (crossing-traced circles plus free
    loops), ``gamma`` the number of distinct colors, ``crossings_left``
    how many (all legal) crossings the state still has, and ``code`` an
    optional canonical code identifying the state diagram.
    """

    k: int
    gamma: int
    crossings_left: int = 0
    code: str | None = None

    def __post_init__(self):
        if not (1 <= self.gamma <= self.k):
            raise ValueError(f"need 1 <= gamma <= k, got k={self.k}, gamma={self.gamma}")
        if self.crossings_left < 0:
            raise ValueError("crossings_left must be >= 0")


def state_value(s: AJStateSummary | tuple[int, int]) -> BivariateLaurent:
    """The bracket value of a resolved state: c^(gamma-1) * (-A^2-A^-2)^(k-gamma)."""
    if isinstance(s, AJStateSummary):
        k, gamma = s.k, s.gamma
    else:
        k, gamma = s
        if not (1 <= gamma <= k):
            raise ValueError(f"need 1 <= gamma <= k, got k={k}, gamma={gamma}")
    return C ** (gamma - 1) * LOOP ** (k - gamma)


@dataclass
class StateSum:
    """A formal sum of resolved states with their accumulated branch weights.

    ``entries`` holds one (summary, weight) pair per leaf, or per group
    after `grouped()`.  The polynomial the sum stands for is `total()`;
    grouping never changes it.
    """

    entries: list[tuple[AJStateSummary, BivariateLaurent]]

    def total(self) -> BivariateLaurent:
        acc = BivariateLaurent.zero()
        for summary, weight in self.entries:
            acc = acc + weight * state_value(summary)
        return acc

    def grouped(self) -> "StateSum":
        """Merge entries describing the same state.

        States are identified by canonical code when every entry carries
        one, otherwise by the (k, gamma, crossings_left) summary.
        """
        by_code = all(s.code is not None for s, _ in self.entries)
        merged: dict[object, tuple[AJStateSummary, BivariateLaurent]] = {}
        for summary, weight in self.entries:
            key = summary.code if by_code else (summary.k, summary.gamma, summary.crossings_left)
            if key in merged:
                s0, w0 = merged[key]
                merged[key] = (s0, w0 + weight)
            else:
                merged[key] = (summary, weight)
        entries = [(s, w) for s, w in merged.values() if not w.is_zero()]
        entries.sort(key=lambda e: (e[0].k, e[0].gamma, e[0].crossings_left, e[0].code or ""))
        return StateSum(entries)


@dataclass(frozen=True)
class OrderedStrategy:
    """Scan crossings in stored order (optionally permuted first) and smooth
    the first mixed-color illegal crossing, else the first same-color one."""

    permutation: tuple[int, ...] | None = None


@dataclass(frozen=True)
class RandomStrategy:
    """Pick uniformly among all illegal crossings, driven by a seeded
    deterministic generator (identical across kernel backends)."""

    seed: int

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


Strategy = OrderedStrategy | RandomStrategy
_DEFAULT = OrderedStrategy()


def _prepare(d: TiedDiagram, strategy: Strategy):
    """Validate and encode a diagram for the kernels."""
    d.validate()
    if not d.crossings and not d.free_loops:
        raise EmptyDiagramError("cannot resolve the empty diagram")
    crossings = d.crossings
    perm = getattr(strategy, "permutation", None)
    if perm is not None:
        if sorted(perm) != list(range(len(crossings))):
            raise ValueError(f"permutation {perm} does not match {len(crossings)} crossings")
        crossings = tuple(crossings[i] for i in perm)
    arc_ids = sorted({s for rec in crossings for s in rec.slots})
    if len(arc_ids) > KERNEL_LIMIT_ARCS:
        raise DiagramError(f"kernel supports at most {KERNEL_LIMIT_ARCS // 2} crossings")
    dense = {a: i for i, a in enumerate(arc_ids)}
    slots = [dense[s] for rec in crossings for s in rec.slots]
    colors = [d.arc_color[a] - 1 for a in arc_ids]
    loops = [c - 1 for c in d.free_loops]
    seed = strategy.seed if isinstance(strategy, RandomStrategy) else -1
    return slots, colors, loops, seed


_weight_cache: dict[tuple[int, int, int], BivariateLaurent] = {}


def _branch_weight(sign: int, apow: int, dpow: int) -> BivariateLaurent:
    key = (sign, apow, dpow)
    cached = _weight_cache.get(key)
    if cached is None:
        cached = BivariateLaurent.monomial(apow, 0, sign) * DELTA ** dpow
        _weight_cache[key] = cached
    return cached


_value_cache: dict[tuple[int, int], BivariateLaurent] = {}


def _group_value(dpow: int, k: int, gamma: int) -> BivariateLaurent:
    key = (dpow, k - gamma)
    cached = _value_cache.get(key)
    if cached is None:
        cached = DELTA ** dpow * LOOP ** (k - gamma)
        _value_cache[key] = cached
    return cached


def double_bracket(d: TiedDiagram, strategy: Strategy = _DEFAULT) -> BivariateLaurent:
    """The double bracket <<D>> in Z[A^±1, c].

    Strategy choice only affects the resolution tree walked, never the
    value.  Runs on the active kernel backend.
    """
    slots, colors, loops, seed = _prepare(d, strategy)
    groups = _backend.kernel.resolve_sum(slots, colors, loops, seed)
    acc: dict[tuple[int, int], int] = {}
    for key, count in groups.items():
        apow = (key >> 25) - 2048
        dpow = (key >> 15) & 1023
        k = (key >> 7) & 255
        gamma = key & 127
        base = _group_value(dpow, k, gamma)
        for (a, c), coeff in base.terms().items():
            kk = (a + apow, c + gamma - 1)
            s = acc.get(kk, 0) + coeff * count
            if s:
                acc[kk] = s
            else:
                del acc[kk]
    return BivariateLaurent(acc)


def resolve(
    d: TiedDiagram,
    strategy: Strategy = _DEFAULT,
    codes: bool = False,
    group: bool = False,
) -> StateSum:
    """Expand the resolution tree of ``d`` and collect its leaves.

    With ``codes=True`` each leaf diagram is canonically encoded (slower;
    walks the tree at the diagram level instead of the kernel).  With
    ``group=True`` entries for identical states are merged.
    """
    if codes:
        sum_ = _resolve_with_codes(d, strategy)
    else:
        slots, colors, loops, seed = _prepare(d, strategy)
        leaves = _backend.kernel.resolve_leaves(slots, colors, loops, seed)
        sum_ = StateSum(
            [
                (AJStateSummary(k, gamma, left), _branch_weight(sign, apow, dpow))
                for k, gamma, left, sign, apow, dpow in leaves
            ]
        )
    return sum_.grouped() if group else sum_


def _scan_illegal(d: TiedDiagram) -> tuple[int, CrossingClass] | None:
    first1 = None
    for x in range(len(d.crossings)):
        cls = d.classify(x)
        if cls is CrossingClass.ILLEGAL_TYPE2:
            return x, cls
        if cls is CrossingClass.ILLEGAL_TYPE1 and first1 is None:
            first1 = x
    if first1 is None:
        return None
    return first1, CrossingClass.ILLEGAL_TYPE1


def _resolve_with_codes(d: TiedDiagram, strategy: Strategy) -> StateSum:
    from ._kernel_py import _mix

    d.validate()
    if not d.crossings and not d.free_loops:
        raise EmptyDiagramError("cannot resolve the empty diagram")
    perm = getattr(strategy, "permutation", None)
    if perm is not None:
        if sorted(perm) != list(range(len(d.crossings))):
            raise ValueError(f"permutation {perm} does not match diagram")
        d = TiedDiagram(tuple(d.crossings[i] for i in perm), d.arc_color, d.free_loops)
    rng = strategy.seed if isinstance(strategy, RandomStrategy) else -1

    entries: list[tuple[AJStateSummary, BivariateLaurent]] = []
    stack: list[tuple[TiedDiagram, int, int, int]] = [(d, 1, 0, 0)]
    while stack:
        cur, sign, apow, dpow = stack.pop()
        if rng >= 0:
            illegal = [
                (x, cls)
                for x in range(len(cur.crossings))
                if (cls := cur.classify(x)) is not CrossingClass.LEGAL
            ]
            if illegal:
                rng, z = _mix(rng)
                pick = illegal[z % len(illegal)]
            else:
                pick = None
        else:
            pick = _scan_illegal(cur)
        if pick is None:
            k = cur.component_count()
            gamma = cur.n_colors
            entries.append(
                (
                    AJStateSummary(k, gamma, len(cur.crossings), cur.canonical_code()),
                    _branch_weight(sign, apow, dpow),
                )
            )
            continue
        x, cls = pick
        if cls is CrossingClass.ILLEGAL_TYPE2:
            stack.append((cur.smooth_type2(x, KIND_ONE), sign, apow, dpow + 1))
            stack.append((cur.smooth_type2(x, KIND_ZERO), sign, apow, dpow + 1))
            stack.append((cur.smooth_type2(x, KIND_TWO), -sign, apow, dpow))
        else:
            stack.append((cur.smooth_type1(x, BAR1), sign, apow - 1, dpow))
            stack.append((cur.smooth_type1(x, BAR0), sign, apow + 1, dpow))
    return StateSum(entries)


def kauffman_bracket(d: TiedDiagram) -> BivariateLaurent:
    """Classical Kauffman bracket by direct state enumeration.

    Sums A^(n-2r) * (-A^2-A^-2)^(k-1) over all 2^n assignments of the two
    smoothings, where r counts bar1 choices and k circles.  Only defined
    for single-color diagrams; implemented independently of `resolve` so
    it can serve as an oracle for it.
    """
    d.validate()
    if d.n_colors > 1:
        raise MultiColorInputError(f"diagram uses {d.n_colors} colors, expected 1")
    n = len(d.crossings)
    if n == 0 and not d.free_loops:
        raise EmptyDiagramError("Kauffman bracket of the empty diagram is undefined")
    if n > 24:
        raise DiagramError("state enumeration is limited to 24 crossings")

    arcs = sorted(d.used_arcs())
    index = {a: i for i, a in enumerate(arcs)}
    quads = [tuple(index[s] for s in rec.slots) for rec in d.crossings]
    n_arcs = len(arcs)

    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        parent = list(range(n_arcs))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

        r = 0
        for i, (s0, s1, s2, s3) in enumerate(quads):
            if (state >> i) & 1:
                r += 1
                union(s0, s3)
                union(s1, s2)
            else:
                union(s0, s1)
                union(s2, s3)
        k = sum(1 for a in range(n_arcs) if find(a) == a) + len(d.free_loops)
        key = (n - 2 * r, k)
        counts[key] = counts.get(key, 0) + 1

    acc = BivariateLaurent.zero()
    for (apow, k), cnt in counts.items():
        acc = acc + BivariateLaurent.monomial(apow, 0, cnt) * LOOP ** (k - 1)
    return acc


def naive_double_bracket(d: TiedDiagram) -> BivariateLaurent:
    """Deliberately plain recursive expansion of the skein axioms.

    No resolution-tree bookkeeping, no kernel: smooth the first illegal
    crossing found and recurse.  Exponential and only meant to confirm
    hand-derived values on small diagrams.
    """
    d.validate()
    if not d.crossings and not d.free_loops:
        raise EmptyDiagramError("cannot expand the empty diagram")
    for x in range(len(d.crossings)):
        cls = d.classify(x)
        if cls is CrossingClass.ILLEGAL_TYPE1:
            return A * naive_double_bracket(d.smooth_type1(x, BAR0)) + A_INV * naive_double_bracket(
                d.smooth_type1(x, BAR1)
            )
        if cls is CrossingClass.ILLEGAL_TYPE2:
            return (
                -naive_double_bracket(d.smooth_type2(x, KIND_TWO))
                + DELTA * naive_double_bracket(d.smooth_type2(x, KIND_ZERO))
                + DELTA * naive_double_bracket(d.smooth_type2(x, KIND_ONE))
            )
    k = d.component_count()
    gamma = d.n_colors
    return state_value((k, gamma))


def writhe(d: TiedDiagram, orientation: Sequence[int] | None = None) -> int:
    """Signed crossing count of the oriented diagram.

    ``orientation`` holds one +1/-1 flag per traced component (deterministic
    component order): +1 traverses from the smallest arc toward its second
    slot occurrence, -1 the other way.  Defaults to all +1.  Reversing every
    flag leaves the writhe unchanged.
    """
    d.validate()
    comps = d.components()
    if orientation is None:
        orientation = [1] * len(comps)
    if len(orientation) != len(comps) or any(f not in (1, -1) for f in orientation):
        raise ValueError(f"orientation needs one ±1 flag per component ({len(comps)})")

    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, rec in enumerate(d.crossings):
        for si, arc in enumerate(rec.slots):
            occurrences.setdefault(arc, []).append((ci, si))
    for occ in occurrences.values():
        occ.sort()

    exit_slots: dict[tuple[int, int], int] = {}  # (crossing, strand) -> exit slot
    for comp, flag in zip(comps, orientation):
        start_arc = min(comp)
        start = occurrences[start_arc][1 if flag == 1 else 0]
        cur = start
        while True:
            ci, si = cur
            exit_slot = (si + 2) % 4
            exit_slots[(ci, si & 1)] = exit_slot
            arc = d.crossings[ci].slots[exit_slot]
            occ = occurrences[arc]
            nxt = occ[1] if occ[0] == (ci, exit_slot) else occ[0]
            if nxt == start:
                break
            cur = nxt

    total = 0
    for ci in range(len(d.crossings)):
        under_exit = exit_slots[(ci, 0)]
        over_exit = exit_slots[(ci, 1)]
        # +1 exactly when the under-strand direction is the over-strand
        # direction rotated counterclockwise by a quarter turn.
        total += 1 if (under_exit - over_exit) % 4 == 1 else -1
    return total


def tied_jones(
    d: TiedDiagram,
    orientation: Sequence[int] | None = None,
    strategy: Strategy = _DEFAULT,
) -> BivariateLaurent:
    """The tied Jones polynomial (-A)^(-3w) * <<D>>."""
    w = writhe(d, orientation)
    sign = -1 if w % 2 else 1
    return BivariateLaurent.monomial(-3 * w, 0, sign) * double_bracket(d, strategy)


def independence_check(d: TiedDiagram, trials: int = 100, seed: int = 0) -> bool:
    """Recompute <<D>> under ``trials`` seeded random strategies.

    Returns True iff every value is exactly the default strategy's value.
    Any False is an implementation bug, not a property of the diagram.
    """
    from ._kernel_py import _mix

    reference = double_bracket(d)
    state = seed
    for _ in range(trials):
        state, z = _mix(state)
        if double_bracket(d, RandomStrategy(z >> 1)) != reference:
            return False
    return True
