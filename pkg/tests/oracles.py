"""Brute-force reference computations used to pin expected values.

Everything here works on plain integer sets over explicit windows, with no
shared code paths into the library, so a bug cannot hide on both sides.
"""

from __future__ import annotations

from itertools import combinations


def closure_from_generators(gens: list[int], hi: int) -> set[int]:
    """All sums of the generators that land below hi, by dynamic programming."""
    reached = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y < hi and y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    return reached


def semigroup_members(small: tuple[int, ...], conductor: int, hi: int) -> set[int]:
    return {x for x in small if x < hi} | set(range(conductor, hi))


def ideal_members(small: tuple[int, ...], conductor: int,
                  gens: list[int], hi: int) -> set[int]:
    """Union of generator translates of the semigroup, windowed."""
    s = semigroup_members(small, conductor, hi)
    out: set[int] = set()
    for g in gens:
        out |= {g + x for x in s if g + x < hi}
    return out


def sumset(a: set[int], b: set[int], hi: int) -> set[int]:
    return {x + y for x in a for y in b if x + y < hi}


def colon(a: set[int], b: set[int], lo: int, hi: int, guard: int) -> set[int]:
    """{z in [lo, hi) : z + b inside a}, testing b only below guard."""
    bb = [y for y in b if y < guard]
    return {z for z in range(lo, hi) if all((z + y) in a for y in bb)}


def gap_length(larger: set[int], smaller: set[int], hi: int) -> int:
    """#(larger minus smaller) below hi; asserts containment on the window."""
    assert smaller <= larger
    return len(larger - smaller)


def minimal_generators_of_ideal(members: set[int], nonzero_s: set[int]) -> set[int]:
    reachable = {x + s for x in members for s in nonzero_s}
    return {x for x in members if x not in reachable}


def canonical_members(small: tuple[int, ...], conductor: int, hi: int) -> set[int]:
    """{j : c - 1 - j not in S}, windowed from 0."""
    s = semigroup_members(small, conductor, conductor + hi + 1)
    out = set()
    for j in range(hi):
        t = conductor - 1 - j
        if t < 0 or t not in s:
            out.add(j)
    return out


def is_semigroup_gap_set(gaps: frozenset[int]) -> bool:
    """Whether N minus gaps is closed under addition (gaps finite, 0 absent)."""
    if 0 in gaps:
        return False
    top = max(gaps) if gaps else 0
    members = [x for x in range(1, 2 * top + 2) if x not in gaps]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b <= top and (a + b) in gaps:
                return False
    return True


def count_semigroups_of_genus(genus: int) -> int:
    """Filter all genus-sized gap candidate sets inside [1, 2*genus]."""
    if genus == 0:
        return 1
    candidates = range(1, 2 * genus)  # the Frobenius number is < 2*genus
    total = 0
    for gaps in combinations(candidates, genus):
        if is_semigroup_gap_set(frozenset(gaps)):
            total += 1
    return total


def all_nonprincipal_ideals(small: tuple[int, ...], conductor: int,
                            bound: int) -> set[frozenset[int]]:
    """Distinct non-principal ideals from all generator subsets, by window."""
    mult = min((x for x in small if x > 0), default=conductor)
    window = [x for x in range(mult, bound + 1)
              if x in semigroup_members(small, conductor, bound + 1) and x > 0]
    hi = bound + 2 * conductor + 2
    nonzero_s = {x for x in semigroup_members(small, conductor, hi) if x > 0}
    seen: dict[frozenset[int], set[int]] = {}
    for size in range(1, len(window) + 1):
        for gens in combinations(window, size):
            mem = frozenset(ideal_members(small, conductor, list(gens), hi))
            seen.setdefault(mem, set()).update(gens)
    out = set()
    for mem in seen:
        mins = minimal_generators_of_ideal(set(mem), nonzero_s)
        if len(mins) >= 2:
            out.add(frozenset(sorted(mins)))
    return out


def iterated_blowup(small: tuple[int, ...], conductor: int,
                    gens: list[int]) -> tuple[set[int], int]:
    """The stable quotient of high powers, plus the first stage reaching it.

    The quotient chain nE:nE only grows and is constant from the reduction
    exponent on, which is below min(gens); evaluating at cap = min(gens) + 2
    is therefore past stabilization with room to spare.
    """
    cap = min(gens) + 2
    hi = cap * (max(gens) + 1) + 4 * conductor + 8
    guard = hi // 2
    e = ideal_members(small, conductor, gens, hi)
    quotients = []
    power = e
    for _ in range(cap):
        quotients.append(colon(power, power, 0, guard, guard))
        power = sumset(power, e, hi)
    lam = quotients[-1]
    for n, quot in enumerate(quotients, start=1):
        if quot == lam:
            return lam, n
    raise AssertionError("unreachable: the last stage equals itself")
