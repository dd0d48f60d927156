"""Intersection-closed set families on small ground sets.

Subsets of {0..n-1} are encoded as integer bit patterns.  A family is stored
as the ascending tuple of its member encodings; the full set is always a
member (it is the empty intersection).  Also houses generic finite-poset
utilities: cover relations, brute-force order-isomorphism, DOT export.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

#: Exact family counts for small ground sets, used by guards and verification.
KNOWN_COUNTS = {1: 2, 2: 7, 3: 61, 4: 2480, 5: 1385552}

ENUMERATION_GUARD = 5
ISO_GUARD = 200


class GuardError(RuntimeError):
    """A size guard refused the operation; pass the override to proceed."""


def mask_of(indices: Iterable[int], n: int) -> int:
    mask = 0
    for i in indices:
        if not 0 <= i < n:
            raise ValueError(f"index {i} out of range for ground set of size {n}")
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def is_moore(subsets: Iterable[int], n: int) -> bool:
    """Full set present and closed under pairwise intersection.

    Pairwise closure suffices for finite families; the empty intersection
    convention is what forces the full set in.
    """
    full = (1 << n) - 1
    members = set(subsets)
    if any(not 0 <= s <= full for s in members):
        raise ValueError("subset out of range")
    if full not in members:
        return False
    as_list = sorted(members)
    for i, a in enumerate(as_list):
        for b in as_list[i + 1:]:
            if a & b not in members:
                return False
    return True


@dataclass(frozen=True)
class MooreFamily:
    """An intersection-closed family; members ascending by encoding."""

    n: int
    members: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ground set must be nonempty (n >= 1)")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be strictly ascending")
        if not is_moore(self.members, self.n):
            raise ValueError("family is not intersection-closed with full set")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def min_member(self) -> int:
        inter = self.full
        for m in self.members:
            inter &= m
        return inter

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)


def moore_generate(subsets: Iterable[int], n: int) -> MooreFamily:
    """Smallest intersection-closed family containing the input subsets."""
    full = (1 << n) - 1
    members = set(subsets)
    if any(not 0 <= s <= full for s in members):
        raise ValueError("subset out of range")
    members.add(full)
    frontier = list(members)
    while frontier:
        fresh = []
        for a in frontier:
            for b in members:
                t = a & b
                if t not in members and t not in fresh:
                    fresh.append(t)
        members.update(fresh)
        frontier = fresh
    return MooreFamily(n, tuple(sorted(members)))


def closure(family: MooreFamily, mask: int) -> int:
    """Smallest member containing the given subset."""
    if not 0 <= mask <= family.full:
        raise ValueError("subset out of range")
    result = family.full
    for m in family.members:
        if mask & m == mask:
            result &= m
    return result


def family_meet(f1: MooreFamily, f2: MooreFamily) -> MooreFamily:
    """Member-set intersection; intersection-closure is inherited."""
    if f1.n != f2.n:
        raise ValueError("ground sets differ")
    common = set(f1.members) & set(f2.members)
    return MooreFamily(f1.n, tuple(sorted(common)))


def family_join(f1: MooreFamily, f2: MooreFamily) -> MooreFamily:
    """Smallest family containing both: saturate the member union."""
    if f1.n != f2.n:
        raise ValueError("ground sets differ")
    return moore_generate(set(f1.members) | set(f2.members), f1.n)


def _check_enumeration_guard(n: int, force: bool) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ENUMERATION_GUARD and not force:
        raise GuardError(
            f"full enumeration at n={n} refused (known count grows past "
            f"{KNOWN_COUNTS[ENUMERATION_GUARD]} already at n={ENUMERATION_GUARD}); "
            "pass force=True to override"
        )


def _family_search(n: int, emit: Callable[[List[int]], None]) -> None:
    """Depth-first decision over proper subsets in descending size order.

    Choosing a subset "in" forces every intersection with current members;
    those intersections are strictly smaller, hence decided later, so a
    forced subset that would be declined prunes the branch for free.
    """
    full = (1 << n) - 1
    order = sorted(range(full), key=lambda s: (-bin(s).count("1"), -s))
    forced = [0] * (full + 1)
    members = [full]
    depth = len(order)

    def rec(i: int) -> None:
        if i == depth:
            emit(members)
            return
        s = order[i]
        if not forced[s]:
            rec(i + 1)  # leave s out
        pushed = []
        for m in members:
            t = m & s
            if t != s:
                forced[t] += 1
                pushed.append(t)
        members.append(s)
        rec(i + 1)
        members.pop()
        for t in pushed:
            forced[t] -= 1

    rec(0)


def count_moore(n: int, force: bool = False) -> int:
    """Number of intersection-closed families on an n-element ground set."""
    _check_enumeration_guard(n, force)
    count = 0

    def emit(_members: List[int]) -> None:
        nonlocal count
        count += 1

    _family_search(n, emit)
    return count


def enumerate_moore(n: int, force: bool = False) -> Iterator[MooreFamily]:
    """All families exactly once, ascending in canonical serialization."""
    _check_enumeration_guard(n, force)
    collected: List[bytes] = []

    def emit(members: List[int]) -> None:
        collected.append(bytes(sorted(members)))

    _family_search(n, emit)
    collected.sort()
    for encoded in collected:
        yield MooreFamily(n, tuple(encoded))


def is_principal_upfilter(family: MooreFamily) -> Tuple[bool, Optional[int]]:
    """Is the family exactly all supersets of its minimum member?"""
    base = family.min_member
    expected = 2 ** (family.n - bin(base).count("1"))
    if len(family.members) != expected:
        return (False, None)
    if all(m & base == base for m in family.members):
        return (True, base)
    return (False, None)


def binom_lower_bound(n: int) -> int:
    """2^C(n, floor(n/2)): lower bound for the family count."""
    if not 1 <= n <= 7:
        raise ValueError("bound is tabulated for 1 <= n <= 7")
    return 2 ** math.comb(n, n // 2)


def family_to_record(family: MooreFamily) -> dict:
    return {"n": family.n, "members": [indices_of(m) for m in family.members]}


def family_from_record(record: dict) -> MooreFamily:
    n = record["n"]
    members = tuple(sorted(mask_of(idx, n) for idx in record["members"]))
    return MooreFamily(n, members)


# ---------------------------------------------------------------------------
# Finite poset utilities


def hasse(elements: Sequence, leq: Callable) -> List[Tuple[int, int]]:
    """Cover relations as (lower index, upper index) pairs."""
    k = len(elements)
    strictly_below = [
        {i for i in range(k) if i != j and leq(elements[i], elements[j])
         and not leq(elements[j], elements[i])}
        for j in range(k)
    ]
    covers = []
    for j in range(k):
        below = strictly_below[j]
        for i in below:
            if not any(i in strictly_below[m] for m in below if m != i):
                covers.append((i, j))
    return sorted(covers)


def _leq_matrix(elements: Sequence, leq: Callable) -> List[List[bool]]:
    return [[bool(leq(a, b)) for b in elements] for a in elements]


def poset_iso(
    elements1: Sequence,
    leq1: Callable,
    elements2: Sequence,
    leq2: Callable,
    orientation: str = "iso",
) -> bool:
    """Brute-force search for an order (anti-)isomorphism.

    Candidates are pruned by up-set/down-set size profiles before the
    backtracking bijection search.
    """
    if orientation not in ("iso", "anti"):
        raise ValueError("orientation must be 'iso' or 'anti'")
    k = len(elements1)
    if k != len(elements2):
        return False
    if k > ISO_GUARD:
        raise GuardError(f"isomorphism search refused above {ISO_GUARD} elements")

    m1 = _leq_matrix(elements1, leq1)
    m2 = _leq_matrix(elements2, leq2)
    if orientation == "anti":
        m2 = [[m2[j][i] for j in range(k)] for i in range(k)]

    def profile(m: List[List[bool]], i: int) -> Tuple[int, int]:
        return (sum(m[i]), sum(row[i] for row in m))

    prof1 = [profile(m1, i) for i in range(k)]
    prof2 = [profile(m2, i) for i in range(k)]
    if sorted(prof1) != sorted(prof2):
        return False

    candidates = [
        [j for j in range(k) if prof2[j] == prof1[i]] for i in range(k)
    ]
    order = sorted(range(k), key=lambda i: len(candidates[i]))
    image: Dict[int, int] = {}
    used = [False] * k

    def extend(pos: int) -> bool:
        if pos == k:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for i2, j2 in image.items():
                if m1[i][i2] != m2[j][j2] or m1[i2][i] != m2[j2][j]:
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                if extend(pos + 1):
                    return True
                del image[i]
                used[j] = False
        return False

    return extend(0)


def hasse_dot(labels: Sequence[str], edges: Iterable[Tuple[int, int]]) -> str:
    """DOT digraph with edges from lower cover to upper cover."""
    lines = ["digraph hasse {"]
    for idx, label in enumerate(labels):
        lines.append(f'  n{idx} [label="{label}"];')
    for lo, hi in edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
