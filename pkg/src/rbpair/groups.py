"""Finite groups presented by Cayley tables.

Elements are indices 0..order-1 with the identity pinned at index 0.  The
table stores products row-by-row: table[a][b] is the index of a*b.  All
validation is exhaustive — associativity is checked on every triple — which
is entirely feasible at the orders this library targets (≤ 24).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedInputError, NotClosedError, NotNormalError
from .reports import Check, Report, checked

__all__ = [
    "FiniteGroup",
    "GroupMap",
    "SubgroupStruct",
    "validate_group",
    "cyclic",
    "direct_product",
    "symmetric3",
    "dihedral",
    "quaternion8",
    "subgroup_from_members",
    "generated_subgroup",
    "normality_and_quotient",
    "check_group_homomorphism",
]


def _check_table_shape(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0:
        raise MalformedInputError("group table must be nonempty")
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedInputError(
                f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedInputError(
                    f"entry ({i},{j}) is {v!r}, expected an index below {n}")
    return n


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by labels and a Cayley table, identity at 0."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = _check_table_shape(self.table)
        if len(self.labels) != n:
            raise MalformedInputError(
                f"{len(self.labels)} labels for a table of order {n}")
        if any(self.table[0][j] != j or self.table[j][0] != j for j in range(n)):
            raise MalformedInputError("index 0 must act as the identity")
        inverses = []
        for a in range(n):
            row = self.table[a]
            hits = [b for b in range(n) if row[b] == 0]
            if len(hits) != 1:
                raise MalformedInputError(f"element {a} has no unique inverse")
            inverses.append(hits[0])
        object.__setattr__(self, "_inverses", tuple(inverses))

    @staticmethod
    def from_table(labels: Iterable[str],
                   table: Iterable[Iterable[int]]) -> "FiniteGroup":
        return FiniteGroup(tuple(labels), tuple(tuple(row) for row in table))

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def conj(self, a: int, b: int) -> int:
        """The conjugate a*b*a^-1 (the adjoint action of a on b)."""
        return self.table[self.table[a][b]][self._inverses[a]]

    def relabel(self, labels: Iterable[str]) -> "FiniteGroup":
        return FiniteGroup(tuple(labels), self.table)


@dataclass(frozen=True)
class GroupMap:
    """A set map between groups given by its full value table."""

    source: FiniteGroup
    target: FiniteGroup
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.source.order:
            raise MalformedInputError(
                f"{len(self.values)} values for a source of order "
                f"{self.source.order}")
        if any(not 0 <= v < self.target.order for v in self.values):
            raise MalformedInputError("map value out of range")

    def apply(self, a: int) -> int:
        return self.values[a]

    def is_bijective(self) -> bool:
        return (self.source.order == self.target.order
                and len(set(self.values)) == self.source.order)

    def compose(self, inner: "GroupMap") -> "GroupMap":
        if inner.target is not self.source and inner.target != self.source:
            raise MalformedInputError("composition endpoints do not match")
        return GroupMap(inner.source, self.target,
                        tuple(self.values[v] for v in inner.values))


@dataclass(frozen=True)
class SubgroupStruct:
    """A subgroup as a sorted member list plus its induced group."""

    parent: FiniteGroup
    members: tuple[int, ...]
    induced: FiniteGroup

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_position", {m: i for i, m in enumerate(self.members)})

    @property
    def order(self) -> int:
        return len(self.members)

    def position(self, parent_element: int) -> int | None:
        """Index inside the subgroup of a parent element, None if outside."""
        return self._position.get(parent_element)

    def contains(self, parent_element: int) -> bool:
        return parent_element in self._position


def validate_group(table: Sequence[Sequence[int]]) -> Report:
    """Certify that a square index table is the Cayley table of a group
    with the identity at index 0.  Associativity is checked on all triples."""
    n = _check_table_shape(table)
    report = Report(subject="group_table")

    identity_witness = None
    for j in range(n):
        if table[0][j] != j:
            identity_witness = f"row 0 sends {j} to {table[0][j]}"
            break
        if table[j][0] != j:
            identity_witness = f"column 0 sends {j} to {table[j][0]}"
            break
    report.add(checked("identity-element", "identity-axioms", identity_witness))

    perm_witness = None
    for a in range(n):
        if sorted(table[a]) != list(range(n)):
            perm_witness = f"row {a} is not a permutation"
            break
        column = [table[b][a] for b in range(n)]
        if sorted(column) != list(range(n)):
            perm_witness = f"column {a} is not a permutation"
            break
    report.add(checked("rows-and-columns-permute", "cancellation-law",
                       perm_witness))

    inverse_witness = None
    for a in range(n):
        if 0 not in table[a]:
            inverse_witness = f"element {a} has no right inverse"
            break
    report.add(checked("inverses-exist", "inverse-axiom", inverse_witness))

    assoc_witness = None
    for a in range(n):
        if assoc_witness:
            break
        for b in range(n):
            if assoc_witness:
                break
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    assoc_witness = f"triple ({a},{b},{c})"
                    break
    report.add(checked("associativity", "associativity-law", assoc_witness))
    return report


# --------------------------------------------------------------- constructors


def cyclic(n: int) -> FiniteGroup:
    """The cyclic group of order n written additively, labels '0'..'n-1'."""
    if n < 1:
        raise MalformedInputError("group order must be positive")
    labels = tuple(str(i) for i in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(labels, table)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, indexed (i, j) -> i*|b| + j."""
    m = b.order
    labels = tuple(f"({la},{lb})" for la in a.labels for lb in b.labels)
    size = a.order * m

    def mul(x: int, y: int) -> int:
        xa, xb = divmod(x, m)
        ya, yb = divmod(y, m)
        return a.mul(xa, ya) * m + b.mul(xb, yb)

    table = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
    return FiniteGroup(labels, table)


def symmetric3() -> FiniteGroup:
    """All permutations of three points in lexicographic one-line order,
    composed as (p*q)(i) = p(q(i)); the identity '012' sits at index 0."""
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}
    labels = tuple("".join(str(v) for v in p) for p in perms)
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(3))] for q in perms)
        for p in perms)
    return FiniteGroup(labels, table)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of a regular n-gon: rotations r^i and reflections r^i s,
    with s*r*s = r^-1.  Index i + n*j for r^i s^j."""
    if n < 1:
        raise MalformedInputError("polygon size must be positive")
    size = 2 * n
    labels = tuple(
        (f"r{i}" if j == 0 else f"r{i}s") for j in range(2) for i in range(n))

    def mul(x: int, y: int) -> int:
        i, j = x % n, x // n
        k, l = y % n, y // n
        rot = (i + (k if j == 0 else -k)) % n
        return rot + n * ((j + l) % 2)

    table = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
    return FiniteGroup(labels, table)


def quaternion8() -> FiniteGroup:
    """The quaternion group {±1, ±i, ±j, ±k} with identity +1 at index 0."""
    units = ["1", "i", "j", "k"]
    labels = tuple(s + u for u in units for s in ("", "-"))
    # product of basis units -> (sign, unit)
    rules = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"),
        ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    index = {(1, u): 2 * n for n, u in enumerate(units)}
    index.update({(-1, u): 2 * n + 1 for n, u in enumerate(units)})
    decode = {v: k for k, v in index.items()}

    def mul(x: int, y: int) -> int:
        sx, ux = decode[x]
        sy, uy = decode[y]
        sign, unit = rules[(ux, uy)]
        return index[(sx * sy * sign, unit)]

    table = tuple(tuple(mul(x, y) for y in range(8)) for x in range(8))
    return FiniteGroup(labels, table)


# ----------------------------------------------------------------- subgroups


def subgroup_from_members(g: FiniteGroup,
                          members: Iterable[int]) -> SubgroupStruct:
    """Package a member set as a subgroup; raises if it is not closed."""
    member_list = sorted(set(members) | {0})
    member_set = set(member_list)
    for a in member_list:
        if g.inv(a) not in member_set:
            raise NotClosedError(
                f"inverse of {g.labels[a]} escapes the subset",
                witness=g.labels[a])
        for b in member_list:
            if g.mul(a, b) not in member_set:
                raise NotClosedError(
                    f"product of {g.labels[a]} and {g.labels[b]} escapes "
                    f"the subset", witness=f"pair ({g.labels[a]},{g.labels[b]})")
    position = {m: i for i, m in enumerate(member_list)}
    table = tuple(
        tuple(position[g.mul(a, b)] for b in member_list) for a in member_list)
    induced = FiniteGroup(tuple(g.labels[m] for m in member_list), table)
    return SubgroupStruct(g, tuple(member_list), induced)


def generated_subgroup(g: FiniteGroup, seeds: Iterable[int]) -> SubgroupStruct:
    """The smallest subgroup containing the seed elements."""
    members = {0}
    frontier = [0] + [s for s in set(seeds)]
    members.update(frontier)
    while frontier:
        a = frontier.pop()
        candidates = [g.inv(a)] + [g.mul(a, b) for b in list(members)] \
            + [g.mul(b, a) for b in list(members)]
        for c in candidates:
            if c not in members:
                members.add(c)
                frontier.append(c)
    return subgroup_from_members(g, members)


def normality_and_quotient(
    g: FiniteGroup, h: SubgroupStruct,
) -> tuple[FiniteGroup, GroupMap]:
    """The coset group of a normal subgroup with its projection map.

    Cosets are labeled by their least member.  A conjugate escaping the
    subgroup raises with the conjugating element as witness.
    """
    member_set = set(h.members)
    for a in g.elements():
        for m in h.members:
            if g.conj(a, m) not in member_set:
                raise NotNormalError(
                    f"conjugation by {g.labels[a]} moves {g.labels[m]} "
                    f"outside the subgroup",
                    witness=f"conjugator {g.labels[a]}")
    coset_of = [-1] * g.order
    reps: list[int] = []
    for a in g.elements():
        if coset_of[a] != -1:
            continue
        coset = sorted(g.mul(a, m) for m in h.members)
        idx = len(reps)
        reps.append(coset[0])
        for x in coset:
            coset_of[x] = idx
    table = tuple(
        tuple(coset_of[g.mul(ra, rb)] for rb in reps) for ra in reps)
    labels = tuple(f"[{g.labels[r]}]" for r in reps)
    quotient = FiniteGroup(labels, table)
    projection = GroupMap(g, quotient, tuple(coset_of))
    return quotient, projection


def check_group_homomorphism(f: GroupMap,
                             name: str = "group-homomorphism") -> Check:
    """One certificate: f(e) = e and f(ab) = f(a)f(b) on all pairs."""
    src, dst, values = f.source, f.target, f.values
    if values[0] != 0:
        return Check(name, "homomorphism-law", False,
                     f"identity maps to {dst.labels[values[0]]}")
    for a in src.elements():
        fa = values[a]
        for b in src.elements():
            if values[src.mul(a, b)] != dst.mul(fa, values[b]):
                return Check(
                    name, "homomorphism-law", False,
                    f"pair ({src.labels[a]},{src.labels[b]})")
    return Check(name, "homomorphism-law", True, None)
