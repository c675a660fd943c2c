"""Finite lattices given by an order matrix."""

from __future__ import annotations

import json
from functools import cached_property
from itertools import combinations, product as iproduct
from typing import Sequence

from .exactnum import Subspace


class NotAPoset(ValueError):
    pass


class NotALattice(ValueError):
    def __init__(self, pair, kind):
        self.pair = pair
        self.kind = kind
        super().__init__(f"elements {pair[0]} and {pair[1]} have no unique {kind}")


MAX_ENUM = 12


class FiniteLattice:
    """Lattice on ``0..n-1``; ``leq[i][j]`` means element i is below element j."""

    def __init__(self, leq: Sequence[Sequence[bool]], labels: Sequence[str] | None = None):
        n = len(leq)
        if n == 0:
            raise NotAPoset("a lattice needs at least one element")
        le = tuple(tuple(bool(x) for x in row) for row in leq)
        if any(len(r) != n for r in le):
            raise NotAPoset("order matrix must be square")
        for i in range(n):
            if not le[i][i]:
                raise NotAPoset(f"not reflexive at {i}")
            for j in range(n):
                if i != j and le[i][j] and le[j][i]:
                    raise NotAPoset(f"not antisymmetric at ({i}, {j})")
        for i, j, k in iproduct(range(n), repeat=3):
            if le[i][j] and le[j][k] and not le[i][k]:
                raise NotAPoset(f"not transitive at ({i}, {j}, {k})")
        self.size = n
        self.leq = le
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise ValueError("label count differs from size")
        self.meet_table, self.join_table = self._tables()

    def _tables(self):
        n, le = self.size, self.leq
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                lows = [k for k in range(n) if le[k][i] and le[k][j]]
                glb = [k for k in lows if all(le[m][k] for m in lows)]
                if len(glb) != 1:
                    raise NotALattice((i, j), "meet")
                ups = [k for k in range(n) if le[i][k] and le[j][k]]
                lub = [k for k in ups if all(le[k][m] for m in ups)]
                if len(lub) != 1:
                    raise NotALattice((i, j), "join")
                meet[i][j] = meet[j][i] = glb[0]
                join[i][j] = join[j][i] = lub[0]
        return tuple(map(tuple, meet)), tuple(map(tuple, join))

    def __repr__(self):
        return f"FiniteLattice(size={self.size})"

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    @cached_property
    def bottom(self) -> int:
        return next(i for i in range(self.size) if all(self.leq[i]))

    @cached_property
    def top(self) -> int:
        return next(i for i in range(self.size) if all(self.leq[j][i] for j in range(self.size)))

    @cached_property
    def covers(self) -> tuple:
        n, le = self.size, self.leq
        out = []
        for a in range(n):
            for b in range(n):
                if a != b and le[a][b] and not any(
                    c != a and c != b and le[a][c] and le[c][b] for c in range(n)
                ):
                    out.append((a, b))
        return tuple(out)

    @cached_property
    def height(self) -> tuple:
        """Length of the longest chain from the bottom to each element."""
        h = [0] * self.size
        for a in sorted(range(self.size), key=lambda x: sum(self.leq[y][x] for y in range(self.size))):
            for b in range(self.size):
                if self.lt(b, a):
                    h[a] = max(h[a], h[b] + 1)
        return tuple(h)

    def up_degree(self, a: int) -> int:
        return sum(1 for x, _ in self.covers if x == a)

    def down_degree(self, a: int) -> int:
        return sum(1 for _, y in self.covers if y == a)

    def to_json(self) -> dict:
        return {"size": self.size, "labels": list(self.labels), "covers": [list(c) for c in hasse_edges(self)]}


# ----------------------------------------------------------------------------
# constructors


def from_order(leq, labels=None) -> FiniteLattice:
    return FiniteLattice(leq, labels)


def from_covers(n: int, covers: Sequence[Sequence[int]], labels=None) -> FiniteLattice:
    """Reflexive-transitive closure of a cover relation."""
    le = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise NotAPoset(f"cover ({a}, {b}) out of range")
        le[a][b] = True
    for k in range(n):
        for i in range(n):
            if le[i][k]:
                for j in range(n):
                    if le[k][j]:
                        le[i][j] = True
    return FiniteLattice(le, labels)


def from_json(data: dict) -> FiniteLattice:
    return from_covers(int(data["size"]), data.get("covers", []), data.get("labels"))


def chain(n: int) -> FiniteLattice:
    if n < 1:
        raise ValueError("chain needs n >= 1")
    return FiniteLattice([[i <= j for j in range(n)] for i in range(n)])


def m_lattice(n: int) -> FiniteLattice:
    """Bottom, n pairwise incomparable atoms, top."""
    if n < 3:
        raise ValueError("m_lattice needs n >= 3")
    size = n + 2
    top = size - 1
    le = [[i == j or i == 0 or j == top for j in range(size)] for i in range(size)]
    return FiniteLattice(le)


def cube(n: int) -> FiniteLattice:
    """Subsets of an n-set; element i is the bitmask i."""
    if n < 0:
        raise ValueError("cube needs n >= 0")
    size = 1 << n
    return FiniteLattice([[(i & j) == i for j in range(size)] for i in range(size)])


def n5() -> FiniteLattice:
    # 0 < a < b < 1, 0 < c < 1
    return from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def product(l1: FiniteLattice, l2: FiniteLattice) -> FiniteLattice:
    pairs = [(a, b) for a in range(l1.size) for b in range(l2.size)]
    le = [[l1.leq[a][c] and l2.leq[b][d] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({l1.labels[a]},{l2.labels[b]})" for a, b in pairs]
    return FiniteLattice(le, labels)


def dual(l: FiniteLattice) -> FiniteLattice:
    return FiniteLattice([[l.leq[j][i] for j in range(l.size)] for i in range(l.size)], l.labels)


# ----------------------------------------------------------------------------
# classification


def _law_modular(l: FiniteLattice):
    m, j, le = l.meet_table, l.join_table, l.leq
    r = range(l.size)
    for a, b, c in iproduct(r, repeat=3):
        if le[a][b] and m[b][j[a][c]] != j[a][m[b][c]]:
            return (a, b, c)
    return None


def _law_distributive(l: FiniteLattice):
    m, j = l.meet_table, l.join_table
    r = range(l.size)
    for a, b, c in iproduct(r, repeat=3):
        if j[a][m[b][c]] != m[j[a][b]][j[a][c]] or m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
            return (a, b, c)
    return None


def find_pentagon(l: FiniteLattice):
    """(0, a, b, c, 1) with a < b, c incomparable to both, forming an N5 sublattice."""
    m, j, lt = l.meet_table, l.join_table, l.lt
    for a, b in iproduct(range(l.size), repeat=2):
        if not lt(a, b):
            continue
        for c in range(l.size):
            if l.leq[c][b] or l.leq[a][c] or l.leq[b][c]:
                continue
            if m[b][c] == m[a][c] and j[a][c] == j[b][c]:
                return (m[a][c], a, b, c, j[a][c])
    return None


def find_diamond(l: FiniteLattice):
    """(0, a, b, c, 1) with pairwise equal meets and joins, forming an M3 sublattice."""
    m, j = l.meet_table, l.join_table
    for a, b, c in combinations(range(l.size), 3):
        lo, hi = m[a][b], j[a][b]
        if lo == hi or m[a][c] != lo or m[b][c] != lo or j[a][c] != hi or j[b][c] != hi:
            continue
        if len({lo, a, b, c, hi}) == 5:
            return (lo, a, b, c, hi)
    return None


class LawDisagreement(AssertionError):
    pass


def is_modular(l: FiniteLattice, witness: bool = False):
    law = _law_modular(l) is None
    w = find_pentagon(l)
    if law != (w is None):
        raise LawDisagreement("modular law and pentagon search disagree")
    return (law, w) if witness else law


def is_distributive(l: FiniteLattice, witness: bool = False):
    law = _law_distributive(l) is None
    w = find_pentagon(l) or find_diamond(l)
    if law != (w is None):
        raise LawDisagreement("distributive laws and N5/M3 search disagree")
    return (law, w) if witness else law


def laws_agree(l: FiniteLattice) -> bool:
    """Both methods decide both properties identically."""
    try:
        is_modular(l)
        is_distributive(l)
    except LawDisagreement:
        return False
    return True


def complements(l: FiniteLattice, a: int) -> list[int]:
    return [b for b in range(l.size) if l.join(a, b) == l.top and l.meet(a, b) == l.bottom]


def is_complemented(l: FiniteLattice) -> bool:
    return all(complements(l, a) for a in range(l.size))


def is_boolean(l: FiniteLattice) -> bool:
    result = is_complemented(l) and is_distributive(l)
    k = l.size.bit_length() - 1
    if (1 << k == l.size) and result != is_isomorphic(l, cube(k)):
        raise AssertionError("boolean test disagrees with cube isomorphism")
    if 1 << k != l.size and result:
        raise AssertionError("boolean lattice of non power-of-two size")
    return result


def has_dp(l: FiniteLattice) -> bool:
    """Every three distinct atoms a, b, c with c below a v b span an M3 with the bottom."""
    ats = atoms(l)
    for a, b in combinations(ats, 2):
        ab = l.join(a, b)
        for c in ats:
            if c in (a, b) or not l.leq[c][ab]:
                continue
            if not (l.join(a, c) == ab and l.join(b, c) == ab):
                return False
    return True


def length(l: FiniteLattice) -> int:
    return l.height[l.top]


def atoms(l: FiniteLattice) -> list[int]:
    return sorted(b for a, b in l.covers if a == l.bottom)


def hasse_edges(l: FiniteLattice) -> list[tuple[int, int]]:
    return sorted(l.covers, key=lambda e: (l.labels[e[0]], l.labels[e[1]], e))


# ----------------------------------------------------------------------------
# isomorphism


def _invariant(l: FiniteLattice, a: int) -> tuple:
    return (l.height[a], l.up_degree(a), l.down_degree(a))


def find_isomorphism(l1: FiniteLattice, l2: FiniteLattice) -> dict | None:
    if l1.size != l2.size or len(l1.covers) != len(l2.covers):
        return None
    inv1 = [_invariant(l1, a) for a in range(l1.size)]
    inv2 = [_invariant(l2, a) for a in range(l2.size)]
    if sorted(inv1) != sorted(inv2):
        return None
    order = sorted(range(l1.size), key=lambda a: (inv1[a][0], a))
    cand = {a: [b for b in range(l2.size) if inv2[b] == inv1[a]] for a in order}
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(a, b):
        for x, y in mapping.items():
            if l1.leq[a][x] != l2.leq[b][y] or l1.leq[x][a] != l2.leq[y][b]:
                return False
        return True

    def go(k):
        if k == len(order):
            return True
        a = order[k]
        for b in cand[a]:
            if b not in used and consistent(a, b):
                mapping[a] = b
                used.add(b)
                if go(k + 1):
                    return True
                del mapping[a]
                used.discard(b)
        return False

    return dict(mapping) if go(0) else None


def is_isomorphic(l1: FiniteLattice, l2: FiniteLattice) -> bool:
    return find_isomorphism(l1, l2) is not None


# ----------------------------------------------------------------------------
# output


def to_dot(l: FiniteLattice, labels: bool = False, name: str = "L") -> str:
    lines = [f"graph {name} {{", "  rankdir=BT;"]
    if labels:
        lines.append("  node [shape=circle];")
    else:
        lines.append('  node [shape=point, width=0.12, label=""];')
    for h in sorted(set(l.height)):
        same = [f"n{a}" for a in range(l.size) if l.height[a] == h]
        lines.append("  { rank=same; " + " ".join(same) + "; }")
    for a in range(l.size):
        if labels:
            lines.append(f'  n{a} [label="{l.labels[a]}"];')
        else:
            lines.append(f"  n{a};")
    for a, b in hasse_edges(l):
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(l: FiniteLattice) -> str:
    return json.dumps(l.to_json(), indent=2, sort_keys=True) + "\n"


# ----------------------------------------------------------------------------
# from enumerated ideals


def lattice_of_subspaces(subspaces: Sequence[Subspace]) -> FiniteLattice:
    subs = sorted(subspaces, key=Subspace.sort_key)
    labels = []
    seen: dict[int, int] = {}
    for s in subs:
        k = seen.get(s.dim, 0)
        seen[s.dim] = k + 1
        labels.append(f"d{s.dim}" + (f".{k}" if k else ""))
    le = [[a <= b for b in subs] for a in subs]
    return FiniteLattice(le, labels)


def lattice_of(idealset) -> FiniteLattice:
    idealset.require_complete()
    return lattice_of_subspaces(idealset.ideals)


# ----------------------------------------------------------------------------
# distributive lattices via posets of join-irreducibles


def _downsets(n: int, below: Sequence[int]) -> list[int]:
    """Downsets of a poset on 0..n-1 as bitmasks; ``below[i]`` = mask of elements < i."""
    out = []
    for mask in range(1 << n):
        if all(not (mask >> i) & 1 or (below[i] & ~mask) == 0 for i in range(n)):
            out.append(mask)
    return out


def _count_downsets(n: int, below: Sequence[int], cap: int) -> int:
    count = 0
    for mask in range(1 << n):
        if all(not (mask >> i) & 1 or (below[i] & ~mask) == 0 for i in range(n)):
            count += 1
            if count > cap:
                return count
    return count


def downset_lattice(n: int, below: Sequence[int]) -> FiniteLattice:
    ds = sorted(_downsets(n, below), key=lambda m: (bin(m).count("1"), m))
    le = [[(a & b) == a for b in ds] for a in ds]
    return FiniteLattice(le)


def _canonical(n: int, below: Sequence[int]) -> tuple:
    """Minimal strict-order bit string over all relabelings that keep the order natural."""
    best = None
    for perm in _linear_extensions(n, below):
        bits = []
        for a in range(n):
            for b in range(a + 1, n):
                bits.append(1 if (below[perm[b]] >> perm[a]) & 1 else 0)
        t = tuple(bits)
        if best is None or t < best:
            best = t
    return (n, best or ())


def _linear_extensions(n: int, below: Sequence[int]):
    placed = 0
    seq: list[int] = []

    def go():
        nonlocal placed
        if len(seq) == n:
            yield tuple(seq)
            return
        for v in range(n):
            if not (placed >> v) & 1 and (below[v] & ~placed) == 0:
                placed |= 1 << v
                seq.append(v)
                yield from go()
                seq.pop()
                placed &= ~(1 << v)

    yield from go()


def posets_with_few_downsets(max_downsets: int) -> list[tuple[int, tuple]]:
    """Non-isomorphic posets (n, below-masks) with at most ``max_downsets`` downsets.

    Grown one maximal element at a time; adding elements never lowers the
    downset count, so any poset past the bound is pruned with all extensions.
    """
    found: dict[tuple, tuple[int, tuple]] = {}
    frontier = [(0, ())]
    found[_canonical(0, ())] = (0, ())
    while frontier:
        nxt = []
        for n, below in frontier:
            # the new element n sits above a downset D of the current poset
            for d in _downsets(n, below):
                nb = below + (d,)
                if _count_downsets(n + 1, nb, max_downsets) > max_downsets:
                    continue
                key = _canonical(n + 1, nb)
                if key not in found:
                    found[key] = (n + 1, nb)
                    nxt.append((n + 1, nb))
        frontier = nxt
    return list(found.values())


def enumerate_distributive(n: int, cap: int = MAX_ENUM) -> list[FiniteLattice]:
    """All distributive lattices with n elements up to isomorphism, in canonical order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap}")
    posets = [
        (k, below)
        for k, below in posets_with_few_downsets(n)
        if _count_downsets(k, below, n) == n
    ]
    posets.sort(key=lambda p: _canonical(*p))
    out: list[FiniteLattice] = []
    for k, below in posets:
        l = downset_lattice(k, below)
        if not any(is_isomorphic(l, o) for o in out):
            out.append(l)
    return out
