"""Finite groups as dense multiplication tables.

Every group in this library is a table over element indices 0..n-1; the
identity is located by scanning, inverses and element orders are derived
once at construction.  Groups are immutable value objects and are compared
by identity (use :func:`are_isomorphic` for abstract comparison).

Convention used throughout: ``dihedral(n)`` is the dihedral group OF ORDER
``n`` (so ``dihedral(12)`` has 6 rotations and 6 reflections).  All order
formulas in this package follow that convention.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Immutable finite group given by its multiplication table.

    ``mul[a][b]`` is the product a*b.  Derived data (identity, inverses,
    element orders) is computed eagerly; the table is never mutated.
    """

    mul: tuple[tuple[int, ...], ...]
    name: str = "G"
    identity: int = field(init=False)
    inv: tuple[int, ...] = field(init=False)
    element_orders: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        n = len(self.mul)
        if n == 0 or any(len(row) != n for row in self.mul):
            raise ValueError("multiplication table must be square and nonempty")
        ident = None
        for e in range(n):
            if all(self.mul[e][x] == x and self.mul[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("table has no identity element")
        inv = []
        for a in range(n):
            row = self.mul[a]
            try:
                inv.append(row.index(ident))
            except ValueError:
                raise ValueError(f"element {a} has no inverse") from None
        orders = []
        for a in range(n):
            k, acc = 1, a
            while acc != ident:
                acc = self.mul[acc][a]
                k += 1
                if k > n:
                    raise ValueError(f"element {a} has no finite order <= {n}")
            orders.append(k)
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inv", tuple(inv))
        object.__setattr__(self, "element_orders", tuple(orders))

    @property
    def order(self) -> int:
        return len(self.mul)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        acc = self.identity
        for _ in range(k):
            acc = self.mul[acc][a]
        return acc

    def is_abelian(self) -> bool:
        m = self.mul
        n = len(m)
        return all(m[a][b] == m[b][a] for a in range(n) for b in range(a + 1, n))

    def involutions(self) -> list[int]:
        return [a for a in range(self.order) if self.element_orders[a] == 2]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True, eq=False)
class MarkedGroup:
    """A finite group together with an ordered tuple of marked elements.

    The marked elements must generate the group; this is checked at
    construction time.
    """

    group: FiniteGroup
    marked: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.group.order
        if not self.marked or any(not (0 <= g < n) for g in self.marked):
            raise ValueError("marked elements out of range")
        if len(subgroup_closure(self.group, self.marked)) != n:
            raise ValueError("marked elements do not generate the group")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"MarkedGroup({self.group.name}, marked={self.marked})"


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group C_n; element 1 is a generator of order n (when n > 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(table, name=f"C{n}")


def dihedral(n: int) -> MarkedGroup:
    """Dihedral group OF ORDER n (n even), marked with two reflections.

    Elements 0..n/2-1 are rotations r^i, elements n/2..n-1 are reflections
    r^i*f.  The marks (a, b) are reflections with ord(a*b) = n/2; for the
    degenerate n = 2 both marks are the unique reflection.
    """
    if n < 2 or n % 2:
        raise ValueError("dihedral order must be even and >= 2")
    m = n // 2
    table = []
    for a in range(n):
        i, fa = a % m, a >= m
        row = []
        for b in range(n):
            j, fb = b % m, b >= m
            k = (i - j) % m if fa else (i + j) % m
            row.append(k + m if fa != fb else k)
        table.append(tuple(row))
    marks = (m, m) if m == 1 else (m, m + 1)
    return MarkedGroup(FiniteGroup(tuple(table), name=f"D{n}"), marks)


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, bab^-1 = a^-1>.

    dicyclic(2) is the quaternion group Q8; dicyclic(4) is Q16.
    Element (i, j) with i < 2n, j < 2 stands for a^i * b^j, encoded i*2 + j.
    """
    if n < 1:
        raise ValueError("n must be positive")
    size = 4 * n
    table = []
    for e1 in range(size):
        i1, j1 = divmod(e1, 2)
        row = []
        for e2 in range(size):
            i2, j2 = divmod(e2, 2)
            if j1:
                i = (i1 - i2 + (n if j2 else 0)) % (2 * n)
            else:
                i = (i1 + i2) % (2 * n)
            row.append(i * 2 + (j1 ^ j2))
        table.append(tuple(row))
    name = f"Q{size}" if n % 2 == 0 else f"Dic{n}"
    return FiniteGroup(tuple(table), name=name)


def _perm_compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a * b)(i) = a(b(i)): apply b first.
    return tuple(a[b[i]] for i in range(len(a)))


def _perm_parity(p: tuple[int, ...]) -> int:
    seen, parity = [False] * len(p), 0
    for i in range(len(p)):
        if not seen[i]:
            j, cyclen = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                cyclen += 1
            parity ^= (cyclen - 1) & 1
    return parity


def _group_from_perms(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[_perm_compose(p, q)] for q in perms) for p in perms
    )
    grp = FiniteGroup(table, name=name)
    object.__setattr__(grp, "perms", tuple(perms))  # carried for callers
    return grp


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group S_n for 1 <= n <= 5."""
    if not 1 <= n <= 5:
        raise ValueError("symmetric(n) supports 1 <= n <= 5")
    return _group_from_perms(list(itertools.permutations(range(n))), f"S{n}")


def alternating(n: int) -> FiniteGroup:
    """Alternating group A_n for 1 <= n <= 5."""
    if not 1 <= n <= 5:
        raise ValueError("alternating(n) supports 1 <= n <= 5")
    perms = [p for p in itertools.permutations(range(n)) if _perm_parity(p) == 0]
    return _group_from_perms(perms, f"A{n}")


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Direct product; element (x, y) is encoded as x*|B| + y."""
    nb = b.order
    amul, bmul = a.mul, b.mul
    table = tuple(
        tuple(amul[x1][x2] * nb + bmul[y1][y2] for x2 in range(a.order) for y2 in range(nb))
        for x1 in range(a.order)
        for y1 in range(nb)
    )
    return FiniteGroup(table, name=name or f"{a.name}x{b.name}")


def semidirect(
    a: FiniteGroup,
    b: FiniteGroup,
    action: list[tuple[int, ...]] | tuple[tuple[int, ...], ...],
    name: str | None = None,
) -> FiniteGroup:
    """Semidirect product A x| B for a homomorphism B -> Aut(A).

    ``action[y]`` is the permutation of A's elements implementing the
    automorphism attached to the element y of B.  Both requirements are
    verified exhaustively: every action[y] must be an automorphism of A,
    and action[y1*y2] must equal action[y1] o action[y2].
    Element (x, y) is encoded as x*|B| + y.
    """
    na, nb = a.order, b.order
    if len(action) != nb:
        raise ValueError("action must assign a permutation to every element of B")
    amul = a.mul
    for y in range(nb):
        perm = action[y]
        if sorted(perm) != list(range(na)):
            raise ValueError(f"action[{y}] is not a permutation of A")
        for x1 in range(na):
            for x2 in range(na):
                if perm[amul[x1][x2]] != amul[perm[x1]][perm[x2]]:
                    raise ValueError(f"action[{y}] is not an automorphism of A")
    for y1 in range(nb):
        for y2 in range(nb):
            composed = _perm_compose(action[y1], action[y2])
            if tuple(action[b.mul[y1][y2]]) != composed:
                raise ValueError("action is not a homomorphism B -> Aut(A)")
    table = tuple(
        tuple(
            amul[x1][action[y1][x2]] * nb + b.mul[y1][y2]
            for x2 in range(na)
            for y2 in range(nb)
        )
        for x1 in range(na)
        for y1 in range(nb)
    )
    return FiniteGroup(table, name=name or f"{a.name}:{b.name}")


def quotient(g: FiniteGroup, normal: set[int] | frozenset[int], name: str | None = None) -> FiniteGroup:
    """Quotient of g by a normal subgroup given as a set of element indices."""
    n = g.order
    nset = frozenset(normal)
    if g.identity not in nset:
        raise ValueError("normal subgroup must contain the identity")
    for x in nset:
        if g.inv[x] not in nset or any(g.mul[x][y] not in nset for y in nset):
            raise ValueError("subset is not a subgroup")
    for x in range(n):
        xinv = g.inv[x]
        for h in nset:
            if g.mul[g.mul[x][h]][xinv] not in nset:
                raise ValueError("subgroup is not normal")
    coset_of: list[int | None] = [None] * n
    reps: list[int] = []
    for x in range(n):
        if coset_of[x] is None:
            cid = len(reps)
            reps.append(x)
            for h in nset:
                coset_of[g.mul[x][h]] = cid
    table = tuple(
        tuple(coset_of[g.mul[ra][rb]] for rb in reps) for ra in reps
    )
    return FiniteGroup(table, name=name or f"{g.name}/N{len(nset)}")


def multiplicative_units(n: int) -> FiniteGroup:
    """Group of units mod n; element i of the table is the i-th unit in order.

    For prime p this is Aut(C_p) acting on C_p by multiplication.
    """
    units = [k for k in range(1, n) if gcd(k, n) == 1] or [0]
    if n == 1:
        return FiniteGroup(((0,),), name="U(1)")
    index = {u: i for i, u in enumerate(units)}
    table = tuple(tuple(index[(u * v) % n] for v in units) for u in units)
    grp = FiniteGroup(table, name=f"U({n})")
    object.__setattr__(grp, "units", tuple(units))  # carried for callers
    return grp


# ---------------------------------------------------------------------------
# closure, homomorphisms, isomorphism


def subgroup_closure(g: FiniteGroup, gens: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Sorted elements of the subgroup generated by ``gens``."""
    mul = g.mul
    seen = {g.identity}
    frontier = [g.identity]
    gens = tuple(dict.fromkeys(gens))
    while frontier:
        nxt = []
        for a in frontier:
            row = mul[a]
            for z in gens:
                b = row[z]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(seen))


def extend_generator_map(
    src: FiniteGroup,
    src_gens: tuple[int, ...],
    dst: FiniteGroup,
    dst_images: tuple[int, ...],
) -> tuple[int, ...] | None:
    """Extend src_gens -> dst_images to a homomorphism, or return None.

    Requires src_gens to generate src.  The extension is built by closing
    the assignment under right multiplication; any inconsistency means no
    homomorphism exists with these generator images.
    """
    if len(src_gens) != len(dst_images):
        raise ValueError("generator/image length mismatch")
    n = src.order
    img: list[int | None] = [None] * n
    img[src.identity] = dst.identity
    frontier = [src.identity]
    smul, dmul = src.mul, dst.mul
    while frontier:
        nxt = []
        for a in frontier:
            ia = img[a]
            for z, w in zip(src_gens, dst_images):
                az = smul[a][z]
                bw = dmul[ia][w]
                known = img[az]
                if known is None:
                    img[az] = bw
                    nxt.append(az)
                elif known != bw:
                    return None
        frontier = nxt
    if any(v is None for v in img):
        raise ValueError("src_gens do not generate src")
    return tuple(img)  # type: ignore[arg-type]


def extends_to_isomorphism(src: MarkedGroup, dst: MarkedGroup) -> tuple[int, ...] | None:
    """Full isomorphism mapping src.marked[i] -> dst.marked[i], or None."""
    return _extend_iso(src.group, src.marked, dst.group, dst.marked)


def _extend_iso(
    sg: FiniteGroup, smarks: tuple[int, ...], dg: FiniteGroup, dmarks: tuple[int, ...]
) -> tuple[int, ...] | None:
    if sg.order != dg.order or len(smarks) != len(dmarks):
        return None
    for a, b in zip(smarks, dmarks):
        if sg.element_orders[a] != dg.element_orders[b]:
            return None
    img = extend_generator_map(sg, smarks, dg, dmarks)
    if img is None or len(set(img)) != sg.order:
        return None
    return img


def greedy_generators(g: FiniteGroup) -> tuple[int, ...]:
    """Small generating set, grown by repeatedly adding the lowest index
    element outside the running closure (deterministic)."""
    gens: list[int] = []
    closure = {g.identity}
    while len(closure) < g.order:
        for x in range(g.order):
            if x not in closure:
                gens.append(x)
                closure = set(subgroup_closure(g, tuple(gens)))
                break
    return tuple(gens)


@lru_cache(maxsize=None)
def _fingerprint(g: FiniteGroup) -> tuple:
    n = g.order
    orders = tuple(sorted(g.element_orders))
    abelian = g.is_abelian()
    center = sum(
        1 for x in range(n) if all(g.mul[x][y] == g.mul[y][x] for y in range(n))
    )
    # conjugacy class sizes
    seen = [False] * n
    sizes = []
    for x in range(n):
        if not seen[x]:
            cls = {g.mul[g.mul[y][x]][g.inv[y]] for y in range(n)}
            for c in cls:
                seen[c] = True
            sizes.append(len(cls))
    return (n, orders, abelian, center, tuple(sorted(sizes)))


def are_isomorphic(a: FiniteGroup, b: FiniteGroup) -> bool:
    """Abstract group isomorphism test.

    Uses a greedy generating set of ``a`` and searches all order-compatible
    image tuples in ``b``, pruning by pairwise product orders before trying
    to extend each candidate to a full isomorphism.
    """
    if a is b:
        return True
    if a.order != b.order or _fingerprint(a) != _fingerprint(b):
        return False
    gens = greedy_generators(a)
    by_order: dict[int, list[int]] = {}
    for o in {a.element_orders[x] for x in gens}:
        by_order[o] = [y for y in range(b.order) if b.element_orders[y] == o]

    def search(i: int, chosen: tuple[int, ...]) -> bool:
        if i == len(gens):
            return _extend_iso(a, gens, b, chosen) is not None
        for cand in by_order[a.element_orders[gens[i]]]:
            ok = True
            for j in range(i):
                if (
                    a.element_orders[a.mul[gens[j]][gens[i]]]
                    != b.element_orders[b.mul[chosen[j]][cand]]
                ):
                    ok = False
                    break
            if ok and search(i + 1, chosen + (cand,)):
                return True
        return False

    return search(0, ())


# ---------------------------------------------------------------------------
# table validation (used by the test suite on every constructor)


def validate_group_table(
    g: FiniteGroup, exhaustive_limit: int = 100, samples: int = 100_000, seed: int = 0
) -> None:
    """Check the group axioms on the table; raises AssertionError on failure.

    Associativity is checked exhaustively for orders up to
    ``exhaustive_limit`` and on ``samples`` random triples above that.
    """
    n = g.order
    mul = g.mul
    e = g.identity
    assert all(mul[e][x] == x and mul[x][e] == x for x in range(n))
    assert all(mul[x][g.inv[x]] == e and mul[g.inv[x]][x] == e for x in range(n))
    assert all(sorted(row) == list(range(n)) for row in mul), "rows must permute"
    if n <= exhaustive_limit:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
    for x, y, z in triples:
        assert mul[mul[x][y]][z] == mul[x][mul[y][z]], f"associativity fails at {(x, y, z)}"
