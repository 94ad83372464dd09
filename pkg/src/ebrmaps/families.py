"""Constructors for the classified families of edge-biregular maps.

Every map on a surface of Euler characteristic -p (p an odd prime) belongs,
up to duality and twins, to one of the families built here:

* ``dihedral_family_1(p)``  - single-vertex map of type (4(p+1), 4) on the
  dihedral group of order 4(p+1);
* ``dihedral_family_2(p)``  - two-vertex map of type (2(p+2), 4) on the
  dihedral group of order 4(p+2);
* ``cyclic_fitting_map(kappa, lam, j)`` - maps of type (4*kappa, 2*lambda)
  of order 4*kappa*lambda whose group is C_{kappa*lambda} extended by V_4;
  built two ways (from the presentation and as an explicit semidirect
  product) and cross-checked;
* ``valency_eight_map(m)``  - maps of type (8, 6m) of order 24m (chi = -(9m-4));
* ``exceptional_order36_map()`` - the unique fully regular example, of
  type (4,6) on a group of order 36 isomorphic to D6 x D6;
* ``chi_minus_2_catalog()`` - the twelve maps with chi = -2.

``cyclic_by_dihedral_probe`` exhaustively searches groups of the shape
C_p x| D_nu for maps and asserts the structural restrictions that any such
map must satisfy.

All presentation texts are kept verbatim, including redundant relators.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import (
    FiniteGroup,
    MarkedGroup,
    _group_from_perms,
    are_isomorphic,
    cyclic,
    dihedral,
    direct_product,
    extend_generator_map,
    multiplicative_units,
    semidirect,
    symmetric,
)
from .maps import (
    EdgeBiregularMap,
    all_map_quadruples,
    equivalent_up_to_duality,
    euler_characteristic,
    is_map_isomorphic,
    load_map,
    map_file_text,
    new_map,
    type_of,
)
from .presentations import DEFAULT_MAX_COSETS, coset_enumerate, parse_presentation


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_odd_prime(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")


_COMMON_RELATORS = ("x^2", "y^2", "s^2", "t^2", "(x y)^2", "(s t)^2")

MARK_NAMES = ("x", "y", "s", "t")


def presentation_text(extra_relators: tuple[str, ...] | list[str]) -> str:
    """Standard four-generator presentation text with the given extra relators."""
    lines = ["gens x y s t"]
    lines += [f"rel {r}" for r in _COMMON_RELATORS]
    lines += [f"rel {r}" for r in extra_relators]
    return "\n".join(lines) + "\n"


def _build(text: str, name: str, max_cosets: int) -> EdgeBiregularMap:
    return load_map(map_file_text(text, MARK_NAMES), max_cosets=max_cosets, name=name)


# ---------------------------------------------------------------------------
# the two dihedral families


def dihedral_family_1_text(p: int) -> str:
    return presentation_text(("x y s", f"s (y t)^{p + 1}"))


def dihedral_family_1(p: int, max_cosets: int = DEFAULT_MAX_COSETS) -> EdgeBiregularMap:
    """Single-vertex map of type (4(p+1), 4) on the dihedral group of order 4(p+1)."""
    _require_odd_prime(p)
    m = _build(dihedral_family_1_text(p), f"dh1({p})", max_cosets)
    assert m.group.order == 4 * (p + 1)
    assert type_of(m) == (4 * (p + 1), 4)
    return m


def dihedral_family_2_text(p: int) -> str:
    return presentation_text(("x y s", f"s (x t)^{p + 2}"))


def dihedral_family_2(p: int, max_cosets: int = DEFAULT_MAX_COSETS) -> EdgeBiregularMap:
    """Two-vertex map of type (2(p+2), 4) on the dihedral group of order 4(p+2)."""
    _require_odd_prime(p)
    m = _build(dihedral_family_2_text(p), f"dh2({p})", max_cosets)
    assert m.group.order == 4 * (p + 2)
    assert type_of(m) == (2 * (p + 2), 4)
    return m


# ---------------------------------------------------------------------------
# the cyclic-Fitting family: F = C_{kappa*lambda} extended by V_4


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (kappa, lam, j) of the cyclic-Fitting family.

    kappa and lam are odd, coprime, with lam >= 3; j satisfies
    0 < j < lam and j^2 = 1 (mod lam).  Derived values:

    * p = 2*kappa*lam - 2*kappa - lam (minus the Euler characteristic);
    * a = (j-1)(lam+1)/2 reduced into [0, lam);
    * b = 2*kappa - 1 and d = lam - 1 multiply to p + 1, with b = 1 (mod 4)
      and gcd(b+1, d+1) = 1.
    """

    kappa: int
    lam: int
    j: int

    def __post_init__(self) -> None:
        if self.kappa < 1 or self.kappa % 2 == 0:
            raise ValueError("kappa must be a positive odd integer")
        if self.lam < 3 or self.lam % 2 == 0:
            raise ValueError("lam must be an odd integer >= 3")
        if math.gcd(self.kappa, self.lam) != 1:
            raise ValueError("kappa and lam must be coprime")
        if not 0 < self.j < self.lam:
            raise ValueError("j must satisfy 0 < j < lam")
        if (self.j * self.j) % self.lam != 1:
            raise ValueError("j^2 must be 1 modulo lam")

    @property
    def a(self) -> int:
        return ((self.j - 1) * (self.lam + 1) // 2) % self.lam

    @property
    def p(self) -> int:
        return 2 * self.kappa * self.lam - 2 * self.kappa - self.lam

    @property
    def b(self) -> int:
        return 2 * self.kappa - 1

    @property
    def d(self) -> int:
        return self.lam - 1

    @property
    def c(self) -> int:
        return math.gcd(2 * self.kappa, self.lam)

    @property
    def order(self) -> int:
        return 4 * self.kappa * self.lam

    @property
    def map_type(self) -> tuple[int, int]:
        return 4 * self.kappa, 2 * self.lam


def cyclic_fitting_params(p: int) -> list[FamilyParams]:
    """All family parameters attached to the odd prime p.

    Factors p + 1 = b*d with b = 1 (mod 4) and gcd(b+1, d+1) = 1, sets
    kappa = (b+1)/2 and lam = d+1, and attaches every j with j^2 = 1 mod lam.
    """
    _require_odd_prime(p)
    out: list[FamilyParams] = []
    for b in range(1, p + 2):
        if (p + 1) % b:
            continue
        d = (p + 1) // b
        if b % 4 != 1 or math.gcd(b + 1, d + 1) != 1:
            continue
        kappa, lam = (b + 1) // 2, d + 1
        for j in range(1, lam):
            if (j * j) % lam == 1:
                out.append(FamilyParams(kappa, lam, j))
    return out


def cyclic_fitting_text(params: FamilyParams) -> str:
    kappa, lam, j, a = params.kappa, params.lam, params.j, params.a
    closing = f"(t y)^{kappa} (s x)^{a} s" if a else f"(t y)^{kappa} s"
    return presentation_text(
        (
            f"(s x)^{lam}",
            f"(t y)^{2 * kappa}",
            "s (y t)^2 s (t y)^2",
            "x (y t)^2 x (t y)^2",
            f"t s x t (s x)^{j}",
            closing,
        )
    )


def _cyclic_fitting_direct(params: FamilyParams) -> EdgeBiregularMap:
    """The same map as an explicit (C_lam x C_kappa) x| V_4 construction.

    The V_4 = <s, t> acts on u (order lam) and w = v^2 (order kappa) by
    s: u -> u^-1, w -> w; t: u -> u^-j, w -> w^-1.  Then x = s*u and
    y = u^a * w^((kappa-1)/2) * s * t.
    """
    kappa, lam, j, a = params.kappa, params.lam, params.j, params.a
    fitting = direct_product(cyclic(lam), cyclic(kappa))

    def pow_perm(eu: int, ew: int) -> tuple[int, ...]:
        return tuple(
            ((i * eu) % lam) * kappa + (m * ew) % kappa
            for i in range(lam)
            for m in range(kappa)
        )

    klein = direct_product(cyclic(2), cyclic(2))
    t_idx, s_idx = 1, 2  # (0,1) and (1,0) in the product encoding
    action = [()] * 4
    action[0] = pow_perm(1, 1)
    action[s_idx] = pow_perm(-1 % lam, 1)
    action[t_idx] = pow_perm(-j % lam, -1 % kappa)
    action[3] = pow_perm(j % lam, -1 % kappa)
    grp = semidirect(fitting, klein, tuple(action), name=f"cf({kappa},{lam},{j})")

    def lift(f_idx: int, k_idx: int) -> int:
        return f_idx * 4 + k_idx

    s_el = lift(0, s_idx)
    t_el = lift(0, t_idx)
    u_el = lift(1 * kappa + 0, 0)
    x_el = grp.mul[s_el][u_el]
    b_prime = (kappa - 1) // 2
    w_part = lift((a % lam) * kappa + b_prime, 0)
    st_el = grp.mul[s_el][t_el]
    y_el = grp.mul[w_part][st_el]
    return new_map(grp, (x_el, y_el, s_el, t_el))


def cyclic_fitting_map(
    params: FamilyParams,
    route: str = "both",
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> EdgeBiregularMap:
    """Map of type (4*kappa, 2*lam) on the group of order 4*kappa*lam.

    route = "presentation" runs coset enumeration on the defining relators;
    route = "direct" assembles the split extension explicitly; the default
    "both" builds both and asserts they are isomorphic as maps.
    """
    if route not in ("both", "presentation", "direct"):
        raise ValueError(f"unknown route {route!r}")
    built: dict[str, EdgeBiregularMap] = {}
    if route in ("both", "presentation"):
        name = f"cf({params.kappa},{params.lam},{params.j})"
        built["presentation"] = _build(cyclic_fitting_text(params), name, max_cosets)
    if route in ("both", "direct"):
        built["direct"] = _cyclic_fitting_direct(params)
    for m in built.values():
        assert m.group.order == params.order, (
            f"expected order {params.order}, got {m.group.order}"
        )
        assert type_of(m) == params.map_type
    if route == "both":
        assert is_map_isomorphic(built["presentation"], built["direct"]), (
            "presentation and direct constructions disagree"
        )
    return built.get("presentation") or built["direct"]


# ---------------------------------------------------------------------------
# the valency-eight family: type (8, 6m), order 24m


def valency_eight_text(m: int) -> str:
    return presentation_text(
        (f"(s x)^{3 * m}", "(t y)^4", "(s x y)^2 t", "t x t y")
    )


@lru_cache(maxsize=1)
def valency_eight_quotient_certificate() -> bool:
    """Check the structural certificate behind the valency-eight family.

    In the group presented WITHOUT the order relator on s*x, the subgroup
    generated by (s*x)^3 has index 24, and the action on its cosets
    generates a group isomorphic to S_4.  This holds independently of m
    and pins the order of the family members to 24m.
    """
    text = presentation_text(("(t y)^4", "(s x y)^2 t", "t x t y"))
    pres = parse_presentation(text)
    cube = (2, 0, 2, 0, 2, 0)  # the word (s x)^3
    table = coset_enumerate(pres, subgroup_generators=(cube,))
    n = table.num_cosets
    assert n == 24, f"expected index 24, got {n}"
    gens = [tuple(table.table[c][g] for c in range(n)) for g in range(4)]
    identity = tuple(range(n))
    closure = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for perm in frontier:
            for g in gens:
                prod = tuple(g[perm[i]] for i in range(n))
                if prod not in closure:
                    closure.add(prod)
                    nxt.append(prod)
        frontier = nxt
    image = _group_from_perms(sorted(closure), name="coset-action")
    assert are_isomorphic(image, symmetric(4)), "coset action is not S4"
    return True


def valency_eight_map(m: int, max_cosets: int = DEFAULT_MAX_COSETS) -> EdgeBiregularMap:
    """Map of type (8, 6m) on a group of order 24m, chi = -(9m - 4).

    m must be a positive odd integer.  When 9m - 4 is composite the
    construction still stands but falls outside the prime-characteristic
    classification, so a warning is emitted.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be a positive odd integer")
    if not is_prime(9 * m - 4):
        warnings.warn(
            f"9*m - 4 = {9 * m - 4} is composite; the map exists but its"
            " Euler characteristic is not minus a prime",
            stacklevel=2,
        )
    assert valency_eight_quotient_certificate()
    built = _build(valency_eight_text(m), f"ve({m})", max_cosets)
    assert built.group.order == 24 * m
    assert type_of(built) == (8, 6 * m)
    assert built.group.element_orders[built.group.mul[built.s][built.x]] == 3 * m
    return built


# ---------------------------------------------------------------------------
# the exceptional order-36 map


def exceptional_order36_text() -> str:
    return presentation_text(
        ("(t y)^2", "(s x)^3", "(x y t)^3", "(s t y)^3", "(x y s t)^2")
    )


def exceptional_order36_map(max_cosets: int = DEFAULT_MAX_COSETS) -> EdgeBiregularMap:
    """The unique fully regular map in the odd-prime classification.

    Type (4,6), group of order 36 isomorphic to D6 x D6, chi = -3,
    non-orientable.
    """
    m = _build(exceptional_order36_text(), "x36", max_cosets)
    assert m.group.order == 36
    assert type_of(m) == (4, 6)
    return m


# ---------------------------------------------------------------------------
# the twelve maps with chi = -2


CHI2_EXTRA_RELATORS: tuple[tuple[str, ...], ...] = (
    ("(t y)^4", "(s x)^4", "y s x s", "t x s x", "x t y t", "s y t y"),
    ("(t y)^2", "(s x)^6", "x y t", "t (s x)^3"),
    ("(t y)^3", "(s x)^3", "s t y x"),
    ("(t y)^2", "(s x)^4", "(y s)^4", "(t x)^2", "y s x s"),
    ("(t y)^2", "(s x)^4", "(y s)^2", "(t x)^2", "y (s x)^2"),
    ("(t y)^2", "(s x)^4", "(y s)^2", "(s t x)^2", "y (s x)^2"),
    ("(t y)^2", "(s x)^4", "(y s)^2", "(t x)^2", "t y (s x)^2"),
    ("(t y)^2", "(s x)^4", "(y s)^2", "(s t x)^2", "t y x s x"),
    ("(t y)^2", "(s x)^4", "(y s)^2", "(s t x)^2", "t y s"),
    ("(t y)^2", "(s x)^3", "t (s y)^2", "y (x t)^2"),
    ("(t y)^2", "(s x)^3", "(y s x)^2", "(t x)^2"),
    ("(t y)^2", "(s x)^3", "(y s)^2", "(t x)^2"),
)

CHI2_EXPECTED_ORDERS = (8, 12, 12, 16, 16, 16, 16, 16, 16, 24, 24, 24)
CHI2_EXPECTED_TYPES = (
    (8, 8), (4, 12), (6, 6),
    (4, 8), (4, 8), (4, 8), (4, 8), (4, 8), (4, 8),
    (4, 6), (4, 6), (4, 6),
)
CHI2_ORIENTABLE_INDICES = frozenset({1, 3, 4, 7, 11, 12})
CHI2_FULLY_REGULAR_INDICES = frozenset({1, 3, 7, 10, 12})


def chi_minus_2_text(index: int) -> str:
    """Presentation text of catalog entry ``index`` (1-based, 1..12)."""
    if not 1 <= index <= 12:
        raise ValueError("index must be between 1 and 12")
    return presentation_text(CHI2_EXTRA_RELATORS[index - 1])


def chi_minus_2_catalog(max_cosets: int = DEFAULT_MAX_COSETS) -> list[EdgeBiregularMap]:
    """The twelve maps supported by surfaces with chi = -2, in catalog order."""
    out = []
    for i in range(1, 13):
        m = _build(chi_minus_2_text(i), f"chi2({i})", max_cosets)
        assert m.group.order == CHI2_EXPECTED_ORDERS[i - 1]
        assert type_of(m) == CHI2_EXPECTED_TYPES[i - 1]
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# probe: exhaustive map search in C_p x| D_nu


def cyclic_by_dihedral_probe(p: int, lam: int) -> list[EdgeBiregularMap]:
    """Search every group C_p x| D_{2*lam} for edge-biregular maps.

    Enumerates all homomorphisms from the dihedral group of order nu = 2*lam
    into Aut(C_p), builds each semidirect product, and lists all maps found,
    deduplicated up to duality, twins and isomorphism.

    Every found map of type (k, l) with l/2 >= 3 and p dividing neither k/2
    nor l/2 is asserted to satisfy the structural restrictions: l = nu with
    nu = 4 (mod 8), k/2 in {2, l/2}, and chi = p(1 - l/4) for k = 4 or
    chi = p(2 - l/2) for k = l.  Violations raise AssertionError.
    """
    _require_odd_prime(p)
    if lam < 3:
        raise ValueError("lam must be at least 3")
    if lam % p == 0:
        raise ValueError("p must not divide lam")
    nu = 2 * lam
    dih = dihedral(nu)
    cp = cyclic(p)
    units = multiplicative_units(p)
    unit_index = {u: i for i, u in enumerate(units.units)}
    square_roots_of_one = [u for u in units.units if (u * u) % p == 1]

    def unit_perm(u: int) -> tuple[int, ...]:
        return tuple((c * u) % p for c in range(p))

    found: list[EdgeBiregularMap] = []
    for e1 in square_roots_of_one:
        for e2 in square_roots_of_one:
            images = (unit_index[e1], unit_index[e2])
            hom = extend_generator_map(dih.group, dih.marked, units, images)
            if hom is None:
                continue
            action = tuple(unit_perm(units.units[hom[dd]]) for dd in range(nu))
            grp = semidirect(cp, dih.group, action, name=f"C{p}:D{nu}")
            for m in all_map_quadruples(grp):
                _assert_probe_conformance(p, nu, m)
                if not any(equivalent_up_to_duality(m, f) for f in found):
                    found.append(m)
    return found


def _assert_probe_conformance(p: int, nu: int, m: EdgeBiregularMap) -> None:
    k, l = type_of(m)
    half_k, half_l = k // 2, l // 2
    if half_l < 3 or half_k % p == 0 or half_l % p == 0:
        return  # outside the hypotheses; nothing is claimed
    assert l == nu, f"found type ({k},{l}) but the dihedral complement has order {nu}"
    assert nu % 8 == 4, f"map of type ({k},{l}) found although {nu} != 4 mod 8"
    assert half_k in (2, half_l), f"vertex parameter {half_k} not in {{2, {half_l}}}"
    chi = euler_characteristic(m)
    if half_k == 2:
        expected = Fraction(p * (2 - half_l), 2)
    else:
        expected = Fraction(p * (2 - half_l), 1)
    assert chi == expected, f"chi {chi} differs from the predicted {expected}"
