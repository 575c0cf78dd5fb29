"""Membership tests for the two self-centralizing subgroup conditions.

A subgroup H of G is self-centralizing when C_G(H) <= H.  This module
decides two group classes:

* class X: every non-cyclic subgroup is self-centralizing;
* class C: every non-trivial subgroup is self-centralizing;

plus structure recognizers (nilpotency class, maximal-class 2-group family,
supersolvability, abelian invariants), fixed-point-free action tests, and
witness-based non-membership certificates for ambient groups too large to
enumerate.

Reduction used by in_class_X (proved here, tested against the literal
all-subgroups oracle):

    G violates the class-X condition  iff  there are z, a, b in G with
    a, b in C_G(z), <a,b> non-cyclic and z not in <a,b>.

Proof.  If <a,b> is non-cyclic with z in C_G(a) n C_G(b) \\ <a,b>, then
H = <a,b> is a non-cyclic subgroup whose centralizer contains z outside H.
Conversely let H be non-cyclic with z in C_G(H) \\ H.  A finite group whose
2-generated subgroups are all cyclic is cyclic (all pairs commute, so it is
abelian, and a non-cyclic abelian group contains C_p x C_p, which is
2-generated and non-cyclic); hence some a, b in H generate a non-cyclic
K <= H.  z centralizes H, so a, b in C_G(z); and z not in H >= K.  QED

Because the condition is conjugation-invariant, z may range over conjugacy
class representatives, and a, b over canonical generators of the distinct
cyclic subgroups inside C_G(z) (replacing a generator by another generator
of the same cyclic subgroup does not change <a,b>).
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructors import ActionSpec
from .fields import is_prime
from .groups import DEFAULT_ORDER_CAP, FiniteGroup, SubgroupRef, close_generators
from .lattice import DEFAULT_SUBGROUP_CAP, all_subgroups, maximal_subgroups
from .perms import Perm

METHOD_PAIR = "pair-reduced"
METHOD_BRUTE = "all-subgroups"
METHOD_WITNESS = "witness"
METHOD_CYCLIC = "cyclic-reduced"


@dataclass(frozen=True)
class Witness:
    """A violating subgroup (by generators) and a centralizing outsider."""

    generators: tuple[Perm, ...]
    z: Perm

    def to_json(self) -> dict:
        return {
            "generators": [g.cycle_string() for g in self.generators],
            "z": self.z.cycle_string(),
        }


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    witness: Witness | None
    method: str

    def to_json(self, group_spec: str, cls: str) -> dict:
        return {
            "group": group_spec,
            "class": cls,
            "member": self.member,
            "method": self.method,
            "witness": self.witness.to_json() if self.witness else None,
        }


def is_self_centralizing(G: FiniteGroup, S: SubgroupRef) -> bool:
    """C_G(S) <= S."""
    cmask = G.centralizer_mask(S.generating_set())
    return (cmask & ~S.mask) == 0


def _is_cyclic_mask(G: FiniteGroup, mask: int) -> bool:
    orders = G.element_orders()
    size = mask.bit_count()
    return any(orders[i] == size for i in G.mask_indices(mask))


def in_class_X(G: FiniteGroup) -> MembershipVerdict:
    """Decide class-X membership by the centralizer-first pair scan.

    For each conjugacy class representative z, every violation witnessed by
    z lives inside W = C_G(z) (see the module docstring), and W is a
    subgroup, so only pairs of cyclic-subgroup representatives inside W are
    tried; cyclic W is skipped outright.  On failure the witness is the
    first violation in lexicographic (z, a, b) order, so the verdict is
    deterministic regardless of how the work is scheduled.
    """
    orders = G.element_orders()
    cyc = G.cyclic_masks()
    cyc_reps = G.cyclic_reps()
    memo: dict[tuple[int, int], tuple[int, bool]] = {}

    for z in G.class_representatives():
        if z == 0:
            continue
        wmask = G.centralizer_mask([z])
        w_indices = G.mask_indices(wmask)
        if max(orders[i] for i in w_indices) == len(w_indices):
            continue  # cyclic centralizer cannot contain a non-cyclic subgroup
        rep_list = [i for i in w_indices if i != 0 and cyc_reps[i] == i]
        for pos, a in enumerate(rep_list):
            ca = cyc[a]
            for b in rep_list[pos + 1 :]:
                if (ca >> b) & 1 or (cyc[b] >> a) & 1:
                    continue  # one power of the other: <a,b> is cyclic
                entry = memo.get((a, b))
                if entry is None:
                    kmask = G.closure_mask([a, b])
                    entry = (kmask, not _is_cyclic_mask(G, kmask))
                    memo[(a, b)] = entry
                kmask, non_cyclic = entry
                if non_cyclic and not (kmask >> z) & 1:
                    return MembershipVerdict(
                        member=False,
                        witness=Witness(
                            (G.elements[a], G.elements[b]), G.elements[z]
                        ),
                        method=METHOD_PAIR,
                    )
    return MembershipVerdict(member=True, witness=None, method=METHOD_PAIR)


def in_class_X_bruteforce(
    G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP
) -> MembershipVerdict:
    """The literal quantifier: scan every non-cyclic subgroup.

    Oracle for in_class_X; requires full subgroup enumeration.
    """
    for S in all_subgroups(G, cap):
        if S.is_cyclic():
            continue
        cmask = G.centralizer_mask(S.generating_set())
        outside = cmask & ~S.mask
        if outside:
            z = (outside & -outside).bit_length() - 1
            return MembershipVerdict(
                member=False,
                witness=Witness(tuple(S.generators()), G.elements[z]),
                method=METHOD_BRUTE,
            )
    return MembershipVerdict(member=True, witness=None, method=METHOD_BRUTE)


def in_class_C(G: FiniteGroup) -> MembershipVerdict:
    """Decide class-C membership by scanning cyclic subgroups only.

    If every non-trivial cyclic subgroup is self-centralizing, then every
    non-trivial subgroup H is: pick a non-trivial a in H, then
    C_G(H) <= C_G(a) <= <a> <= H.  Conjugation-invariance lets a range
    over class representatives.
    """
    cyc = G.cyclic_masks()
    for a in G.class_representatives():
        if a == 0:
            continue
        outside = G.commute_mask(a) & ~cyc[a]
        if outside:
            z = (outside & -outside).bit_length() - 1
            return MembershipVerdict(
                member=False,
                witness=Witness((G.elements[a],), G.elements[z]),
                method=METHOD_CYCLIC,
            )
    return MembershipVerdict(member=True, witness=None, method=METHOD_CYCLIC)


def verify_witness(G: FiniteGroup, verdict: MembershipVerdict,
                   cls: str = "X") -> bool:
    """Re-verify a false verdict's witness by direct computation."""
    if verdict.member or verdict.witness is None:
        return False
    w = verdict.witness
    gens = [G.index_of(g) for g in w.generators]
    z = G.index_of(w.z)
    kmask = G.closure_mask(gens)
    if (kmask >> z) & 1:
        return False
    if any((G.commute_mask(z) >> g) & 1 == 0 for g in gens):
        return False
    S = SubgroupRef(G, kmask)
    if cls == "X":
        return not S.is_cyclic()
    return S.order > 1


# -- structure description -----------------------------------------------------


@dataclass(frozen=True)
class StructureDescriptor:
    order: int
    is_abelian: bool
    abelian_invariants: tuple[int, ...] | None
    nilpotency_class: int | None
    is_supersolvable: bool
    two_group_family: str  # dihedral | semidihedral | quaternion | other
    center_order: int

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "is_abelian": self.is_abelian,
            "abelian_invariants": (
                list(self.abelian_invariants)
                if self.abelian_invariants is not None
                else None
            ),
            "nilpotency_class": self.nilpotency_class,
            "is_supersolvable": self.is_supersolvable,
            "two_group_family": self.two_group_family,
            "center_order": self.center_order,
        }


def abelian_invariants(G: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... | dk of an abelian group, ascending."""
    if not G.is_abelian:
        raise ValueError("abelian invariants are defined for abelian groups")
    n = G.order
    if n == 1:
        return ()
    orders = G.element_orders()
    partitions: dict[int, list[int]] = {}
    for p in _prime_factors(n):
        p_part = 1
        rest = n
        while rest % p == 0:
            rest //= p
            p_part *= p
        # s_k = #elements of order dividing p^k = p^(sum_i min(lambda_i, k))
        exps = [0]
        k = 1
        while p ** exps[-1] < p_part:
            pk = p**k
            count = sum(1 for o in orders if pk % o == 0)
            e = 0
            while count > 1:
                count //= p
                e += 1
            exps.append(e)
            k += 1
        parts_ge = [exps[i] - exps[i - 1] for i in range(1, len(exps))]
        lam = []
        for size in range(1, len(parts_ge) + 1):
            larger = parts_ge[size] if size < len(parts_ge) else 0
            lam.extend([size] * (parts_ge[size - 1] - larger))
        partitions[p] = sorted(lam, reverse=True)
    width = max(len(lam) for lam in partitions.values())
    factors = []
    for i in range(width):
        d = 1
        for p, lam in partitions.items():
            if i < len(lam):
                d *= p ** lam[i]
        factors.append(d)
    return tuple(reversed(factors))


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def two_group_family(G: FiniteGroup) -> str:
    """Recognize maximal-class 2-groups by order, class, and involution count."""
    n = G.order
    if n < 8 or n & (n - 1):
        return "other"
    e = n.bit_length() - 1
    if G.nilpotency_class() != e - 1:
        return "other"
    involutions = sum(1 for o in G.element_orders() if o == 2)
    if involutions == n // 2 + 1:
        return "dihedral"
    if involutions == 1:
        return "quaternion"
    if e >= 4 and involutions == n // 4 + 1:
        return "semidihedral"
    return "other"


def is_supersolvable(G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> bool:
    """Classical criterion: every maximal subgroup has prime index."""
    if G.order == 1:
        return True
    return all(
        is_prime(G.order // M.order) for M in maximal_subgroups(G, cap)
    )


def structure(G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> StructureDescriptor:
    ab = G.is_abelian
    return StructureDescriptor(
        order=G.order,
        is_abelian=ab,
        abelian_invariants=abelian_invariants(G) if ab else None,
        nilpotency_class=G.nilpotency_class(),
        is_supersolvable=is_supersolvable(G, cap),
        two_group_family=two_group_family(G),
        center_order=G.center().order,
    )


def is_dihedral_group(G: FiniteGroup) -> bool:
    """Order 2m with a cyclic <y> of order m inverted by an outside involution."""
    n = G.order
    if n % 2:
        return False
    m = n // 2
    orders = G.element_orders()
    cyc = G.cyclic_masks()
    for y in range(G.order):
        if orders[y] != m:
            continue
        ymask = cyc[y]
        yinv = G.inv(y)
        for x in range(1, G.order):
            if orders[x] == 2 and not (ymask >> x) & 1:
                if G.conj(y, x) == yinv:
                    return True
    return False


# -- actions -------------------------------------------------------------------


def acts_fixed_point_freely(spec: ActionSpec) -> bool:
    """No non-identity acting element fixes a non-identity target element."""
    H, N = spec.acting, spec.target
    for h in range(1, H.order):
        img = spec.automorphism(h).images
        if any(img[i] == i for i in range(1, N.order)):
            return False
    return True


# -- certificates and simplicity -------------------------------------------------


@dataclass(frozen=True)
class CertificateResult:
    """Outcome of a subgroup-closure non-membership certificate."""

    ambient: str
    conclusive: bool
    subgroup_order: int
    verdict: MembershipVerdict | None

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "conclusive": self.conclusive,
            "subgroup_order": self.subgroup_order,
            "verdict": (
                self.verdict.to_json(self.ambient, "X") if self.verdict else None
            ),
        }


def certify_non_membership(
    ambient_label: str,
    gens: list[Perm],
    order_cap: int = DEFAULT_ORDER_CAP,
) -> CertificateResult:
    """Certify an ambient group out of class X from a small subgroup.

    Class X is subgroup closed, so a constructed subgroup K outside the
    class excludes every group containing K.  K's violation witness is a
    triple of ambient-degree permutations, hence directly re-checkable in
    the ambient group.  If K is in the class the attempt is inconclusive.
    """
    K = close_generators(gens, order_cap)
    inner = in_class_X(K)
    if inner.member:
        return CertificateResult(ambient_label, False, K.order, None)
    return CertificateResult(
        ambient_label,
        True,
        K.order,
        MembershipVerdict(member=False, witness=inner.witness, method=METHOD_WITNESS),
    )


def is_simple(G: FiniteGroup) -> bool:
    """No proper non-trivial normal subgroup (normal closures of class reps)."""
    if G.order == 1:
        return False
    for rep in G.class_representatives():
        if rep == 0:
            continue
        if G.normal_closure([rep]).order < G.order:
            return False
    return True
