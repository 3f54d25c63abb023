"""Machine verification of the finite-group computations and matrix
identities the index results rest on.

Every verifier recomputes its claim from scratch with exact arithmetic
and reports per-check pass/fail with the computed and expected values; a
failing check carries a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .golden import GoldenInt, lambda_power
from .ideals import ResidueRing, ideal_from_generator
from .matrices import (
    IDENTITY,
    Mat2,
    S,
    S_INV,
    T,
    is_member,
    parabolic_conjugate,
    translation,
)
from .quotient import (
    ResMat,
    build_quotient,
    is_normal,
    power_subgroup,
    semigroup_closure,
    subgroup_generated,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    computed: str
    expected: str


@dataclass
class VerificationReport:
    name: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def witness(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def add(self, name: str, computed, expected) -> None:
        self.checks.append(
            CheckResult(name, computed == expected, str(computed), str(expected))
        )

    def add_bool(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, ok, detail or str(ok), "True"))


LAMBDA_PLUS_2 = GoldenInt(2, 1)

# generator set of the principal congruence subgroup at level (2)
LEVEL2_GENERATORS = (
    Mat2.from_ints([[(1, 0), (0, 2)], [(0, 0), (1, 0)]]),
    Mat2.from_ints([[(1, 0), (0, 0)], [(0, 2), (1, 0)]]),
    Mat2.from_ints([[(1, 2), (2, 2)], [(0, 2), (1, 2)]]),
    Mat2.from_ints([[(1, 2), (0, 2)], [(2, 2), (1, 2)]]),
)

# sample matrices used throughout the identity regressions; the third
# has determinant -L (not a member as it stands), and DET1_VARIANT is
# its unit-corrected det-1 form, used wherever a member is required
SAMPLE_MATRICES = (
    Mat2.from_ints([[(1, 2), (2, 2)], [(0, 2), (1, 2)]]),
    Mat2.from_ints([[(0, 1), (2, 1)], [(0, 1), (1, 2)]]),
    Mat2.from_ints([[(0, -1), (0, 1)], [(0, -2), (1, 2)]]),
    Mat2.from_ints([[(2, 3), (-3, -2)], [(3, 4), (-2, -4)]]),
)
DET1_VARIANT = Mat2.from_ints([[(-1, 0), (0, 1)], [(0, -2), (1, 2)]])

J = Mat2.from_ints([[(0, 0), (1, 0)], [(1, 0), (0, 0)]])


def _mod_equal(ring: ResidueRing, m: Mat2, target: Mat2) -> bool:
    return ResMat.from_mat2(ring, m) == ResMat.from_mat2(ring, target)


def _delta_matrices() -> tuple[Mat2, Mat2, Mat2]:
    """Three elements of the level-(L+2) subgroup whose images generate
    the kernel of the map from the level-5 quotient down to level (L+2)."""
    a = (T ** -2) * SAMPLE_MATRICES[3]
    b = S * a * S_INV
    c = J * a * J
    return a, b, c


def verify_kernel_layer(p: int, n: int, cap: int = 5_000_000) -> VerificationReport:
    """The six unipotent matrices at depth p^n generate, modulo p^(n+1),
    an elementary abelian group of order p^6 with the expected upper- and
    lower-triangular subgroup structure."""
    if p**6 > cap:
        raise ValueError(f"p^6 = {p**6} exceeds cap {cap}")
    report = VerificationReport(f"kernel-layer(p={p},n={n})")
    ring = ResidueRing(ideal_from_generator(p ** (n + 1)))
    pn = p**n
    xs, ys, zs = [], [], []
    for i in (0, 1):
        li = lambda_power(i)
        xs.append(Mat2(GoldenInt(1, 0), pn * li, GoldenInt(0, 0), GoldenInt(1, 0)))
        ys.append(Mat2(GoldenInt(1, 0), GoldenInt(0, 0), -pn * li, GoldenInt(1, 0)))
        zs.append(
            Mat2(
                GoldenInt(1, 0) - pn * lambda_power(i + 1),
                pn * lambda_power(i + 2),
                -pn * li,
                GoldenInt(1, 0) + pn * lambda_power(i + 1),
            )
        )
    gens = xs + ys + zs
    gen_keys = [ResMat.from_mat2(ring, g).key for g in gens]
    group = semigroup_closure(ring, gen_keys, cap=cap)
    report.add("order", len(group), p**6)
    commuting = all(
        ResMat(ring, a) * ResMat(ring, b) == ResMat(ring, b) * ResMat(ring, a)
        for a, b in combinations(gen_keys, 2)
    )
    report.add_bool("generators-commute", commuting)
    identity = ResMat.identity(ring)
    exponent_ok = all(ResMat(ring, g) ** p == identity for g in group)
    report.add_bool("every-element-has-order-dividing-p", exponent_ok)
    m_group = set(semigroup_closure(ring, [ResMat.from_mat2(ring, g).key for g in xs + ys]))
    n_group = set(semigroup_closure(ring, [ResMat.from_mat2(ring, g).key for g in zs]))
    report.add("unipotent-part-order", len(m_group), p**4)
    report.add("diagonal-part-order", len(n_group), p**2)
    report.add("parts-intersection", len(m_group & n_group), 1)
    return report


def _action_matrices() -> dict[str, tuple[tuple[int, ...], ...]]:
    """Conjugation actions of S, T and J on (r, s, t)-coordinates of the
    elementary abelian kernel at level 5, as row matrices over F_5."""
    return {
        "S": ((0, 4, 0), (4, 0, 0), (0, 0, 4)),
        "T": ((1, 1, 2), (0, 1, 0), (0, 1, 1)),
        "J": ((0, 1, 0), (1, 0, 0), (0, 0, 4)),
    }


# the T-action with the sign of the s-exponent in the first row flipped
# (i.e. r -> r s^-1 t^2 instead of r -> r s t^2); it differs from the
# conjugation action but leads to the same invariant-subspace count
T_ACTION_VARIANT = ((1, 4, 2), (0, 1, 0), (0, 1, 1))


def _coords_mod5(ring: ResidueRing, g: Mat2) -> tuple[int, int, int]:
    """(i, j, k) with g = r^i s^j t^k inside the elementary abelian level
    quotient; entries of (g - I)/(L+2) are integers mod 5."""
    w = []
    for e, ident in zip(g.entries(), IDENTITY.entries()):
        diff = ring.reduce(e - ident)
        for d in range(5):
            if ring.reduce(LAMBDA_PLUS_2 * d) == diff:
                w.append(d)
                break
        else:
            raise ValueError(f"entry {e} is not I + (L+2)*integer mod 5")
    w11, w12, w21, w22 = w
    # r, s, t have offset matrices 3*[[0,0],[1,0]], 3*[[0,1],[0,0]],
    # 3*[[-1,0],[0,1]]; invert with 3^-1 = 2 mod 5
    i, j, k = (2 * w21) % 5, (2 * w12) % 5, (2 * w22) % 5
    if w11 % 5 != (-3 * k) % 5:
        raise ValueError("inconsistent coordinates: not in <r, s, t>")
    return i, j, k


def verify_conjugation_action() -> VerificationReport:
    """Cross-validate the (r, s, t) conjugation actions two ways, then
    show only the trivial and full subspaces are invariant."""
    report = VerificationReport("conjugation-action")
    ring = ResidueRing(ideal_from_generator(5))
    a, b, c = _delta_matrices()
    r = (a * c) * (a * b)
    s = (a * c) * (a * b).inverse()
    t = b * c
    pi = LAMBDA_PLUS_2
    expected_offsets = {
        "r": Mat2(GoldenInt(1, 0), GoldenInt(0, 0), pi * 3, GoldenInt(1, 0)),
        "s": Mat2(GoldenInt(1, 0), pi * 3, GoldenInt(0, 0), GoldenInt(1, 0)),
        "t": Mat2(GoldenInt(1, 0) - pi * 3, GoldenInt(0, 0), GoldenInt(0, 0), GoldenInt(1, 0) + pi * 3),
    }
    for name, m in zip("rst", (r, s, t)):
        report.add_bool(
            f"{name}-offset-mod-5", _mod_equal(ring, m, expected_offsets[name])
        )
    stated = _action_matrices()
    conjugators = {"S": S, "T": T, "J": J}
    derived = {}
    for gname, g in conjugators.items():
        rows = []
        for m in (r, s, t):
            conj = g * m * g.inverse()
            rows.append(_coords_mod5(ring, conj))
        derived[gname] = tuple(rows)
        report.add(f"action-of-{gname}", derived[gname], stated[gname])
    report.add_bool(
        "T-action-differs-from-s-inverse-variant",
        derived["T"] != T_ACTION_VARIANT,
        detail="the variant negates the s-exponent; conjugation does not",
    )

    vectors = [(x, y, z) for x in range(5) for y in range(5) for z in range(5)]
    subspaces = {frozenset([(0, 0, 0)]), frozenset(vectors)}
    for v in vectors:
        if v == (0, 0, 0):
            continue
        line = frozenset(tuple(c * x % 5 for x in v) for c in range(5))
        subspaces.add(line)
        plane = frozenset(
            w for w in vectors if sum(a * b for a, b in zip(v, w)) % 5 == 0
        )
        subspaces.add(plane)
    report.add("subspace-count", len(subspaces), 64)

    def image(vec, mat):
        return tuple(
            sum(vec[i] * mat[i][j] for i in range(3)) % 5 for j in range(3)
        )

    invariant = [
        sp
        for sp in subspaces
        if all(image(v, m) in sp for m in derived.values() for v in sp)
    ]
    report.add("invariant-subspaces", len(invariant), 2)
    report.add_bool(
        "invariant-are-trivial-and-full",
        {len(sp) for sp in invariant} == {1, 125},
    )
    variant_actions = (derived["S"], T_ACTION_VARIANT, derived["J"])
    variant_count = sum(
        1
        for sp in subspaces
        if all(image(v, m) in sp for m in variant_actions for v in sp)
    )
    report.add("invariant-subspaces-under-variant", variant_count, 2)
    return report


def verify_level5_structure(cap: int = 5_000_000) -> VerificationReport:
    """Sizes and structure of the level-5 quotient and its fifth-power
    subgroup, the finite facts behind the non-congruence argument."""
    report = VerificationReport("level5-structure")
    q = build_quotient(ideal_from_generator(5), cap)
    report.add("quotient-order", q.order, 15000)
    a, b, c = _delta_matrices()
    delta = [ResMat.from_mat2(q.ring, m) for m in (a, b, c)]
    report.add_bool(
        "delta-in-quotient", all(d.key in q.element_set for d in delta)
    )
    sub = subgroup_generated(q, delta)
    report.add("delta-subgroup-order", sub.order, 125)
    report.add_bool("delta-subgroup-normal", is_normal(sub))
    ident = ResMat.identity(q.ring)
    report.add_bool(
        "delta-subgroup-elementary-abelian",
        all(q.resmat(g) ** 5 == ident for g in sub.members)
        and all(
            q.resmat(x) * q.resmat(y) == q.resmat(y) * q.resmat(x)
            for x, y in combinations([d.key for d in delta], 2)
        ),
    )
    report.add("quotient-by-delta", q.order // sub.order, 120)
    fifth = power_subgroup(q, 5)
    report.add("fifth-power-subgroup-index", fifth.index, 1)
    s_img = ResMat.from_mat2(q.ring, S)
    t5_img = ResMat.from_mat2(q.ring, T**5)
    report.add_bool(
        "S-and-T5-in-fifth-powers",
        s_img.key in fifth.members and t5_img.key in fifth.members,
    )
    return report


def verify_identities() -> VerificationReport:
    """Regression suite over the individual matrix identities."""
    report = VerificationReport("identities")
    ring2 = ResidueRing(ideal_from_generator(2))
    ring4 = ResidueRing(ideal_from_generator(4))
    ring5 = ResidueRing(ideal_from_generator(5))
    ring8 = ResidueRing(ideal_from_generator(8))
    ring9 = ResidueRing(ideal_from_generator(9))
    ring25 = ResidueRing(ideal_from_generator(25))
    ring_tau = ResidueRing(ideal_from_generator(LAMBDA_PLUS_2))

    # the four level-(2) generators are members congruent to I mod (2)
    for i, m in enumerate(LEVEL2_GENERATORS):
        report.add_bool(f"level2-generator-{i}-member", is_member(m))
        report.add_bool(
            f"level2-generator-{i}-trivial-mod-2", _mod_equal(ring2, m, IDENTITY)
        )

    # their image mod (4) is elementary abelian of order 16
    q4 = build_quotient(ideal_from_generator(4))
    imgs = [ResMat.from_mat2(q4.ring, m) for m in LEVEL2_GENERATORS]
    sub16 = subgroup_generated(q4, imgs)
    report.add("level2-generators-mod4-order", sub16.order, 16)
    ident4 = ResMat.identity(q4.ring)
    report.add_bool(
        "level2-generators-mod4-exponent-2",
        all(q4.resmat(g) * q4.resmat(g) == ident4 for g in sub16.members),
    )

    # sample matrices: three are members; the third has det -L and its
    # unit-corrected det-1 variant is a member
    for i in (0, 1, 3):
        report.add_bool(f"sample-{i}-member", is_member(SAMPLE_MATRICES[i]))
    report.add("sample-2-det-is-minus-L", str(SAMPLE_MATRICES[2].det()), str(GoldenInt(0, -1)))
    report.add_bool("sample-2-det1-variant-member", is_member(DET1_VARIANT))

    # T recovered from coprime powers of itself
    for aa, bb in ((2, 3), (2, 5), (3, 5)):
        report.add_bool(
            f"translations-{aa}-{bb}-members",
            is_member(translation(aa)) and is_member(translation(bb)),
        )
        # m*aa + n*bb = 1 by scanning small combinations
        m, n = next(
            (m, n)
            for m in range(-bb, bb + 1)
            for n in range(-aa, aa + 1)
            if m * aa + n * bb == 1
        )
        report.add(
            f"T-from-translations-{aa}-{bb}",
            str(translation(aa) ** m * translation(bb) ** n),
            str(T),
        )

    # the level-5 parabolic conjugate is a translation mod 25
    p5 = parabolic_conjugate(2 * lambda_power(2), 5 * lambda_power(3), 5)
    target5 = Mat2(GoldenInt(1, 0), GoldenInt(10, 0), GoldenInt(0, 0), GoldenInt(1, 0))
    report.add_bool("level5-parabolic-mod-25", _mod_equal(ring25, p5, target5))
    report.add_bool(
        "20L^5-equals-60-mod-25",
        ring25.reduce(20 * lambda_power(5)) == ring25.reduce(GoldenInt(60, 0)),
    )

    # the basic level-(L+2) element: explicit entries, membership and
    # triviality mod (L+2)
    a_tau = (T ** -2) * SAMPLE_MATRICES[3]
    stated_tau = Mat2.from_ints([[(-6, -11), (5, 10)], [(3, 4), (-2, -4)]])
    report.add("tau-level-element-matrix", str(a_tau), str(stated_tau))
    report.add_bool("tau-level-element-member", is_member(a_tau))
    report.add_bool(
        "tau-level-element-trivial-mod-tau", _mod_equal(ring_tau, a_tau, IDENTITY)
    )

    # congruences of the three delta generators mod 5
    a, b, c = _delta_matrices()
    pi = LAMBDA_PLUS_2
    delta_targets = {
        "a": Mat2(GoldenInt(1, 0) + pi * 4, GoldenInt(0, 0), pi * 4, GoldenInt(1, 0) + pi),
        "b": Mat2(GoldenInt(1, 0) + pi, pi, GoldenInt(0, 0), GoldenInt(1, 0) + pi * 4),
        "c": Mat2(GoldenInt(1, 0) + pi, pi * 4, GoldenInt(0, 0), GoldenInt(1, 0) + pi * 4),
    }
    for name, m in zip("abc", (a, b, c)):
        report.add_bool(f"delta-{name}-mod5", _mod_equal(ring5, m, delta_targets[name]))
        report.add_bool(f"delta-{name}-member", is_member(m))

    # a triple product that is a translation mod 8 and trivial mod 4
    lower = Mat2(GoldenInt(1, 0), GoldenInt(0, 0), GoldenInt(0, -4), GoldenInt(1, 0))
    p8 = lower * translation(-4) * LEVEL2_GENERATORS[2] ** 2
    target8 = Mat2(GoldenInt(1, 0), GoldenInt(4, 0), GoldenInt(0, 0), GoldenInt(1, 0))
    report.add_bool("triple-product-mod8", _mod_equal(ring8, p8, target8))
    report.add_bool("triple-product-trivial-mod4", _mod_equal(ring4, p8, IDENTITY))

    # quotient of two samples: explicit entries, det 1, membership, and
    # its inverse cube a translation mod 9
    a9 = SAMPLE_MATRICES[1] * DET1_VARIANT.inverse()
    stated9 = Mat2.from_ints([[(4, 9), (-3, -2)], [(6, 9), (-2, -3)]])
    report.add("sample-quotient-matrix", str(a9), str(stated9))
    report.add("sample-quotient-det", str(a9.det()), str(GoldenInt(1, 0)))
    report.add_bool("sample-quotient-member", is_member(a9))
    e3 = a9 ** -3
    target_e3 = Mat2(GoldenInt(1, 0), GoldenInt(3, 0), GoldenInt(0, 0), GoldenInt(1, 0))
    report.add_bool("sample-quotient-inverse-cube-mod9", _mod_equal(ring9, e3, target_e3))

    # adjusted level-p parabolic is a translation mod p^2
    for p in (7, 11):
        ring_p2 = ResidueRing(ideal_from_generator(p * p))
        mp = translation(-20 * p) * parabolic_conjugate(
            2 * lambda_power(2), p * lambda_power(3), p
        )
        target = Mat2(GoldenInt(1, 0), GoldenInt(12 * p, 0), GoldenInt(0, 0), GoldenInt(1, 0))
        report.add_bool(f"adjusted-parabolic-p{p}-mod-p^2", _mod_equal(ring_p2, mp, target))

    # parabolic conjugates at level m are members trivial mod (m)
    for p in (3, 5, 7):
        x = parabolic_conjugate(2 * lambda_power(2), p * lambda_power(3), p)
        ring_p = ResidueRing(ideal_from_generator(p))
        report.add_bool(f"parabolic-p{p}-member", is_member(x))
        report.add_bool(f"parabolic-p{p}-trivial-mod-p", _mod_equal(ring_p, x, IDENTITY))
    return report


def verify_all(cap: int = 5_000_000) -> list[VerificationReport]:
    reports = [
        verify_kernel_layer(2, 1, cap),
        verify_kernel_layer(2, 2, cap),
        verify_kernel_layer(3, 1, cap),
        verify_kernel_layer(5, 1, cap),
        verify_kernel_layer(7, 1, cap),
        verify_conjugation_action(),
        verify_level5_structure(cap),
        verify_identities(),
    ]
    return reports
