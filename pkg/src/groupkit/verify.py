"""Named structural claims checked by computation, reported as data.

Each check returns VerifyReport records; rendering (text or JSON) is the
CLI's job. Claim ids are stable strings like "table1.n=6" or "thm7.2.n=5"
so scripts can key on them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import (
    GroupTable,
    Morphism,
    SubgroupRef,
    kernel,
    subgroup_table,
    verify_group_axioms,
)
from .construct import (
    Action,
    actions,
    action_classes,
    cyclic,
    dihedral,
    direct_product,
    hom_set,
    holomorph,
    recognize_split,
    semidirect,
)
from .aut import aut_group, automorphisms, is_characteristic, lambda_lift, zeta_lift
from .iso import are_isomorphic, identify
from .numth import euler_phi, gcd, totatives


@dataclass(frozen=True)
class VerifyReport:
    claim_id: str
    status: str  # "pass" | "fail" | "skipped"
    expected: str
    actual: str
    elapsed_ms: float


@dataclass(frozen=True)
class VerifyConfig:
    table1_max_n: int = 20
    mod4_values: tuple[int, ...] = (4, 8, 12)
    prime_powers: tuple[tuple[int, int], ...] = (
        (2, 1), (2, 2), (2, 3), (2, 4), (2, 5),
        (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2))
    elementary_abelian: tuple[tuple[int, int], ...] = ((2, 2), (2, 3), (3, 2))
    dihedral_max_n: int = 12
    action_equiv_max_m: int = 12
    action_equiv_max_n: int = 6
    characteristic_max_order: int = 60
    aut_cap: int = 10_000
    negative_control: bool = False


@dataclass
class RunSummary:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0


def report_to_json(r: VerifyReport) -> dict:
    return {"claim": r.claim_id, "status": r.status,
            "expected": r.expected, "actual": r.actual, "ms": round(r.elapsed_ms, 3)}


class _Recorder:
    def __init__(self):
        self.reports: list[VerifyReport] = []
        self._t0 = time.perf_counter()

    def start(self):
        self._t0 = time.perf_counter()

    def add(self, claim: str, expected, actual, status: str | None = None):
        ms = (time.perf_counter() - self._t0) * 1000.0
        if status is None:
            status = "pass" if str(expected) == str(actual) else "fail"
        self.reports.append(VerifyReport(claim, status, str(expected), str(actual), ms))
        self.start()

    def skip(self, claim: str, expected, reason: str):
        self.add(claim, expected, reason, status="skipped")


def _table1_formula(n: int) -> int:
    if n % 4 == 0:
        return 4 * euler_phi(n)
    if n % 2 == 1:
        return euler_phi(n)
    return 6 * euler_phi(n)


def _zn_x_z2(n: int) -> GroupTable:
    return direct_product(cyclic(n), cyclic(2, "s"))


def check_table1(max_n: int = 20, aut_cap: int = 10_000) -> list[VerifyReport]:
    """|Aut(Z_n x Z_2)| against the phi(n) / 4*phi(n) / 6*phi(n) formula."""
    rec = _Recorder()
    for n in range(2, max_n + 1):
        got = len(automorphisms(_zn_x_z2(n), cap=aut_cap))
        rec.add(f"table1.n={n}", _table1_formula(n), got)
    return rec.reports


def _index2_split_subgroup(g: GroupTable, target: GroupTable):
    """A normal index-2 subgroup of g isomorphic to target that splits."""
    for m in hom_set(g, cyclic(2)):
        if set(m.image) != {0, 1}:
            continue
        ker = kernel(m)
        ker_table, _ = subgroup_table(g, ker.members)
        if are_isomorphic(ker_table, target) is None:
            continue
        witness = recognize_split(g, ker)
        if witness is not None:
            return witness
    return None


def check_aut_zn_mod4_structure(values: tuple[int, ...] = (4, 8, 12),
                                aut_cap: int = 10_000) -> list[VerifyReport]:
    """Aut(Z_n x Z_2) for 4 | n splits over a copy of Aut(Z_n) x Z_2.

    Also verifies the four named small cases by explicit isomorphism:
    n=2 -> D3, n=4 -> D4, n=6 -> D6, n=8 -> Z2 x D4.
    """
    rec = _Recorder()
    for n in values:
        claim = f"thm4.1.n={n}"
        if n % 4 != 0:
            rec.skip(claim, "n divisible by 4", f"n={n} is not divisible by 4")
            continue
        a = aut_group(_zn_x_z2(n), cap=aut_cap).table
        w_target = direct_product(aut_group(cyclic(n)).table, cyclic(2, "s"))
        witness = _index2_split_subgroup(a, w_target)
        rec.add(claim, "split over Aut(Zn) x Z2 found",
                "split over Aut(Zn) x Z2 found" if witness else "no splitting subgroup")
    named = {2: dihedral(3), 4: dihedral(4), 6: dihedral(6),
             8: direct_product(cyclic(2), dihedral(4))}
    labels = {2: "D3", 4: "D4", 6: "D6", 8: "Z2 x D4"}
    for n, target in named.items():
        a = aut_group(_zn_x_z2(n), cap=aut_cap).table
        ok = are_isomorphic(a, target) is not None
        rec.add(f"sec4.1.n={n}", f"Aut(Z{n} x Z2) ~ {labels[n]}",
                f"Aut(Z{n} x Z2) ~ {labels[n]}" if ok else "not isomorphic")
    return rec.reports


def check_prime_power_aut(pairs=((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)),
                          aut_cap: int = 10_000) -> list[VerifyReport]:
    """|Aut(Z_{p^k})| = p^k - p^{k-1} by enumeration."""
    rec = _Recorder()
    for p, k in pairs:
        expected = p**k - p ** (k - 1)
        got = len(automorphisms(cyclic(p**k), cap=aut_cap))
        rec.add(f"prop4.2.p={p}.k={k}", expected, got)
    return rec.reports


def check_elementary_abelian_aut(pairs=((2, 2), (2, 3), (3, 2)),
                                 aut_cap: int = 10_000) -> list[VerifyReport]:
    """|Aut(Z_p^m)| = prod over x < m of (p^m - p^x), by full enumeration."""
    rec = _Recorder()
    for p, m in pairs:
        claim = f"sec4.2.p={p}.m={m}"
        expected = 1
        for x in range(m):
            expected *= p**m - p**x
        if expected > aut_cap:
            rec.skip(claim, expected, f"projected count {expected} exceeds cap {aut_cap}")
            continue
        g = cyclic(p)
        for _ in range(m - 1):
            g = direct_product(g, cyclic(p))
        got = len(automorphisms(g, cap=aut_cap))
        rec.add(claim, expected, got)
    return rec.reports


def check_dihedral_aut(max_n: int = 12, aut_cap: int = 10_000) -> list[VerifyReport]:
    """Aut(D_n) ~ Hol(Z_n) with |Aut(D_n)| = n*phi(n); self-iso iff phi(n)=2."""
    rec = _Recorder()
    for n in range(3, max_n + 1):
        d = dihedral(n)
        a = aut_group(d, cap=aut_cap).table
        hol = holomorph(n)
        ok = a.order == n * euler_phi(n) and are_isomorphic(a, hol) is not None
        rec.add(f"thm7.2.n={n}", f"|Aut| = {n * euler_phi(n)}, isomorphic to holomorph",
                f"|Aut| = {a.order}, isomorphic to holomorph" if ok
                else f"|Aut| = {a.order}, holomorph match: {are_isomorphic(a, hol) is not None}")
        self_iso = are_isomorphic(d, a) is not None
        rec.add(f"cor7.3.n={n}", euler_phi(n) == 2, self_iso)
    return rec.reports


def _z8_builds():
    z8, z2 = cyclic(8), cyclic(2, "s")
    out = []
    for i in (1, 3, 5, 7):
        power = Morphism(z8, z8, tuple(i * x % 8 for x in range(8)))
        out.append(semidirect(z8, z2, Action(z2, z8, (Morphism(z8, z8, tuple(range(8))), power))))
    return out  # actions r -> r^1, r^3, r^5, r^7


def check_z8_case_study(aut_cap: int = 10_000) -> list[VerifyReport]:
    """The four Z_8 x| Z_2 groups: distinctness, relations, Aut structure."""
    rec = _Recorder()
    rho, sigma, tau, upsilon = _z8_builds()
    labels = ["rho", "sigma", "tau", "upsilon"]
    groups = [rho, sigma, tau, upsilon]

    distinct = all(are_isomorphic(groups[i], groups[j]) is None
                   for i in range(4) for j in range(i + 1, 4))
    rec.add("sec8.pairwise-noniso", "4 pairwise non-isomorphic groups",
            "4 pairwise non-isomorphic groups" if distinct else "collision found")

    # generator indices in the pair encoding: s = (0,1) -> 1, r = (1,0) -> 2
    rec.add("remark8.1.rho", "table identical to Z8 x Z2",
            "table identical to Z8 x Z2"
            if rho == direct_product(cyclic(8), cyclic(2, "s")) else "tables differ")
    rec.add("remark8.1.sigma", "s*r = r^3*s", "s*r = r^3*s"
            if sigma.mul[1][2] == 3 * 2 + 1 else f"s*r = index {sigma.mul[1][2]}")
    rec.add("remark8.1.tau", "s*r = r^5*s", "s*r = r^5*s"
            if tau.mul[1][2] == 5 * 2 + 1 else f"s*r = index {tau.mul[1][2]}")
    rec.add("remark8.1.upsilon", "isomorphic to D8", "isomorphic to D8"
            if are_isomorphic(upsilon, dihedral(8)) is not None else "not isomorphic to D8")

    auts = [automorphisms(g, cap=aut_cap) for g in groups]
    rec.add("sec8.2.aut-orders", [16, 16, 16, 32], [len(a) for a in auts])

    # printed general forms, as sets of (image of r, image of s) index pairs
    def gen_images(autos):
        return {(a.image[2], a.image[1]) for a in autos}

    rho_form = {(2 * i + j, 8 * k + 1) for i in (1, 3, 5, 7) for j in (0, 1) for k in (0, 1)}
    rec.add("sec8.2.forms.rho", "all 16 of form [r^i s^j, r^4k s]",
            "all 16 of form [r^i s^j, r^4k s]" if gen_images(auts[0]) == rho_form
            else "form mismatch")
    sigma_form = {(2 * i, 2 * k + 1) for i in (1, 3, 5, 7) for k in (0, 2, 4, 6)}
    rec.add("sec8.2.forms.sigma", "all 16 of form [r^i, r^even s]",
            "all 16 of form [r^i, r^even s]" if gen_images(auts[1]) == sigma_form
            else "form mismatch")
    rec.add("sec8.2.forms.tau", 16, len(auts[2]))
    upsilon_form = {(2 * i, 2 * k + 1) for i in (1, 3, 5, 7) for k in range(8)}
    rec.add("sec8.2.forms.upsilon", "all 32 of form [r^i, r^k s]",
            "all 32 of form [r^i, r^k s]" if gen_images(auts[3]) == upsilon_form
            else "form mismatch")

    z2d4 = direct_product(cyclic(2), dihedral(4))
    for label, autos, g, thm in (("rho", auts[0], rho, "thm8.2"),
                                 ("sigma", auts[1], sigma, "thm8.3"),
                                 ("tau", auts[2], tau, "thm8.4")):
        at = aut_group(g, cap=aut_cap).table
        ok = are_isomorphic(at, z2d4) is not None and identify(at).display == "Z2 x D4"
        rec.add(f"{thm}.{label}", "Aut ~ Z2 x D4", "Aut ~ Z2 x D4" if ok else "mismatch")

    aut_d8 = aut_group(upsilon, cap=aut_cap).table
    witness = _index2_split_subgroup(aut_d8, z2d4)
    rec.add("thm8.5", "Aut(D8) splits over index-2 copy of Z2 x D4",
            "Aut(D8) splits over index-2 copy of Z2 x D4" if witness else "no split found")
    return rec.reports


def check_action_equivalence(max_m: int = 12, max_n: int = 6,
                             aut_cap: int = 10_000) -> list[VerifyReport]:
    """Actions equivalent under precomposition give isomorphic products."""
    rec = _Recorder()
    for m in range(1, max_m + 1):
        k = cyclic(m)
        for n in range(1, max_n + 1):
            h = cyclic(n, "s")
            ok, detail = True, "all classes uniform"
            for cls in action_classes(h, k, aut_cap=aut_cap):
                builds = [semidirect(k, h, a) for a in cls]
                for other in builds[1:]:
                    if are_isomorphic(builds[0], other) is None:
                        ok, detail = False, "class with non-isomorphic members"
            rec.add(f"thm6.6.m={m}.n={n}", "all classes uniform", detail)
    return rec.reports


def _coprime_pairs(max_order: int):
    for m in range(2, max_order // 2 + 1):
        for n in range(2, max_order // m + 1):
            if gcd(m, n) == 1:
                yield m, n


def _k_copy(g: GroupTable, k_order: int, h_order: int) -> SubgroupRef:
    return SubgroupRef(g, tuple(kk * h_order for kk in range(k_order)))


def check_characteristic_theorems(max_order: int = 60,
                                  aut_cap: int = 10_000) -> list[VerifyReport]:
    """Coprime-order structure and lift criteria.

    Over all coprime cyclic pairs with m*n <= max_order and every action:
    the K-copy is characteristic, |Aut(Z_m x Z_n)| factors as
    phi(m)*phi(n), central-image zeta lifts verify, and psi-fixing lambda
    lifts verify. A small battery extends the characteristic/factorization
    claims to non-cyclic coprime products and checks the biconditional
    (factorization iff both copies characteristic) including its failing
    direction on Z4 x Z2.
    """
    rec = _Recorder()
    for m, n in _coprime_pairs(max_order):
        k = cyclic(m)
        h = cyclic(n, "s")
        acts = actions(h, k, aut_cap=aut_cap)
        ok = True
        for a in acts:
            g = semidirect(k, h, a)
            if not is_characteristic(g, _k_copy(g, m, n), cap=aut_cap):
                ok = False
        rec.add(f"thm6.4.m={m}.n={n}", f"Z{m}-copy characteristic in all {len(acts)} products",
                f"Z{m}-copy characteristic in all {len(acts)} products" if ok
                else "not characteristic somewhere")
        got = len(automorphisms(direct_product(k, h), cap=aut_cap))
        rec.add(f"prop5.3.m={m}.n={n}", euler_phi(m) * euler_phi(n), got)

        aut_k = aut_group(k, cap=aut_cap)
        aut_h = aut_group(h, cap=aut_cap)
        zeta_ok = lambda_ok = True
        for a in acts:
            g = semidirect(k, h, a)
            # Aut of a cyclic group is abelian, so the image of any action
            # is central and every zeta lift must verify
            for omega in aut_k.elements:
                if not zeta_lift(omega, a, g)[1]:
                    zeta_ok = False
            psi_images = [mm.image for mm in a.maps]
            for delta in aut_h.elements:
                fixes = all(psi_images[delta.image[x]] == psi_images[x] for x in range(n))
                if fixes and not lambda_lift(delta, a, g)[1]:
                    lambda_ok = False
        rec.add(f"thm6.2.m={m}.n={n}", "central image lifts all omega",
                "central image lifts all omega" if zeta_ok else "zeta verdict false")
        rec.add(f"thm6.3.m={m}.n={n}", "psi-fixing delta always lifts",
                "psi-fixing delta always lifts" if lambda_ok else "lambda verdict false")

    # general (non-cyclic) coprime factors: characteristic K-copy and
    # |Aut(K x H)| = |Aut K| * |Aut H|
    for kn, k, hn, h in (("D3", dihedral(3), "Z5", cyclic(5, "t")),
                         ("D4", dihedral(4), "Z3", cyclic(3, "t"))):
        g = direct_product(k, h)
        char_ok = is_characteristic(g, _k_copy(g, k.order, h.order), cap=aut_cap)
        rec.add(f"thm6.5.{kn}x{hn}", f"{kn}-copy characteristic",
                f"{kn}-copy characteristic" if char_ok else "not characteristic")
        expected = len(automorphisms(k, cap=aut_cap)) * len(automorphisms(h, cap=aut_cap))
        rec.add(f"prop5.4.{kn}x{hn}", expected, len(automorphisms(g, cap=aut_cap)))

    battery = (
        ("Z2", cyclic(2), "Z2b", cyclic(2, "s")),
        ("Z4", cyclic(4), "Z2", cyclic(2, "s")),
        ("Z2", cyclic(2), "Z4", cyclic(4, "s")),
        ("Z3", cyclic(3), "Z3b", cyclic(3, "s")),
        ("Z3", cyclic(3), "Z4", cyclic(4, "s")),
        ("Z2", cyclic(2), "Z3", cyclic(3, "s")),
        ("D3", dihedral(3), "Z2", cyclic(2, "t")),
        ("D4", dihedral(4), "Z3", cyclic(3, "t")),
        ("Z5", cyclic(5), "Z4", cyclic(4, "s")),
    )
    for kn, k, hn, h in battery:
        g = direct_product(k, h)
        kc = _k_copy(g, k.order, h.order)
        hc = SubgroupRef(g, tuple(range(h.order)))
        product_count = len(automorphisms(g, cap=aut_cap))
        factor_count = len(automorphisms(k, cap=aut_cap)) * len(automorphisms(h, cap=aut_cap))
        both_char = (is_characteristic(g, kc, cap=aut_cap)
                     and is_characteristic(g, hc, cap=aut_cap))
        agree = (product_count == factor_count) == both_char
        rec.add(f"cor5.2.{kn}x{hn}",
                "order factorization iff both copies characteristic",
                "order factorization iff both copies characteristic" if agree
                else f"|Aut(KxH)|={product_count}, |AutK||AutH|={factor_count}, "
                     f"both characteristic={both_char}")
    return rec.reports


def _negative_control_reports() -> list[VerifyReport]:
    """Deliberately broken claims; these must FAIL, proving detection works."""
    rec = _Recorder()
    broken = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]]
    broken[1][1] = 1  # corrupt one cell of the Z4 table
    verdict = verify_group_axioms(broken)
    rec.add("negative-control.corrupt-table", "table passes group axioms",
            "table passes group axioms" if verdict.ok
            else f"axiom {verdict.axiom} violated at witness {verdict.witness}")
    wrong = euler_phi(6) + 1  # deliberately wrong expected count
    got = len(automorphisms(cyclic(6)))
    rec.add("negative-control.wrong-formula", wrong, got)
    return rec.reports


def run_all(config: VerifyConfig = VerifyConfig()) -> tuple[list[VerifyReport], RunSummary]:
    t0 = time.perf_counter()
    reports: list[VerifyReport] = []
    reports += check_table1(config.table1_max_n, config.aut_cap)
    reports += check_aut_zn_mod4_structure(config.mod4_values, config.aut_cap)
    reports += check_prime_power_aut(config.prime_powers, config.aut_cap)
    reports += check_elementary_abelian_aut(config.elementary_abelian, config.aut_cap)
    reports += check_dihedral_aut(config.dihedral_max_n, config.aut_cap)
    reports += check_z8_case_study(config.aut_cap)
    reports += check_action_equivalence(config.action_equiv_max_m,
                                        config.action_equiv_max_n, config.aut_cap)
    reports += check_characteristic_theorems(config.characteristic_max_order, config.aut_cap)
    if config.negative_control:
        reports += _negative_control_reports()
    summary = RunSummary(elapsed_ms=(time.perf_counter() - t0) * 1000.0)
    for r in reports:
        if r.status == "pass":
            summary.passed += 1
        elif r.status == "fail":
            summary.failed += 1
        else:
            summary.skipped += 1
    return reports, summary
