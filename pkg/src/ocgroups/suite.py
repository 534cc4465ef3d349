"""Verification campaigns over a finite catalog of groups.

A passing campaign is evidence gathered at desk scale, not a proof: every
report carries the scope label ``desk-scale verification``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import analysis as an
from . import constructions as cons
from .chartable import dixon_character_table, rationality_counts
from .permgroup import PermGroup
from .subgroups import subgroup_lattice

SCOPE = "desk-scale verification"


@dataclass
class CatalogEntry:
    label: str
    group: PermGroup
    scan_class: int | None = None  # conjugacy class of subgroups, scan entries only
    is_class_rep: bool = True


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)
    scan_degree: int | None = None

    def __post_init__(self):
        labels = [e.label for e in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("catalog labels must be unique")

    def add(self, label: str, G: PermGroup, **kw) -> None:
        if any(e.label == label for e in self.entries):
            raise ValueError(f"duplicate catalog label {label!r}")
        self.entries.append(CatalogEntry(label, G, **kw))

    def select(self, representatives_only: bool = False, max_order: int | None = None):
        for e in self.entries:
            if representatives_only and not e.is_class_rep:
                continue
            if max_order is not None and e.group.order() > max_order:
                continue
            yield e

    def __len__(self):
        return len(self.entries)


@dataclass
class Verdict:
    label: str
    order: int
    passed: bool
    note: str = ""


@dataclass
class VerificationReport:
    campaign: str
    verdicts: list[Verdict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    scope: str = SCOPE
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, label: str, G: PermGroup, ok: bool, note: str = "") -> None:
        self.verdicts.append(Verdict(label, G.order(), ok, note))
        if not ok:
            self.counterexamples.append({
                "label": label,
                "reason": note,
                "report": an.group_report(G, label).to_dict(),
            })

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        """A named yes/no check without a group attached."""
        self.checks[name] = ok
        self.details[name] = detail
        if not ok:
            self.counterexamples.append({"label": name, "reason": detail})

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        n = len(self.verdicts) + len(self.checks)
        return (f"{self.campaign}: {status} ({n} checked, "
                f"{len(self.counterexamples)} counterexamples, {SCOPE})")


def _timed(report: VerificationReport, start: float) -> VerificationReport:
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


# -- catalog ----------------------------------------------------------------

def named_groups() -> list[tuple[str, PermGroup]]:
    """Named constructions, including deliberate non-examples."""
    q8 = cons.generalized_quaternion(8)
    return [
        ("C1", cons.cyclic(1)),
        ("C2", cons.cyclic(2)),
        ("C3", cons.cyclic(3)),
        ("C12", cons.cyclic(12)),
        ("S3", cons.symmetric(3)),
        ("S5", cons.symmetric(5)),
        ("A5", cons.alternating(5)),
        ("A6", cons.alternating(6)),
        ("Q8", q8),
        ("D8", cons.dihedral(4)),
        ("SD16", cons.semidihedral(16)),
        ("Q16", cons.generalized_quaternion(16)),
        ("GL(2,3)", cons.gl23()),
        ("SL(2,5)", cons.sl25()),
        ("W", cons.frobenius_W()),
        ("L3(4)", cons.psl_3_4()),
        ("L3(4).beta", cons.l3_4_beta()),
        ("Q8xC3", cons.direct_product(q8, cons.cyclic(3))),
        ("S3xC2", cons.direct_product(cons.symmetric(3), cons.cyclic(2))),
        ("D8xC2", cons.direct_product(cons.dihedral(4), cons.cyclic(2))),
        ("Q8xQ8", cons.direct_product(q8, q8)),
    ]


def scan_catalog(degree: int) -> Catalog:
    """Every subgroup of S_degree, labelled by position in (order, class) order."""
    lat = subgroup_lattice(cons.symmetric(degree))
    cat = Catalog(scan_degree=degree)
    for pos, sid in enumerate(lat.sorted_ids()):
        cid = lat.class_of[sid]
        cat.add(f"S{degree}:{pos:04d}", lat.group(sid), scan_class=cid,
                is_class_rep=lat.classes[cid][0] == sid)
    return cat


def default_catalog(scan_degree: int | None = 6, extra=(), named: bool = True) -> Catalog:
    cat = scan_catalog(scan_degree) if scan_degree else Catalog()
    if named:
        for label, G in named_groups():
            cat.add(label, G)
    for label, G in extra:
        cat.add(label, G)
    return cat


# -- campaigns --------------------------------------------------------------

def run_theorem_a(catalog: Catalog, representatives_only: bool = False) -> VerificationReport:
    """Every OC-group in the catalog is abelian or isomorphic to S_3."""
    start = time.perf_counter()
    rep = VerificationReport("theorem-a")
    s3 = cons.symmetric(3)
    for e in catalog.select(representatives_only):
        G = e.group
        if not an.is_oc_group(G):
            rep.record(e.label, G, True, "not OC")
        elif G.is_abelian():
            rep.record(e.label, G, True, "OC, abelian")
        elif G.order() == 6 and an.are_isomorphic(G, s3):
            rep.record(e.label, G, True, "OC, isomorphic to S3")
        else:
            rep.record(e.label, G, False, "non-abelian OC-group not isomorphic to S3")
    return _timed(rep, start)


def run_syskin(catalog: Catalog, representatives_only: bool = False) -> VerificationReport:
    """Every group with all equal-order elements conjugate is 1, C_2 or S_3."""
    start = time.perf_counter()
    rep = VerificationReport("syskin")
    targets = {1: cons.cyclic(1), 2: cons.cyclic(2), 6: cons.symmetric(3)}
    for e in catalog.select(representatives_only):
        G = e.group
        if not an.all_order_conjugacy(G):
            rep.record(e.label, G, True, "excluded")
            continue
        T = targets.get(G.order())
        ok = T is not None and (G.order() == 1 or an.are_isomorphic(G, T))
        rep.record(e.label, G, ok, "isomorphic to 1, C2 or S3" if ok
                   else "all-order-conjugate group outside {1, C2, S3}")
    return _timed(rep, start)


def _power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def run_lemma_2_5(catalog: Catalog, representatives_only: bool = False) -> VerificationReport:
    """G/Z(G) is never generalized quaternion."""
    start = time.perf_counter()
    rep = VerificationReport("lemma-2-5")
    for e in catalog.select(representatives_only):
        G = e.group
        Z = an.center(G)
        qo = G.order() // Z.order()
        if not (_power_of_two(qo) and qo >= 8):
            rep.record(e.label, G, True, f"|G/Z| = {qo}")
            continue
        Q = an.quotient(G, Z)
        bad = an.are_isomorphic(Q, cons.generalized_quaternion(qo))
        rep.record(e.label, G, not bad,
                   f"G/Z generalized quaternion of order {qo}" if bad else f"|G/Z| = {qo}")
    return _timed(rep, start)


def _theorem_b_predicates(G: PermGroup) -> dict[str, bool]:
    return {
        "rational": an.is_rational_group(G),
        "odd_order_conjugate": an.odd_order_conjugacy(G),
        "O2_trivial": an.p_core(G, 2).is_trivial(),
    }


def theorem_b_targets() -> list[tuple[str, PermGroup]]:
    return [("S3", cons.symmetric(3)), ("S5", cons.symmetric(5)),
            ("W", cons.frobenius_W()), ("L3(4).beta", cons.l3_4_beta())]


def negative_controls() -> list[tuple[str, PermGroup]]:
    return [("A5", cons.alternating(5)), ("GL(2,3)", cons.gl23()),
            ("SD16", cons.semidihedral(16))]


def frobenius_structure() -> dict[str, bool]:
    """W = E9 : Q8 with the complement acting fixed-point-freely on the kernel."""
    W, K, H = cons.frobenius_parts()
    k_elems = [k for k in K.elements() if not k.is_identity()]
    return {
        "kernel order 9": K.order() == 9,
        "kernel elementary abelian": K.is_abelian() and an.exponent(K) == 3,
        "kernel normal": K.is_normal_in(W),
        "complement is Q8": an.are_isomorphic(H, cons.generalized_quaternion(8)),
        "complement meets kernel trivially": not (set(k_elems) & H.element_set()),
        "fixed-point-free": all(k.conj(h) != k for h in H.elements() if not h.is_identity()
                                for k in k_elems),
        "order 72": W.order() == K.order() * H.order() == 72,
    }


def run_theorem_b_targets() -> VerificationReport:
    start = time.perf_counter()
    rep = VerificationReport("theorem-b")
    for label, G in theorem_b_targets():
        preds = _theorem_b_predicates(G)
        failed = [k for k, v in preds.items() if not v]
        rep.record(label, G, not failed, "failed: " + ", ".join(failed) if failed else "all hold")
    for name, ok in frobenius_structure().items():
        rep.check(f"W {name}", ok)
    for label, G in negative_controls():
        preds = _theorem_b_predicates(G)
        failed = [k for k, v in preds.items() if not v]
        # a control that satisfies everything means the predicates are broken
        rep.record(f"control {label}", G, bool(failed),
                   "fails " + ", ".join(failed) if failed else "negative control passed all predicates")
    return _timed(rep, start)


def quotient_closure_check(G: PermGroup, label: str = "G") -> VerificationReport:
    """Rationality plus odd-order conjugacy passes to every quotient G/N."""
    start = time.perf_counter()
    rep = VerificationReport("quotient-closure")
    if not (an.is_rational_group(G) and an.odd_order_conjugacy(G)):
        rep.record(label, G, True, "hypotheses fail, vacuous")
        return _timed(rep, start)
    for i, N in enumerate(an.normal_subgroups(G)):
        Q = an.quotient(G, N)
        ok = an.is_rational_group(Q) and an.odd_order_conjugacy(Q)
        rep.record(f"{label}/N{i}[{N.order()}]", Q, ok,
                   f"|G/N| = {Q.order()}" if ok else "quotient loses a property")
    return _timed(rep, start)


def run_quotient_closure(groups=None) -> VerificationReport:
    start = time.perf_counter()
    if groups is None:
        groups = [("C1", cons.cyclic(1)), ("S3", cons.symmetric(3)),
                  ("S5", cons.symmetric(5)), ("W", cons.frobenius_W())]
    rep = VerificationReport("quotient-closure")
    for label, G in groups:
        sub = quotient_closure_check(G, label)
        rep.verdicts.extend(sub.verdicts)
        rep.counterexamples.extend(sub.counterexamples)
    return _timed(rep, start)


def order4_class_split(G: PermGroup, inner: PermGroup) -> tuple[int, int]:
    """(order-4 classes of G, those lying inside the subgroup ``inner``)."""
    classes = an.conjugacy_classes(G)
    fours = [c for c in classes if c.rep_order == 4]
    return len(fours), sum(inner.contains(c.representative) for c in fours)


def _prime_factors(n: int) -> set[int]:
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def paper_fact_suite(scan_degree: int = 6) -> VerificationReport:
    """Nine spot facts, each an individually named check."""
    start = time.perf_counter()
    rep = VerificationReport("paper-facts")

    a6 = cons.alternating(6)
    n = an.classes_of_order(a6, 3)
    rep.check("(1) A6 has two classes of order 3", n == 2, f"A6: {n}")

    s7 = cons.symmetric(7)
    n = an.classes_of_order(s7, 3)
    rep.check("(2) S7 has at least two classes of order 3", n >= 2, f"S7: {n}")

    gl = cons.gl23()
    sd = cons.semidihedral(16)
    syl = an.sylow_subgroup(gl, 2)
    iso = an.are_isomorphic(syl, sd)
    sd_rat = an.is_rational_group(sd)
    rep.check("(3) Sylow 2-subgroup of GL(2,3) is SD16, not rational", iso and not sd_rat,
              f"isomorphic={iso}, SD16 rational={sd_rat}")

    rep.check("(4) GL(2,3) is not rational", not an.is_rational_group(gl))
    rep.check("(5) Q8 is rational", an.is_rational_group(cons.generalized_quaternion(8)))

    w4 = an.classes_of_order(cons.frobenius_W(), 4)
    L = cons.l3_4_beta()
    l4, l4_inner = order4_class_split(L, cons.psl_3_4_point_line())
    rep.check("(6) W and L3(4).beta each have three classes of order 4",
              w4 == 3 and l4 == 3,
              f"W: {w4}; L3(4).beta: {l4} ({l4_inner} inside L3(4), {l4 - l4_inner} outer)")

    s5 = cons.symmetric(5)
    n = an.classes_of_order(s5, 2)
    rep.check("(7) S5 has two classes of involutions", n == 2, f"S5: {n}")

    a5_rat = an.is_rational_group(cons.alternating(5))
    a6_rat = an.is_rational_group(a6)
    rep.check("(8) A5 and A6 are not rational", not a5_rat and not a6_rat,
              f"A5 rational={a5_rat}, A6 rational={a6_rat}")

    bad = []
    found = 0
    for e in scan_catalog(scan_degree).select(representatives_only=True):
        G = e.group
        if an.is_solvable(G) and an.is_rational_group(G):
            found += 1
            if not _prime_factors(G.order()) <= {2, 3, 5}:
                bad.append(e.label)
    rep.check(f"(9) solvable rational subgroups of S{scan_degree} are {{2,3,5}}-groups",
              not bad, f"{found} solvable rational classes" + (f"; bad: {bad}" if bad else ""))
    return _timed(rep, start)


def run_character_oracle(catalog: Catalog, max_order: int = 500,
                         representatives_only: bool = False) -> VerificationReport:
    """Power-map rationality against the exact character table."""
    start = time.perf_counter()
    rep = VerificationReport("character-oracle")
    for e in catalog.select(representatives_only, max_order):
        G = e.group
        T = dixon_character_table(G)
        chars, classes = rationality_counts(T, G)
        problems = []
        if an.is_rational_group(G) != all(T.rational_rows()):
            problems.append("rationality predicates disagree")
        if chars != classes:
            problems.append(f"{chars} rational characters vs {classes} rational classes")
        if not T.row_orthogonality():
            problems.append("row orthogonality")
        if not T.column_orthogonality():
            problems.append("column orthogonality")
        rep.record(e.label, G, not problems, "; ".join(problems) or f"{len(T.rows)} characters")
    return _timed(rep, start)


def run_class_equation(catalog: Catalog) -> VerificationReport:
    start = time.perf_counter()
    rep = VerificationReport("class-equation")
    parent = cons.symmetric(catalog.scan_degree).order() if catalog.scan_degree else None
    for e in catalog.select():
        G = e.group
        n = G.order()
        sizes = [c.size for c in an.conjugacy_classes(G)]
        ok = sum(sizes) == n and all(n % s == 0 for s in sizes)
        if e.scan_class is not None:
            ok = ok and parent % n == 0
        rep.record(e.label, G, ok, "" if ok else "class sizes do not add up")
    return _timed(rep, start)


def predicate_profile(G: PermGroup) -> tuple:
    return (an.is_oc_group(G), G.is_abelian(), an.all_order_conjugacy(G),
            an.is_rational_group(G), an.odd_order_conjugacy(G))


def scan_consistency(degree: int = 4) -> VerificationReport:
    """Restricting a scan to class representatives loses nothing."""
    start = time.perf_counter()
    rep = VerificationReport("scan-consistency")
    cat = scan_catalog(degree)
    rep_profile = {e.scan_class: predicate_profile(e.group)
                   for e in cat.select(representatives_only=True)}
    for e in cat.select():
        ok = predicate_profile(e.group) == rep_profile[e.scan_class]
        rep.record(e.label, e.group, ok, "" if ok else "differs from its class representative")
    for run in (run_theorem_a, run_syskin, run_lemma_2_5):
        full = run(cat).passed
        reps = run(cat, representatives_only=True).passed
        rep.check(f"{run.__name__} agrees on representatives", full == reps)
    return _timed(rep, start)


CAMPAIGNS = ("theorem-a", "theorem-b", "syskin", "lemma-2-5", "lemma-2-4",
             "quotient-closure", "paper-facts", "character-oracle")
