"""Ground-up verification of the frozen decorations against the live engines.

Every class of the two exceptional posets carries a frozen decoration:
"rigid", "plus" (Bertini-movable), "star" (cone-movable) or "T"
(transform-movable).  Verification rebuilds the posets, runs every witness
engine from scratch, and holds the decorations to the following rules:

* a rigid class must collect no certificate at all;
* a non-rigid class must collect at least one;
* "plus" needs a Bertini certificate, "star" a Cone certificate, "T" a
  Tits certificate, each possibly among others.

The 56-class run leans on the 27-class decorations twice (the cone gate and
the interval gate), so it verifies those first and reports loudly when they
cannot be trusted.  The transform-table check replays every frozen row
through the live sweep.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import weyl
from .classical import fingerprint_to_og
from .golden import (
    GoldenPoset,
    load_golden_poset,
    load_transform_table,
    node_token,
    resolve_token,
    check_against,
)
from .poset import QuotientPoset, build_quotient_poset
from .rigidity import classify_og
from .tits import (
    TitsContext,
    injectivity_check,
    make_context,
    tits_flexibility_witness,
    transform,
)
from .witnesses import (
    Witness,
    basic_witness_homes,
    bertini_witness,
    cone_embedding,
    divisor_witness,
    interval_isomorphism,
    linear_space_witness,
)


@dataclass
class VerifyReport:
    target: str
    rows: list[dict] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "ok": self.ok,
            "summary": self.summary,
            "rows": self.rows,
            "problems": self.problems,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"verify {self.target}"]
        for row in self.rows:
            if "decoration" in row:
                certs = ",".join(row["certificates"]) or "-"
                lines.append(
                    f"  {row['node']}  {row['token']:>9s}  {row['decoration']:<5s}  "
                    f"certs={certs}"
                )
            else:
                flag = "ok" if row["ok"] else "MISMATCH"
                lines.append(
                    f"  {row['y']:>7s} -> {row['t']:>9s}  "
                    f"stars={'*' if row['y_star'] else '.'}{'*' if row['t_star'] else '.'}  "
                    f"{flag}"
                )
        for key, val in sorted(self.summary.items()):
            lines.append(f"  {key}: {val}")
        for p in self.problems:
            lines.append(f"  VIOLATION: {p}")
        lines.append(f"RESULT {self.target}: {'OK' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _basic_certificates(poset: QuotientPoset) -> dict[str, list[Witness]]:
    certs: dict[str, list[Witness]] = {n.id: [] for n in poset.nodes}
    for node in poset.nodes:
        for engine in (linear_space_witness, bertini_witness, divisor_witness):
            w = engine(poset, node)
            if w is not None:
                certs[node.id].append(w)
    return certs


def _add(certs: dict[str, list[Witness]], node_id: str, w: Witness) -> None:
    certs.setdefault(node_id, []).append(w)


def _cone_certificates(
    certs: dict[str, list[Witness]],
    problems: list[str],
    ambient: QuotientPoset,
    sub: QuotientPoset,
    apex_ref,
    base_is_flexible,
    base_name: str,
) -> None:
    apex = ambient.node(apex_ref)
    phi = cone_embedding(sub, ambient, apex)
    if phi is None:
        problems.append(
            f"no cone embedding of {base_name} under the apex {apex.id}"
        )
        return
    for s in sub.nodes:
        if not base_is_flexible(s):
            continue
        _add(
            certs,
            phi[s.id],
            Witness(
                "Cone",
                {
                    "node": phi[s.id],
                    "apex": apex.id,
                    "base": s.id,
                    "base_poset": base_name,
                    "representative": (
                        "cone, with the apex vertex, over an irreducible "
                        "representative of the base class"
                    ),
                },
            ),
        )


def _tits_certificates(
    certs: dict[str, list[Witness]], ctx: TitsContext, oracle
) -> None:
    for node in ctx.p_poset.nodes:
        w = tits_flexibility_witness(ctx, node, oracle)
        if w is not None:
            _add(certs, node.id, w)


def depth2_oracle(rev: TitsContext):
    """Vouch covers transported from a cominuscule quotient one step away.

    For a source class S of the middle quotient, find the cominuscule classes
    x sweeping onto S; each hypersurface-style home x' of x whose own sweep
    is dimension-faithful transports the moved representative into the sweep
    of x', which the top-level engine then requires to be a cover of S with a
    dimension-faithful transform of its own.
    """
    base = rev.q_poset

    def oracle(src):
        homes = []
        for x in base.nodes:
            if transform(rev, x).id != src.id:
                continue
            for xp in basic_witness_homes(base, x):
                if injectivity_check(rev, xp):
                    homes.append(transform(rev, xp))
        return homes

    return oracle


def interval_oracle(ctx: TitsContext, psi: dict[str, str], flexible_sub_ids):
    """Vouch interval covers for sources whose counterpart class is movable.

    ``psi`` maps sub-poset ids onto the interval inside ctx.q_poset; a source
    in the image is vouched when its counterpart is not rigid, and its homes
    are its covers inside the interval (the moved representative lives in the
    interval subvariety, so only those covers contain it).
    """
    interval_ids = set(psi.values())
    counterpart = {v: k for k, v in psi.items()}

    def oracle(src):
        if src.id not in interval_ids:
            return []
        if counterpart[src.id] not in flexible_sub_ids:
            return []
        return [c for c in ctx.q_poset.upper_covers(src) if c.id in interval_ids]

    return oracle


def _apply_rules(
    report: VerifyReport,
    golden: GoldenPoset,
    poset: QuotientPoset,
    certs: dict[str, list[Witness]],
) -> None:
    counts = {"rigid": 0, "plus": 0, "star": 0, "T": 0}
    for node in poset.nodes:
        deco = golden.decoration(node.id)
        counts[deco] += 1
        witnesses = certs.get(node.id, [])
        kinds = sorted({w.kind for w in witnesses})
        token = node_token(poset, node)
        report.rows.append(
            {
                "node": node.id,
                "token": token,
                "dim": node.dim,
                "degree": node.degree,
                "decoration": deco,
                "certificates": kinds,
                "details": [dict(kind=w.kind, **w.payload) for w in witnesses],
            }
        )
        if deco == "rigid":
            if kinds:
                report.problems.append(
                    f"{token} is decorated rigid but holds certificates {kinds}"
                )
        elif not kinds:
            report.problems.append(
                f"{token} is decorated {deco} but no engine certifies it"
            )
        elif deco == "plus" and "Bertini" not in kinds:
            report.problems.append(f"{token} is decorated plus without a Bertini certificate")
        elif deco == "star" and "Cone" not in kinds:
            report.problems.append(f"{token} is decorated star without a Cone certificate")
        elif deco == "T" and "Tits" not in kinds:
            report.problems.append(f"{token} is decorated T without a Tits certificate")
    report.summary["classes"] = len(poset.nodes)
    report.summary.update(counts)


def verify_e6(golden_dir=None) -> VerifyReport:
    """Check the 27-class decorations with every engine rebuilt from scratch."""
    report = VerifyReport("e6")
    datum = weyl.build_cartan("E", 6)
    e6p6 = build_quotient_poset(datum, {6})
    golden = load_golden_poset("e6", golden_dir)
    check_against(golden, e6p6)

    certs = _basic_certificates(e6p6)

    og510 = build_quotient_poset(weyl.build_cartan("D", 5), {5})
    _cone_certificates(
        certs,
        report.problems,
        e6p6,
        og510,
        resolve_token(e6p6, "11:12"),
        lambda s: not classify_og(fingerprint_to_og(5, s.fingerprint)).rigid,
        "the 10-dimensional spinor quotient",
    )

    e6p1 = build_quotient_poset(datum, {1})
    ctx61 = make_context(datum, {6}, {1}, p_poset=e6p6, q_poset=e6p1)
    _tits_certificates(certs, ctx61, lambda src: basic_witness_homes(e6p1, src))

    e6p5 = build_quotient_poset(datum, {5})
    ctx65 = make_context(datum, {6}, {5}, p_poset=e6p6, q_poset=e6p5)
    rev56 = make_context(datum, {5}, {6}, p_poset=e6p5, q_poset=e6p6)
    _tits_certificates(certs, ctx65, depth2_oracle(rev56))

    _apply_rules(report, golden, e6p6, certs)
    return report


def verify_e7(golden_dir=None, e6_report: VerifyReport | None = None) -> VerifyReport:
    """Check the 56-class decorations; trusts the 27-class report it verifies."""
    report = VerifyReport("e7")
    if e6_report is None:
        e6_report = verify_e6(golden_dir)
    if not e6_report.ok:
        report.problems.append(
            "the 27-class decorations failed verification and cannot gate "
            "the cone and interval certificates here"
        )

    datum = weyl.build_cartan("E", 7)
    e7p7 = build_quotient_poset(datum, {7})
    golden7 = load_golden_poset("e7", golden_dir)
    check_against(golden7, e7p7)
    golden6 = load_golden_poset("e6", golden_dir)

    certs = _basic_certificates(e7p7)

    e6p6 = build_quotient_poset(weyl.build_cartan("E", 6), {6})
    flexible6 = {
        n.id for n in e6p6.nodes if golden6.decoration(n.id) != "rigid"
    }
    _cone_certificates(
        certs,
        report.problems,
        e7p7,
        e6p6,
        resolve_token(e7p7, "17:78"),
        lambda s: s.id in flexible6,
        "the 16-dimensional 27-class quotient",
    )

    e7p1 = build_quotient_poset(datum, {1})
    ctx71 = make_context(datum, {7}, {1}, p_poset=e7p7, q_poset=e7p1)
    ctx17 = make_context(datum, {1}, {7}, p_poset=e7p1, q_poset=e7p7)
    apex = transform(ctx17, e7p7.bottom())
    psi = interval_isomorphism(e6p6, e7p1, apex)
    if psi is None:
        report.problems.append(
            f"no graded copy of the 27-class poset under the interval apex {apex.id}"
        )
    else:
        _tits_certificates(certs, ctx71, interval_oracle(ctx71, psi, flexible6))

    e7p6 = build_quotient_poset(datum, {6})
    ctx76 = make_context(datum, {7}, {6}, p_poset=e7p7, q_poset=e7p6)
    rev67 = make_context(datum, {6}, {7}, p_poset=e7p6, q_poset=e7p7)
    _tits_certificates(certs, ctx76, depth2_oracle(rev67))

    _apply_rules(report, golden7, e7p7, certs)
    return report


def verify_table1(golden_dir=None) -> VerifyReport:
    """Replay the frozen transform table through the live sweep."""
    report = VerifyReport("table1")
    e6 = weyl.build_cartan("E", 6)
    e7 = weyl.build_cartan("E", 7)
    e6p6 = build_quotient_poset(e6, {6})
    e7p7 = build_quotient_poset(e7, {7})
    e7p1 = build_quotient_poset(e7, {1})
    golden6 = load_golden_poset("e6", golden_dir)
    golden7 = load_golden_poset("e7", golden_dir)
    check_against(golden6, e6p6)
    check_against(golden7, e7p7)

    ctx71 = make_context(e7, {7}, {1}, p_poset=e7p7, q_poset=e7p1)
    ctx17 = make_context(e7, {1}, {7}, p_poset=e7p1, q_poset=e7p7)
    apex = transform(ctx17, e7p7.bottom())
    psi = interval_isomorphism(e6p6, e7p1, apex)
    if psi is None:
        report.problems.append(
            f"no graded copy of the 27-class poset under the interval apex {apex.id}"
        )
        return report

    rows = load_transform_table(golden_dir)
    targets = set()
    for r in rows:
        y = resolve_token(e6p6, r.y_token)
        src = e7p1.node(psi[y.id])
        dst = transform(ctx71, src)
        t = resolve_token(e7p7, r.t_token)
        injective = injectivity_check(ctx71, src)
        y_star_live = golden6.decoration(y.id) == "rigid"
        t_star_live = golden7.decoration(t.id) == "rigid"
        ok = True
        if dst.id != t.id:
            report.problems.append(
                f"row {r.y_token}: live sweep lands on {node_token(e7p7, dst)}, "
                f"table says {r.t_token}"
            )
            ok = False
        if not injective:
            report.problems.append(f"row {r.y_token}: sweep is not dimension-faithful")
            ok = False
        if r.y_star != y_star_live or r.t_star != t_star_live:
            report.problems.append(
                f"row {r.y_token}: star marks {r.y_star}/{r.t_star} disagree with "
                f"decorations {y_star_live}/{t_star_live}"
            )
            ok = False
        targets.add(dst.id)
        report.rows.append(
            {
                "y": r.y_token,
                "t": r.t_token,
                "y_star": r.y_star,
                "t_star": r.t_star,
                "src": src.id,
                "dst": dst.id,
                "injective": injective,
                "ok": ok,
            }
        )
    if len(targets) != len(rows):
        report.problems.append("the frozen table is not injective on targets")
    report.summary["rows"] = len(rows)
    report.summary["distinct_targets"] = len(targets)
    return report


def verify_all(golden_dir=None) -> list[VerifyReport]:
    e6_report = verify_e6(golden_dir)
    return [
        e6_report,
        verify_e7(golden_dir, e6_report=e6_report),
        verify_table1(golden_dir),
    ]
