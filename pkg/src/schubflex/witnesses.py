"""Constructive flexibility witnesses.

Each engine either returns a Witness (a construction of irreducible
representatives for every positive multiple m of the class, described by a
JSON-able payload) or None when the construction does not apply.  The engines
are deliberately independent of the classifiers in rigidity.py: the
acceptance suite checks the dichotomy "multi-rigid or witnessed" by running
both sides separately.

Poset-based engines (on a minuscule quotient poset):

* linear_space_witness: a degree-1 class covered by another degree-1 class
  is a non-maximal linear space; m*sigma is a degree-m hypersurface inside
  the covering linear space.
* bertini_witness: a class that is the unique co-atom of a cover with the
  same degree is the hyperplane-section class of that cover; m*sigma is a
  general degree-m hypersurface section, irreducible by Bertini once the
  cover is a surface or bigger.
* divisor_witness: the codimension-1 class generates the Picard lattice;
  m*sigma is a general degree-m divisor.

Index-based engines: moduli_witness_gr / moduli_witness_isotropic /
quadric_witness implement the explicit flag constructions for the three
classical families.  cone_embedding finds the graded embedding of a smaller
cominuscule poset under a cone apex, used to transport witnesses into the
exceptional posets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classical import GrIndex, IsotropicIndex, QuadricIndex, ann_index, grouped
from .poset import QuotientPoset, interval_chain_counts
from .rigidity import classify_gr, classify_lg, classify_og, classify_quadric


@dataclass
class Witness:
    kind: str
    payload: dict

    def __str__(self) -> str:
        return f"{self.kind}{self.payload}"


def linear_space_witness(poset: QuotientPoset, ref) -> Witness | None:
    node = poset.node(ref)
    if node.degree != 1 or node.dim < 1:
        return None
    bigger = [c for c in poset.upper_covers(node) if c.degree == 1]
    if not bigger:
        return None  # maximal linear space: no ambient linear space to cut in
    return Witness(
        "Linear",
        {
            "node": node.id,
            "ambient": bigger[0].id,
            "representative": "smooth degree-m hypersurface inside the covering linear space",
        },
    )


def bertini_witness(poset: QuotientPoset, ref) -> Witness | None:
    node = poset.node(ref)
    if node.dim < 1 or node.degree is None:
        return None
    for cover in poset.upper_covers(node):
        if cover.degree == node.degree and len(poset.lower_covers(cover)) == 1:
            return Witness(
                "Bertini",
                {
                    "node": node.id,
                    "sweep": cover.id,
                    "representative": "general degree-m hypersurface section of the cover",
                },
            )
    return None


def basic_witness_homes(poset: QuotientPoset, ref) -> list:
    """Covers that contain a movable representative of the class below them.

    For a degree-1 class, every degree-1 cover hosts degree-m hypersurface
    representatives; for a unique-co-atom equal-degree cover, Bertini
    sections do the job.  Either way the representative passes through a
    general point of the returned cover, which is exactly what the sweep
    transform needs.
    """
    node = poset.node(ref)
    if node.dim < 1 or node.degree is None:
        return []
    homes = []
    for cover in poset.upper_covers(node):
        if node.degree == 1 and cover.degree == 1:
            homes.append(cover)
        elif cover.degree == node.degree and len(poset.lower_covers(cover)) == 1:
            homes.append(cover)
    return homes


def divisor_witness(poset: QuotientPoset, ref) -> Witness | None:
    node = poset.node(ref)
    if poset.dimension < 2 or node.dim != poset.dimension - 1:
        return None
    return Witness(
        "Divisor",
        {
            "node": node.id,
            "representative": "general degree-m member of the rank-1 divisor lattice",
        },
    )


def _case1_position(idx: GrIndex) -> int | None:
    """1-based u with lambda_{u-1}+1 < lambda_u < lambda_{u+1}-1, if any."""
    lam = (0,) + idx.lam + (idx.n + 1,)
    for u in range(1, idx.k + 1):
        if lam[u - 1] + 1 < lam[u] < lam[u + 1] - 1:
            return u
    return None


def moduli_witness_gr(idx: GrIndex) -> Witness | None:
    if classify_gr(idx).rigid:
        return None
    u = _case1_position(idx)
    if u is not None:
        moved = idx.lam[u - 1]
        return Witness(
            "ModuliGr",
            {
                "index": str(idx),
                "case": 1,
                "position": u,
                "moved_entry": moved,
                "representative": (
                    "replace the rank condition at the moved entry by incidence "
                    "to a cone, vertex two flag steps down, over a degree-m "
                    "plane curve"
                ),
            },
        )
    other = ann_index(idx)
    u = _case1_position(other)
    assert u is not None, f"BUG: flexible {idx} with no movable entry on either side"
    return Witness(
        "ModuliGr",
        {
            "index": str(idx),
            "case": 2,
            "route": "ann",
            "annihilator": str(other),
            "position": u,
            "moved_entry": other.lam[u - 1],
            "representative": (
                "apply the case-1 cone construction to the annihilator index "
                "and carry it back through the duality of flags"
            ),
        },
    )


def moduli_witness_isotropic(idx: IsotropicIndex) -> Witness | None:
    lg = idx.family == "lg"
    verdict = classify_lg(idx) if lg else classify_og(idx)
    if verdict.rigid:
        return None
    n, lam, s = idx.n, idx.lam, len(idx.lam)

    if s >= 1:
        # a maximal isotropic subspace F has dimension n in both families
        embedded = GrIndex(s, n, lam)
        if not classify_gr(embedded).rigid:
            inner = moduli_witness_gr(embedded)
            assert inner is not None
            payload = {
                "index": str(idx),
                "branch": "a",
                "embedded": str(embedded),
                "inner": inner.payload,
            }
            if not lg:
                payload["spinor_component"] = "same" if s % 2 == n % 2 else "opposite"
            return Witness("ModuliIsotropic", payload)

    if not lg and s >= 1 and lam[-1] == n - 2:
        extended = GrIndex(s + 1, n, lam + (n,))
        inner = moduli_witness_gr(extended)
        assert inner is not None, f"BUG: extension of {idx} is not movable"
        return Witness(
            "ModuliIsotropic",
            {
                "index": str(idx),
                "branch": "b",
                "extended": str(extended),
                "inner": inner.payload,
                "spinor_component": "same" if (s + 1) % 2 == n % 2 else "opposite",
            },
        )

    if lg and s >= 1:
        if lam[-1] == n and grouped(lam)[-1][1] == 1:
            return Witness(
                "ModuliIsotropic",
                {
                    "index": str(idx),
                    "branch": "c1",
                    "representative": (
                        "move the top flag space through a family of tangent "
                        "hyperplane sections of degree m"
                    ),
                },
            )
        if lam[-1] == n - 1:
            return Witness(
                "ModuliIsotropic",
                {
                    "index": str(idx),
                    "branch": "c2",
                    "representative": (
                        "cone, vertex two steps below the top flag space, over a "
                        "degree-m plane curve inside its symplectic complement"
                    ),
                },
            )

    raise AssertionError(f"BUG: flexible isotropic class {idx} matched no branch")


def quadric_witness(idx: QuadricIndex) -> Witness | None:
    if classify_quadric(idx).rigid:
        return None
    n, j = idx.n, idx.j
    if idx.kind == "linear":
        if 2 * j <= n:  # a strictly bigger isotropic linear space exists
            return Witness(
                "ModuliQuadric",
                {
                    "index": str(idx),
                    "construction": "hypersurface",
                    "representative": (
                        "smooth degree-m hypersurface inside an isotropic linear "
                        "space one step bigger"
                    ),
                },
            )
        assert n % 2 == 1 and 2 * j == n + 1, f"BUG: unexpected flexible {idx}"
        return Witness(
            "ModuliQuadric",
            {
                "index": str(idx),
                "construction": "induction",
                "representative": (
                    "cone over a bidegree-(1,m-1) curve on a quadric surface "
                    "section, extended upward by the induction on dimension"
                ),
            },
        )
    return Witness(
        "ModuliQuadric",
        {
            "index": str(idx),
            "construction": "polar-section",
            "representative": (
                "intersection of the quadric with a general degree-m "
                "hypersurface of the polar space of a smaller linear space"
            ),
        },
    )


def _match_graded(sub_items, amb_items, sub_covers, amb_covers) -> dict | None:
    """Bijection sub->ambient respecting (dim, degree) labels and covers.

    Items are (key, dim, degree) triples; dims must already be aligned.
    Returns the key mapping, or None.  Backtracking over same-label orbits,
    pruning with the already-assigned lower covers.
    """
    if len(sub_items) != len(amb_items):
        return None
    by_label: dict[tuple[int, int], list] = {}
    for key, dim, deg in amb_items:
        by_label.setdefault((dim, deg), []).append(key)
    sub_sorted = sorted(sub_items, key=lambda it: (it[1], str(it[0])))
    down: dict = {}
    for lo, hi in sub_covers:
        down.setdefault(hi, []).append(lo)

    assignment: dict = {}
    used: set = set()

    def place(i: int) -> bool:
        if i == len(sub_sorted):
            return True
        key, dim, deg = sub_sorted[i]
        for cand in by_label.get((dim, deg), ()):
            if cand in used:
                continue
            if any(
                lo in assignment and (assignment[lo], cand) not in amb_covers
                for lo in down.get(key, ())
            ):
                continue
            assignment[key] = cand
            used.add(cand)
            if place(i + 1):
                return True
            del assignment[key]
            used.remove(cand)
        return False

    if not place(0):
        return None
    # the label/cover-respecting injection must be a full poset isomorphism
    mapped = {(assignment[lo], assignment[hi]) for lo, hi in sub_covers}
    if mapped != set(amb_covers):
        return None
    return dict(assignment)


def interval_isomorphism(sub: QuotientPoset, ambient: QuotientPoset, apex) -> dict | None:
    """Graded isomorphism of ``sub`` onto the lower interval of ``apex``.

    Dimensions must agree on the nose and the interval's relative chain-count
    grading must reproduce the degrees of ``sub`` (the ambient poset need not
    carry absolute degrees of its own).  Returns {sub id: ambient id} or None.
    """
    apex = ambient.node(apex)
    interval = ambient.lower_interval(apex)
    if len(interval) != len(sub.nodes):
        return None
    rel = interval_chain_counts(ambient, apex)
    ids = {n.id for n in interval}
    amb_items = [(n.id, n.dim, rel[n.id]) for n in interval]
    sub_items = [(n.id, n.dim, n.degree) for n in sub.nodes]
    amb_covers = {
        (lo, hi) for lo, hi in ambient.covers if lo in ids and hi in ids
    }
    return _match_graded(sub_items, amb_items, set(sub.covers), amb_covers)


def cone_embedding(sub: QuotientPoset, ambient: QuotientPoset, apex) -> dict | None:
    """Graded embedding phi of ``sub`` into the lower interval of ``apex``.

    The interval must be exactly {ambient bottom} followed by a copy of
    ``sub`` shifted up one dimension, with degrees preserved (a cone has the
    degree of its base).  Returns {sub node id: ambient node id} or None.
    """
    apex = ambient.node(apex)
    interval = ambient.lower_interval(apex)
    if len(interval) != len(sub.nodes) + 1:
        return None
    bottom = ambient.bottom()
    interval_ids = {n.id for n in interval}
    if bottom.id not in interval_ids:
        return None
    amb_items = [(n.id, n.dim, n.degree) for n in interval if n.id != bottom.id]
    sub_items = [(n.id, n.dim + 1, n.degree) for n in sub.nodes]
    amb_covers = {
        (lo, hi) for lo, hi in ambient.covers if lo in interval_ids and hi in interval_ids
    }
    base_edges = {(lo, hi) for lo, hi in amb_covers if lo == bottom.id}
    phi = _match_graded(sub_items, amb_items, set(sub.covers), amb_covers - base_edges)
    if phi is None:
        return None
    if base_edges != {(bottom.id, phi[sub.bottom().id])}:
        return None
    return phi
