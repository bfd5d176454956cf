"""Hasse diagrams of parabolic quotients W_P \\ W, with degrees where defined.

A quotient is specified by a Cartan datum plus a nonempty set of *marked*
nodes; the parabolic subgroup W_P is generated by the complementary simple
reflections.  Cosets are identified by their fingerprint u^{-1}(lambda), where
lambda is the indicator weight of the marked set -- this is well defined on
cosets because lambda is W_P-invariant.

Facts the implementation leans on:

* Walking from the identity coset by right multiplication with s_i increases
  minimal length exactly when fingerprint coordinate i is positive, so a BFS
  from lambda discovers every coset once, at depth equal to the minimal
  representative's length (= the Schubert variety's dimension).
* Quotient Bruhat order is the restriction of Bruhat order to minimal
  representatives; ``leq`` implements the standard lifting recursion on
  w^{-1}(rho) vectors.
* For quotients by a minuscule maximal parabolic, the projective degree of a
  Schubert variety in the minimal homogeneous embedding equals the number of
  saturated chains from the bottom of its lower order ideal.  Degrees are
  computed exactly there (arbitrary-precision ints) and left as None
  otherwise; intervals of non-minuscule quotients can still be given relative
  chain counts via :func:`interval_chain_counts`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import weyl
from .weyl import CartanDatum

DEFAULT_SIZE_CAP = 10**6

# Marked nodes (Bourbaki) whose maximal parabolic quotient carries a minuscule
# weight, so chain counts are honest projective degrees.
_MINUSCULE_NODES = {
    "A": lambda r: set(range(1, r + 1)),
    "B": lambda r: {r},
    "C": lambda r: {1},
    "D": lambda r: {1, r - 1, r},
    "E": lambda r: {1, 6} if r == 6 else {7},
}


def minuscule(datum: CartanDatum, marked) -> bool:
    marked = set(marked)
    if len(marked) != 1:
        return False
    (node,) = marked
    return node in _MINUSCULE_NODES[datum.family](datum.rank)


@dataclass
class SchubertNode:
    """One Schubert class: a coset of W_P in W."""

    id: str
    dim: int
    fingerprint: tuple[int, ...]
    min_word: tuple[int, ...]
    rho_vector: tuple[int, ...]
    degree: int | None = None

    def __repr__(self) -> str:
        deg = "?" if self.degree is None else self.degree
        return f"<{self.id} dim={self.dim} deg={deg}>"


class QuotientPoset:
    """Bruhat poset of W_P \\ W for a marked node set, built by build_quotient_poset."""

    def __init__(self, datum: CartanDatum, marked: frozenset[int], nodes, covers):
        self.datum = datum
        self.marked = marked
        self.nodes = nodes
        self.covers = covers
        self._by_id = {n.id: n for n in nodes}
        self._by_fp = {n.fingerprint: n for n in nodes}
        self._up: dict[str, list[str]] = {n.id: [] for n in nodes}
        self._down: dict[str, list[str]] = {n.id: [] for n in nodes}
        for lo, hi in covers:
            self._up[lo].append(hi)
            self._down[hi].append(lo)
        self.dimension = max(n.dim for n in nodes)

    # -- lookup -----------------------------------------------------------

    def node(self, ref) -> SchubertNode:
        if isinstance(ref, SchubertNode):
            return ref
        return self._by_id[ref]

    def node_by_fingerprint(self, fp) -> SchubertNode:
        return self._by_fp[tuple(fp)]

    def bottom(self) -> SchubertNode:
        return self.nodes[0]

    def top(self) -> SchubertNode:
        tops = [n for n in self.nodes if n.dim == self.dimension]
        assert len(tops) == 1, "BUG: quotient poset must have a unique maximum"
        return tops[0]

    def nodes_by_dim(self, dim: int) -> list[SchubertNode]:
        return [n for n in self.nodes if n.dim == dim]

    def find_nodes(self, dim: int, degree: int) -> list[SchubertNode]:
        return [n for n in self.nodes if n.dim == dim and n.degree == degree]

    # -- order ------------------------------------------------------------

    def leq(self, a, b) -> bool:
        """Bruhat comparison of two classes (containment of Schubert varieties)."""
        va = self.node(a).rho_vector
        vb = self.node(b).rho_vector
        r = weyl.rho(self.datum)
        while vb != r:
            i = next(k for k in range(self.datum.rank) if vb[k] < 0) + 1
            if va[i - 1] < 0:
                va = weyl.reflect(self.datum, i, va)
            vb = weyl.reflect(self.datum, i, vb)
        return va == r

    def upper_covers(self, ref) -> list[SchubertNode]:
        return [self._by_id[i] for i in self._up[self.node(ref).id]]

    def lower_covers(self, ref) -> list[SchubertNode]:
        return [self._by_id[i] for i in self._down[self.node(ref).id]]

    def lower_interval(self, ref) -> list[SchubertNode]:
        """All classes <= ref, in id order (includes ref itself)."""
        apex = self.node(ref)
        return [n for n in self.nodes if n.dim <= apex.dim and self.leq(n, apex)]

    # -- duality ----------------------------------------------------------

    def poincare_dual(self, ref) -> SchubertNode:
        """The complementary-dimension partner under right multiplication by w_0."""
        node = self.node(ref)
        w0 = weyl.longest_element(self.datum, range(1, self.datum.rank + 1))
        fp = weyl.act(self.datum, w0, node.fingerprint)
        dual = self._by_fp[fp]
        assert dual.dim == self.dimension - node.dim, (
            f"BUG: dual of {node.id} (dim {node.dim}) landed on dim {dual.dim}"
        )
        return dual

    # -- export -----------------------------------------------------------

    def type_label(self) -> str:
        return f"{self.datum.family}{self.datum.rank}"

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_label(),
            "parabolic": sorted(self.marked),
            "nodes": [
                {
                    "id": n.id,
                    "dim": n.dim,
                    "degree": n.degree,
                    "min_word": list(n.min_word),
                }
                for n in self.nodes
            ],
            "covers": [[lo, hi] for lo, hi in self.covers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def to_dot(self) -> str:
        lines = [
            "digraph hasse {",
            "  rankdir=BT;",
            '  node [shape=plaintext, fontname="Helvetica"];',
        ]
        for n in self.nodes:
            label = f"{n.dim}:{n.degree}" if n.degree is not None else str(n.dim)
            lines.append(f'  {n.id} [label="{label}"];')
        for lo, hi in self.covers:
            lines.append(f"  {lo} -> {hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_quotient_poset(
    datum: CartanDatum, marked, size_cap: int = DEFAULT_SIZE_CAP
) -> QuotientPoset:
    """Enumerate W_P \\ W and assemble its Hasse diagram.

    Raises ValueError if the quotient would exceed ``size_cap`` cosets.
    """
    marked = frozenset(weyl._check_marked(datum, marked))
    generators = [i for i in range(1, datum.rank + 1) if i not in marked]
    expected = weyl.weyl_order(datum)
    if generators:
        expected //= weyl.levi_order(datum, generators)
    if expected > size_cap:
        raise ValueError(
            f"quotient would have {expected} cosets, above the cap of {size_cap}"
        )

    lam = tuple(1 if (i + 1) in marked else 0 for i in range(datum.rank))
    r = weyl.rho(datum)

    fingerprints = {lam: 0}
    records = [(lam, (), r, 0)]  # fingerprint, min_word, rho_vector, dim
    frontier = [(lam, (), r)]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for fp, word, rv in frontier:
            for i in range(1, datum.rank + 1):
                if fp[i - 1] > 0:
                    child = weyl.reflect(datum, i, fp)
                    if child not in fingerprints:
                        fingerprints[child] = len(records)
                        crv = weyl.reflect(datum, i, rv)
                        cword = word + (i,)
                        records.append((child, cword, crv, depth))
                        nxt.append((child, cword, crv))
        frontier = nxt

    assert len(records) == expected, (
        f"BUG: enumerated {len(records)} cosets, order formula says {expected}"
    )

    width = max(3, len(str(len(records) - 1)))
    nodes = [
        SchubertNode(
            id=f"n{idx:0{width}d}",
            dim=dim,
            fingerprint=fp,
            min_word=word,
            rho_vector=rv,
        )
        for idx, (fp, word, rv, dim) in enumerate(records)
    ]

    poset = QuotientPoset(datum, marked, nodes, covers=[])
    covers = _compute_covers(poset)
    poset.covers.extend(covers)
    for lo, hi in covers:
        poset._up[lo].append(hi)
        poset._down[hi].append(lo)

    if minuscule(datum, marked):
        _fill_chain_degrees(poset)
    return poset


def _compute_covers(poset: QuotientPoset) -> list[tuple[str, str]]:
    by_dim: dict[int, list[SchubertNode]] = {}
    for n in poset.nodes:
        by_dim.setdefault(n.dim, []).append(n)
    covers = []
    for d in sorted(by_dim):
        for lo in by_dim[d]:
            for hi in by_dim.get(d + 1, ()):
                if poset.leq(lo, hi):
                    covers.append((lo.id, hi.id))
    covers.sort(key=lambda pair: (poset._by_id[pair[0]].dim, pair[0], pair[1]))
    return covers


def _fill_chain_degrees(poset: QuotientPoset) -> None:
    for n in sorted(poset.nodes, key=lambda x: x.dim):
        if n.dim == 0:
            n.degree = 1
        else:
            n.degree = sum(poset.node(lo).degree for lo in poset._down[n.id])


def bfs_edges(poset: QuotientPoset) -> list[tuple[str, str]]:
    """Edges of the simple-step graph: coset -> coset * s_i when length goes up.

    On minuscule-type quotients these coincide with the Bruhat covers; the
    agreement is asserted by tests, not assumed here.
    """
    edges = []
    for n in poset.nodes:
        for i in range(1, poset.datum.rank + 1):
            if n.fingerprint[i - 1] > 0:
                child = poset.node_by_fingerprint(
                    weyl.reflect(poset.datum, i, n.fingerprint)
                )
                edges.append((n.id, child.id))
    return sorted(set(edges), key=lambda pair: (poset._by_id[pair[0]].dim, pair[0], pair[1]))


def interval_chain_counts(poset: QuotientPoset, apex) -> dict[str, int]:
    """Saturated-chain counts from the bottom, restricted to the interval below apex.

    Defined for any quotient; used to grade intervals of quotients whose global
    chain counts are not projective degrees.
    """
    apex = poset.node(apex)
    members = {n.id for n in poset.lower_interval(apex)}
    counts: dict[str, int] = {}
    for n in sorted(poset.nodes, key=lambda x: x.dim):
        if n.id not in members:
            continue
        if n.dim == 0:
            counts[n.id] = 1
        else:
            counts[n.id] = sum(
                counts[lo] for lo in poset._down[n.id] if lo in members
            )
    return counts
