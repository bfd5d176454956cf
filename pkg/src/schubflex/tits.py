"""Incidence transforms between two quotients of the same Weyl group.

A context fixes the group and two marked sets P and Q.  Sweeping a Schubert
variety of G/Q with the fibers of the double fibration through G/P_{P union Q}
yields a Schubert variety of G/P; combinatorially, the coset W_Q u (minimal
representative u) goes to the W_P-coset of its maximal representative
w0_Q * u, where w0_Q is the longest element of the subgroup generated by the
nodes outside Q.  On fingerprint vectors that is

    target fingerprint = u^{-1} ( w0_Q ( lambda_I(P) ) )

which is looked up in the target poset.  The dimension shift

    d_tau = dim G/P_{P union Q} - dim G/Q

is an upper bound for the dimension gain; the transform of a single class is
injective (fiber sweep generically finite) exactly when dim T(S) = dim S +
d_tau, which is what injectivity_check tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import weyl
from .poset import QuotientPoset, SchubertNode, build_quotient_poset
from .weyl import CartanDatum
from .witnesses import Witness


def transform_shift(datum: CartanDatum, p_marked, q_marked) -> int:
    both = frozenset(p_marked) | frozenset(q_marked)
    return weyl.quotient_dimension(datum, both) - weyl.quotient_dimension(datum, q_marked)


@dataclass
class TitsContext:
    datum: CartanDatum
    p_marked: frozenset[int]
    q_marked: frozenset[int]
    p_poset: QuotientPoset
    q_poset: QuotientPoset
    w0q_word: tuple[int, ...]
    w0q_lambda_ip: tuple[int, ...]
    d_tau: int
    _targets: dict[str, str] = field(default_factory=dict, repr=False)

    def label(self) -> str:
        p = ",".join(map(str, sorted(self.p_marked)))
        q = ",".join(map(str, sorted(self.q_marked)))
        return f"{self.p_poset.type_label()}(P={{{p}}},Q={{{q}}})"


def make_context(
    datum: CartanDatum,
    p_marked,
    q_marked,
    p_poset: QuotientPoset | None = None,
    q_poset: QuotientPoset | None = None,
) -> TitsContext:
    p_marked = frozenset(weyl._check_marked(datum, p_marked))
    q_marked = frozenset(weyl._check_marked(datum, q_marked))
    if p_poset is None:
        p_poset = build_quotient_poset(datum, p_marked)
    if q_poset is None:
        q_poset = build_quotient_poset(datum, q_marked)
    assert p_poset.marked == p_marked and q_poset.marked == q_marked, (
        "BUG: supplied posets do not match the marked sets"
    )
    unmarked = [i for i in range(1, datum.rank + 1) if i not in q_marked]
    w0q_word = weyl.longest_element(datum, unmarked)
    lam_p = tuple(1 if (i + 1) in p_marked else 0 for i in range(datum.rank))
    return TitsContext(
        datum=datum,
        p_marked=p_marked,
        q_marked=q_marked,
        p_poset=p_poset,
        q_poset=q_poset,
        w0q_word=w0q_word,
        w0q_lambda_ip=weyl.act(datum, w0q_word, lam_p),
        d_tau=transform_shift(datum, p_marked, q_marked),
    )


def max_rep_word(ctx: TitsContext, ref) -> tuple[int, ...]:
    """Reduced word for the maximal representative of a G/Q coset."""
    node = ctx.q_poset.node(ref)
    word = ctx.w0q_word + tuple(node.min_word)
    assert weyl.is_reduced(ctx.datum, word), (
        f"BUG: lengths must add for w0_Q * u at {node.id}"
    )
    return word


def transform(ctx: TitsContext, ref) -> SchubertNode:
    """The G/P class swept out by a G/Q Schubert class."""
    node = ctx.q_poset.node(ref)
    cached = ctx._targets.get(node.id)
    if cached is not None:
        return ctx.p_poset.node(cached)
    fp = weyl.act(ctx.datum, tuple(reversed(node.min_word)), ctx.w0q_lambda_ip)
    target = ctx.p_poset.node_by_fingerprint(fp)
    ctx._targets[node.id] = target.id
    return target


def injectivity_check(ctx: TitsContext, ref) -> bool:
    node = ctx.q_poset.node(ref)
    return transform(ctx, node).dim == node.dim + ctx.d_tau


def transform_rows(ctx: TitsContext) -> list[dict]:
    rows = []
    for node in ctx.q_poset.nodes:
        dst = transform(ctx, node)
        rows.append(
            {
                "src": {"id": node.id, "dim": node.dim, "deg": node.degree},
                "dst": {"id": dst.id, "dim": dst.dim, "deg": dst.degree},
                "injective": injectivity_check(ctx, node),
            }
        )
    return rows


def context_json_dict(ctx: TitsContext) -> dict:
    return {
        "context": {
            "type": ctx.p_poset.type_label(),
            "P": sorted(ctx.p_marked),
            "Q": sorted(ctx.q_marked),
            "d_tau": ctx.d_tau,
        },
        "rows": transform_rows(ctx),
    }


def tits_flexibility_witness(ctx: TitsContext, p_ref, q_oracle) -> Witness | None:
    """Certify a G/P class as the sweep transform of a movable G/Q class.

    ``q_oracle(src)`` must return the covers of ``src`` that contain a moved
    irreducible representative of ``m [src]`` through one of their general
    points (an empty iterable means the oracle does not vouch for ``src``).
    If the transform of such a home cover is dimension-faithful, sweeping the
    representative by the incidence fibers produces an irreducible
    representative of ``m [transform(src)]``.  Injectivity of the transform
    at the home cover, not at an arbitrary cover of ``src``, is the load-
    bearing hypothesis: a source whose only movable representatives live in a
    collapsing cover certifies nothing, even when a sibling cover transforms
    faithfully.
    """
    p_node = ctx.p_poset.node(p_ref)
    for src in ctx.q_poset.nodes:
        if transform(ctx, src).id != p_node.id:
            continue
        cover_ids = {c.id for c in ctx.q_poset.upper_covers(src)}
        for home in q_oracle(src):
            home_id = getattr(home, "id", home)
            if home_id not in cover_ids:
                continue
            if not injectivity_check(ctx, ctx.q_poset.node(home_id)):
                continue
            return Witness(
                "Tits",
                {
                    "node": p_node.id,
                    "context": ctx.label(),
                    "source": src.id,
                    "home": home_id,
                    "d_tau": ctx.d_tau,
                    "representative": (
                        "sweep of an irreducible representative of the source "
                        "class by the incidence fibers"
                    ),
                },
            )
    return None
