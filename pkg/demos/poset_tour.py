"""Walk through the quotient posets: sizes, shapes, degrees, duality.

Run with:  python3 demos/poset_tour.py
"""

from __future__ import annotations

from schubflex.golden import node_token
from schubflex.poset import build_quotient_poset
from schubflex.weyl import build_cartan


def show(title, poset):
    print(f"\n{title}")
    print(f"  {len(poset.nodes)} classes, {len(poset.covers)} covers, dimension {poset.dimension}")
    by_dim = {}
    for node in poset.nodes:
        by_dim.setdefault(node.dim, []).append(node)
    widths = [len(by_dim[d]) for d in sorted(by_dim)]
    print(f"  rank sizes: {widths}")


def main():
    print("Grassmannian G(2,5): the smallest quotient with a non-trivial degree.")
    g25 = build_quotient_poset(build_cartan("A", 4), {2})
    show("A4 / P2", g25)
    top = g25.top()
    print(f"  top class degree {top.degree}: G(2,5) is a degree-{top.degree} sixfold in P^9")

    print("\nSpinor variety OG(5,10): half of the maximal isotropic Grassmannian.")
    show("D5 / P5", build_quotient_poset(build_cartan("D", 5), {5}))

    print("\nThe 27-class poset (dimension 16) and its degree labels:")
    e6p6 = build_quotient_poset(build_cartan("E", 6), {6})
    show("E6 / P6", e6p6)
    for dim in range(e6p6.dimension + 1):
        toks = " ".join(node_token(e6p6, n) for n in e6p6.nodes_by_dim(dim))
        print(f"    dim {dim:>2d}: {toks}")

    print("\nPoincare duality pairs classes of complementary dimension:")
    for tok in ("0:1", "4:1a", "4:1b", "6:3", "8:2"):
        node = next(n for n in e6p6.nodes if node_token(e6p6, n) == tok)
        dual = e6p6.poincare_dual(node)
        print(f"    {tok:>6s}  <-->  {node_token(e6p6, dual)}")

    print("\nThe 56-class poset (dimension 27):")
    e7p7 = build_quotient_poset(build_cartan("E", 7), {7})
    show("E7 / P7", e7p7)
    print("\nExport any of these with `schubflex hasse <selector> --dot | dot -Tsvg`.")


if __name__ == "__main__":
    main()
