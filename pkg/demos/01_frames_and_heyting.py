"""Frames are finite distributive lattices; every one carries a Heyting arrow.

Walks the named fixtures, prints their Heyting structure, then shows the one
identity from the classical presentation that does not survive as displayed:
(vA) -> b distributes over the MEET of the arrows, not the join.
"""
from localelab.corpus import chain3, square
from localelab.lattice import heyting_identity_report, pseudocomplement


def table(fr, name):
    print(f"{name}: elements {list(fr.labels)}")
    for a in range(fr.n):
        row = [fr.labels[fr.imp(a, b)] for b in range(fr.n)]
        print(f"  {fr.labels[a]} -> {row}")
    negs = [fr.labels[pseudocomplement(fr, a)] for a in range(fr.n)]
    print(f"  pseudocomplements: {negs}")


def main():
    table(chain3(), "CHAIN3")
    table(square(), "SQUARE")

    rep = heyting_identity_report(chain3())
    print("\nidentity scan on CHAIN3:")
    print("  join/meet distribution:", rep["join_meet_distribution"])
    print("  arrow preserves meets:", rep["arrow_preserves_meets"])
    print("  sup-arrow meet form:", rep["sup_arrow_meet_form"])
    display = rep["sup_arrow_display_form"]
    print("  sup-arrow display form:", display["status"])
    if display["status"] == "falsified":
        w = display["witness"]
        print(f"    at A = {w['A']}, b = {w['b']}: lhs {w['lhs']} != rhs {w['rhs']}")


if __name__ == "__main__":
    main()
