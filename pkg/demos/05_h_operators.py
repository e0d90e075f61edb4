"""h operators live on the complemented fragment of S_l(L).

On every corpus frame the fragment is all of S_l, so contractive h
operators and interior operators are interchangeable through the lift and
its inverse. Two things are shown that the symmetric story would not
predict: h1 holds vacuously-or-really for every table, and the discrete
operator is not the largest h operator, only the largest contractive one.
"""
from localelab.corpus import chain3
from localelab.hops import (
    HOperator,
    check_h,
    complemented_fragment,
    discrete_h,
    h_from_interior,
    h_le,
    interior_from_h,
    trivial_h,
)
from localelab.interior import discrete_op
from localelab.sublocales import enumerate_sublocales


def main():
    sl = enumerate_sublocales(chain3())
    frag = complemented_fragment(sl)
    print(f"fragment of S_l(CHAIN3): {frag.n} of {sl.n} sublocales (all complemented)")

    disc = discrete_h(frag)
    triv = trivial_h(frag)
    print("discrete axioms:", check_h(disc).passed)
    print("trivial axioms:", check_h(triv).passed)

    lifted = h_from_interior(discrete_op(sl))
    print("lift of the discrete interior op equals discrete h:",
          lifted.table == disc.table)
    print("round trip interior -> h -> interior is exact:",
          interior_from_h(lifted).table == discrete_op(sl).table)

    # constant-top is a valid h operator strictly above discrete
    const_top = HOperator(frag, tuple(frag.top for _ in range(frag.n)))
    rep = check_h(const_top)
    print("\nconstant-top table axioms:", rep.passed)
    print("discrete <= constant-top:", h_le(disc, const_top))
    print("constant-top <= discrete:", h_le(const_top, disc))


if __name__ == "__main__":
    main()
