"""Points, the pt space, and spatiality of small frames.

A point is a frame hom into 2; pt(L) topologizes them with the sigma sets.
Every downset frame here is spatial, and the two definitions (witness pairs
vs injective spatialization) agree frame by frame.
"""
from localelab.corpus import chain3, sierpinski, square
from localelab.lattice import bits, frame_of_space
from localelab.points import is_spatial, points_of, pt_space, sobrification, spatialization


def main():
    for name, fr in (("CHAIN3", chain3()), ("SQUARE", square())):
        pts = points_of(fr)
        print(f"{name}: {len(pts)} points")
        for p in pts:
            print(f"  {p.describe()}")
        space = pt_space(fr)
        opens = [sorted(space.points[i] for i in bits(m)) for m in space.opens]
        print(f"  pt space opens: {opens}")
        rep = is_spatial(fr)
        hom = spatialization(fr)
        injective = len(set(hom.table)) == fr.n
        print(f"  spatial: {rep.ok} over {rep.checked} pairs; "
              f"spatialization injective: {injective}")

    sp = sierpinski()
    sob = sobrification(sp)
    print("\nsobrification of SIERPINSKI:")
    print(f"  open-set frame size: {frame_of_space(sp).n}")
    sends = {sp.points[p]: sob.target.points[sob(p)] for p in range(len(sp.points))}
    print(f"  unit sends {sends}")


if __name__ == "__main__":
    main()
