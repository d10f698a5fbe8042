"""Elliptic genus of Calabi-Yau hypersurfaces against two candidate image rings.

"stated" is Z[1/2][3a2, a3, a4]; "anchor" is Z[1/2][3a2, a3, 6a2^2 - a4], the
ring generated by the three reference values phi(W2), phi(W3), phi(W4).

    python demos/image_ring.py
"""
import itertools

from slcob import chern, genus


def main():
    g = genus.curve_log(N=12)
    seen = set()
    print(f"{'n':<12}{'dim':>4}  {'stated':<7}{'anchor':<7} phi")
    for r in (1, 2, 3):
        for ns in itertools.combinations_with_replacement(range(1, 5), r):
            if ns in seen:
                continue
            seen.add(ns)
            x = chern.multiproj_hypersurface(ns, [k + 1 for k in ns])
            e = genus.genus_of_variety(x, g)
            stated = genus.image_membership(e)
            anchor = genus.image_membership(e, ring="anchor")
            shown = str(e) if len(str(e)) < 70 else str(e)[:67] + "..."
            print(f"{str(list(ns)):<12}{x.dimension:>4}  {str(stated):<7}{str(anchor):<7} {shown}")
    w4 = genus.genus_of_chern_numbers(4, genus.REFERENCE_NUMBERS[4], g)
    print(f"\nphi(W4) = {w4}: stated {genus.image_membership(w4)}, "
          f"anchor {genus.image_membership(w4, ring='anchor')}")


if __name__ == "__main__":
    main()
