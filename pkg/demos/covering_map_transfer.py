"""Transfer along a two-fold simplicial cover.

The hexagon boundary maps onto the three-vertex circle by reducing vertex
labels mod 3.  The script certifies that the map is a star-local
homeomorphism, pushes the fundamental cycle forward (picking up the degree
of the cover), pulls the fundamental class back along the wrong-way map,
and checks both naturality squares of the duality isomorphism.

Run with:  python3 demos/covering_map_transfer.py
"""

from lochom import (ZZ, SimplicialMap, check_star_local, circle3,
                    fundamental_class, hexagon, hexagon_cover_map,
                    pushforward_chain, shriek_up, verify_naturality)


def main():
    f = SimplicialMap(hexagon(), circle3(), hexagon_cover_map())
    cert = check_star_local(f)
    print("star-local:", cert["ok"],
          "(%d star bijections certified)" % len(cert["bijections"]))

    cycle = {e: ZZ.from_int(-1 if e == (0, 5) else 1)
             for e in f.source.simplices(1)}
    print("pushforward of the hexagon cycle:",
          pushforward_chain(f, cycle, ZZ))
    print("  -- twice the circle cycle: the cover has degree 2")

    back = shriek_up(f, cert, fundamental_class(f.target, ZZ), ZZ)
    print("wrong-way image of [circle] == [hexagon]:",
          back == fundamental_class(f.source, ZZ))

    rep = verify_naturality(f, ZZ)
    print("naturality verdict:", rep["ok"], "at the", rep["level"], "level")
    print("  covariant squares:", rep["covariant"])
    print("  contravariant squares:", rep["contravariant"])


if __name__ == "__main__":
    main()
