"""Classical Schubert numbers as sanity anchors for the lattice pairings.

The count of lines meeting four general lines in 3-space, the degrees of
small Grassmannians under sigma_1, and the pairing that pins down the
movable-cone generator against the rank-2 pencil curve.
"""

from completequadrics import class_P, curves_x3, pair, sigma, sigma1_power_degree
from completequadrics.schubert import duality_pair, p_dot_r2, rectangle_tableaux, sigma1_power


def main():
    print("lines meeting four general lines in P^3:",
          sigma1_power_degree(1, 3, 4))
    print()

    print("sigma_1 degrees against the tableaux oracle:")
    for k, n in ((1, 3), (1, 4), (2, 5)):
        dim = (k + 1) * (n - k)
        deg = sigma1_power_degree(k, n, dim)
        syt = rectangle_tableaux(k + 1, n - k)
        print("  G(%d,%d): degree %3d, standard tableaux %3d, equal: %s"
              % (k, n, deg, syt, deg == syt))
    print()

    half = sigma(1, 3, 2) + sigma(1, 3, 1, 1)
    sq = sigma1_power(1, 3, 2)
    print("in G(1,3): <sigma_2 + sigma_11, sigma_1^2> =", duality_pair(half, sq))
    print("doubled, this is the Schubert side of P . R2 =", p_dot_r2())
    lattice = pair(curves_x3()["R2"], class_P())
    print("the lattice pairing of the movable generator with R2 =", lattice)
    print("agreement:", p_dot_r2() == lattice == 4)


if __name__ == "__main__":
    main()
