"""Degree growth of the multiples nP of the section P = (0, 1).

The height degree (max of numerator and denominator degree of x(nP))
grows roughly quadratically in n, as expected of a non-torsion section.
"""
import argparse

from ellsurf.certify import ConstructionSpec, section_multiples_report


def main():
    parser = argparse.ArgumentParser(description="degrees of x(nP), y(nP)")
    parser.add_argument("-n", type=int, default=8)
    args = parser.parse_args()

    print(f"{'n':>3} {'x num/den':>11} {'y num/den':>11} {'height':>7} {'height/n^2':>11}")
    for row in section_multiples_report(ConstructionSpec(2), args.n):
        xd = "/".join("-" if d is None else str(d) for d in row["x_degrees"])
        yd = "/".join("-" if d is None else str(d) for d in row["y_degrees"])
        n, h = row["n"], row["height_degree"]
        print(f"{n:>3} {xd:>11} {yd:>11} {h:>7} {h / n**2:>11.3f}")


if __name__ == "__main__":
    main()
