"""Certify the construction for a range of genera and print a summary table.

    python3 scripts/run_certificates.py --genera 2 3 4 5 6
"""
import argparse
import time

from ellsurf.certify import ConstructionSpec, verify_construction


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--genera", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    parser.add_argument("--at", default="0", help="specialization parameter t")
    args = parser.parse_args()

    print(f"{'g':>3} {'lambdas':<30} {'checks':>7} {'I1':>4} {'chi':>4} {'C^2':>4} {'time':>8}")
    for g in args.genera:
        start = time.perf_counter()
        cert = verify_construction(ConstructionSpec(g), args.at)
        elapsed = time.perf_counter() - start
        w = [c.witness for c in cert.checks]
        passed = sum(c.passed for c in cert.checks)
        lambdas = ",".join(cert.construction["lambdas"])
        print(
            f"{g:>3} {lambdas:<30} {passed:>3}/{len(cert.checks):<3} "
            f"{w[3]['type_counts'].get('I1', 0):>4} {w[5]['chi']:>4} "
            f"{w[10]['self_intersection']:>4} {elapsed * 1000:>6.1f}ms"
        )


if __name__ == "__main__":
    main()
