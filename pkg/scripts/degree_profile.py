"""Profile λ-degree and coefficient height of the degenerate triangles.

Prints, per row n, the largest deg_λ over k (always <= n - k) and the
largest coefficient numerator, for s1, s2 and the unsigned kind.

    python3 scripts/degree_profile.py --nmax 20
"""
import argparse

from dstir.numbers import StirlingKind, triangle

KINDS = (StirlingKind.S1_LAMBDA, StirlingKind.S2_LAMBDA, StirlingKind.UNSIGNED_S1_LAMBDA)


def profile(kind, n_max):
    tri = triangle(kind, n_max)
    for n in range(n_max + 1):
        entries = [tri[n, k] for k in range(n + 1)]
        slack = min(n - k - e.degree for k, e in enumerate(entries) if e.degree >= 0)
        height = max(abs(c.numerator) for e in entries for c in e.coeffs)
        yield n, max(e.degree for e in entries), slack, height


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=16)
    args = ap.parse_args()
    for kind in KINDS:
        print(f"# {kind.value}: n, max degree, min (n-k-degree), max |numerator|")
        for n, deg, slack, height in profile(kind, args.nmax):
            print(f"{n:>3} {deg:>3} {slack:>3} {height}")


if __name__ == "__main__":
    main()
