"""Time every identity check over a range of n_max and write a JSON summary.

    python3 scripts/run_identity_suite.py --nmax 4 8 12 --out results/suite.json
"""
import argparse
import json
import pathlib
import time

from dstir.identities import IdentityId, check, default_mode


def run(n_values, seed):
    rows = []
    for n_max in n_values:
        for ident in IdentityId:
            t0 = time.perf_counter()
            r = check(ident, n_max, default_mode(ident, seed))
            rows.append({**r.to_dict(), "seconds": round(time.perf_counter() - t0, 4)})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, nargs="+", default=[4, 8, 12])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=pathlib.Path, default=None)
    args = ap.parse_args()

    rows = run(args.nmax, args.seed)
    for r in rows:
        flag = "" if r["status"] == r["expected"] else "  <-- unexpected"
        print(f"n_max={r['n_max']:<3} {r['id']:<14} {r['status']:<5} "
              f"cases={r['cases']:<6} {r['seconds']:.3f}s{flag}")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(rows, ensure_ascii=False, indent=2) + "\n")


if __name__ == "__main__":
    main()
