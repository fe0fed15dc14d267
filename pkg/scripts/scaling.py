"""ns/op as the interval count grows, one bench run per size.

    python3 scripts/scaling.py --sizes 1000,10000,100000 --ops 200000
"""
import argparse

from heapseg.bench import run_bench
from heapseg.interval_io import Workload


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1000,10000,100000")
    ap.add_argument("--ops", type=int, default=200000)
    ap.add_argument("--impl", default="heap-rec,heap-iter")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    impls = args.impl.split(",")
    print("n\timpl\top\tns_per_op")
    for n in map(int, args.sizes.split(",")):
        report = run_bench(Workload(seed=args.seed, n=n, ops=args.ops), impls)
        for row in report.rows:
            print(f"{n}\t{row.impl}\t{row.op}\t{row.ns_per_op:.1f}")


if __name__ == "__main__":
    main()
