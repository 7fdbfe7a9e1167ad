#!/usr/bin/env python3
"""Print genus-one intersection tables for a range of G(2,k) targets.

Each row of a table is one exponent split (m, n) with m + 2n = kd; the four
pipeline columns must agree, and the script exits nonzero if any row differs.
"""

import argparse
import sys
from dataclasses import dataclass

from gwgr.invariants import InvariantQuery, invariant


@dataclass(frozen=True)
class TableJob:
    k: int
    degree: int
    tol: float = 1e-6


def run_job(job: TableJob) -> bool:
    print(f"== G(2,{job.k}), degree {job.degree} ==")
    print(f"{'n':>3} {'m':>3} {'value':>12}  pipelines")
    ok = True
    for n in range(0, job.k * job.degree // 2 + 1):
        m = job.k * job.degree - 2 * n
        query = InvariantQuery(g=1, d=job.degree, r=2, k=job.k, s=(m, n))
        results = invariant(query, "all", tol=job.tol)
        values = {res.pipeline: res.value for res in results}
        agree = len(set(values.values())) == 1
        ok = ok and agree
        tag = "ok" if agree else "DISAGREE " + str(values)
        print(f"{n:>3} {m:>3} {results[0].value:>12}  {tag}")
    print()
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=5)
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--tol", type=float, default=1e-6)
    args = parser.parse_args()

    ok = True
    for k in range(3, args.max_k + 1):
        for d in range(1, args.max_degree + 1):
            ok = run_job(TableJob(k=k, degree=d, tol=args.tol)) and ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
