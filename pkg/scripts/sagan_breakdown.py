#!/usr/bin/env python3
"""Where the inductive K(2^k) construction stops being modal, and whether an
MCD exists there anyway."""

import argparse

from rectcomp.chains import sagan_report
from rectcomp.mcdsearch import mcd_decide, modal_ranks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=11)
    args = ap.parse_args()

    print(f"{'k':>3} {'elems':>6} {'chains':>6} {'pred':>5} {'constr':>7} {'exists':>7}  feasible / stray chains")
    for k in range(1, args.kmax + 1):
        rep = sagan_report(k)
        m = rep.predicted_rank
        exists = mcd_decide(rep.poset, m).exists
        stray = rep.missing_chains()
        note = " ".join(map(str, sorted(modal_ranks(rep.poset))))
        if stray:
            note += f" / {len(stray)} chains miss rank {m}, e.g. spans {stray[:3]}"
        print(f"{k:>3} {len(rep.poset):>6} {len(rep.decomposition):>6} {m:>5} "
              f"{'yes' if rep.is_mcd_at_prediction else 'no':>7} {'yes' if exists else 'no':>7}  {note}")


if __name__ == "__main__":
    main()
