#!/usr/bin/env python3
"""Solve an LP file with HiGHS and write a `name value` point listing.

usage: highs_solve.py model.lp point.txt [--time-limit SECONDS]
Exit status 0 when an optimal solution was written, 2 otherwise.
"""
import argparse
import sys

import highspy


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("model")
    parser.add_argument("point")
    parser.add_argument("--time-limit", type=float, default=120.0)
    args = parser.parse_args()

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("time_limit", args.time_limit)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_feasibility_tolerance", 1e-9)
    h.setOptionValue("primal_feasibility_tolerance", 1e-9)
    if h.readModel(args.model) != highspy.HighsStatus.kOk:
        print(f"cannot read {args.model}", file=sys.stderr)
        return 2
    h.run()
    status = h.getModelStatus()
    if status != highspy.HighsModelStatus.kOptimal:
        print(f"solver status: {h.modelStatusToString(status)}", file=sys.stderr)
        return 2
    lp = h.getLp()
    values = h.getSolution().col_value
    with open(args.point, "w", encoding="utf-8") as out:
        out.write(f"# objective {h.getInfo().objective_function_value!r}\n")
        for name, value in zip(lp.col_names_, values):
            out.write(f"{name} {value!r}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
