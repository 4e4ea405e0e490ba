"""Doubling-series report.

Runs a generator at successive doublings for a set of variants and prints,
per variant, the time per symbol of every size relative to the smallest one.
A flat column means linear time; the naive variant on ``aaab`` inputs shows
the quadratic growth driven by its average Lyndon factor length.
"""

from __future__ import annotations

import argparse
import logging

from lyndon_induce.bench import bench, doubling_series, time_ratios
from lyndon_induce.generators import GeneratorSpec, generate
from lyndon_induce.options_enum import LyndonVariant

logger = logging.getLogger(__name__)


def main(argv: list[str] | None = None) -> None:
    p = argparse.ArgumentParser(description="Time per symbol over a doubling series of generated inputs")
    p.add_argument("--gen", default="rand4:65536:1", help="Starting generator spec (KIND:SIZE[:SEED])")
    p.add_argument("--double", type=int, default=4, help="Number of doublings")
    p.add_argument("--reps", type=int, default=3, help="Repetitions per size; the fastest is kept")
    p.add_argument(
        "--variant",
        action="append",
        choices=[v.value for v in LyndonVariant],
        help="Variants to compare (default: inplace and nextprev)",
    )
    args = p.parse_args(argv)

    logging.basicConfig(level=logging.INFO)

    variants = [LyndonVariant.from_str(v) for v in args.variant or ["inplace", "nextprev"]]
    specs = doubling_series(GeneratorSpec.parse(args.gen), args.double)
    inputs = [(spec.name, generate(spec)) for spec in specs]
    logger.info("Sizes: %s", ", ".join(str(spec.size) for spec in specs))

    print("\t".join(["variant", *(spec.name for spec in specs)]))
    for variant in variants:
        reports = bench(inputs, [variant], reps=args.reps)
        ratios = time_ratios(reports)
        print("\t".join([str(variant), *(f"{r:.2f}" for r in ratios)]))
        logger.info("%s: largest/smallest time per symbol = %.2f", variant, ratios[-1])


if __name__ == "__main__":
    main()
