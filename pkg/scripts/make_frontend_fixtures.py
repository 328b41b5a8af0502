#!/usr/bin/env python3
"""Generate JSON fixtures for the explorer frontend tests: the 32-move greedy
lowering trajectory from the fully extended H^5 height down to the valise,
with the five curve images at every step, plus the color splittings."""

import argparse
import json
from pathlib import Path

from adinkra import jacobian, wire
from adinkra.heights import fully_extended, lowering_schedule


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        default=str(Path(__file__).resolve().parents[1] / "frontend" / "fixtures"),
        help="output directory (default: frontend/fixtures)",
    )
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    fe = fully_extended(5)
    steps = [
        {
            "vertex": None,
            "height": wire.height_json(fe),
            "image": wire.image_json(jacobian.height_image(fe)),
        }
    ]
    for vertex, h in lowering_schedule(5):
        steps.append(
            {
                "vertex": vertex,
                "height": wire.height_json(h),
                "image": wire.image_json(jacobian.height_image(h)),
            }
        )
    (out / "trajectory.json").write_text(json.dumps({"steps": steps}, indent=2))

    splittings = {str(k): jacobian.splitting(k) for k in range(1, 6)}
    (out / "splittings.json").write_text(json.dumps(splittings, indent=2))

    print(f"wrote {len(steps) - 1}-move trajectory and splittings to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
