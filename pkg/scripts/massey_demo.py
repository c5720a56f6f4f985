#!/usr/bin/env python3
"""End-to-end non-formality certificate for the bundled five-color instance.

Walks the whole pipeline: system detection, the bounding generators, the
page-two cocycle, its class, and the triple-product cross-check.
"""

import json
import sys

from echarr.corpus import mcs7
from echarr.massey import nonformality_report


def main() -> int:
    h = mcs7()
    print("instance: 7 vertices,", dict(zip(h.edge_colors, map(sorted, h.edges))))
    report = nonformality_report(h)
    print(json.dumps(report, indent=2))
    return 0 if report["nonformal"] else 1


if __name__ == "__main__":
    sys.exit(main())
