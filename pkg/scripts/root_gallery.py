#!/usr/bin/env python3
"""Emit scatter data for the root distributions of the characterization
polynomial at the three showcase fillings (one per slope regime), plus a
count summary.

Usage: python scripts/root_gallery.py [outdir]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from whitenorm.respq import nontrivial_root_bound
from whitenorm.roots import classify, resultant_roots

SHOWCASE = [(65, 3), (65, 23), (65, 16)]


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for p, q in SHOWCASE:
        rs = resultant_roots(p, q)
        rep = classify(rs, p, q)
        path = outdir / f"roots_{p}_{q}.csv"
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write("re,im,multiplicity\n")
            for r in rs:
                fh.write(f"{r.value.real!r},{r.value.imag!r},{r.multiplicity}\n")
        print(
            f"res[{p}/{q}]: {rep.n_nontrivial}/{nontrivial_root_bound(p, q)} non-trivial "
            f"roots ({rep.real_count} real, {rep.imaginary_count} imaginary), "
            f"circle gap {rep.min_unit_circle_gap:.2e} -> {path}"
        )


if __name__ == "__main__":
    run(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("root_gallery"))
