"""Regenerate the quivers/ directory shipped with the package.

Writes every A/D/E diagram of rank <= 8 in each distinct orientation scheme,
plus the infinite-type counterexamples.  Run from the repository root:

    python tools/generate_quivers.py
"""

from __future__ import annotations

from pathlib import Path

from quiverrep.dynkin import (
    build_quiver,
    cycle_quiver,
    extended_d4_quiver,
    kronecker_quiver,
    orientation_schemes,
)
from quiverrep.formats import quiver_file_text

DIAGRAMS = (
    [("A", r) for r in range(1, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", r) for r in (6, 7, 8)]
)


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "quivers"
    out.mkdir(exist_ok=True)
    count = 0
    for letter, rank in DIAGRAMS:
        for scheme in orientation_schemes(letter, rank):
            q = build_quiver(letter, rank, scheme)
            (out / f"{q.name.lower()}.quiver").write_text(quiver_file_text(q))
            count += 1
    for q in [kronecker_quiver(), cycle_quiver(3, "a2_tilde_cycle"), extended_d4_quiver()]:
        (out / f"{q.name.lower()}.quiver").write_text(quiver_file_text(q))
        count += 1
    print(f"wrote {count} files to {out}")


if __name__ == "__main__":
    main()
