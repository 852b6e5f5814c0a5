"""Run the exhaustive shortest-vector scan of the 42-dimensional
projective-plane lattice, serial and parallel, and report timings.

Usage: python scripts/run_42_scan.py [workers]
"""

import sys

from latred.verification import check_shortest_vectors_42


def main() -> int:
    workers = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    rep = check_shortest_vectors_42()
    print("relation: %s" % (rep.relation.coefficients,))
    print("no unit coefficient: %s" % rep.no_unit_coefficient)
    for family, count in rep.families_checked.items():
        print("  %-18s %8d candidates" % (family, count))
    print("violations: %d" % len(rep.violations))
    print("serial scan: %.1fs" % rep.elapsed)
    if workers > 1:
        par = check_shortest_vectors_42(workers=workers)
        assert par.families_checked == rep.families_checked
        assert par.violations == rep.violations
        print("parallel scan (%d workers): %.1fs" % (workers, par.elapsed))
    return 0 if rep.success else 1


if __name__ == "__main__":
    sys.exit(main())
