"""Direct links, the suspension linkage ladder, and the harness.

Run:  python demos/05_linkage_and_verification.py
"""

from liccilab import (
    Monomial,
    MonomialIdeal,
    verify_direct_link,
    verify_suspension_chain,
)
from liccilab.harness import verify_paper

# m and m^2 in two variables are directly linked through (x^2, y^2).
V = ["x", "y"]
m = MonomialIdeal(V, [(1, 0), (0, 1)])
m2 = m.power(2)
report = verify_direct_link(m2, m, [Monomial((2, 0)), Monomial((0, 2))])
print("m^2 ~ m:", "pass" if report.passed else "fail")
for check in report.checks:
    print(f"    {check.name}: {'ok' if check.passed else 'FAIL'} {check.details}")

# The ladder from the path ideal of a suspended edge down to a complete
# intersection, one rung of two links at a time.
report = verify_suspension_chain(2, 5)
print(f"\nsuspension chain (n=2, t=5): {len(report.checks)} checks,",
      "pass" if report.passed else "fail")
for check in report.checks:
    print(f"    {check.name}")

# Programmatic harness access; the CLI equivalent is
#   licci-cli verify-paper T1 T10
summary = verify_paper(["T1", "T10"])
print()
print(summary.render())
