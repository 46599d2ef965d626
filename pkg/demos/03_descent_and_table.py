"""Quaternionic descent and the real-closed Witt-index table.

Runs the descent of the split gift to quaternionic coefficients for
(a, b) = (-1, -1): the semilinear twist, its cocycle property, the
3136-dimensional fixed algebra, and the gift axioms on it.  Then
verifies the explicit symplectic realization of a small quaternionic
hermitian module and prints the four-row Witt-index table.
"""

from e7gifts import brown, descent, gift
from e7gifts.albert import split_albert
from e7gifts.report import RunConfig

cfg = RunConfig(seed=0, samples=10)

print("== structurable 56-dimensional algebra and its descent ==")
J = split_albert()
for c in brown.check_brown_algebra(J, cfg) + \
        brown.check_brown_descent(J, -1, cfg):
    print("  %-32s %s" % (c.name, c.status))

print()
print("== descended gift for (a, b) = (-1, -1) ==")
g = descent.quatconst_build(-1, -1)
for c in descent.descended_gift_checks(g, cfg):
    print("  %-32s %s" % (c.name, c.status))
for c in gift.check_gift_axioms(g, cfg):
    print("  %-32s %s" % (c.name, c.status))

print()
print("== symplectic realization of a hermitian module ==")
h, checks = descent.symplem_verify(-1, -1, [1, -1, 2], [1, 3, -1], cfg)
for c in checks:
    print("  %-40s %s" % (c.name, c.status))
print("  hermitian form:", h)
print("  trace form:", descent.hermitian_trace_form(h))
print("  hermitian witt index:", descent.witt_index_hermitian(h))

print()
print("== real-closed witt-index table ==")
print("  %-12s %-10s %-6s %s" % ("quaternions", "jordan", "witt", "type"))
for row in descent.e7_real_table():
    print("  %-12s %-10s %-6d %s" % (row["coefficient_algebra"],
                                     row["jordan_algebra"],
                                     row["witt_index"],
                                     row["group_type"]))
