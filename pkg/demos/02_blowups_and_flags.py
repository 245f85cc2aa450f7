"""Blowing up boundary points and the flags that stop it.

A conic plus a line in P^2 can take up to four points on the conic and one
on the line, in general position.  Three collinear points, a fifth point on
the conic or a second point on the line each break strong asymptotic
positivity; the classifier names the curve responsible.
"""

from saldp import BlowupConfig, DivisorClass, IncidenceDecl, classify, family
from saldp.flags import enumerate_flag_families

base = family("II.1A").instance()
print("Flag families on conic + line:")
for fam in enumerate_flag_families(base):
    if fam.kind == "boundary":
        print(f"  {fam.component}: {fam.comparison} {fam.threshold} points")
print("  plus every curve meeting the boundary only at blown-up points (c ~ -K)")


def report(title, config):
    verdict = classify(config)
    if verdict:
        print(f"{title:<38} -> {verdict}")
    else:
        w = verdict.witness
        print(f"{title:<38} -> not SALdP: {w.fired_condition} (sigma {w.sigma.base})")


print()
for counts in [(1, 0), (2, 1), (4, 1), (5, 0), (0, 2)]:
    report(f"{counts[0]} on the conic, {counts[1]} on the line", BlowupConfig.on_components(base, counts))

general = BlowupConfig.on_components(base, (2, 1))
collinear = BlowupConfig.on_components(base, (2, 1), [IncidenceDecl(DivisorClass((1,)), general.point_ids)])
report("the same three points, collinear", collinear)

print("\nThe cubic takes eight general points; special positions are flagged:")
cubic = family("I.1A").instance()
report("eight general points", BlowupConfig.on_components(cubic, (8,)))
six = BlowupConfig.on_components(cubic, (6,))
report("six on a conic", BlowupConfig.on_components(cubic, (6,), [IncidenceDecl(DivisorClass((2,)), six.point_ids)]))
report("nine points", BlowupConfig.on_components(cubic, (9,)))
