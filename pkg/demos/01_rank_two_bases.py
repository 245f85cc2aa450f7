"""Which boundaries on P^2, F_n and P^1 x P^1 survive small cone angles?

Walks the search over boundary classes, shows the affine forms that decide
each candidate, and ends with the minimal list and its log del Pezzo part.
"""

from saldp import LogPair, hirzebruch
from saldp.enumeration import enumerate_rank2_saldp, minimal_base_list
from saldp.positivity import (
    asymptotic_divisor_forms,
    failing_forms,
    is_log_del_pezzo,
    is_strongly_asymptotically_ample,
)


def show(title, pair):
    forms = ", ".join(str(f) for f in asymptotic_divisor_forms(pair))
    verdict = "accepted" if is_strongly_asymptotically_ample(pair) else f"rejected by {[str(f) for f in failing_forms(pair)]}"
    print(f"{title:<28} forms [{forms}]  {verdict}")


print("Two sections of F_n: the second form 2 - n*beta1 stays positive near 0 for every n.")
for n in (0, 1, 5, 12):
    show(f"F_{n}: Z + (Z + nF)", LogPair.build(hirzebruch(n), (1, 0), (1, n)))

print("\nOn F_2 the anticanonical-looking boundaries degenerate:")
show("F_2: 2Z + 4F", LogPair.build(hirzebruch(2), (2, 4)))
show("F_2: (Z + 2F) + (Z + 2F)", LogPair.build(hirzebruch(2), (1, 2), (1, 2)))

families = enumerate_rank2_saldp(12)
print(f"\nExhaustive search up to n = 12 finds {len(families)} families:")
print("  " + "  ".join(f.label for f in families))

minimal = minimal_base_list(12, families)
dropped = sorted({f.label for f in families} - {f.label for f in minimal})
print(f"\n{len(dropped)} of them are one-point blow-ups of plane pairs: {dropped}")
print(f"{len(minimal)} remain.")

ldp = [f.label for f in minimal if all(is_log_del_pezzo(p) for p in f.instances())]
print(f"\nAmple already at beta = 0 (log del Pezzo): {ldp}")
