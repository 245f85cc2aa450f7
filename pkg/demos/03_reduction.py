"""From a blow-up back to its base.

The -1-curves of a configuration are split by how they meet the boundary.
Contracting the ones meeting it once undoes the blow-ups; on F_1 the
negative section may go too, landing on P^2.  The lattice map recorded
along the way carries the boundary back to where it started.
"""

from saldp import BlowupConfig, family
from saldp.reduction import blowdown_type, partition_minus_one, reduce_to_rank2

cubic = family("I.1A").instance()
for m in range(1, 9):
    part = partition_minus_one(BlowupConfig.on_components(cubic, (m,)))
    print(f"cubic blown up at {m} points: {len(part.perp):>3} -1-curves, all meeting the boundary once")

config = BlowupConfig.on_components(family("I.5.1").instance(), (3,))
part = partition_minus_one(config)
print(f"\n2Z + 3F on F_1 with 3 points: {len(part.perp)} proper, {len(part.away)} away, {len(part.in_boundary)} in the boundary")

base, report = reduce_to_rank2(config)
for c in report.contractions:
    print(f"  contract {c.curve} ({c.kind}) -> point {c.point_id} on {c.on}")
print(f"reduced base: {base.surface} with boundary {[cls.base for cls in base.classes]}")
print(f"same configuration over the plane: {report.equivalent.m} points")
print(f"boundary transforms reproduced: {report.round_trip() == config.boundary_transforms()}")

tail = BlowupConfig(family("II.2C.n").instance(1))
print(f"\nZ_1 inside Z_1 + F on F_1 is a {blowdown_type(tail, tail.base.classes[0])} component")
