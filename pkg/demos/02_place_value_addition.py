"""Add several numbers at once by totalling each place value.

The working row keeps every column's full total visible; only the units
digit stays in the result row while the rest carries on.
"""

from sutratrace import build_trace, parse_operand
from sutratrace.render import final_grids

trace = build_trace(
    "vedic.add.placevalue",
    [parse_operand(t) for t in ("407", "95", "1288")],
)

print(f"407 + 95 + 1288 = {trace.result}")
print()
for step in trace.steps:
    note = f"  [carry {step.carry_note.value}]" if step.carry_note else ""
    print(f"step {step.index + 1}: {step.description}{note}")
print()
print("final grid (operands seeded, writes applied):")
grid = final_grids(trace)["vedic"]
for row in grid:
    print("  " + " ".join((t or ".").rjust(2) for t in row))
