"""Subtracting by adding: the all-from-9-last-from-10 complement.

1000 - 456 never borrows: the complement of 456 is read off digit by digit
(9-4, 9-5, 10-6), added to the minuend, and the overflow 1 is discarded.
"""

from sutratrace import NegativeResultError, build_trace, parse_operand

trace = build_trace(
    "vedic.subtract.complement", [parse_operand("1000"), parse_operand("456")]
)
print(f"1000 - 456 = {trace.result}")
for step in trace.steps:
    print(f"  step {step.index + 1}: {step.description}")

print()
try:
    build_trace(
        "vedic.subtract.complement", [parse_operand("123"), parse_operand("456")]
    )
except Exception as err:
    print(f"123 - 456 is blocked before any steps run: {err}")
