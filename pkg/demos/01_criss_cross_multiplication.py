"""Walk through criss-cross multiplication, column by column.

Every answer digit comes straight out of one column of crosswise digit
products, so the product appears in a single pass with no partial rows.
"""

from sutratrace import build_trace, flatten_basic_ops, parse_operand

trace = build_trace(
    "vedic.multiply.crisscross", [parse_operand("123"), parse_operand("456")]
)

print(f"123 x 456 = {trace.result}")
print()
for step in trace.steps:
    print(f"step {step.index + 1}: {step.description}")
    for op in step.sub_ops:
        print(f"    latent: {op.expression} = {op.result}")
print()
print("latent stream (what the rolling window slides over):")
print("  " + ", ".join(op.expression for op in flatten_basic_ops(trace)))
print()
print(
    "metrics:",
    f"{trace.metrics.digit_multiplications} digit multiplications,",
    f"{trace.metrics.digit_additions} additions,",
    f"{trace.metrics.carries} carries in {trace.metrics.main_steps} steps",
)
