"""The duplex square root, including a case where the trial digit overdraws.

The divisor is fixed at twice the first root digit; each later step brings
down one digit and subtracts the duplex of the root digits found so far.
When a greedy trial digit would drive a later column negative, the method
lowers it in an explicit adjustment step, exactly as a student would erase
and retry.
"""

from sutratrace.digits import parse_operand
from sutratrace.vedic import duplex_sqrt

for text in ("2025", "10200"):
    run = duplex_sqrt(parse_operand(text))
    print(f"sqrt({text}) = {run.result} remainder {run.remainder}")
    for step in run.steps:
        marker = " <- adjustment" if step.description.startswith("Adjust") else ""
        print(f"  step {step.index + 1}: {step.description}{marker}")
    print()
