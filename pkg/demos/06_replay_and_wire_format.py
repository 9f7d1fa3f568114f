"""Traces are data: canonical JSON out, replay to verify, byte-stable.

A trace can be serialized, shipped, parsed back, and re-executed on empty
grids; replay fails loudly on any double write or result mismatch, which is
what makes third-party renderers trustworthy.
"""

from sutratrace import (
    build_trace,
    canonical_serialize,
    parse_operand,
    parse_trace,
    replay,
)

trace = build_trace(
    "vedic.multiply.crisscross", [parse_operand("12"), parse_operand("34")]
)

wire = canonical_serialize(trace)
print(f"canonical bytes ({len(wire)}):")
print(wire.decode()[:160] + "...")
print()

again = parse_trace(wire)
assert again == trace
assert canonical_serialize(again) == wire
print("round-trip: parse(serialize(t)) == t, byte-stable")

grids = replay(again)
print("replayed result row:", [t for t in grids["vedic"][3] if t])
