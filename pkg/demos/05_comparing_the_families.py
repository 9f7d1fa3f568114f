"""Side-by-side runs: same computation, different work.

Both families always produce the same value; the interesting part is the
operation-count deltas (vedic minus traditional).  After padding, criss-
cross does n^2 digit multiplications where long multiplication does
len(a) * len(b), so unequal lengths trade extra multiplications for a
flatter step structure.
"""

from sutratrace import build_comparison, parse_operand

for operation, texts in [
    ("multiply", ("12", "345")),
    ("add", ("999", "999", "2")),
    ("sqrt", ("152399025",)),
]:
    report = build_comparison(operation, [parse_operand(t) for t in texts])
    v, t = report.vedic, report.traditional
    print(f"{operation} {', '.join(texts)}")
    print(f"  vedic       {v.method_id:<32} result {v.result}")
    print(f"  traditional {t.method_id:<32} result {t.result}")
    for key, delta in sorted(report.deltas.items()):
        if delta:
            print(f"    {key}: {delta:+d}")
    print()
