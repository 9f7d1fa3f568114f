"""Mental-arithmetic method implementations (the "vedic" pane).

Each function runs its technique digit by digit and returns a MethodRun:
the ordered MainSteps, the result digits, self-counted metrics, and the
grid layout the steps write into.  The engine wraps these into traces.

Grid conventions: operand digits are rendered by consumers from the trace
operands (right-aligned on operand rows); only values the method *produces*
are writes.  Padding zeros appended to the left of an operand count as
produced values and are written the first time their column participates.
"""

from __future__ import annotations

from typing import Sequence

from .digits import DigitString, duplex, pad_to_length, value_of
from .errors import ArityError, NegativeResultError
from .model import (
    MINUS,
    PLUS,
    TIMES,
    BasicOp,
    CarryNote,
    CellRef,
    CellWrite,
    GridBlock,
    GridSpec,
    MainStep,
    MethodRun,
    Metrics,
    Pane,
    display_col,
)

__all__ = [
    "criss_cross_multiply",
    "place_value_add",
    "duplex_sqrt",
    "complement_subtract",
    "MAX_ADD_OPERANDS",
]

PANE: Pane = "vedic"
MAX_ADD_OPERANDS = 10  # grid width the step player can render


def _dedupe(cells: list[CellRef]) -> tuple[CellRef, ...]:
    return tuple(dict.fromkeys(cells))


def _sum_op(terms: list[int]) -> BasicOp | None:
    """Column-sum op; omitted for the degenerate single-term case."""
    if len(terms) < 2:
        return None
    return BasicOp.of(PLUS.join(str(t) for t in terms))


def criss_cross_multiply(a: DigitString, b: DigitString) -> MethodRun:
    """Vertically-and-crosswise multiplication.

    Operands are padded to equal length n; column k (one MainStep each,
    k = 0..2n-2) multiplies every digit pair with i + j = k, most
    significant a-digit first, then sums the products plus the incoming
    carry.  A nonzero final carry becomes one closing step.
    """
    n = max(len(a), len(b))
    pa, pb = pad_to_length(a, n), pad_to_length(b, n)
    cols = 2 * n
    row_a, row_b, row_result = 0, 1, 3
    layout = GridSpec(
        rows=4,
        cols=cols,
        blocks=(
            GridBlock("operand-row", 0, 1, "operands"),
            GridBlock("guide", 2, 2, TIMES),
            GridBlock("result-row", 3, 3, "product"),
        ),
    )

    steps: list[MainStep] = []
    result_digits: list[int] = []
    mults = adds = carry_notes = 0
    revealed: set[tuple[int, int]] = set()
    carry = 0
    for k in range(2 * n - 1):
        i_hi, i_lo = min(k, n - 1), max(0, k - n + 1)
        writes: list[CellWrite] = []
        highlights: list[CellRef] = []
        sub_ops: list[BasicOp] = []
        products: list[str] = []
        terms: list[int] = []
        for i in range(i_hi, i_lo - 1, -1):
            j = k - i
            for row, given_len, place in ((row_a, len(a), i), (row_b, len(b), j)):
                if place >= given_len and (row, place) not in revealed:
                    writes.append(
                        CellWrite(CellRef(PANE, row, display_col(place, cols)), "0")
                    )
                    revealed.add((row, place))
            op = BasicOp.of(f"{pa.digits[i]}{TIMES}{pb.digits[j]}")
            sub_ops.append(op)
            mults += 1
            products.append(op.expression)
            terms.append(op.result)
            highlights.append(CellRef(PANE, row_a, display_col(i, cols)))
            highlights.append(CellRef(PANE, row_b, display_col(j, cols)))
        if carry > 0:
            terms.append(carry)
        column_sum = _sum_op(terms)
        if column_sum is not None:
            sub_ops.append(column_sum)
            adds += len(terms) - 1
        total = column_sum.result if column_sum else terms[0]
        digit, carry = total % 10, total // 10
        result_digits.append(digit)
        writes.append(
            CellWrite(CellRef(PANE, row_result, display_col(k, cols)), str(digit))
        )
        note = None
        if carry > 0:
            note = CarryNote(value=carry, target_col=display_col(k + 1, cols))
            carry_notes += 1
        shown = ", ".join(products)
        if k == 0:
            description = f"Multiply the ones digits {shown}; write {digit}."
        elif k == 2 * n - 2:
            description = (
                f"Multiply the highest-place digits {shown}; "
                f"column total {total}; write {digit}."
            )
        else:
            description = (
                f"Cross products for place {k}: {shown}; "
                f"column total {total}; write {digit}."
            )
        if carry > 0:
            description += f" Carry {carry} to place {k + 1}."
        steps.append(
            MainStep(
                index=len(steps),
                description=description,
                highlights=_dedupe(highlights),
                writes=tuple(writes),
                sub_ops=tuple(sub_ops),
                carry_note=note,
            )
        )
    if carry > 0:
        closing_writes: list[CellWrite] = []
        place = 2 * n - 1
        c = carry
        while c > 0:
            c, d = divmod(c, 10)
            closing_writes.append(
                CellWrite(CellRef(PANE, row_result, display_col(place, cols)), str(d))
            )
            result_digits.append(d)
            place += 1
        steps.append(
            MainStep(
                index=len(steps),
                description=f"Write the final carry {carry} as the leading digit.",
                writes=tuple(closing_writes),
            )
        )
    return MethodRun(
        pane=PANE,
        steps=tuple(steps),
        result=DigitString(tuple(result_digits)),
        metrics=Metrics(
            digit_multiplications=mults,
            digit_additions=adds,
            carries=carry_notes,
            main_steps=len(steps),
            basic_ops=sum(len(s.sub_ops) for s in steps),
        ),
        layout=layout,
    )


def place_value_add(operands: Sequence[DigitString]) -> MethodRun:
    """Place-value addition of 2..10 operands.

    One MainStep per place: the column's digits plus the incoming carry are
    summed, the full column total is written on the working row, the units
    digit of the total lands in the result row, and the rest carries on.
    """
    if not 2 <= len(operands) <= MAX_ADD_OPERANDS:
        raise ArityError(
            f"place-value addition takes 2..{MAX_ADD_OPERANDS} operands, "
            f"got {len(operands)}"
        )
    m = len(operands)
    max_len = max(len(d) for d in operands)

    # First pass: pure column arithmetic, so the grid can be sized exactly.
    columns: list[tuple[list[int], int, int, int]] = []  # terms, total, digit, carry
    carry = 0
    result_digits: list[int] = []
    for k in range(max_len):
        terms = [d.digits[k] for d in operands if k < len(d)]
        if carry > 0:
            terms.append(carry)
        total = sum(terms)
        digit, carry = total % 10, total // 10
        columns.append((terms, total, digit, carry))
        result_digits.append(digit)
    final_carry = carry
    if final_carry > 0:
        result_digits.append(final_carry)

    cols = max(max_len, len(result_digits))
    row_work, row_result = m, m + 2
    layout = GridSpec(
        rows=m + 3,
        cols=cols,
        blocks=(
            GridBlock("operand-row", 0, m - 1, "operands"),
            GridBlock("work-row", m, m, "column totals"),
            GridBlock("guide", m + 1, m + 1, PLUS),
            GridBlock("result-row", m + 2, m + 2, "sum"),
        ),
    )

    steps: list[MainStep] = []
    adds = carry_notes = 0
    for k, (terms, total, digit, col_carry) in enumerate(columns):
        highlights = [
            CellRef(PANE, r, display_col(k, cols))
            for r, d in enumerate(operands)
            if k < len(d)
        ]
        sub_ops: list[BasicOp] = []
        column_sum = _sum_op(terms)
        if column_sum is not None:
            sub_ops.append(column_sum)
            adds += len(terms) - 1
            description = (
                f"Add the place-{k} digits: {column_sum.expression} = {total}; "
                f"write {digit}."
            )
        else:
            description = f"Only one digit in place {k}: write {digit}."
        note = None
        if col_carry > 0:
            note = CarryNote(value=col_carry, target_col=display_col(k + 1, cols))
            carry_notes += 1
            description += f" Carry {col_carry}."
        writes = [
            CellWrite(CellRef(PANE, row_work, display_col(k, cols)), str(total)),
            CellWrite(CellRef(PANE, row_result, display_col(k, cols)), str(digit)),
        ]
        steps.append(
            MainStep(
                index=len(steps),
                description=description,
                highlights=_dedupe(highlights),
                writes=tuple(writes),
                sub_ops=tuple(sub_ops),
                carry_note=note,
            )
        )
    if final_carry > 0:
        steps.append(
            MainStep(
                index=len(steps),
                description=f"Write the final carry {final_carry}.",
                writes=(
                    CellWrite(
                        CellRef(PANE, row_result, display_col(max_len, cols)),
                        str(final_carry),
                    ),
                ),
            )
        )
    return MethodRun(
        pane=PANE,
        steps=tuple(steps),
        result=DigitString(tuple(result_digits)),
        metrics=Metrics(
            digit_multiplications=0,
            digit_additions=adds,
            carries=carry_notes,
            main_steps=len(steps),
            basic_ops=sum(len(s.sub_ops) for s in steps),
        ),
        layout=layout,
    )


def _duplex_expr(window: tuple[int, ...]) -> BasicOp:
    """Duplex of a root-digit window, spelled out pair by pair."""
    parts: list[str] = []
    last = len(window) - 1
    for i in range((last + 2) // 2):
        j = last - i
        if i == j:
            parts.append(f"{window[i]}{TIMES}{window[i]}")
        else:
            parts.append(f"2{TIMES}{window[i]}{TIMES}{window[j]}")
    return BasicOp.of(PLUS.join(parts))


def _sqrt_core_digits(core: list[int]) -> tuple[list[int], dict[int, int], int]:
    """Greedy duplex square-root digit selection over normalized digits.

    Returns (root digits most-significant first, first trial digit per
    division position where it differed, initial remainder after the first
    group).  Digit choices that later drive a net dividend negative are
    lowered and the process resumes from that point; the first group digit
    is always exact and never adjusted.
    """
    n = len(core)
    g = 1 if n % 2 else 2
    q_count = (n + 1) // 2
    group = core[0] * 10 + core[1] if g == 2 else core[0]
    r1 = 0
    while (r1 + 1) ** 2 <= group:
        r1 += 1
    divisor = 2 * r1
    root = [r1]
    positions = n - g
    rho_after = {0: group - r1 * r1}
    nd_at: dict[int, int] = {}
    first_trial: dict[int, int] = {}
    t = 1
    while t <= positions:
        gd = 10 * rho_after[t - 1] + core[g + t - 1]
        lo, hi = max(2, t + 2 - q_count), min(t, q_count)
        window = tuple(root[lo - 1 : hi])
        dup = duplex(DigitString(window)) if window else 0
        nd = gd - dup
        if nd < 0:
            s = min(t - 1, q_count - 1)
            while s >= 1 and root[s] == 0:
                s -= 1
            if s < 1:
                raise AssertionError("first square-root digit can never overdraw")
            root = root[: s + 1]
            root[s] -= 1
            rho_after[s] = nd_at[s] - root[s] * divisor
            t = s + 1
            continue
        nd_at[t] = nd
        if t <= q_count - 1:
            q = min(9, nd // divisor)
            first_trial.setdefault(t, q)
            root.append(q)
            rho_after[t] = nd - q * divisor
        else:
            rho_after[t] = nd
        t += 1
    trials = {t: v for t, v in first_trial.items() if v != root[t]}
    return root, trials, rho_after[0]


def duplex_sqrt(x: DigitString) -> MethodRun:
    """Duplex (Dwandwa) square root: floor root plus remainder.

    Digits are grouped in pairs from the right, one group step per root
    digit.  The first step takes the largest digit whose square fits the
    leading group and fixes the divisor at twice that digit.  Every later
    step brings down one digit, subtracts the duplex of the root digits
    found after the first, and divides by the divisor; leftover digits past
    the last root digit fold into the final group step as remainder work.
    A trial digit that would overdraw a later column gets an explicit
    adjustment step.
    """
    msb = list(reversed(x.digits))
    n = len(msb)
    lead = 0
    while lead < n - 1 and msb[lead] == 0:
        lead += 1
    core = msb[lead:]
    n_core = len(core)
    g = 1 if n_core % 2 else 2
    q_count = (n_core + 1) // 2
    q_total = (n + 1) // 2
    zero_groups = q_total - q_count
    g_full = 1 if n % 2 else 2

    core_root, trials, rho0 = _sqrt_core_digits(core)
    divisor = 2 * core_root[0]
    positions = n_core - g

    cols = n
    row_x, row_work, row_div, row_root, row_rem = 0, 1, 2, 3, 4
    layout = GridSpec(
        rows=5,
        cols=cols,
        blocks=(
            GridBlock("operand-row", 0, 0, "radicand"),
            GridBlock("work-row", 1, 1, "net dividends"),
            GridBlock("work-row", 2, 2, "divisor"),
            GridBlock("result-row", 3, 3, "root"),
            GridBlock("work-row", 4, 4, "remainder"),
        ),
    )

    steps: list[MainStep] = []
    mults = adds = 0

    # Leading all-zero groups contribute 0 to the root, one step each.
    for zg in range(zero_groups):
        right = g_full - 1 + 2 * zg
        left = right - 1 if zg > 0 else 0
        cells = [CellRef(PANE, row_x, c) for c in range(left, right + 1)]
        steps.append(
            MainStep(
                index=len(steps),
                description="Group of zeros: write root digit 0.",
                highlights=tuple(cells),
                writes=(CellWrite(CellRef(PANE, row_root, right), "0"),),
            )
        )

    # First significant group.
    r1 = core_root[0]
    group_value = core[0] * 10 + core[1] if g == 2 else core[0]
    first_ops = [
        BasicOp.of(f"{r1}{TIMES}{r1}"),
        BasicOp.of(f"{group_value}{MINUS}{r1 * r1}"),
        BasicOp.of(f"2{TIMES}{r1}"),
    ]
    mults += 2
    first_writes = [
        CellWrite(CellRef(PANE, row_root, lead + g - 1), str(r1)),
        CellWrite(CellRef(PANE, row_div, 0), str(divisor)),
    ]
    first_desc = (
        f"Leading group {group_value}: largest square below it is "
        f"{r1}{TIMES}{r1} = {r1 * r1}; write root digit {r1}, "
        f"remainder {rho0}; divisor 2{TIMES}{r1} = {divisor}."
    )
    if positions == 0:
        first_writes.append(CellWrite(CellRef(PANE, row_rem, cols - 1), str(rho0)))
        first_desc += f" Remainder {rho0}."
    steps.append(
        MainStep(
            index=len(steps),
            description=first_desc,
            highlights=tuple(CellRef(PANE, row_x, lead + i) for i in range(g)),
            writes=tuple(first_writes),
            sub_ops=tuple(first_ops),
        )
    )

    # Replay the per-digit process with the final (adjusted) root digits.
    rho = rho0
    remainder = rho0
    for t in range(1, positions + 1):
        col = lead + g + t - 1
        digit_down = core[g + t - 1]
        gd = 10 * rho + digit_down
        lo, hi = max(2, t + 2 - q_count), min(t, q_count)
        window = tuple(core_root[lo - 1 : hi])
        sub_ops = []
        if window:
            dup_op = _duplex_expr(window)
            sub_ops.append(dup_op)
            mults += sum(2 if i != len(window) - 1 - i else 1
                         for i in range((len(window) + 1) // 2))
            adds += max(0, (len(window) + 1) // 2 - 1)
            dup = dup_op.result
        else:
            dup = 0
        nd = gd - dup
        if dup > 0:
            sub_ops.append(BasicOp.of(f"{gd}{MINUS}{dup}"))
        highlights = [CellRef(PANE, row_x, col)] + [
            CellRef(PANE, row_root, lead + g + u - 1) for u in range(lo - 1, hi)
        ]
        writes = [CellWrite(CellRef(PANE, row_work, col), str(nd))]
        base = (
            f"Bring down {digit_down}: gross dividend {gd}"
            + (f"; subtract duplex {dup} leaving {nd}" if dup > 0 else "")
        )
        if t <= q_count - 1:
            q = core_root[t]
            trial = trials.get(t)
            if trial is None:
                rho = nd - q * divisor
                if q > 0:
                    sub_ops.append(BasicOp.of(f"{q}{TIMES}{divisor}"))
                    sub_ops.append(BasicOp.of(f"{nd}{MINUS}{q * divisor}"))
                    mults += 1
                writes.append(CellWrite(CellRef(PANE, row_root, col), str(q)))
                description = (
                    f"{base}; divide by {divisor}: root digit {q}, "
                    f"remainder {nd - q * divisor}."
                )
                step = MainStep(
                    index=len(steps),
                    description=description,
                    highlights=_dedupe(highlights),
                    writes=tuple(writes),
                    sub_ops=tuple(sub_ops),
                )
                steps.append(step)
            else:
                steps.append(
                    MainStep(
                        index=len(steps),
                        description=f"{base}; divide by {divisor}: trial digit {trial}.",
                        highlights=_dedupe(highlights),
                        writes=tuple(writes),
                        sub_ops=tuple(sub_ops),
                    )
                )
                rho = nd - q * divisor
                adj_ops = [BasicOp.of(f"{trial}{TIMES}{divisor}")]
                mults += 1
                if q > 0:
                    adj_ops.append(BasicOp.of(f"{q}{TIMES}{divisor}"))
                    adj_ops.append(BasicOp.of(f"{nd}{MINUS}{q * divisor}"))
                    mults += 1
                steps.append(
                    MainStep(
                        index=len(steps),
                        description=(
                            f"Adjust: trial digit {trial} overdraws a later "
                            f"column; lower it to {q} (remainder {rho})."
                        ),
                        highlights=(CellRef(PANE, row_root, col),),
                        writes=(CellWrite(CellRef(PANE, row_root, col), str(q)),),
                        sub_ops=tuple(adj_ops),
                    )
                )
            remainder = rho
        else:
            # Remainder work: fold into the step that finalized the last
            # root digit so group steps stay one per root digit.
            rho = nd
            remainder = nd
            tail = MainStep(
                index=steps[-1].index,
                description=steps[-1].description + f" {base}; remainder {nd}.",
                highlights=_dedupe(list(steps[-1].highlights) + highlights),
                writes=steps[-1].writes + tuple(writes),
                sub_ops=steps[-1].sub_ops + tuple(sub_ops),
                carry_note=steps[-1].carry_note,
            )
            steps[-1] = tail
    if positions > 0:
        final = steps[-1]
        steps[-1] = MainStep(
            index=final.index,
            description=final.description + f" Final remainder {remainder}.",
            highlights=final.highlights,
            writes=final.writes
            + (CellWrite(CellRef(PANE, row_rem, cols - 1), str(remainder)),),
            sub_ops=final.sub_ops,
            carry_note=final.carry_note,
        )

    root_digits_msb = [0] * zero_groups + core_root
    result = DigitString(tuple(reversed(root_digits_msb)))
    return MethodRun(
        pane=PANE,
        steps=tuple(steps),
        result=result,
        metrics=Metrics(
            digit_multiplications=mults,
            digit_additions=adds,
            carries=0,
            main_steps=len(steps),
            basic_ops=sum(len(s.sub_ops) for s in steps),
        ),
        layout=layout,
        remainder=remainder,
    )


def complement_subtract(a: DigitString, b: DigitString) -> MethodRun:
    """Subtraction by ten's complement (all from 9, the last from 10).

    Forms the complement of b with respect to 10**w digit by digit, adds it
    to a place by place, then discards the leading overflow 1 that stands
    for 10**w; what remains is a - b.
    """
    if value_of(a) < value_of(b):
        raise NegativeResultError(value_of(a), value_of(b))
    w = max(len(a), len(b))
    cols = w + 1
    row_a, row_b, row_comp, row_over, row_result = 0, 1, 2, 4, 5
    layout = GridSpec(
        rows=6,
        cols=cols,
        blocks=(
            GridBlock("operand-row", 0, 1, "operands"),
            GridBlock("work-row", 2, 2, "complement of b"),
            GridBlock("guide", 3, 3, PLUS),
            GridBlock("work-row", 4, 4, "overflow"),
            GridBlock("result-row", 5, 5, "difference"),
        ),
    )

    steps: list[MainStep] = []
    adds = carry_notes = 0
    b_value = value_of(b)
    padded_b = pad_to_length(b, w)
    comp_digits: list[int]

    if b_value == 0:
        comp_digits = [0] * w + [1]
        writes = [
            CellWrite(CellRef(PANE, row_comp, display_col(p, cols)), str(d))
            for p, d in enumerate(comp_digits)
        ]
        steps.append(
            MainStep(
                index=len(steps),
                description=(
                    f"The complement of 0 with respect to 10^{w} is 10^{w} itself."
                ),
                highlights=(CellRef(PANE, row_b, display_col(0, cols)),),
                writes=tuple(writes),
                sub_ops=(BasicOp.of(f"{10 ** w}{MINUS}0"),),
            )
        )
    else:
        lowest_nonzero = next(p for p, d in enumerate(padded_b.digits) if d != 0)
        comp_digits = []
        reveal: list[tuple[int, CellWrite]] = []
        for place in range(w - 1, -1, -1):  # most significant first
            d = padded_b.digits[place]
            writes = []
            if place >= len(b):
                writes.append(
                    CellWrite(CellRef(PANE, row_b, display_col(place, cols)), "0")
                )
            sub_ops: tuple[BasicOp, ...]
            if place > lowest_nonzero:
                c = 9 - d
                sub_ops = (BasicOp.of(f"9{MINUS}{d}"),)
                description = f"All from 9: 9{MINUS}{d} = {c}."
            elif place == lowest_nonzero:
                c = 10 - d
                sub_ops = (BasicOp.of(f"10{MINUS}{d}"),)
                description = f"And the last from 10: 10{MINUS}{d} = {c}."
            else:
                c = 0
                sub_ops = ()
                description = "Trailing zero stays 0."
            comp_digits.append(c)
            writes.append(
                CellWrite(CellRef(PANE, row_comp, display_col(place, cols)), str(c))
            )
            steps.append(
                MainStep(
                    index=len(steps),
                    description=description,
                    highlights=(CellRef(PANE, row_b, display_col(place, cols)),),
                    writes=tuple(writes),
                    sub_ops=sub_ops,
                )
            )
        comp_digits.reverse()  # collected most significant first

    # Place-value addition of a and the complement.
    carry = 0
    result_digits: list[int] = []
    for k in range(w):
        av = a.digits[k] if k < len(a) else 0
        cv = comp_digits[k]
        writes = []
        if k >= len(a):
            writes.append(CellWrite(CellRef(PANE, row_a, display_col(k, cols)), "0"))
        terms = [av, cv] + ([carry] if carry else [])
        total = sum(terms)
        digit, carry = total % 10, total // 10
        result_digits.append(digit)
        column_sum = _sum_op(terms)
        sub_ops = (column_sum,) if column_sum else ()
        if column_sum:
            adds += len(terms) - 1
        writes.append(
            CellWrite(CellRef(PANE, row_result, display_col(k, cols)), str(digit))
        )
        note = None
        description = (
            f"Add place {k}: {column_sum.expression} = {total}; write {digit}."
            if column_sum
            else f"Add place {k}: write {digit}."
        )
        if carry > 0:
            note = CarryNote(value=carry, target_col=display_col(k + 1, cols))
            carry_notes += 1
            description += f" Carry {carry}."
        steps.append(
            MainStep(
                index=len(steps),
                description=description,
                highlights=(
                    CellRef(PANE, row_a, display_col(k, cols)),
                    CellRef(PANE, row_comp, display_col(k, cols)),
                ),
                writes=tuple(writes),
                sub_ops=sub_ops,
                carry_note=note,
            )
        )

    # The leading 1 is the 10**w the complement borrowed; drop it.
    steps.append(
        MainStep(
            index=len(steps),
            description=(
                f"Discard the leading 1; it stands for the 10^{w} the "
                f"complement added. The remaining digits are a {MINUS} b."
            ),
            highlights=(CellRef(PANE, row_over, 0),),
            writes=(CellWrite(CellRef(PANE, row_over, 0), "1"),),
        )
    )

    return MethodRun(
        pane=PANE,
        steps=tuple(steps),
        result=DigitString(tuple(result_digits)),
        metrics=Metrics(
            digit_multiplications=0,
            digit_additions=adds,
            carries=carry_notes,
            main_steps=len(steps),
            basic_ops=sum(len(s.sub_ops) for s in steps),
        ),
        layout=layout,
    )
