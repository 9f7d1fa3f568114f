"""Schoolbook method implementations (the "traditional" pane).

Same MethodRun shape as the mental-arithmetic pane so the two stay
structurally comparable, but the familiar presentations: shifted partial
product rows, carry marks above columns, digit-pair square root, and
borrowing.
"""

from __future__ import annotations

from typing import Sequence

from .digits import DigitString, value_of
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
    "long_multiply",
    "column_add",
    "long_division_sqrt",
    "borrow_subtract",
]

PANE: Pane = "traditional"


def _dedupe(cells: list[CellRef]) -> tuple[CellRef, ...]:
    return tuple(dict.fromkeys(cells))


def _sum_op(terms: list[int]) -> BasicOp | None:
    if len(terms) < 2:
        return None
    return BasicOp.of(PLUS.join(str(t) for t in terms))


def _metrics(steps: list[MainStep], carries: int, mults: int, adds: int) -> Metrics:
    return Metrics(
        digit_multiplications=mults,
        digit_additions=adds,
        carries=carries,
        main_steps=len(steps),
        basic_ops=sum(len(s.sub_ops) for s in steps),
    )


def long_multiply(a: DigitString, b: DigitString) -> MethodRun:
    """Schoolbook long multiplication: one shifted partial-product row per
    digit of b, then columnar addition of the rows.

    Operands are taken exactly as given (no padding); with a single-digit
    multiplier the lone partial row is the product itself.
    """
    la, lb = len(a), len(b)
    cols = la + lb
    row_a, row_b = 0, 1
    first_partial_row = 3
    single_row = lb == 1
    blocks = [
        GridBlock("operand-row", 0, 1, "operands"),
        GridBlock("guide", 2, 2, TIMES),
    ]
    if single_row:
        blocks.append(GridBlock("result-row", 3, 3, "product"))
        rows = 4
        row_result = 3
    else:
        blocks.append(
            GridBlock("work-row", 3, 3 + lb - 1, "partial products")
        )
        blocks.append(GridBlock("guide", 3 + lb, 3 + lb, PLUS))
        blocks.append(GridBlock("result-row", 4 + lb, 4 + lb, "product"))
        rows = 5 + lb
        row_result = 4 + lb
    layout = GridSpec(rows=rows, cols=cols, blocks=tuple(blocks))

    steps: list[MainStep] = []
    mults = adds = carry_notes = 0
    partial_digits: list[list[int]] = []  # per row, least significant first

    for j in range(lb):
        bd = b.digits[j]
        row = first_partial_row + j
        carry = 0
        digits_here: list[int] = []
        for i in range(la):
            ad = a.digits[i]
            product = ad * bd
            sub_ops = [BasicOp.of(f"{ad}{TIMES}{bd}")]
            mults += 1
            total = product
            if carry > 0:
                sub_ops.append(BasicOp.of(f"{product}{PLUS}{carry}"))
                adds += 1
                total = product + carry
            digit, new_carry = total % 10, total // 10
            digits_here.append(digit)
            writes = [
                CellWrite(CellRef(PANE, row, display_col(i + j, cols)), str(digit))
            ]
            description = f"Multiply {ad}{TIMES}{bd} = {product}"
            if carry > 0:
                description += f", plus carry {carry} = {total}"
            description += f"; write {digit}"
            note = None
            if new_carry > 0:
                note = CarryNote(value=new_carry, target_col=display_col(i + j + 1, cols))
                carry_notes += 1
                description += f", carry {new_carry}"
            description += "."
            if i == la - 1 and new_carry > 0:
                # last digit of this row: the leftover carry completes it
                writes.append(
                    CellWrite(
                        CellRef(PANE, row, display_col(la + j, cols)), str(new_carry)
                    )
                )
                digits_here.append(new_carry)
                description += f" The carry {new_carry} ends the row."
            steps.append(
                MainStep(
                    index=len(steps),
                    description=description,
                    highlights=(
                        CellRef(PANE, row_a, display_col(i, cols)),
                        CellRef(PANE, row_b, display_col(j, cols)),
                    ),
                    writes=tuple(writes),
                    sub_ops=tuple(sub_ops),
                    carry_note=note,
                )
            )
            carry = new_carry
        partial_digits.append(digits_here)

    if single_row:
        result_digits = partial_digits[0]
    else:
        result_digits = []
        carry = 0
        place = 0
        while True:
            terms = [
                digits[place - j]
                for j, digits in enumerate(partial_digits)
                if 0 <= place - j < len(digits)
            ]
            if not terms and carry == 0:
                break
            highlights = [
                CellRef(PANE, first_partial_row + j, display_col(place, cols))
                for j, digits in enumerate(partial_digits)
                if 0 <= place - j < len(digits)
            ]
            if carry > 0:
                terms.append(carry)
            total = sum(terms)
            digit, carry = total % 10, total // 10
            result_digits.append(digit)
            column_sum = _sum_op(terms)
            sub_ops = (column_sum,) if column_sum else ()
            if column_sum:
                adds += len(terms) - 1
                description = (
                    f"Add column {place}: {column_sum.expression} = {total}; "
                    f"write {digit}."
                )
            else:
                description = f"Bring down the {digit} in column {place}."
            note = None
            if carry > 0:
                note = CarryNote(value=carry, target_col=display_col(place + 1, cols))
                carry_notes += 1
                description += f" Carry {carry}."
            steps.append(
                MainStep(
                    index=len(steps),
                    description=description,
                    highlights=_dedupe(highlights),
                    writes=(
                        CellWrite(
                            CellRef(PANE, row_result, display_col(place, cols)),
                            str(digit),
                        ),
                    ),
                    sub_ops=sub_ops,
                    carry_note=note,
                )
            )
            place += 1

    return MethodRun(
        pane=PANE,
        steps=tuple(steps),
        result=DigitString(tuple(result_digits)),
        metrics=_metrics(steps, carry_notes, mults, adds),
        layout=layout,
    )


def column_add(operands: Sequence[DigitString]) -> MethodRun:
    """Right-to-left column addition with carry marks above the columns."""
    if not 2 <= len(operands) <= 10:
        raise ArityError(
            f"column addition takes 2..10 operands, got {len(operands)}"
        )
    m = len(operands)
    max_len = max(len(d) for d in operands)

    columns: list[tuple[list[int], int, int, int]] = []
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
    row_marks, row_result = 0, m + 2
    layout = GridSpec(
        rows=m + 3,
        cols=cols,
        blocks=(
            GridBlock("work-row", 0, 0, "carries"),
            GridBlock("operand-row", 1, m, "operands"),
            GridBlock("guide", m + 1, m + 1, PLUS),
            GridBlock("result-row", m + 2, m + 2, "sum"),
        ),
    )

    steps: list[MainStep] = []
    adds = carry_notes = 0
    had_carry_in = False
    for k, (terms, total, digit, col_carry) in enumerate(columns):
        highlights = [
            CellRef(PANE, 1 + r, display_col(k, cols))
            for r, d in enumerate(operands)
            if k < len(d)
        ]
        if had_carry_in:
            highlights.append(CellRef(PANE, row_marks, display_col(k, cols)))
        sub_ops: tuple[BasicOp, ...]
        column_sum = _sum_op(terms)
        if column_sum is not None:
            sub_ops = (column_sum,)
            adds += len(terms) - 1
            description = (
                f"Add column {k}: {column_sum.expression} = {total}; write {digit}."
            )
        else:
            sub_ops = ()
            description = f"Bring down the {digit} in column {k}."
        writes = [
            CellWrite(CellRef(PANE, row_result, display_col(k, cols)), str(digit))
        ]
        note = None
        if col_carry > 0:
            note = CarryNote(value=col_carry, target_col=display_col(k + 1, cols))
            carry_notes += 1
            if k + 1 < max_len:
                writes.append(
                    CellWrite(
                        CellRef(PANE, row_marks, display_col(k + 1, cols)),
                        str(col_carry),
                    )
                )
                description += f" Carry {col_carry} above column {k + 1}."
            else:
                description += f" Carry {col_carry}."
        steps.append(
            MainStep(
                index=len(steps),
                description=description,
                highlights=_dedupe(highlights),
                writes=tuple(writes),
                sub_ops=sub_ops,
                carry_note=note,
            )
        )
        had_carry_in = col_carry > 0
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
        metrics=_metrics(steps, carry_notes, 0, adds),
        layout=layout,
    )


def long_division_sqrt(x: DigitString) -> MethodRun:
    """Digit-pair square root: bring down pairs, find the largest t with
    (20p + t) * t fitting the running remainder, p being the root so far."""
    msb = list(reversed(x.digits))
    n = len(msb)
    first = 1 if n % 2 else 2
    groups: list[tuple[int, int, int]] = []  # value, left col, right col
    groups.append((int("".join(map(str, msb[:first]))), 0, first - 1))
    pos = first
    while pos < n:
        groups.append((msb[pos] * 10 + msb[pos + 1], pos, pos + 1))
        pos += 2

    cols = n
    row_x, row_work, row_root, row_rem = 0, 1, 2, 3
    layout = GridSpec(
        rows=4,
        cols=cols,
        blocks=(
            GridBlock("operand-row", 0, 0, "radicand"),
            GridBlock("work-row", 1, 1, "working remainder"),
            GridBlock("result-row", 2, 2, "root"),
            GridBlock("work-row", 3, 3, "remainder"),
        ),
    )

    steps: list[MainStep] = []
    mults = adds = 0
    root = 0
    rem = 0
    root_cols: list[int] = []
    for gi, (value, left, right) in enumerate(groups):
        rem = rem * 100 + value if gi else value
        group_text = "".join(str(msb[c]) for c in range(left, right + 1))
        t = 0
        while t < 9 and (20 * root + t + 1) * (t + 1) <= rem:
            t += 1
        trial_base = 20 * root + t
        sub = trial_base * t
        sub_ops: tuple[BasicOp, ...]
        if t > 0:
            sub_ops = (
                BasicOp.of(f"20{TIMES}{root}{PLUS}{t}"),
                BasicOp.of(f"{trial_base}{TIMES}{t}"),
                BasicOp.of(f"{rem}{MINUS}{sub}"),
            )
            mults += 2
            adds += 1
            description = (
                f"Bring down {group_text}: dividend {rem}; largest t with "
                f"(20{TIMES}{root}+t){TIMES}t fitting is {t} "
                f"({trial_base}{TIMES}{t} = {sub}); remainder {rem - sub}."
            )
        else:
            sub_ops = ()
            description = (
                f"Bring down {group_text}: dividend {rem}; no digit fits; write 0."
            )
        new_rem = rem - sub
        highlights = [CellRef(PANE, row_x, c) for c in range(left, right + 1)]
        highlights += [CellRef(PANE, row_root, c) for c in root_cols]
        writes = [
            CellWrite(CellRef(PANE, row_work, right), str(new_rem)),
            CellWrite(CellRef(PANE, row_root, right), str(t)),
        ]
        if gi == len(groups) - 1:
            writes.append(CellWrite(CellRef(PANE, row_rem, cols - 1), str(new_rem)))
            description += f" Final remainder {new_rem}."
        steps.append(
            MainStep(
                index=len(steps),
                description=description,
                highlights=_dedupe(highlights),
                writes=tuple(writes),
                sub_ops=sub_ops,
            )
        )
        root = root * 10 + t
        rem = new_rem
        root_cols.append(right)

    root_str = str(root).zfill(len(groups))
    result = DigitString(tuple(int(ch) for ch in reversed(root_str)))
    return MethodRun(
        pane=PANE,
        steps=tuple(steps),
        result=result,
        metrics=_metrics(steps, 0, mults, adds),
        layout=layout,
        remainder=rem,
    )


def borrow_subtract(a: DigitString, b: DigitString) -> MethodRun:
    """Right-to-left subtraction with explicit borrows."""
    if value_of(a) < value_of(b):
        raise NegativeResultError(value_of(a), value_of(b))
    w = max(len(a), len(b))
    cols = w
    row_a, row_b, row_result = 0, 1, 3
    layout = GridSpec(
        rows=4,
        cols=cols,
        blocks=(
            GridBlock("operand-row", 0, 1, "operands"),
            GridBlock("guide", 2, 2, MINUS),
            GridBlock("result-row", 3, 3, "difference"),
        ),
    )

    steps: list[MainStep] = []
    adds = carry_notes = 0
    borrow = 0
    result_digits: list[int] = []
    for k in range(w):
        av = a.digits[k] if k < len(a) else 0
        bv = b.digits[k] if k < len(b) else 0
        sub_ops: list[BasicOp] = []
        if av - borrow >= bv:
            running = av
            description = ""
            if borrow:
                sub_ops.append(BasicOp.of(f"{av}{MINUS}1"))
                running = av - 1
                description = f"Pay back the borrow: {av}{MINUS}1 = {running}. "
            digit = running - bv
            if bv > 0 or (borrow and bv == 0):
                if bv > 0:
                    sub_ops.append(BasicOp.of(f"{running}{MINUS}{bv}"))
                description += (
                    f"Subtract place {k}: {running}{MINUS}{bv} = {digit}."
                    if bv > 0
                    else f"Write {digit} in place {k}."
                )
            else:
                description = f"Nothing to subtract in place {k}; bring down {av}."
            new_borrow = 0
        else:
            lifted = av + 10
            sub_ops.append(BasicOp.of(f"{av}{PLUS}10"))
            adds += 1
            running = lifted
            description = (
                f"Place {k}: {av} is too small; borrow 1 from place {k + 1} "
                f"({av}{PLUS}10 = {lifted})."
            )
            if borrow:
                sub_ops.append(BasicOp.of(f"{lifted}{MINUS}1"))
                running = lifted - 1
                description += f" Pay back the borrow: {lifted}{MINUS}1 = {running}."
            digit = running - bv
            sub_ops.append(BasicOp.of(f"{running}{MINUS}{bv}"))
            description += f" Subtract: {running}{MINUS}{bv} = {digit}."
            new_borrow = 1
        result_digits.append(digit)
        writes = [
            CellWrite(CellRef(PANE, row_result, display_col(k, cols)), str(digit))
        ]
        note = None
        if new_borrow:
            note = CarryNote(value=1, target_col=display_col(k + 1, cols))
            carry_notes += 1
        highlights = [CellRef(PANE, row_a, display_col(k, cols))]
        if k < len(b):
            highlights.append(CellRef(PANE, row_b, display_col(k, cols)))
        steps.append(
            MainStep(
                index=len(steps),
                description=description,
                highlights=tuple(highlights),
                writes=tuple(writes),
                sub_ops=tuple(sub_ops),
                carry_note=note,
            )
        )
        borrow = new_borrow
    return MethodRun(
        pane=PANE,
        steps=tuple(steps),
        result=DigitString(tuple(result_digits)),
        metrics=_metrics(steps, carry_notes, 0, adds),
        layout=layout,
    )
