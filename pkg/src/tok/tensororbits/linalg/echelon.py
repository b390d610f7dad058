from typing import List
from typing import Sequence
from typing import Tuple

from tok.tensororbits.gf.fieldspec import FieldSpec

Vector = Tuple[int, ...]


def rref_rows(field: FieldSpec, rows: Sequence[Sequence[int]]) -> Tuple[Vector, ...]:
    """
    Gauss-Jordan reduction of the given rows over field.  Returns the nonzero rows of the reduced row echelon form,
    which is the canonical basis of their span: pivots strictly increase, every pivot is 1 and is the only nonzero entry
    of its column.
    """
    add = field.add_table
    mul = field.mul_table
    neg = field.neg_table

    work: List[List[int]] = [list(r) for r in rows if any(r)]
    if not work:
        return ()

    ncols = len(work[0])
    pivot_row = 0
    for c in range(ncols):
        pr = next((r for r in range(pivot_row, len(work)) if work[r][c]), None)
        if pr is None:
            continue

        work[pivot_row], work[pr] = work[pr], work[pivot_row]
        scale = mul[field.inv(work[pivot_row][c])]
        pivot = [scale[x] for x in work[pivot_row]]
        work[pivot_row] = pivot

        for r in range(len(work)):
            factor = work[r][c]
            if r != pivot_row and factor:
                eliminate = mul[neg[factor]]
                work[r] = [add[x][eliminate[y]] for x, y in zip(work[r], pivot)]

        pivot_row += 1
        if pivot_row == len(work):
            break

    return tuple(tuple(r) for r in work[:pivot_row])


def pivot_columns(basis: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    return tuple(next(i for i, x in enumerate(v) if x) for v in basis)
