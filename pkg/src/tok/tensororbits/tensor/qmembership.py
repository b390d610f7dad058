from __future__ import annotations

import enum
from typing import Tuple

from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.linalg.matrixfq import rank
from tok.tensororbits.linalg.subspace import col_space
from tok.tensororbits.linalg.subspace import row_space
from tok.tensororbits.linalg.subspace import Subspace


class QMembership(enum.Enum):
    """Position of a rank-1 point relative to the Segre subvariety through a rank-2 point"""

    INSIDE = "inside"
    COL_ONLY = "col_only"
    ROW_ONLY = "row_only"
    OUTSIDE = "outside"


def q_of(m: MatrixFq) -> Tuple[Subspace, Subspace]:
    """
    For a rank-2 matrix, the column and row spaces whose Segre product is the unique S_2,2 spanning a solid through
    the point.
    """
    if rank(m) != 2:
        raise ValueError(f"q_of requires a rank-2 matrix (got rank {rank(m)} for {m!r})")
    return col_space(m), row_space(m)


def in_Q(n: MatrixFq, m: MatrixFq) -> QMembership:  # noqa: N802
    if rank(n) != 1:
        raise ValueError(f"in_Q requires a rank-1 first argument (got rank {rank(n)} for {n!r})")

    cols, rows = q_of(m)
    col_inside = col_space(n).is_subspace_of(cols)
    row_inside = row_space(n).is_subspace_of(rows)

    if col_inside and row_inside:
        return QMembership.INSIDE
    if col_inside:
        return QMembership.COL_ONLY
    if row_inside:
        return QMembership.ROW_ONLY
    return QMembership.OUTSIDE
