"""The scan bijection between tableaux and admissible paths.

Reading the entries 1..n in order: the minimum of a row-1 cell becomes
an up-step, the minimum of a row-2 cell a down-step, every other row-1
entry an umber horizontal and every other row-2 entry a denim
horizontal.  The path starts at height f and ends at height t.  The
inverse scan opens a new cell per up/down step and appends horizontal
entries to the most recently opened cell of the matching row.
"""

from __future__ import annotations

from svtab.paths import ColouredPath, Step, is_admissible
from svtab.shapes import SetValuedTableau, TwoRowShape, is_valid


def tableau_to_path(tab: SetValuedTableau) -> ColouredPath:
    if not is_valid(tab):
        raise ValueError("tableau violates the ordering condition")
    r1 = tab.shape.row1_cells
    cell_of = {}
    for idx, s in enumerate(tab.content):
        for entry in s:
            cell_of[entry] = idx
    steps = []
    for i in range(1, tab.n + 1):
        idx = cell_of[i]
        row1 = idx < r1
        if i == min(tab.content[idx]):
            steps.append(Step.UP if row1 else Step.DOWN)
        else:
            steps.append(Step.HOR_UMBER if row1 else Step.HOR_DENIM)
    return ColouredPath(tab.shape.f, tuple(steps))


def path_to_tableau(path: ColouredPath) -> SetValuedTableau:
    if len(path) < 1:
        raise ValueError("the empty path corresponds to no tableau")
    if not is_admissible(path):
        raise ValueError("path violates the admissibility constraints")
    row1: list[list[int]] = []
    row2: list[list[int]] = []
    for i, s in enumerate(path.steps, start=1):
        if s is Step.UP:
            row1.append([i])
        elif s is Step.DOWN:
            row2.append([i])
        elif s is Step.HOR_UMBER:
            row1[-1].append(i)
        else:
            row2[-1].append(i)
    f = path.start_height
    t = path.end_height
    e = len(row2)
    # up-steps open row-1 cells, so their count must close the books
    assert len(row1) == e - f + t
    shape = TwoRowShape(e=e, t=t, f=f)
    content = tuple(frozenset(c) for c in row1 + row2)
    return SetValuedTableau(shape, content, len(path))
