"""Exact sparse linear algebra over the rationals.

Rows are dicts column -> value.  Elimination is fraction-free: each row is
scaled to integers once, every update is the integer cross-multiplication
row*pivot - pivotrow*entry, and rows are divided by their content gcd to
keep growth in check.  Back-substitution for kernel vectors runs over
Fraction.  Pivot choices are deterministic (columns in ascending order,
then the sparsest candidate row), so results are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _to_integer_row(row: dict) -> dict:
    """Scale a row of rationals to coprime integers."""
    denom_lcm = 1
    for value in row.values():
        value = Fraction(value)
        denom_lcm = denom_lcm * value.denominator // gcd(denom_lcm, value.denominator)
    scaled = {}
    for col, value in row.items():
        value = Fraction(value)
        scaled[col] = int(value * denom_lcm)
    content = 0
    for value in scaled.values():
        content = gcd(content, value)
    if content > 1:
        scaled = {c: v // content for c, v in scaled.items()}
    return scaled


def _reduce_content(row: dict):
    content = 0
    for value in row.values():
        content = gcd(content, value)
        if content == 1:
            return
    if content > 1:
        for col in row:
            row[col] //= content


def _echelon(rows: list[dict], ncols: int):
    """Row echelon form; returns the pivot list [(col, row_dict), ...].

    Pivot rows are frozen as they are chosen; every still-active row has
    all earlier pivot columns eliminated, so a frozen pivot row can only
    contain its own pivot column, free columns, and later pivot columns.
    """
    active: dict[int, dict] = {}
    col_rows: dict[int, set] = {}
    for rid, row in enumerate(rows):
        cleaned = {c: v for c, v in _to_integer_row(row).items() if v}
        if not cleaned:
            continue
        active[rid] = cleaned
        for col in cleaned:
            col_rows.setdefault(col, set()).add(rid)
    pivots: list[tuple[int, dict]] = []
    for col in range(ncols):
        candidates = [rid for rid in col_rows.get(col, ()) if rid in active]
        if not candidates:
            continue
        pivot_rid = min(candidates, key=lambda rid: (len(active[rid]), rid))
        pivot_row = active.pop(pivot_rid)
        for pcol in pivot_row:
            col_rows[pcol].discard(pivot_rid)
        pivot_value = pivot_row[col]
        pivots.append((col, pivot_row))
        for rid in [r for r in col_rows.get(col, ()) if r in active]:
            row = active[rid]
            entry = row.pop(col)
            col_rows[col].discard(rid)
            # new_row = pivot_value * row - entry * pivot_row on every column
            for rcol in row:
                row[rcol] *= pivot_value
            for pcol, pvalue in pivot_row.items():
                if pcol == col:
                    continue
                new = row.get(pcol, 0) - pvalue * entry
                if new:
                    if pcol not in row:
                        col_rows.setdefault(pcol, set()).add(rid)
                    row[pcol] = new
                else:
                    if pcol in row:
                        del row[pcol]
                        col_rows[pcol].discard(rid)
            if row:
                _reduce_content(row)
            else:
                del active[rid]
    return pivots


def rank(rows: list[dict], ncols: int) -> int:
    return len(_echelon(rows, ncols))


def nullspace(rows: list[dict], ncols: int) -> list[list[Fraction]]:
    """Basis of the kernel of the matrix, one vector per free column.

    Vector t has entry 1 at its free column; pivot entries come from back
    substitution in reverse pivot order.
    """
    pivots = _echelon(rows, ncols)
    pivot_cols = {col for col, _ in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        values: dict[int, Fraction] = {fc: Fraction(1)}
        for col, row in reversed(pivots):
            total = Fraction(0)
            for rcol, rvalue in row.items():
                if rcol == col:
                    continue
                entry = values.get(rcol)
                if entry is not None:
                    total += rvalue * entry
            if total:
                values[col] = -total / row[col]
        basis.append([values.get(c, Fraction(0)) for c in range(ncols)])
    return basis
