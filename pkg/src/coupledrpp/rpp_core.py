"""Reverse plane partitions: validation, volume, slice bijection, enumeration.

A filling is stored as rows bottom-up, matching the shape.  Reading the
filling along vertical slices of the Russian-convention drawing (top cell of
each diagonal first) produces a chain of partitions interlacing according to
the hole/particle pattern of the shape's Maya diagram; that chain is the
bridge to the vertex model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from . import partitions
from .partitions import Cell, normalize, part

# Relation symbols for interlacing patterns: row k of the vertex model is
# white when pattern[k-1] == PRECEQ and gray when it is SUCCEQ.
PRECEQ = "<="
SUCCEQ = ">="


@dataclass(frozen=True)
class RPP:
    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]  # bottom-up

    def entry(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - 1]

    @property
    def volume(self) -> int:
        return sum(sum(row) for row in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)


def validate(shape, rows) -> RPP:
    """Check shape/filling agreement and monotonicity; raise on the first offense."""
    shape = normalize(shape)
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if len(rows) != len(shape):
        raise ValueError(f"{len(rows)} rows for shape of length {len(shape)}")
    for r, (row, want) in enumerate(zip(rows, shape), start=1):
        if len(row) != want:
            raise ValueError(f"row {r} has {len(row)} entries, expected {want}")
        for v in row:
            if v < 0:
                raise ValueError(f"negative entry in row {r}")
    for r, row in enumerate(rows, start=1):
        for c in range(2, len(row) + 1):
            if row[c - 2] > row[c - 1]:
                raise ValueError(
                    f"row not weakly increasing at {Cell(r, c - 1)} > {Cell(r, c)}")
    for r in range(2, len(rows) + 1):
        for c in range(1, len(rows[r - 1]) + 1):
            if rows[r - 2][c - 1] > rows[r - 1][c - 1]:
                raise ValueError(
                    f"column not weakly increasing at {Cell(r - 1, c)} > {Cell(r, c)}")
    return RPP(shape, rows)


def zero_rpp(shape) -> RPP:
    shape = normalize(shape)
    return RPP(shape, tuple(tuple(0 for _ in range(p)) for p in shape))


def interaction_pattern(lam) -> tuple[str, ...]:
    """PRECEQ at holes and SUCCEQ at particles of the shape's Maya diagram,
    read over sites -len(lam') .. lam_1 - 1."""
    lam = normalize(lam)
    if not lam:
        return ()
    depth = len(lam)  # = conjugate(lam)[0]
    width = lam[0]
    occupied = {lam[i] - (i + 1) for i in range(len(lam))}
    return tuple(
        SUCCEQ if (t in occupied) else PRECEQ
        for t in range(-depth, width)
    )


@dataclass(frozen=True)
class SliceSequence:
    pattern: tuple[str, ...]
    slices: tuple[tuple[int, ...], ...]  # empty partitions at both ends


def diagonal_rows(shape, s: int) -> tuple[int, int] | None:
    """Rows (r_lo, r_hi) of the cells on diagonal col - row = s, or None."""
    shape = normalize(shape)
    r_lo = max(1, 1 - s)
    r_hi = 0
    for r in range(r_lo, len(shape) + 1):
        if part(shape, r) < r + s:  # rows leave the diagonal monotonically
            break
        r_hi = r
    if r_hi == 0:
        return None
    return (r_lo, r_hi)


def diagonal_sizes(shape) -> list[int]:
    """Cell count of each diagonal, ordered like the slice chain (k = 1..n)."""
    shape = normalize(shape)
    depth = len(shape)
    width = shape[0] if shape else 0
    sizes = []
    for k in range(1, depth + width):
        rng = diagonal_rows(shape, k - depth)
        sizes.append(0 if rng is None else rng[1] - rng[0] + 1)
    return sizes


def to_slices(rpp: RPP) -> SliceSequence:
    """Read the filling along vertical slices, top of each diagonal first."""
    shape = rpp.shape
    pattern = interaction_pattern(shape)
    if not pattern:
        return SliceSequence((), ((),))
    depth = len(shape)
    slices = [()]
    for k in range(1, len(pattern)):
        r_lo, r_hi = diagonal_rows(shape, k - depth)
        vals = [rpp.entry(r, r + k - depth) for r in range(r_hi, r_lo - 1, -1)]
        slices.append(normalize(vals))
    slices.append(())
    return SliceSequence(pattern, tuple(slices))


def shape_from_pattern(pattern) -> tuple[int, ...]:
    """Rebuild the shape whose Maya hole/particle pattern is given."""
    pattern = tuple(pattern)
    depth = sum(1 for rel in pattern if rel == SUCCEQ)
    parts = []
    i = 0
    for k in range(len(pattern) - 1, -1, -1):
        if pattern[k] == SUCCEQ:
            i += 1
            parts.append(k - depth + i)
    lam = normalize(parts)
    if interaction_pattern(lam) != pattern:
        raise ValueError(f"pattern {pattern} does not match any shape")
    return lam


def from_slices(ss: SliceSequence) -> RPP:
    """Inverse of to_slices; raises if the chain does not encode an RPP."""
    shape = shape_from_pattern(ss.pattern)
    depth = len(shape)
    n = len(ss.pattern) - 1
    if len(ss.slices) != n + 2:
        raise ValueError(f"expected {n + 2} slices, got {len(ss.slices)}")
    if ss.slices[0] or ss.slices[-1]:
        raise ValueError("chain must start and end with the empty partition")
    for k, rel in enumerate(ss.pattern):
        a, b = ss.slices[k], ss.slices[k + 1]
        ok = partitions.interlaces(a, b) if rel == PRECEQ else partitions.interlaces(b, a)
        if not ok:
            raise ValueError(f"slices {a} {rel} {b} violate interlacing at step {k}")
    rows = [[0] * p for p in shape]
    for k in range(1, n + 1):
        sl = ss.slices[k]
        rng = diagonal_rows(shape, k - depth)
        count = 0 if rng is None else rng[1] - rng[0] + 1
        if len(sl) > count:
            raise ValueError(f"slice {k} has {len(sl)} parts but the diagonal "
                             f"holds {count} cells")
        r_lo, r_hi = rng
        for j, r in enumerate(range(r_hi, r_lo - 1, -1)):
            rows[r - 1][r + k - depth - 1] = part(sl, j + 1)
    return validate(shape, rows)


# ---------------------------------------------------------------------------
# Enumeration


def _interlacing_above(prev, max_len: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Partitions nu with prev <= nu (prev interlaces nu), len <= max_len, |nu| <= budget."""

    def gen(i, upper, budget_left):
        lo = part(prev, i)
        if lo > budget_left:
            return
        hi = budget_left if upper is None else min(upper, budget_left)
        for v in range(hi, lo - 1, -1):
            if v == 0:
                yield ()
                continue
            if i >= max_len:
                # no more parts allowed; the tail of prev must already be zero
                if part(prev, i + 1) == 0:
                    yield (v,)
                continue
            # next part is capped by both nu_i and prev_i
            for rest in gen(i + 1, min(v, lo), budget_left - v):
                yield (v,) + rest

    if max_len == 0:
        if prev == ():
            yield ()
        return
    yield from gen(1, None, budget)


def _interlacing_below(prev, max_len: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Partitions nu with nu <= prev, len <= max_len, |nu| <= budget."""

    def gen(i, budget_left):
        lo = part(prev, i + 1)
        hi = min(part(prev, i), budget_left)
        if lo > hi:
            return
        for v in range(hi, lo - 1, -1):
            if v == 0:
                yield ()
                continue
            if i >= max_len:
                if part(prev, i + 2) == 0:
                    yield (v,)
                continue
            for rest in gen(i + 1, budget_left - v):
                yield (v,) + rest

    if max_len == 0:
        if part(prev, 2) == 0:
            yield ()
        return
    # nu_j = 0 for j > max_len forces prev_{j+1} = 0 there
    if part(prev, max_len + 2) > 0:
        return
    yield from gen(1, budget)


def enumerate_rpps(lam, max_volume: int) -> Iterator[RPP]:
    """Every RPP of the shape with volume <= max_volume, exactly once,
    in lexicographic order of the reading word (rows bottom-up)."""
    lam = normalize(lam)
    if max_volume < 0:
        return iter(())
    if not lam:
        return iter((RPP((), ()),))
    pattern = interaction_pattern(lam)
    sizes = diagonal_sizes(lam)
    n = len(pattern) - 1

    found = []

    def extend(k, prev, chain, used):
        if k == n + 1:
            if pattern[n] == PRECEQ and prev != ():
                return
            found.append(from_slices(SliceSequence(pattern, tuple(chain) + ((),))))
            return
        rel = pattern[k - 1]
        d = sizes[k - 1]
        cands = (_interlacing_above(prev, d, max_volume - used) if rel == PRECEQ
                 else _interlacing_below(prev, d, max_volume - used))
        for nu in cands:
            chain.append(nu)
            extend(k + 1, nu, chain, used + sum(nu))
            chain.pop()

    extend(1, (), [()], 0)
    found.sort(key=RPP.reading_word)
    return iter(found)


def enumerate_pairs(lam, max_total_volume: int) -> Iterator[tuple[RPP, RPP]]:
    """Pairs (blue, red) of the same shape with total volume <= the bound."""
    lam = normalize(lam)
    blues = list(enumerate_rpps(lam, max_total_volume))
    for blue in blues:
        for red in enumerate_rpps(lam, max_total_volume - blue.volume):
            yield blue, red


# ---------------------------------------------------------------------------
# JSON encoding


def rpp_to_json(rpp: RPP) -> str:
    return json.dumps({"shape": list(rpp.shape),
                       "rows": [list(r) for r in rpp.rows]})


def rpp_from_json(text: str) -> RPP:
    data = json.loads(text)
    return validate(data["shape"], data["rows"])
