"""Bijection between pointed dissections and (a-sequence, epsilon-sequence) codes.

Both directions peel one (s+2)-gon's worth of boundary at a time. Positions
are indices into the *current* (truncated) polygon; the vertex labels of the
original polygon are carried alongside so the result is in original labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from ncdissect.dissections import (
    Dissection,
    PointedDissection,
    beginning,
    beginnings_sequence,
    validate_pointed,
)
from ncdissect.errors import CodecInvariantError, InvalidObjectError
from ncdissect.numbers import _check_dissection_params


@dataclass(frozen=True)
class PsiCode:
    s: int
    n: int
    a: tuple[int, ...]
    eps: tuple[int, ...]

    def to_json(self) -> dict:
        return {"s": self.s, "n": self.n, "a": list(self.a), "eps": list(self.eps)}

    @classmethod
    def from_json(cls, obj: dict) -> PsiCode:
        return cls(int(obj["s"]), int(obj["n"]), tuple(obj["a"]), tuple(obj["eps"]))


def check_code(code: PsiCode) -> None:
    s, n = code.s, code.n
    if s < 1 or n < 1:
        raise InvalidObjectError(f"need s, n >= 1, got s={s}, n={n}")
    size = s * n + 2
    if len(code.eps) != n - 1:
        raise InvalidObjectError(f"eps must have length n-1={n - 1}, got {len(code.eps)}")
    if any(e not in (0, 1) for e in code.eps):
        raise InvalidObjectError("eps entries must be 0 or 1")
    if sum(code.eps) != len(code.a):
        raise InvalidObjectError(f"eps has {sum(code.eps)} ones but a has {len(code.a)} entries")
    if any(not 1 <= x <= size for x in code.a):
        raise InvalidObjectError(f"a entries must lie in 1..{size}")
    if any(x > y for x, y in zip(code.a, code.a[1:])):
        raise InvalidObjectError("a must be non-decreasing")


def _anchor(positions: list[int], size: int, s: int) -> int:
    """Index j of the first entry whose cyclic successor is >= s+1 ahead."""
    k = len(positions)
    for j in range(k):
        if j + 1 < k:
            gap = positions[j + 1] - positions[j]
        else:
            gap = positions[0] + size - positions[j]
        if gap >= s + 1:
            return j
    raise CodecInvariantError(f"no gap of {s + 1} among positions {positions} of a {size}-gon")


def _cut(pos: int, size: int, s: int) -> tuple[int, list[int]]:
    """Partner position s+1 ahead of ``pos`` and the s positions strictly between."""
    between = [(pos - 1 + t) % size + 1 for t in range(1, s + 1)]
    partner = (pos - 1 + s + 1) % size + 1
    return partner, between


def psi_encode(pd: PointedDissection) -> PsiCode:
    bad = validate_pointed(pd)
    if bad is not None:
        raise InvalidObjectError(bad.message)
    d = pd.dissection
    s, n, full = d.s, d.n, d.size

    labels = list(range(1, full + 1))
    diags = set(d.diagonals)
    base = set(pd.base)
    eps: list[int] = []
    threaded: list[int] | None = None

    for level_n in range(n, 1, -1):
        if not diags:
            eps.extend([0] * (level_n - 1))
            break
        size = len(labels)
        where = {v: k + 1 for k, v in enumerate(labels)}
        positions = sorted(where[beginning(dg, base, full)] for dg in diags)
        if threaded is not None and positions != threaded:
            raise CodecInvariantError(f"recomputed beginnings {positions} != threaded {threaded}")
        j = _anchor(positions, size, s)
        pos = positions[j]
        partner, between = _cut(pos, size, s)
        a_lab, c_lab = labels[pos - 1], labels[partner - 1]
        gone = {labels[p - 1] for p in between}
        chord = (min(a_lab, c_lab), max(a_lab, c_lab))

        if chord in diags:
            eps.append(1)
            diags.discard(chord)
            if beginning(chord, base, full) != a_lab:
                raise CodecInvariantError(f"removed chord {chord} does not begin at {a_lab}")
            if base & gone:
                raise CodecInvariantError("base region would be cut off")
            positions = positions[:j] + positions[j + 1:]
        else:
            eps.append(0)
            base -= gone
        touched = [dg for dg in diags if dg[0] in gone or dg[1] in gone]
        if touched:
            raise CodecInvariantError(f"truncated vertices {sorted(gone)} still meet {touched}")

        kept = [p for p in range(1, size + 1) if labels[p - 1] not in gone]
        remap = {p: k + 1 for k, p in enumerate(kept)}
        threaded = [remap[p] for p in positions]
        labels = [v for v in labels if v not in gone]
        if len(base) < 3:
            raise CodecInvariantError("base region degenerated")

    if diags:
        raise CodecInvariantError(f"diagonals left over at the last level: {sorted(diags)}")
    return PsiCode(s, n, beginnings_sequence(pd), tuple(eps))


def psi_decode(s: int, n: int, a, eps) -> PointedDissection:
    code = PsiCode(s, n, tuple(a), tuple(eps))
    check_code(code)
    full = s * n + 2

    # Walk down recording each step, then rebuild the base on the way up.
    labels = list(range(1, full + 1))
    positions = list(code.a)
    diags: list[tuple[int, int]] = []
    steps: list[tuple[int, int, int, list[int]]] = []
    for depth, level_n in enumerate(range(n, 1, -1)):
        if not positions:
            if any(code.eps[depth:]):
                raise CodecInvariantError("ones left in eps with an empty a-list")
            break
        size = len(labels)
        j = _anchor(positions, size, s)
        pos = positions[j]
        partner, between = _cut(pos, size, s)
        a_lab, c_lab = labels[pos - 1], labels[partner - 1]
        gone = [labels[p - 1] for p in between]
        bit = code.eps[depth]
        if bit:
            diags.append((min(a_lab, c_lab), max(a_lab, c_lab)))
            positions = positions[:j] + positions[j + 1:]
        steps.append((bit, a_lab, c_lab, gone))
        gone_set = set(gone)
        kept = [p for p in range(1, size + 1) if labels[p - 1] not in gone_set]
        remap = {p: k + 1 for k, p in enumerate(kept)}
        positions = sorted(remap[p] for p in positions)
        labels = [v for v in labels if v not in gone_set]
    if positions:
        raise CodecInvariantError("a-list not exhausted")

    base = set(labels)
    for bit, a_lab, c_lab, gone in reversed(steps):
        if not bit and a_lab in base and c_lab in base:
            base.update(gone)
    return PointedDissection(Dissection(s, n, tuple(diags)), tuple(base))


def enumerate_codes(s: int, n: int, i: int) -> Iterator[PsiCode]:
    """All codes with i ones: every non-decreasing a-sequence times every eps."""
    _check_dissection_params(s, n, i)
    size = s * n + 2
    eps_all = []
    for ones in combinations(range(n - 1), i):
        e = [0] * (n - 1)
        for k in ones:
            e[k] = 1
        eps_all.append(tuple(e))
    for a in combinations_with_replacement(range(1, size + 1), i):
        for e in eps_all:
            yield PsiCode(s, n, a, e)
