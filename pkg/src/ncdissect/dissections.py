"""Dissections of a convex (sn+2)-gon and their pointed variants.

Vertices are 1..sn+2, anti-clockwise. A diagonal is stored as ``(u, w)`` with
``u < w``. A region is stored as the tuple of its vertices in anti-clockwise
order rotated to start at its smallest vertex; for a face of a convex polygon
that is simply the sorted vertex tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from ncdissect.errors import CodecInvariantError, InvalidObjectError
from ncdissect.numbers import _check_dissection_params

Diagonal = tuple[int, int]
Region = tuple[int, ...]


def canonical_region(vertices: Iterable[int]) -> Region:
    vs = list(vertices)
    if not vs:
        return ()
    k = vs.index(min(vs))
    return tuple(vs[k:] + vs[:k])


def _norm(diag: Iterable[int]) -> Diagonal:
    u, w = diag
    return (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class Dissection:
    s: int
    n: int
    diagonals: tuple[Diagonal, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "diagonals", tuple(sorted(_norm(d) for d in self.diagonals)))

    @property
    def size(self) -> int:
        """Number of polygon vertices, sn+2."""
        return self.s * self.n + 2

    def to_json(self) -> dict:
        return {"s": self.s, "n": self.n, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json(cls, obj: dict) -> Dissection:
        return cls(int(obj["s"]), int(obj["n"]), tuple(tuple(d) for d in obj["diagonals"]))


@dataclass(frozen=True)
class PointedDissection:
    dissection: Dissection
    base: Region

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", canonical_region(sorted(self.base)))

    def to_json(self) -> dict:
        obj = self.dissection.to_json()
        obj["base"] = list(self.base)
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> PointedDissection:
        return cls(Dissection.from_json(obj), tuple(obj["base"]))


@dataclass(frozen=True)
class Violation:
    kind: str  # "range" | "adjacent" | "duplicate" | "crossing" | "face-size" | "base"
    witness: tuple
    message: str


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    (a, b), (c, e) = sorted((d1, d2))
    return a < c < b < e


def validate(d: Dissection) -> Violation | None:
    """Return ``None`` for a valid dissection, else the first broken rule."""
    if d.s < 1 or d.n < 1:
        return Violation("range", (d.s, d.n), "s and n must be positive")
    size = d.size
    seen = set()
    for u, w in d.diagonals:
        if not (1 <= u <= size and 1 <= w <= size) or u == w:
            return Violation("range", (u, w), f"endpoints must be distinct vertices in 1..{size}")
        if w - u == 1 or w - u == size - 1:
            return Violation("adjacent", (u, w), f"{u} and {w} are adjacent: a side, not a diagonal")
        if (u, w) in seen:
            return Violation("duplicate", (u, w), "diagonal listed twice")
        seen.add((u, w))
    diags = d.diagonals
    for x in range(len(diags)):
        for y in range(x + 1, len(diags)):
            if crosses(diags[x], diags[y]):
                return Violation("crossing", (diags[x], diags[y]), f"{diags[x]} crosses {diags[y]}")
    for face in _faces(size, diags):
        if (len(face) - 2) % d.s:
            return Violation("face-size", face, f"face of size {len(face)} is not 2 mod {d.s}")
    return None


def validate_pointed(pd: PointedDissection) -> Violation | None:
    bad = validate(pd.dissection)
    if bad is not None:
        return bad
    if pd.base not in faces(pd.dissection):
        return Violation("base", pd.base, "base is not a face of the dissection")
    return None


def _faces(size: int, diagonals: Iterable[Diagonal]) -> list[Region]:
    # Walk each face from the low end of its closing edge, always jumping along
    # the longest chord that stays inside the current interval.
    adj: dict[int, list[int]] = {}
    for u, w in diagonals:
        adj.setdefault(u, []).append(w)
    for v in adj:
        adj[v].sort(reverse=True)

    out: list[Region] = []
    stack = [(1, size, False)]
    while stack:
        lo, hi, closed_by_chord = stack.pop()
        face = [lo]
        cur = lo
        while cur != hi:
            nxt = cur + 1
            for w in adj.get(cur, ()):
                if w <= hi and not (cur == lo and w == hi and closed_by_chord):
                    if w > nxt:
                        stack.append((cur, w, True))
                        nxt = w
                    break
            face.append(nxt)
            cur = nxt
        out.append(tuple(face))
    out.sort()
    return out


def faces(d: Dissection) -> list[Region]:
    """All faces, each canonical, sorted lexicographically."""
    for x in range(len(d.diagonals)):
        for y in range(x + 1, len(d.diagonals)):
            if crosses(d.diagonals[x], d.diagonals[y]):
                raise InvalidObjectError(f"{d.diagonals[x]} crosses {d.diagonals[y]}")
    return _faces(d.size, d.diagonals)


def _in_arc(v: int, start: int, end: int, size: int) -> bool:
    """v lies on the closed anti-clockwise arc start -> end."""
    return (v - start) % size <= (end - start) % size


def beginning(diag: Diagonal, base: Iterable[int], size: int) -> int:
    """Endpoint from which the diagonal keeps ``base`` on its left.

    Works for any vertex subset that keeps the cyclic order of 1..size,
    which is what the codec recursion needs for truncated polygons.
    """
    u, w = diag
    base = tuple(base)
    hits = [x for x, y in ((u, w), (w, u)) if all(_in_arc(v, y, x, size) for v in base)]
    if len(hits) != 1:
        raise CodecInvariantError(f"diagonal {diag} has {len(hits)} beginnings w.r.t. base {base}")
    return hits[0]


def diagonal_beginning(pd: PointedDissection, diag: Iterable[int]) -> int:
    diag = _norm(diag)
    if diag not in pd.dissection.diagonals:
        raise InvalidObjectError(f"{diag} is not a diagonal of the dissection")
    return beginning(diag, pd.base, pd.dissection.size)


def beginnings_sequence(pd: PointedDissection) -> tuple[int, ...]:
    size = pd.dissection.size
    return tuple(sorted(beginning(d, pd.base, size) for d in pd.dissection.diagonals))


@lru_cache(maxsize=None)
def _dissections_of(m: int, s: int, budget: int) -> tuple[tuple[Diagonal, ...], ...]:
    """Diagonal sets (0-based, relative) of an m-gon using exactly ``budget``
    diagonals, all faces of size 2 mod s.

    The face on the closing edge (0, m-1) is chosen first; each gap it leaves
    is an independent sub-polygon.
    """
    if (m - 2) % s:
        return ()
    if budget == 0:
        return ((),)
    results: list[tuple[Diagonal, ...]] = []

    def place(start: int, chosen: list[int], left: int, acc: list[tuple[Diagonal, ...]]) -> None:
        # chosen: face vertices so far, last one is ``start``
        if start == m - 1:
            if (len(chosen) - 2) % s == 0 and len(chosen) >= 3:
                if left == 0:
                    results.append(tuple(sorted(d for part in acc for d in part)))
            return
        for nxt in range(start + 1, m):
            span = nxt - start + 1
            if span == 2:
                place(nxt, chosen + [nxt], left, acc)
                continue
            if (span - 2) % s or left == 0:
                continue
            if start == 0 and nxt == m - 1:
                continue
            for used in range(0, left):
                for sub in _dissections_of(span, s, used):
                    shifted = tuple((a + start, b + start) for a, b in sub)
                    place(nxt, chosen + [nxt], left - 1 - used, acc + [((start, nxt),) + shifted])

    place(0, [0], budget, [])
    return tuple(sorted(set(results)))


def enumerate_dissections(s: int, n: int, i: int) -> Iterator[Dissection]:
    """Every dissection in Q_i(s, n) once, ordered by sorted diagonal list."""
    _check_dissection_params(s, n, i)
    m = s * n + 2
    for rel in _dissections_of(m, s, i):
        yield Dissection(s, n, tuple((a + 1, b + 1) for a, b in rel))


def enumerate_pointed(s: int, n: int, i: int) -> Iterator[PointedDissection]:
    for d in enumerate_dissections(s, n, i):
        for f in faces(d):
            yield PointedDissection(d, f)

