"""Spider collections in a disc and in an annulus.

A spider is identified with its set of feet, so a disc collection is a
non-crossing partition of 1..sn into s-blocks. Boundary gap g sits between
vertex g and g+1 (gap sn wraps to vertex 1). An annular collection marks the
complementary face holding the inner boundary, by its smallest gap.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from ncdissect.dissections import Violation
from ncdissect.errors import CodecInvariantError, InvalidObjectError, ParameterError, SizeLimitError

Block = tuple[int, ...]

# count_partials refuses polygons with more boundary vertices than this
MAX_PARTIAL_VERTICES = int(os.environ.get("NCDISSECT_MAX_PARTIAL_VERTICES", "16"))


def _canon_blocks(blocks: Iterable[Iterable[int]]) -> tuple[Block, ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True)
class SpiderCollection:
    s: int
    n: int
    blocks: tuple[Block, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", _canon_blocks(self.blocks))

    @property
    def size(self) -> int:
        return self.s * self.n

    def to_json(self) -> dict:
        return {"s": self.s, "n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict) -> SpiderCollection:
        return cls(int(obj["s"]), int(obj["n"]), tuple(tuple(b) for b in obj["blocks"]))


@dataclass(frozen=True)
class AnnularSpiderCollection:
    base: SpiderCollection
    hole_gap: int

    def to_json(self) -> dict:
        obj = self.base.to_json()
        obj["hole_gap"] = self.hole_gap
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> AnnularSpiderCollection:
        return cls(SpiderCollection.from_json(obj), int(obj["hole_gap"]))


# A partial collection has the same shape, only fewer blocks.
PartialSpiders = SpiderCollection


def _sector(block: Block, gap: int) -> int:
    """Index k of the sector block[k] -> block[k+1] (cyclic) holding ``gap``."""
    for k in range(len(block) - 1):
        if block[k] <= gap < block[k + 1]:
            return k
    return len(block) - 1


def _point_sector(block: Block, v: int) -> int:
    """Sector of a boundary vertex ``v`` not in ``block``."""
    return _sector(block, v)


def blocks_cross(b1: Block, b2: Block) -> bool:
    sectors = {_point_sector(b1, v) for v in b2}
    return len(sectors) > 1


def validate_partial(c: SpiderCollection) -> Violation | None:
    s, n = c.s, c.n
    if s < 2 or n < 1:
        return Violation("range", (s, n), "need s >= 2 and n >= 1")
    if len(c.blocks) > n:
        return Violation("count", (len(c.blocks),), f"more than n={n} spiders")
    used: set[int] = set()
    for b in c.blocks:
        if len(b) != s or len(set(b)) != s:
            return Violation("block-size", b, f"spider {b} does not have {s} distinct feet")
        if any(not 1 <= v <= c.size for v in b):
            return Violation("range", b, f"feet must lie in 1..{c.size}")
        if used & set(b):
            return Violation("overlap", b, f"spider {b} shares a foot with another")
        used |= set(b)
    for x, y in combinations(c.blocks, 2):
        if blocks_cross(x, y):
            return Violation("crossing", (x, y), f"{x} crosses {y}")
    return None


def validate_collection(c: SpiderCollection) -> Violation | None:
    bad = validate_partial(c)
    if bad is not None:
        return bad
    if len(c.blocks) != c.n:
        return Violation("count", (len(c.blocks),), f"need exactly n={c.n} spiders")
    return None


def _require(c: SpiderCollection, full: bool = True) -> None:
    bad = validate_collection(c) if full else validate_partial(c)
    if bad is not None:
        raise InvalidObjectError(bad.message)


def _group(items: Iterable[int], blocks: tuple[Block, ...]) -> list[tuple[int, ...]]:
    """Group boundary items (gaps or free vertices) by which sector of every
    block they fall in; equal signatures mean the same complementary face."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for g in items:
        sig = tuple(_sector(b, g) for b in blocks)
        groups.setdefault(sig, []).append(g)
    return sorted(tuple(v) for v in groups.values())


def faces_of_collection(c: SpiderCollection) -> list[tuple[int, ...]]:
    """Complementary faces as sorted tuples of gap indices."""
    _require(c, full=False)
    return _group(range(1, c.size + 1), c.blocks)


def canonical_hole(c: SpiderCollection, gap: int) -> int:
    for f in faces_of_collection(c):
        if gap in f:
            return f[0]
    raise InvalidObjectError(f"gap {gap} outside 1..{c.size}")


def validate_annular(ac: AnnularSpiderCollection) -> Violation | None:
    bad = validate_collection(ac.base)
    if bad is not None:
        return bad
    if not 1 <= ac.hole_gap <= ac.base.size:
        return Violation("range", (ac.hole_gap,), "hole_gap out of range")
    if canonical_hole(ac.base, ac.hole_gap) != ac.hole_gap:
        return Violation("hole", (ac.hole_gap,), "hole_gap is not the smallest gap of its face")
    return None


def first_legs(ac: AnnularSpiderCollection) -> tuple[int, ...]:
    bad = validate_annular(ac)
    if bad is not None:
        raise InvalidObjectError(bad.message)
    legs = []
    for b in ac.base.blocks:
        k = _sector(b, ac.hole_gap)
        legs.append(b[(k + 1) % len(b)])
    return tuple(sorted(legs))


def legs_decode(s: int, n: int, legs: Iterable[int]) -> AnnularSpiderCollection:
    """Rebuild the unique annular collection with the given first legs."""
    legs = tuple(legs)
    size = s * n
    if s < 2 or n < 1:
        raise InvalidObjectError(f"need s >= 2 and n >= 1, got s={s}, n={n}")
    if len(legs) != n or any(not 1 <= x <= size for x in legs) or any(
        x >= y for x, y in zip(legs, legs[1:])
    ):
        raise InvalidObjectError(f"legs must be {n} strictly increasing vertices in 1..{size}")

    labels = list(range(1, size + 1))
    positions = list(legs)
    blocks: list[Block] = []
    while positions:
        m = len(labels)
        k = len(positions)
        for j in range(k):
            gap = positions[j + 1] - positions[j] if j + 1 < k else positions[0] + m - positions[j]
            if gap >= s:
                break
        else:
            raise CodecInvariantError(f"no gap of {s} among {positions} in {m} vertices")
        start = positions[j]
        taken = [(start - 1 + t) % m + 1 for t in range(s)]
        if len(positions) == 1:
            # last spider: the hole lies in the sector ending at its first leg
            hole_after = labels[(start - 2) % m]
        blocks.append(tuple(labels[p - 1] for p in taken))
        taken_set = set(taken)
        kept = [p for p in range(1, m + 1) if p not in taken_set]
        remap = {p: idx + 1 for idx, p in enumerate(kept)}
        positions = [remap[p] for p in positions[:j] + positions[j + 1:]]
        labels = [labels[p - 1] for p in kept]
    base = SpiderCollection(s, n, tuple(blocks))
    return AnnularSpiderCollection(base, canonical_hole(base, hole_after))


def forget_hole(ac: AnnularSpiderCollection) -> SpiderCollection:
    return ac.base


@lru_cache(maxsize=None)
def _partitions(lo: int, hi: int, s: int) -> tuple[tuple[Block, ...], ...]:
    """Non-crossing s-partitions of the interval lo..hi."""
    if lo > hi:
        return ((),)
    if (hi - lo + 1) % s:
        return ()
    out = []

    def extend(feet: list[int]) -> None:
        last = feet[-1]
        if len(feet) == s:
            for rest in _partitions(last + 1, hi, s):
                inner: list[tuple[tuple[Block, ...], ...]] = []
                for a, b in zip(feet, feet[1:]):
                    inner.append(_partitions(a + 1, b - 1, s))
                for combo in _product(inner):
                    out.append(_canon_blocks((tuple(feet),) + combo + rest))
            return
        for nxt in range(last + 1, hi + 1):
            if (nxt - last - 1) % s == 0:
                extend(feet + [nxt])

    extend([lo])
    return tuple(sorted(out))


def _product(parts: list[tuple[tuple[Block, ...], ...]]) -> Iterator[tuple[Block, ...]]:
    if not parts:
        yield ()
        return
    for head in parts[0]:
        for tail in _product(parts[1:]):
            yield head + tail


def enumerate_disc(s: int, n: int) -> Iterator[SpiderCollection]:
    """All of F(s, n) in lexicographic order of the sorted block lists."""
    if s < 2 or n < 1:
        raise ParameterError(f"need s >= 2 and n >= 1, got s={s}, n={n}")
    for blocks in _partitions(1, s * n, s):
        yield SpiderCollection(s, n, blocks)


def enumerate_annular(s: int, n: int) -> Iterator[AnnularSpiderCollection]:
    """Every disc collection paired with each of its faces as the hole."""
    for c in enumerate_disc(s, n):
        for f in faces_of_collection(c):
            yield AnnularSpiderCollection(c, f[0])


def enumerate_legs(s: int, n: int) -> Iterator[tuple[int, ...]]:
    yield from combinations(range(1, s * n + 1), n)


def completable(p: SpiderCollection) -> bool:
    """Whether the partial collection extends to a full one.

    Decided by counting free vertices per complementary face: each count must
    be a multiple of s.
    """
    _require(p, full=False)
    used = {v for b in p.blocks for v in b}
    free = [v for v in range(1, p.size + 1) if v not in used]
    return all(len(group) % p.s == 0 for group in _group(free, p.blocks))


def completable_brute(p: SpiderCollection) -> bool:
    """Same question answered by searching all full collections."""
    _require(p, full=False)
    want = set(p.blocks)
    return any(want <= set(c.blocks) for c in enumerate_disc(p.s, p.n))


def enumerate_partials(s: int, n: int, i: int) -> Iterator[SpiderCollection]:
    """Every set of i disjoint non-crossing s-blocks in 1..sn (completable or not)."""
    size = s * n
    all_blocks = list(combinations(range(1, size + 1), s))

    def grow(start: int, chosen: list[Block], used: set[int]) -> Iterator[list[Block]]:
        if len(chosen) == i:
            yield chosen
            return
        for k in range(start, len(all_blocks)):
            b = all_blocks[k]
            if used.intersection(b) or any(blocks_cross(b, c) for c in chosen):
                continue
            yield from grow(k + 1, chosen + [b], used | set(b))

    for chosen in grow(0, [], set()):
        yield SpiderCollection(s, n, tuple(chosen))


def count_partials(s: int, n: int, i: int, annular: bool = False) -> int:
    """Brute-force count of completable i-spider partial collections.

    Works from the full collections: a partial is completable exactly when it
    is a subset of some full collection. In the annulus the partial also
    records which of its faces holds the hole.
    """
    if s < 2 or n < 1 or not 0 <= i <= n:
        raise ParameterError(f"need s >= 2, n >= 1, 0 <= i <= n; got s={s}, n={n}, i={i}")
    if s * n > MAX_PARTIAL_VERTICES:
        raise SizeLimitError(f"sn={s * n} exceeds the brute-force limit {MAX_PARTIAL_VERTICES}")
    seen: set = set()
    for c in enumerate_disc(s, n):
        holes = [f for f in faces_of_collection(c)] if annular else [None]
        for sub in combinations(c.blocks, i):
            if not annular:
                seen.add(sub)
                continue
            part = _group(range(1, s * n + 1), sub)
            for hole in holes:
                face = next(f for f in part if hole[0] in f)
                seen.add((sub, face[0]))
    return len(seen)
