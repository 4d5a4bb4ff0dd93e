"""Labeled non-crossing pairings and their bijection with spider collections.

2(s-1)n boundary vertices fall into 2n blocks of s-1. Odd blocks are labeled
1..s-1 and even blocks s-1..1; a pairing joins equal labels without crossings.

The bijection peels off the arcs leaving block 1. They cut the disc into s
regions; region i is re-blocked into a smaller pairing, converted recursively,
and pasted into the matching sector of the spider through vertex 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from ncdissect.dissections import Violation
from ncdissect.errors import CodecInvariantError, InvalidObjectError, ParameterError
from ncdissect.spiders import SpiderCollection, validate_collection

Arc = tuple[int, int]


@dataclass(frozen=True)
class LabeledPairing:
    s: int
    n: int
    arcs: tuple[Arc, ...] = field(default=())

    def __post_init__(self) -> None:
        arcs = tuple(sorted((min(a), max(a)) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)

    @property
    def size(self) -> int:
        return 2 * (self.s - 1) * self.n

    def to_json(self) -> dict:
        return {"s": self.s, "n": self.n, "arcs": [list(a) for a in self.arcs]}

    @classmethod
    def from_json(cls, obj: dict) -> LabeledPairing:
        return cls(int(obj["s"]), int(obj["n"]), tuple(tuple(a) for a in obj["arcs"]))


def label_of(s: int, n: int, v: int) -> int:
    if s < 2 or n < 1:
        raise ParameterError(f"need s >= 2 and n >= 1, got s={s}, n={n}")
    if not 1 <= v <= 2 * (s - 1) * n:
        raise ParameterError(f"vertex {v} outside 1..{2 * (s - 1) * n}")
    block, pos = divmod(v - 1, s - 1)
    return pos + 1 if block % 2 == 0 else s - 1 - pos


def validate_pairing(p: LabeledPairing) -> Violation | None:
    s, n = p.s, p.n
    if s < 2 or n < 1:
        return Violation("range", (s, n), "need s >= 2 and n >= 1")
    size = p.size
    seen: set[int] = set()
    for u, w in p.arcs:
        if not (1 <= u <= size and 1 <= w <= size) or u == w:
            return Violation("range", (u, w), f"arc ends must be distinct vertices in 1..{size}")
        if u in seen or w in seen:
            return Violation("matching", (u, w), "vertex is the end of two arcs")
        seen.update((u, w))
    if len(seen) != size:
        missing = min(set(range(1, size + 1)) - seen)
        return Violation("matching", (missing,), f"vertex {missing} is not paired")
    for a, b in combinations(p.arcs, 2):
        (x, y), (z, t) = sorted((a, b))
        if x < z < y < t:
            return Violation("crossing", (a, b), f"{a} crosses {b}")
    for u, w in p.arcs:
        if label_of(s, n, u) != label_of(s, n, w):
            return Violation("label", (u, w), f"arc {u}-{w} joins different labels")
    return None


def _require(p: LabeledPairing) -> None:
    bad = validate_pairing(p)
    if bad is not None:
        raise InvalidObjectError(bad.message)


@lru_cache(maxsize=None)
def _matchings(s: int, n: int, lo: int, hi: int) -> tuple[tuple[Arc, ...], ...]:
    if lo > hi:
        return ((),)
    out = []
    want = label_of(s, n, lo)
    for w in range(lo + 1, hi + 1, 2):
        if label_of(s, n, w) != want:
            continue
        for inner in _matchings(s, n, lo + 1, w - 1):
            for outer in _matchings(s, n, w + 1, hi):
                out.append(tuple(sorted(((lo, w),) + inner + outer)))
    return tuple(sorted(out))


def enumerate_pairings(s: int, n: int) -> Iterator[LabeledPairing]:
    """All of F'(s, n), ordered by sorted arc list."""
    if s < 2 or n < 1:
        raise ParameterError(f"need s >= 2 and n >= 1, got s={s}, n={n}")
    for arcs in _matchings(s, n, 1, 2 * (s - 1) * n):
        yield LabeledPairing(s, n, arcs)


def _region_windows(partner: dict[int, int], s: int, size: int) -> list[list[int]]:
    """Boundary stretches I_1..I_s cut out by the arcs leaving block 1."""
    # ends[k] = partner of block-1 vertex k; with sentinels so that
    # I_i runs strictly between ends[s-i+1] and ends[s-i]
    ends = {k: partner[k] for k in range(1, s)}
    ends[s] = s - 1
    ends[0] = size + 1
    return [list(range(ends[s - i + 1] + 1, ends[s - i])) for i in range(1, s + 1)]


def _phi(s: int, arcs: Iterable[Arc], size: int) -> list[tuple[int, ...]]:
    """Spider blocks (1-based on s*size/(2(s-1)) vertices) for a pairing given
    as arcs on vertices 1..size."""
    if size == 0:
        return []
    partner: dict[int, int] = {}
    for u, w in arcs:
        partner[u] = w
        partner[w] = u
    windows = _region_windows(partner, s, size)

    blocks: list[tuple[int, ...]] = []
    feet = [1]
    cursor = 1
    for i, window in enumerate(windows, start=1):
        if len(window) % (2 * (s - 1)):
            raise CodecInvariantError(f"region {i} has {len(window)} vertices, not a multiple of {2 * (s - 1)}")
        r = len(window) // (2 * (s - 1))
        if r:
            # local vertex t sits at window[(t-1 + s-i) mod len]
            shift = s - i
            local = {window[(t + shift) % len(window)]: t + 1 for t in range(len(window))}
            sub_arcs = []
            for u in window:
                w = partner[u]
                if w not in local:
                    raise CodecInvariantError(f"arc {u}-{w} leaves region {i}")
                if u < w:
                    sub_arcs.append((local[u], local[w]))
            width = s * r
            for b in _phi(s, sub_arcs, len(window)):
                # local spider vertex t goes to the (t-1 + i-1) mod width offset of this sector
                blocks.append(tuple(cursor + 1 + (t - 1 + i - 1) % width for t in b))
            cursor += width
        if i < s:
            cursor += 1
            feet.append(cursor)
    blocks.append(tuple(feet))
    return blocks


def phi_forward(p: LabeledPairing) -> SpiderCollection:
    _require(p)
    c = SpiderCollection(p.s, p.n, tuple(_phi(p.s, p.arcs, p.size)))
    if validate_collection(c) is not None:
        raise CodecInvariantError(f"phi produced an invalid collection {c}")
    return c


def _phi_inv(s: int, blocks: list[tuple[int, ...]], width: int) -> list[Arc]:
    """Arcs on 2(s-1)r vertices for spider blocks on width = s*r vertices."""
    if width == 0:
        return []
    first = next(b for b in blocks if 1 in b)
    feet = sorted(first) + [width + 1]
    arcs: list[Arc] = []
    pieces: list[list[Arc]] = []
    for i in range(1, s + 1):
        lo, hi = feet[i - 1], feet[i]
        sector = hi - lo - 1
        if sector % s:
            raise InvalidObjectError("spider sector size is not a multiple of s")
        inside = [b for b in blocks if lo < b[0] < hi]
        local = [tuple((v - lo - 1 - (i - 1)) % sector + 1 for v in b) for b in inside] if sector else []
        pieces.append(_phi_inv(s, local, sector))

    # lay the pairing out: block 1, then I_1, end of arc s-1, I_2, ..., end of arc 1, I_s
    pos = s - 1
    for i, sub in enumerate(pieces, start=1):
        length = 2 * len(sub)
        shift = s - i
        for u, w in sub:
            gu = pos + 1 + (u - 1 + shift) % length
            gw = pos + 1 + (w - 1 + shift) % length
            arcs.append((min(gu, gw), max(gu, gw)))
        pos += length
        if i < s:
            pos += 1
            arcs.append((s - i, pos))
    return arcs


def phi_inverse(c: SpiderCollection) -> LabeledPairing:
    bad = validate_collection(c)
    if bad is not None:
        raise InvalidObjectError(bad.message)
    if c.s < 2:
        raise InvalidObjectError("pairings need s >= 2")
    p = LabeledPairing(c.s, c.n, tuple(_phi_inv(c.s, [tuple(b) for b in c.blocks], c.size)))
    if validate_pairing(p) is not None:
        raise CodecInvariantError(f"phi inverse produced an invalid pairing {p}")
    return p
