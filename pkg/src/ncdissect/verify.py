"""Self-verification sweep: every formula against its brute-force oracle and
every codec against its inverse, within size bounds."""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from ncdissect import dissections, numbers, pairings, psi, spiders

# arithmetic-only families are cheap, so they use their own fixed bounds
ARITH_MAX_S = 6
ARITH_MAX_N = 30


@dataclass
class Check:
    family: str
    params: dict
    expected: object
    observed: object
    passed: bool
    elapsed: float


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def families(self) -> list[str]:
        return list(dict.fromkeys(c.family for c in self.checks))

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [asdict(c) for c in self.checks]}

    def summary_lines(self) -> list[str]:
        lines = []
        for fam in self.families():
            rows = [c for c in self.checks if c.family == fam]
            bad = [c for c in rows if not c.passed]
            secs = sum(c.elapsed for c in rows)
            lines.append(f"{'PASS' if not bad else 'FAIL'} {fam}: {len(rows) - len(bad)}/{len(rows)} checks ({secs:.2f}s)")
            for c in bad[:10]:
                lines.append(f"    {c.params}: expected {c.expected}, observed {c.observed}")
            if len(bad) > 10:
                lines.append(f"    ... {len(bad) - 10} more")
        lines.append("OVERALL " + ("PASS" if self.passed else "FAIL"))
        return lines


def _sizes(lo_s: int, max_s: int, max_n: int) -> Iterator[tuple[int, int]]:
    for s in range(lo_s, max_s + 1):
        for n in range(1, max_n + 1):
            yield s, n


def _run(report: VerifyReport, family: str, params: dict, fn: Callable[[], tuple[object, object]]) -> None:
    t = time.perf_counter()
    try:
        expected, observed = fn()
        ok = expected == observed
    except Exception as exc:  # a crash inside a check is a failed check
        expected, observed, ok = "no error", f"{type(exc).__name__}: {exc}", False
    report.checks.append(Check(family, params, expected, observed, ok, time.perf_counter() - t))


def _dissection_count(s, n, i):
    return numbers.q_count(s, n, i), sum(1 for _ in dissections.enumerate_dissections(s, n, i))


def _face_invariants(s, n, i):
    bad = 0
    pointed = 0
    for d in dissections.enumerate_dissections(s, n, i):
        fs = dissections.faces(d)
        if len(fs) != i + 1 or sum(len(f) - 2 for f in fs) != s * n:
            bad += 1
        if any((len(f) - 2) % s for f in fs):
            bad += 1
        for f in fs:
            pointed += 1
            # raises if a diagonal has zero or two beginnings
            dissections.beginnings_sequence(dissections.PointedDissection(d, f))
    return (0, numbers.p_count(s, n, i)), (bad, pointed)


def _psi_pointed(s, n, i):
    bad = 0
    for pd in dissections.enumerate_pointed(s, n, i):
        c = psi.psi_encode(pd)
        if psi.psi_decode(s, n, c.a, c.eps) != pd:
            bad += 1
    return 0, bad


def _psi_codes(s, n, i):
    bad = total = 0
    for c in psi.enumerate_codes(s, n, i):
        total += 1
        pd = psi.psi_decode(s, n, c.a, c.eps)
        if dissections.validate_pointed(pd) is not None or len(pd.dissection.diagonals) != i:
            bad += 1
        elif psi.psi_encode(pd) != c:
            bad += 1
    return (0, numbers.p_count(s, n, i)), (bad, total)


def _legs(s, n):
    bad = 0
    for legs in spiders.enumerate_legs(s, n):
        if spiders.first_legs(spiders.legs_decode(s, n, legs)) != legs:
            bad += 1
    for ac in spiders.enumerate_annular(s, n):
        if spiders.legs_decode(s, n, spiders.first_legs(ac)) != ac:
            bad += 1
    return 0, bad


def _fibers(s, n):
    fibers = Counter(spiders.forget_hole(ac) for ac in spiders.enumerate_annular(s, n))
    sizes = sorted(set(fibers.values()))
    expected = ([(s - 1) * n + 1], numbers.binomial(s * n, n), numbers.fuss_count(s, n))
    return expected, (sizes, sum(fibers.values()), len(fibers))


def _pairing_count(s, n):
    return numbers.fuss_count(s, n), sum(1 for _ in pairings.enumerate_pairings(s, n))


def _phi(s, n):
    bad = 0
    for p in pairings.enumerate_pairings(s, n):
        if pairings.phi_inverse(pairings.phi_forward(p)) != p:
            bad += 1
    for c in spiders.enumerate_disc(s, n):
        if pairings.phi_forward(pairings.phi_inverse(c)) != c:
            bad += 1
    return 0, bad


def _partials(s, n, i):
    expected = (numbers.d_count(s, n, i), numbers.a_count(s, n, i))
    observed = (spiders.count_partials(s, n, i), spiders.count_partials(s, n, i, annular=True))
    return expected, observed


def _partials_closed_form(s, n, i):
    expected = (numbers.disc_partial_count(s, n, i), numbers.annular_partial_count(s, n, i))
    observed = (spiders.count_partials(s, n, i), spiders.count_partials(s, n, i, annular=True))
    return expected, observed


def _completability(s, n, i):
    bad = 0
    for p in spiders.enumerate_partials(s, n, i):
        if spiders.completable(p) != spiders.completable_brute(p):
            bad += 1
    return 0, bad


def _divisibility_q(s, n):
    bad = [i for i in range(n) if (numbers.binomial(s * n + i + 1, i) * numbers.binomial(n - 1, i)) % (i + 1)]
    return [], bad


def _divisibility_d(s, n):
    bad = [
        i for i in range(n + 1)
        if (numbers.binomial(s * n, i) * numbers.binomial(n, i)) % (i * (s - 1) + 1)
    ]
    return [], bad


def _fuss_identity(s, n):
    f = numbers.fuss_count(s, n)
    return (f, f), (numbers.d_count(s, n, n), numbers.q_count(s - 1, n, n - 1))


def run_verify(max_s: int = 3, max_n: int = 4, skip: tuple[str, ...] = ()) -> VerifyReport:
    report = VerifyReport()

    def want(fam: str) -> bool:
        return fam not in skip

    for s, n in _sizes(1, max_s, max_n):
        for i in range(n):
            p = {"s": s, "n": n, "i": i}
            if want("dissection-count"):
                _run(report, "dissection-count", p, lambda: _dissection_count(s, n, i))
            if want("face-invariants"):
                _run(report, "face-invariants", p, lambda: _face_invariants(s, n, i))
            if want("psi-roundtrip-pointed"):
                _run(report, "psi-roundtrip-pointed", p, lambda: _psi_pointed(s, n, i))
            if want("psi-roundtrip-codes"):
                _run(report, "psi-roundtrip-codes", p, lambda: _psi_codes(s, n, i))

    for s, n in _sizes(2, max_s, max_n):
        p = {"s": s, "n": n}
        if want("legs-roundtrip"):
            _run(report, "legs-roundtrip", p, lambda: _legs(s, n))
        if want("forget-hole-fibers"):
            _run(report, "forget-hole-fibers", p, lambda: _fibers(s, n))
        if want("pairing-count"):
            _run(report, "pairing-count", p, lambda: _pairing_count(s, n))
        if want("phi-roundtrip"):
            _run(report, "phi-roundtrip", p, lambda: _phi(s, n))
        for i in range(n + 1):
            pi = {"s": s, "n": n, "i": i}
            if want("partial-counts"):
                _run(report, "partial-counts", pi, lambda: _partials(s, n, i))
            if want("partial-counts-closed-form"):
                _run(report, "partial-counts-closed-form", pi, lambda: _partials_closed_form(s, n, i))
            if want("completability"):
                _run(report, "completability", pi, lambda: _completability(s, n, i))

    for s, n in _sizes(1, ARITH_MAX_S, ARITH_MAX_N):
        p = {"s": s, "n": n}
        if want("divisibility-q"):
            _run(report, "divisibility-q", p, lambda: _divisibility_q(s, n))
        if want("divisibility-d"):
            _run(report, "divisibility-d", p, lambda: _divisibility_d(s, n))
        if s >= 2 and want("fuss-identity"):
            _run(report, "fuss-identity", p, lambda: _fuss_identity(s, n))
    return report


FAMILIES = (
    "dissection-count",
    "face-invariants",
    "psi-roundtrip-pointed",
    "psi-roundtrip-codes",
    "legs-roundtrip",
    "forget-hole-fibers",
    "pairing-count",
    "phi-roundtrip",
    "partial-counts",
    "partial-counts-closed-form",
    "completability",
    "divisibility-q",
    "divisibility-d",
    "fuss-identity",
)
