"""Command line entry point: ``ncdissect {count,enumerate,codec,render,verify}``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable, Iterable, Iterator, TextIO

from ncdissect import dissections, numbers, pairings, psi, render, spiders
from ncdissect.errors import ParameterError, SizeLimitError
from ncdissect.verify import FAMILIES, run_verify

DEFAULT_MAX_ITEMS = 10**6
FPRIME_MAX_SIZE = 24  # brute-force cap on 2(s-1)n for ``count fprime``

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_CAP = 0, 1, 2, 3


def dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def max_items(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("NCDISSECT_MAX_ITEMS")
    return int(env) if env else DEFAULT_MAX_ITEMS


def _fprime(s: int, n: int) -> int:
    if s < 2 or n < 1:
        raise ParameterError(f"need s >= 2 and n >= 1, got s={s}, n={n}")
    if 2 * (s - 1) * n > FPRIME_MAX_SIZE:
        raise SizeLimitError(f"2(s-1)n = {2 * (s - 1) * n} exceeds brute-force limit {FPRIME_MAX_SIZE}")
    return sum(1 for _ in pairings.enumerate_pairings(s, n))


def count_value(kind: str, s: int, n: int, i: int | None) -> int:
    if kind == "f":
        return numbers.fuss_count(s, n)
    if kind == "fprime":
        return _fprime(s, n)
    if i is None:
        raise ParameterError(f"--i is required for kind {kind!r}")
    return numbers.COUNTERS[kind](s, n, i)


def cmd_count(args, out: TextIO) -> int:
    out.write(f"{count_value(args.kind, args.s, args.n, args.i)}\n")
    return EXIT_OK


def _stream(kind: str, s: int, n: int, i: int | None) -> tuple[int, Iterator[dict]]:
    """Expected line count and the JSON objects for ``enumerate``."""
    if kind in ("dissections", "pointed"):
        if i is None:
            raise ParameterError(f"--i is required for {kind}")
        if kind == "dissections":
            return numbers.q_count(s, n, i), (d.to_json() for d in dissections.enumerate_dissections(s, n, i))
        return numbers.p_count(s, n, i), (pd.to_json() for pd in dissections.enumerate_pointed(s, n, i))
    if s < 2:
        raise ParameterError(f"{kind} need s >= 2, got s={s}")
    if kind == "spiders":
        return numbers.fuss_count(s, n), (c.to_json() for c in spiders.enumerate_disc(s, n))
    if kind == "annular":
        return numbers.binomial(s * n, n), (c.to_json() for c in spiders.enumerate_annular(s, n))
    if kind == "pairings":
        return numbers.fuss_count(s, n), (p.to_json() for p in pairings.enumerate_pairings(s, n))
    raise ParameterError(f"unknown kind {kind!r}")


def cmd_enumerate(args, out: TextIO) -> int:
    total, items = _stream(args.kind, args.s, args.n, args.i)
    cap = max_items(args.max_items)
    if total > cap:
        print(f"error: {total} items exceed the cap of {cap} (raise --max-items or NCDISSECT_MAX_ITEMS)", file=sys.stderr)
        return EXIT_CAP
    for obj in items:
        out.write(dumps(obj) + "\n")
    return EXIT_OK


def _psi_encode(obj: dict) -> dict:
    return psi.psi_encode(dissections.PointedDissection.from_json(obj)).to_json()


def _psi_decode(obj: dict) -> dict:
    return psi.psi_decode(int(obj["s"]), int(obj["n"]), obj["a"], obj["eps"]).to_json()


def _legs_encode(obj: dict) -> dict:
    ac = spiders.AnnularSpiderCollection.from_json(obj)
    return {"s": ac.base.s, "n": ac.base.n, "legs": list(spiders.first_legs(ac))}


def _legs_decode(obj: dict) -> dict:
    return spiders.legs_decode(int(obj["s"]), int(obj["n"]), obj["legs"]).to_json()


def _phi(obj: dict) -> dict:
    return pairings.phi_forward(pairings.LabeledPairing.from_json(obj)).to_json()


def _phi_inverse(obj: dict) -> dict:
    return pairings.phi_inverse(spiders.SpiderCollection.from_json(obj)).to_json()


CODECS: dict[str, Callable[[dict], dict]] = {
    "psi-encode": _psi_encode,
    "psi-decode": _psi_decode,
    "legs-encode": _legs_encode,
    "legs-decode": _legs_decode,
    "phi": _phi,
    "phi-inverse": _phi_inverse,
}


def _lines(stream: TextIO) -> Iterable[tuple[int, str]]:
    for k, line in enumerate(stream, start=1):
        if line.strip():
            yield k, line


def cmd_codec(args, inp: TextIO, out: TextIO) -> int:
    fn = CODECS[args.which]
    failed = False
    for k, line in _lines(inp):
        try:
            result = fn(json.loads(line))
        except (ValueError, KeyError, TypeError, AssertionError) as exc:
            failed = True
            result = {"error": f"{type(exc).__name__}: {exc}", "line": k}
        out.write(dumps(result) + "\n")
    return EXIT_FAIL if failed else EXIT_OK


def svg_for(obj: dict) -> str:
    """Pick a picture from the keys present in a JSON object."""
    s, n = int(obj["s"]), int(obj["n"])
    if "a" in obj and "eps" in obj:
        obj = psi.psi_decode(s, n, obj["a"], obj["eps"]).to_json()
    if "legs" in obj:
        obj = spiders.legs_decode(s, n, obj["legs"]).to_json()
    if "diagonals" in obj:
        if "base" in obj:
            pd = dissections.PointedDissection.from_json(obj)
            bad = dissections.validate_pointed(pd)
            d = pd.dissection
        else:
            d = dissections.Dissection.from_json(obj)
            bad = dissections.validate(d)
            pd = None
        if bad is not None:
            raise ValueError(bad.message)
        return render.render_dissection(d.size, d.diagonals, pd.base if pd else None)
    if "blocks" in obj:
        if "hole_gap" in obj:
            ac = spiders.AnnularSpiderCollection.from_json(obj)
            bad = spiders.validate_annular(ac)
            c, hole = ac.base, ac.hole_gap
        else:
            c, hole = spiders.SpiderCollection.from_json(obj), None
            bad = spiders.validate_collection(c)
        if bad is not None:
            raise ValueError(bad.message)
        return render.render_spiders(c.size, c.blocks, hole)
    if "arcs" in obj:
        p = pairings.LabeledPairing.from_json(obj)
        bad = pairings.validate_pairing(p)
        if bad is not None:
            raise ValueError(bad.message)
        labels = [pairings.label_of(p.s, p.n, v) for v in range(1, p.size + 1)]
        return render.render_pairing(p.size, p.arcs, labels)
    raise ValueError("unrecognised object: expected diagonals, blocks, arcs, legs or a/eps")


def cmd_render(args, inp: TextIO) -> int:
    outdir = Path(args.out)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        probe = outdir / ".ncdissect-write-test"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        print(f"error: cannot write to {outdir}: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    failed = False
    for k, line in _lines(inp):
        try:
            svg = svg_for(json.loads(line))
        except (ValueError, KeyError, TypeError) as exc:
            print(f"line {k}: {exc}", file=sys.stderr)
            failed = True
            continue
        (outdir / f"{k - 1:06d}.svg").write_text(svg)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    report = run_verify(args.max_s, args.max_n, tuple(args.skip or ()))
    for line in report.summary_lines():
        out.write(line + "\n")
    if args.json:
        text = json.dumps(report.to_json(), indent=1, default=str)
        if args.json == "-":
            out.write(text + "\n")
        else:
            Path(args.json).write_text(text + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncdissect", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def sizes(p: argparse.ArgumentParser, with_i: bool = True) -> None:
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        if with_i:
            p.add_argument("--i", type=int)

    p = sub.add_parser("count", help="print an exact count")
    p.add_argument("kind", choices=["q", "p", "f", "a", "d", "fprime"])
    sizes(p)

    p = sub.add_parser("enumerate", help="stream objects as JSON lines")
    p.add_argument("kind", choices=["dissections", "pointed", "spiders", "annular", "pairings"])
    sizes(p)
    p.add_argument("--max-items", type=int, default=None, help=f"refuse larger outputs (default {DEFAULT_MAX_ITEMS})")

    p = sub.add_parser("codec", help="transform JSON lines from stdin")
    p.add_argument("which", choices=sorted(CODECS))

    p = sub.add_parser("render", help="write one SVG per JSON line from stdin")
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="run the self-verification sweep")
    p.add_argument("--max-s", type=int, default=3)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--skip", action="append", choices=FAMILIES, help="leave out a check family (repeatable)")
    p.add_argument("--json", metavar="PATH", help="also write the JSON report ('-' for stdout)")
    return parser


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    inp = stdin or sys.stdin
    out = stdout or sys.stdout
    try:
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "codec":
            return cmd_codec(args, inp, out)
        if args.command == "render":
            return cmd_render(args, inp)
        return cmd_verify(args, out)
    except (ParameterError, SizeLimitError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
