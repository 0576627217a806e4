"""Command-line front end.

Commands: embed, verify, metrics, bench, attack. Exit codes are part of
the contract: 0 success (verify: Authentic), 1 verify found the image
Tampered, 2 or higher operational error (bad arguments, I/O failure,
dimension mismatch).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import attacks, bench, metrics
from .codec import EmbedConfig, authenticate_pixels, embed_pixels
from .pgm import Image, load, save
from .signature import MODES, SET1


def _metric_value(v: float) -> str:
    return format(v, "g")


def _metrics_line(name: str, a, b) -> str:
    err = metrics.mse(a, b)
    try:
        fidelity = metrics.image_fidelity(a, b)
    except ValueError:
        fidelity = float("nan")  # all-zero reference: IF is undefined
    return (f"{name},{_metric_value(err)},"
            f"{_metric_value(metrics.psnr_from_mse(err))},"
            f"{_metric_value(fidelity)}")


def _config(args) -> EmbedConfig:
    return EmbedConfig(
        mode=args.mode,
        max_lsb=args.max_lsb,
        tolerance=getattr(args, "tolerance", 4),
        threshold=getattr(args, "threshold", 0.95),
    )


def cmd_embed(args) -> int:
    cover = load(args.input)
    stego, nbytes = embed_pixels(cover.pixels, _config(args))
    save(args.output, Image(stego))
    line = _metrics_line(Path(args.output).name, cover.pixels, stego)
    print(f"embedded {nbytes} signature bytes ({args.mode})")
    print(line)
    if args.report:
        with open(args.report, "a") as fh:
            fh.write(line + "\n")
    return 0


def cmd_verify(args) -> int:
    stego = load(args.input)
    report = authenticate_pixels(stego.pixels, _config(args))
    print(f"match_fraction {report.match_fraction:.6f}")
    print(report.verdict)
    if args.tamper_map:
        save(args.tamper_map, Image(report.tamper_map))
    return 0 if report.authentic else 1


def cmd_metrics(args) -> int:
    a, b = load(args.image_a), load(args.image_b)
    print(_metrics_line(Path(args.image_b).name, a.pixels, b.pixels))
    return 0


def cmd_bench(args) -> int:
    rows = bench.run_bench(args.corpus_dir, _config(args))
    bench.write_report(args.output, rows)
    avg = bench.average_row(rows)
    print(f"{len(rows)} images, mode {args.mode}: "
          f"average psnr {avg.psnr_db:.3f} dB, "
          f"average match {avg.match_fraction:.4f}")
    print(f"report written to {args.output}")
    return 0


def cmd_attack(args) -> int:
    img = load(args.input)
    if args.kind == "zero-region":
        out = attacks.zero_region(img.pixels, args.x, args.y, args.w, args.h)
    else:
        out = attacks.noise_region(img.pixels, args.x, args.y, args.w, args.h,
                                   seed=args.seed)
    save(args.output, Image(out))
    print(f"{args.kind} applied at ({args.x}, {args.y}) size {args.w}x{args.h}")
    return 0


def _add_mode_flags(parser, with_verify_flags: bool = False):
    parser.add_argument("--mode", choices=MODES, default=SET1,
                        help="payload mode: set1 (0.5 bpB) or set1set2 (1.0 bpB)")
    parser.add_argument("--max-lsb", dest="max_lsb", type=int, default=2,
                        help="modulus of the embedding-position hash (default 2)")
    if with_verify_flags:
        parser.add_argument("--tolerance", type=int, default=4,
                            help="wrapped byte distance accepted per mask (default 4)")
        parser.add_argument("--threshold", type=float, default=0.95,
                            help="match fraction required for Authentic (default 0.95)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavemark",
        description="Self-authenticating fragile watermarking of PGM images.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a cover image's own signature")
    p.add_argument("input", help="cover PGM")
    p.add_argument("output", help="stego PGM to write")
    _add_mode_flags(p)
    p.add_argument("--report", help="append a CSV metrics line to this file")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="check an image against its signature")
    p.add_argument("input", help="stego PGM")
    _add_mode_flags(p, with_verify_flags=True)
    p.add_argument("--tamper-map", dest="tamper_map",
                   help="write a mask-resolution tamper map PGM (0 ok, 255 flagged)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("metrics", help="MSE/PSNR/IF between two images")
    p.add_argument("image_a", help="reference PGM")
    p.add_argument("image_b", help="candidate PGM")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("bench", help="embed+measure+verify a corpus directory")
    p.add_argument("corpus_dir", help="directory of PGM covers")
    p.add_argument("output", help="CSV report path")
    _add_mode_flags(p, with_verify_flags=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("attack", help="inject test tampering into an image")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--kind", choices=("zero-region", "noise"),
                   default="zero-region")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_attack)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
