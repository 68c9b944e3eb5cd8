"""Command-line frontend.

Exit codes: 0 on success, 2 on parameter errors, 3 on I/O or image format
errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .acm import AcmParams, matrix_period
from .analysis import (
    orbit_histogram,
    similarity_curve,
    write_histogram_csv,
    write_similarity_csv,
)
from .bigfmt import scientific
from .errors import ImageFormatError, ParameterError
from .images import KeyConfig, permutation_for, read_image, shift_pixels, write_image
from .landau import landau_g
from .permutation import (
    CycleDecomposition,
    Permutation,
    build_oacm_permutation,
    cycle_decompose,
    image_period,
)
from .tiling import TilingParams, square_locations


def _add_tiling_args(parser: argparse.ArgumentParser, with_pq: bool = True) -> None:
    parser.add_argument("--height", type=int, required=True, help="image height in pixels")
    parser.add_argument("--width", type=int, required=True, help="image width in pixels")
    parser.add_argument("--square-size", type=int, required=True, help="side of each square")
    parser.add_argument("--overlap", type=int, required=True, help="requested overlap in pixels")
    if with_pq:
        parser.add_argument("--p", type=int, default=1, help="map parameter p (default 1)")
        parser.add_argument("--q", type=int, default=1, help="map parameter q (default 1)")


def _cycles_from_args(args) -> CycleDecomposition:
    params = TilingParams(args.height, args.width, args.square_size, args.overlap)
    tiling = square_locations(params)
    return cycle_decompose(build_oacm_permutation(tiling, args.p, args.q))


def _open_out(args):
    if args.out is None:
        return sys.stdout, False
    return open(args.out, "w"), True


def cmd_tile(args) -> int:
    params = TilingParams(args.height, args.width, args.square_size, args.overlap)
    text = square_locations(params).to_json()
    if args.out is None:
        print(text)
    else:
        Path(args.out).write_text(text + "\n")
    return 0


def cmd_period(args) -> int:
    period = image_period(_cycles_from_args(args))
    print(f"period {period}")
    print(f"scientific {scientific(period)}")
    return 0


def cmd_similarity(args) -> int:
    curve = similarity_curve(_cycles_from_args(args), args.kmax)
    stream, close = _open_out(args)
    try:
        write_similarity_csv(curve, stream)
    finally:
        if close:
            stream.close()
    return 0


def cmd_histogram(args) -> int:
    hist = orbit_histogram(_cycles_from_args(args))
    stream, close = _open_out(args)
    try:
        write_histogram_csv(hist, stream)
    finally:
        if close:
            stream.close()
    return 0


def cmd_landau(args) -> int:
    result = landau_g(args.n)
    print(f"n {result.n}")
    print(f"g {result.g}")
    print(f"scientific {scientific(result.g)}")
    print("series " + " ".join(str(part) for part in result.series))
    return 0


def cmd_acm_period(args) -> int:
    print(matrix_period(AcmParams(args.p, args.q, args.n)))
    return 0


def _load_key(path: str) -> KeyConfig:
    return KeyConfig.from_json(Path(path).read_text())


def _permutation_with_cache(height: int, width: int, key: KeyConfig, cache_dir) -> Permutation:
    if cache_dir is None:
        return permutation_for(height, width, key)
    cache = Path(cache_dir)
    cache.mkdir(parents=True, exist_ok=True)
    name = f"perm-{height}x{width}-s{key.square_size}-o{key.overlap}-p{key.p}-q{key.q}.bin"
    path = cache / name
    if path.exists():
        try:
            perm = Permutation.from_bytes(path.read_bytes())
            if (perm.height, perm.width) == (height, width):
                return perm
        except ParameterError:
            pass  # stale or corrupt cache entry: rebuild below
    perm = permutation_for(height, width, key)
    path.write_bytes(perm.to_bytes())
    return perm


def _run_scramble(args, direction: int) -> int:
    key = _load_key(args.key)
    img = read_image(args.input)
    perm = _permutation_with_cache(img.height, img.width, key, args.cache_dir)
    cycles = cycle_decompose(perm)
    write_image(shift_pixels(img, cycles, direction * key.iterations), args.out)
    return 0


def cmd_scramble(args) -> int:
    return _run_scramble(args, 1)


def cmd_descramble(args) -> int:
    return _run_scramble(args, -1)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oacm",
        description="Cat-map scrambling over overlapping square partitions, with exact period analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tile", help="print the square cover as JSON")
    _add_tiling_args(sp, with_pq=False)
    sp.add_argument("--out", help="write JSON here instead of stdout")
    sp.set_defaults(func=cmd_tile)

    sp = sub.add_parser("period", help="exact image period for a configuration")
    _add_tiling_args(sp)
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("similarity", help="similarity-vs-iteration curve as CSV")
    _add_tiling_args(sp)
    sp.add_argument("--kmax", type=int, required=True, help="last iteration to evaluate")
    sp.add_argument("--out", help="write CSV here instead of stdout")
    sp.set_defaults(func=cmd_similarity)

    sp = sub.add_parser("histogram", help="orbit-length histogram as CSV")
    _add_tiling_args(sp)
    sp.add_argument("--out", help="write CSV here instead of stdout")
    sp.set_defaults(func=cmd_histogram)

    sp = sub.add_parser("landau", help="maximal permutation order g(n) and a witness partition")
    sp.add_argument("--n", type=int, required=True, help="element (pixel) count")
    sp.set_defaults(func=cmd_landau)

    sp = sub.add_parser("acm-period", help="period of the plain cat-map matrix mod n")
    sp.add_argument("--n", type=int, required=True, help="lattice side")
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--q", type=int, default=1)
    sp.set_defaults(func=cmd_acm_period)

    for name, func in (("scramble", cmd_scramble), ("descramble", cmd_descramble)):
        sp = sub.add_parser(name, help=f"{name} a PGM/PPM image with a JSON key")
        sp.add_argument("--key", required=True, help="JSON key file")
        sp.add_argument("--in", dest="input", required=True, help="input image (P5/P6)")
        sp.add_argument("--out", required=True, help="output image path")
        sp.add_argument("--cache-dir", help="directory for cached permutations")
        sp.set_defaults(func=func)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ImageFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
