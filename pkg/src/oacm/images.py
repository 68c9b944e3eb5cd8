"""Binary netpbm I/O and keyed scrambling of raster images.

Only 8-bit P5 (graymap) and P6 (pixmap) files are supported; anything
else is rejected loudly rather than silently converted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    MalformedHeaderError,
    ParameterError,
    TruncatedDataError,
    UnsupportedFormatError,
)
from .permutation import (
    CycleDecomposition,
    apply_iterations,
    build_oacm_permutation,
    cycle_decompose,
)
from .tiling import TilingParams, square_locations

_MAGIC_CHANNELS = {b"P5": 1, b"P6": 3}
_OTHER_NETPBM = {b"P1", b"P2", b"P3", b"P4", b"P7"}


@dataclass(frozen=True, eq=False)
class RasterImage:
    """8-bit image; samples are row-major and channel-interleaved."""

    height: int
    width: int
    channels: int
    samples: np.ndarray

    def __post_init__(self):
        if self.height < 1 or self.width < 1:
            raise ParameterError(f"image dimensions must be >= 1, got {self.height}x{self.width}")
        if self.channels not in (1, 3):
            raise ParameterError(f"channels must be 1 or 3, got {self.channels}")
        samples = np.ascontiguousarray(self.samples, dtype=np.uint8)
        object.__setattr__(self, "samples", samples)
        expected = self.height * self.width * self.channels
        if samples.shape != (expected,):
            raise ParameterError(f"expected {expected} samples, got shape {samples.shape}")

    def __eq__(self, other):
        if not isinstance(other, RasterImage):
            return NotImplemented
        return (
            (self.height, self.width, self.channels)
            == (other.height, other.width, other.channels)
            and np.array_equal(self.samples, other.samples)
        )


@dataclass(frozen=True)
class KeyConfig:
    """Scramble key: tiling shape, map parameters, and iteration count.

    iterations is an arbitrary-precision non-negative integer; image
    periods dwarf machine range, so JSON keys may carry it as a decimal
    string.
    """

    square_size: int
    overlap: int
    p: int
    q: int
    iterations: int

    def __post_init__(self):
        if self.square_size < 1:
            raise ParameterError(f"square size must be >= 1, got {self.square_size}")
        if not 0 <= self.overlap < self.square_size:
            raise ParameterError(
                f"overlap {self.overlap} must be in [0, square size = {self.square_size})"
            )
        if self.p < 0 or self.q < 0:
            raise ParameterError(f"p and q must be non-negative, got p={self.p}, q={self.q}")
        if self.iterations < 0:
            raise ParameterError(f"iterations must be >= 0, got {self.iterations}")

    @classmethod
    def from_json(cls, text: str) -> "KeyConfig":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParameterError(f"key file is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise ParameterError("key file must contain a JSON object")
        try:
            fields = {name: raw[name] for name in ("square_size", "overlap", "p", "q", "iterations")}
        except KeyError as exc:
            raise ParameterError(f"key file is missing field {exc}") from exc
        for name, value in fields.items():
            # ints, or decimal strings for values beyond machine width
            if isinstance(value, bool) or not isinstance(value, (int, str)):
                raise ParameterError(f"key field {name!r} must be an integer, got {value!r}")
            try:
                fields[name] = int(value)
            except ValueError as exc:
                raise ParameterError(f"key field {name!r} is not an integer: {value!r}") from exc
        return cls(**fields)

    def to_json(self) -> str:
        return json.dumps(
            {
                "square_size": self.square_size,
                "overlap": self.overlap,
                "p": self.p,
                "q": self.q,
                # keep big iteration counts portable across JSON parsers
                "iterations": str(self.iterations),
            }
        )


def _parse_header(data: bytes):
    magic = data[:2]
    if magic in _OTHER_NETPBM:
        raise UnsupportedFormatError(f"netpbm variant {magic.decode()} is not supported (P5/P6 only)")
    if magic not in _MAGIC_CHANNELS:
        raise MalformedHeaderError("not a binary netpbm file (missing P5/P6 magic)")
    fields = []
    i = 2
    while len(fields) < 3:
        while i < len(data):
            byte = data[i : i + 1]
            if byte.isspace():
                i += 1
            elif byte == b"#":
                nl = data.find(b"\n", i)
                i = len(data) if nl < 0 else nl + 1
            else:
                break
        start = i
        while i < len(data) and not data[i : i + 1].isspace():
            i += 1
        if i == start:
            raise MalformedHeaderError("header ended before width, height and maxval were read")
        try:
            fields.append(int(data[start:i]))
        except ValueError:
            raise MalformedHeaderError(f"non-integer header field {data[start:i]!r}") from None
    if i >= len(data):
        raise MalformedHeaderError("missing whitespace after maxval")
    i += 1  # exactly one whitespace byte separates header from raster
    width, height, maxval = fields
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"non-positive dimensions {width}x{height}")
    if 256 <= maxval <= 65535:
        raise UnsupportedFormatError(f"maxval {maxval} needs 16-bit samples; only 8-bit is supported")
    if not 1 <= maxval <= 255:
        raise MalformedHeaderError(f"maxval {maxval} out of range")
    return _MAGIC_CHANNELS[magic], width, height, i


def read_image(path) -> RasterImage:
    data = Path(path).read_bytes()
    channels, width, height, offset = _parse_header(data)
    count = height * width * channels
    raster = data[offset : offset + count]
    if len(raster) < count:
        raise TruncatedDataError(f"raster holds {len(raster)} bytes, header promises {count}")
    return RasterImage(height, width, channels, np.frombuffer(raster, dtype=np.uint8))


def write_image(img: RasterImage, path) -> None:
    magic = b"P5" if img.channels == 1 else b"P6"
    header = magic + f"\n{img.width} {img.height}\n255\n".encode()
    Path(path).write_bytes(header + img.samples.tobytes())


def permutation_for(height: int, width: int, key: KeyConfig):
    """The one-pass permutation a key induces on a height x width image."""
    params = TilingParams(height, width, key.square_size, key.overlap)
    return build_oacm_permutation(square_locations(params), key.p, key.q)


def shift_pixels(img: RasterImage, cycles: CycleDecomposition, z: int) -> RasterImage:
    """Move every channel z steps along the orbits (negative z moves back)."""
    flat = img.samples.reshape(-1, img.channels)
    out = np.empty_like(flat)
    for c in range(img.channels):
        out[:, c] = apply_iterations(cycles, z, np.ascontiguousarray(flat[:, c]))
    return RasterImage(img.height, img.width, img.channels, out.reshape(-1))


def scramble(img: RasterImage, key: KeyConfig) -> RasterImage:
    """Apply key.iterations passes of the keyed scramble to every channel."""
    cycles = cycle_decompose(permutation_for(img.height, img.width, key))
    return shift_pixels(img, cycles, key.iterations)


def descramble(img: RasterImage, key: KeyConfig) -> RasterImage:
    """Exact inverse of scramble with the same key."""
    cycles = cycle_decompose(permutation_for(img.height, img.width, key))
    return shift_pixels(img, cycles, -key.iterations)
