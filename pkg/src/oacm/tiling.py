"""Overlapping-square covers of a rectangle.

Corner coordinates along each axis are the multiples of
step = square_size - overlap that keep the square strictly short of the
far edge, plus one square pushed flush against that edge.  The flush
square may overlap its neighbour by more than requested; that is the
price of covering every pixel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class TilingParams:
    height: int
    width: int
    square_size: int
    overlap: int

    def __post_init__(self):
        if self.height < 1 or self.width < 1:
            raise ParameterError(f"image dimensions must be >= 1, got {self.height}x{self.width}")
        if not (1 <= self.square_size <= min(self.height, self.width)):
            raise ParameterError(
                f"square size {self.square_size} must be in [1, min(height, width) = "
                f"{min(self.height, self.width)}]"
            )
        if not (0 <= self.overlap < self.square_size):
            raise ParameterError(
                f"overlap {self.overlap} must be in [0, square size = {self.square_size})"
            )

    @property
    def step(self) -> int:
        return self.square_size - self.overlap


@dataclass(frozen=True)
class Tiling:
    """Ordered list of (x, y) top-left square corners covering the image.

    squares is row-major: sorted by y, then x.
    """

    params: TilingParams
    squares: tuple[tuple[int, int], ...]

    def to_json(self) -> str:
        p = self.params
        return json.dumps(
            {
                "height": p.height,
                "width": p.width,
                "square_size": p.square_size,
                "overlap": p.overlap,
                "squares": [list(sq) for sq in self.squares],
            }
        )


def _axis_coords(length: int, size: int, step: int) -> list[int]:
    coords = list(range(0, length - size, step))  # multiples of step <= length-size-1
    coords.append(length - size)
    return sorted(set(coords))


def square_locations(params: TilingParams) -> Tiling:
    """Generate the ordered overlapping-square cover for the given parameters."""
    ys = _axis_coords(params.height, params.square_size, params.step)
    xs = _axis_coords(params.width, params.square_size, params.step)
    squares = tuple((x, y) for y in ys for x in xs)
    return Tiling(params, squares)


def square_count(params: TilingParams) -> int:
    """Number of squares the cover will contain."""
    return len(square_locations(params).squares)
