"""Colored permutations: the wreath products Z_m wr S_n and their pinnacles.

An element permutes the mn colored values xi^a(x) (color a in 0..m-1,
magnitude x in 1..n) color-equivariantly, so it is determined by where it
sends the plain magnitudes 1..n.  We store that image by position and never
evaluate xi as a complex number: every comparison and identity downstream
depends on the exponents alone.

The total order puts higher colors lower, and within one color larger
magnitudes lower:

    xi^(m-1)(n) < ... < xi^1(1) < xi^0(n) < ... < xi^0(2) < xi^0(1)

so the plain integers sit on top, reversed.  A pinnacle of w is a value
strictly above both word neighbors under this order.

All types are immutable values and all operations are pure, so everything
here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class ColoredValue:
    """A symbolic xi^color(magnitude), ordered by the reversed-color order."""

    color: int
    magnitude: int

    def __lt__(self, other: "ColoredValue") -> bool:
        if self.color != other.color:
            return self.color > other.color
        return self.magnitude > other.magnitude

    def __le__(self, other: "ColoredValue") -> bool:
        return self == other or self < other

    def __gt__(self, other: "ColoredValue") -> bool:
        return other < self

    def __ge__(self, other: "ColoredValue") -> bool:
        return other <= self

    def __str__(self) -> str:
        return f"xi^{self.color}({self.magnitude})"


def compare(u: ColoredValue, v: ColoredValue) -> int:
    """Strict total order: -1 if u is below v, 0 if equal, +1 if above."""
    if u == v:
        return 0
    return -1 if u < v else 1


def _coerce_value(value) -> ColoredValue:
    if isinstance(value, ColoredValue):
        return value
    color, magnitude = value
    return ColoredValue(int(color), int(magnitude))


@dataclass(frozen=True)
class GenPerm:
    """A generalized permutation of Z_m wr S_n, stored by position.

    ``image[j-1]`` is the colored value w(j).  One-line (word) notation lists
    the images from position n down to 1, matching the usual display.
    """

    m: int
    image: tuple[ColoredValue, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(_coerce_value(v) for v in self.image))
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        n = len(self.image)
        if n < 1:
            raise ValueError("degree must be positive")
        seen = 0
        for cv in self.image:
            if not 0 <= cv.color < self.m:
                raise ValueError(f"color {cv.color} out of range for modulus {self.m}")
            if not 1 <= cv.magnitude <= n:
                raise ValueError(f"magnitude {cv.magnitude} out of range for degree {n}")
            bit = 1 << cv.magnitude
            if seen & bit:
                raise ValueError(f"magnitude {cv.magnitude} repeated; not a bijection")
            seen |= bit

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, m: int, n: int) -> "GenPerm":
        return cls(m, tuple(ColoredValue(0, j) for j in range(1, n + 1)))

    @classmethod
    def from_word(cls, m: int, word: Iterable) -> "GenPerm":
        """Build from one-line notation: values listed w(n), w(n-1), ..., w(1)."""
        return cls(m, tuple(reversed([_coerce_value(v) for v in word])))

    @property
    def word(self) -> tuple[ColoredValue, ...]:
        return tuple(reversed(self.image))

    def __call__(self, j: int) -> ColoredValue:
        """The image w(j) of a plain position 1 <= j <= n."""
        return self.image[j - 1]

    def apply(self, value: ColoredValue) -> ColoredValue:
        """Color-equivariant action on any colored value: w(xi^a x) = xi^a w(x)."""
        base = self.image[value.magnitude - 1]
        return ColoredValue((base.color + value.color) % self.m, base.magnitude)

    def __mul__(self, other: "GenPerm") -> "GenPerm":
        return multiply(self, other)

    def __invert__(self) -> "GenPerm":
        return inverse(self)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)


def _check_same_group(w: GenPerm, u: GenPerm) -> None:
    if w.m != u.m or w.n != u.n:
        raise ValueError(
            f"mismatched groups: ({w.m},{w.n}) vs ({u.m},{u.n})"
        )


def multiply(w: GenPerm, u: GenPerm) -> GenPerm:
    """Compose as functions on the colored values, u acting first."""
    _check_same_group(w, u)
    m = w.m
    img = w.image
    out = []
    for f in u.image:
        base = img[f.magnitude - 1]
        out.append(ColoredValue((base.color + f.color) % m, base.magnitude))
    return GenPerm(m, tuple(out))


def inverse(w: GenPerm) -> GenPerm:
    out: list[ColoredValue | None] = [None] * w.n
    for j, cv in enumerate(w.image, start=1):
        out[cv.magnitude - 1] = ColoredValue((-cv.color) % w.m, j)
    return GenPerm(w.m, tuple(out))  # type: ignore[arg-type]


def peaks(w: GenPerm) -> frozenset[int]:
    """Positions j in 2..n-1 whose value sits strictly above both neighbors."""
    img = w.image
    return frozenset(
        j
        for j in range(2, w.n)
        if img[j - 2] < img[j - 1] and img[j] < img[j - 1]
    )


def color_sum(w: GenPerm) -> int:
    """The sum of all color exponents of w, an integer in [0, n(m-1)]."""
    return sum(cv.color for cv in w.image)


@dataclass(frozen=True)
class GroupParams:
    """The triple (m, p, n) with p | m, naming the reflection group G(m,p,n)."""

    m: int
    p: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.p < 1 or self.n < 1:
            raise ValueError(f"m, p, n must be positive, got {self}")
        if self.m % self.p != 0:
            raise ValueError(f"p = {self.p} does not divide m = {self.m}")

    @property
    def order(self) -> int:
        return self.m**self.n * math.factorial(self.n) // self.p

    def __str__(self) -> str:
        return f"G({self.m},{self.p},{self.n})"


def in_subgroup(w: GenPerm, g: GroupParams) -> bool:
    """Whether w lies in G(m,p,n), i.e. its color sum is divisible by p."""
    if w.m != g.m or w.n != g.n:
        raise ValueError(f"permutation over ({w.m},{w.n}) tested against {g}")
    return color_sum(w) % g.p == 0


@dataclass(frozen=True)
class PinSet:
    """A set of colored values over an ambient (m, n), kept sorted ascending.

    Candidate or certified pinnacle set; certification (distinct magnitudes,
    cardinality at most floor((n-1)/2)) is the deciders' business, not a
    construction invariant.
    """

    m: int
    n: int
    elements: tuple[ColoredValue, ...] = ()

    def __post_init__(self) -> None:
        elems = tuple(sorted({_coerce_value(v) for v in self.elements}))
        object.__setattr__(self, "elements", elems)
        if self.m < 1 or self.n < 1:
            raise ValueError(f"bad ambient (m={self.m}, n={self.n})")
        for cv in elems:
            if not 0 <= cv.color < self.m:
                raise ValueError(f"color {cv.color} out of range for modulus {self.m}")
            if not 1 <= cv.magnitude <= self.n:
                raise ValueError(f"magnitude {cv.magnitude} out of range for degree {self.n}")

    @property
    def d(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[ColoredValue]:
        return iter(self.elements)

    def __contains__(self, value) -> bool:
        return _coerce_value(value) in self.elements

    def magnitude_set(self) -> frozenset[int]:
        """The plain magnitudes appearing in the set (multiplicity dropped)."""
        return frozenset(cv.magnitude for cv in self.elements)

    def color_slice(self, i: int) -> "PinSet":
        """The subset of elements with color exactly i; the slices partition."""
        if not 0 <= i < self.m:
            raise ValueError(f"color {i} out of range for modulus {self.m}")
        return PinSet(self.m, self.n, tuple(cv for cv in self.elements if cv.color == i))

    def __str__(self) -> str:
        if not self.elements:
            return "{}"
        return "{" + ", ".join(str(cv) for cv in self.elements) + "}"


def pinnacle_set(w: GenPerm) -> PinSet:
    """The values at the peak positions of w."""
    img = w.image
    return PinSet(w.m, w.n, tuple(img[j - 1] for j in peaks(w)))
