"""Deciding which candidate sets occur as pinnacle sets of some permutation.

Three independent deciders are provided.  The canonical-witness test is the
production one: a set is admissible exactly when the canonical witness built
from it has the set as its pinnacles, which is a single O(n) scan.  The other
two re-derive the answer structurally, peeling off one color at a time or
jumping straight to the top color; they exist so the characterizations can be
cross-checked against each other and against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass

from .wreath import ColoredValue, GenPerm, PinSet, pinnacle_set


class AdmissibilityError(ValueError):
    """A candidate set violates a structural precondition."""


class MultiplicityViolation(AdmissibilityError):
    """Two elements share a magnitude, so no witness can be a bijection."""


class CardinalityViolation(AdmissibilityError):
    """More than floor((n-1)/2) elements; there are not enough valley slots."""


def max_pinnacles(n: int) -> int:
    """The hard cap floor((n-1)/2) on the number of pinnacles in degree n."""
    return (n - 1) // 2


def _repeated_magnitude(P: PinSet) -> int | None:
    seen: set[int] = set()
    for cv in P.elements:
        if cv.magnitude in seen:
            return cv.magnitude
        seen.add(cv.magnitude)
    return None


def canonical_witness(P: PinSet) -> GenPerm:
    """The witness interleaving P with top-color fillers, both read ascending.

    Word layout (positions n down to 1), with v_1 < v_2 < ... the unused
    magnitudes in ascending order (numerically descending) and the elements
    of P ascending:

        xi^(m-1)(v_1)  p_1  xi^(m-1)(v_2)  p_2 ... p_d  xi^(m-1)(v_{d+1}) ...

    Among all witnesses of P this one maximizes the color sum.
    """
    repeated = _repeated_magnitude(P)
    if repeated is not None:
        raise MultiplicityViolation(f"repeated magnitude {repeated}")
    cap = max_pinnacles(P.n)
    if P.d > cap:
        raise CardinalityViolation(
            f"{P.d} pinnacles exceed the maximum {cap} for degree {P.n}"
        )
    used = P.magnitude_set()
    fillers = [x for x in range(P.n, 0, -1) if x not in used]
    top = P.m - 1
    word: list[ColoredValue] = []
    for i, pin in enumerate(P.elements):
        word.append(ColoredValue(top, fillers[i]))
        word.append(pin)
    word.extend(ColoredValue(top, v) for v in fillers[P.d :])
    return GenPerm.from_word(P.m, word)


@dataclass(frozen=True)
class Admissibility:
    """Outcome of the witness test, with a machine-readable failure reason."""

    admissible: bool
    code: str | None = None
    reason: str | None = None
    witness: GenPerm | None = None


def admissibility(P: PinSet) -> Admissibility:
    """Witness decider with diagnostics; never raises on a valid PinSet."""
    repeated = _repeated_magnitude(P)
    if repeated is not None:
        return Admissibility(False, "repeated-magnitude", f"repeated magnitude {repeated}")
    cap = max_pinnacles(P.n)
    if P.d > cap:
        return Admissibility(
            False,
            "too-many-pinnacles",
            f"{P.d} pinnacles exceed the maximum {cap} for degree {P.n}",
        )
    witness = canonical_witness(P)
    if pinnacle_set(witness) != P:
        return Admissibility(False, "no-witness", "canonical witness does not realize the set")
    return Admissibility(True, witness=witness)


def is_admissible(P: PinSet) -> bool:
    """Decider A: the canonical witness realizes P."""
    return admissibility(P).admissible


def _pack(alive: list[int]) -> dict[int, int]:
    # order-preserving relabeling of the surviving magnitudes onto 1..len(alive)
    return {x: i for i, x in enumerate(sorted(alive), start=1)}


def is_admissible_rec(P: PinSet) -> bool:
    """Decider B: peel the color-0 slice and recurse one color down.

    P is admissible iff its cardinality is within the cap, its magnitudes are
    pairwise distinct, and the color-shifted remainder (colors lowered by one,
    surviving magnitudes packed onto an initial segment) is admissible over
    modulus m-1.  The base modulus 1 falls back to the witness test.
    """
    if P.d > max_pinnacles(P.n):
        return False
    if _repeated_magnitude(P) is not None:
        return False
    if P.m == 1:
        return is_admissible(P)
    zero_mags = {cv.magnitude for cv in P.elements if cv.color == 0}
    alive = [x for x in range(1, P.n + 1) if x not in zero_mags]
    relabel = _pack(alive)
    rest = tuple(
        ColoredValue(cv.color - 1, relabel[cv.magnitude])
        for cv in P.elements
        if cv.color != 0
    )
    return is_admissible_rec(PinSet(P.m - 1, len(alive), rest))


def is_admissible_top(P: PinSet) -> bool:
    """Decider C: only the top-color slice needs a nontrivial check.

    After removing the magnitudes used by the lower colors, the slice of
    color m-1 must be admissible as a plain (modulus 1) pinnacle set on the
    packed remaining magnitudes; that single base decision uses decider A.
    """
    if P.d > max_pinnacles(P.n):
        return False
    if _repeated_magnitude(P) is not None:
        return False
    top = P.m - 1
    lower_mags = {cv.magnitude for cv in P.elements if cv.color != top}
    alive = [x for x in range(1, P.n + 1) if x not in lower_mags]
    relabel = _pack(alive)
    packed = tuple(
        ColoredValue(0, relabel[cv.magnitude]) for cv in P.elements if cv.color == top
    )
    return is_admissible(PinSet(1, len(alive), packed))


@dataclass(frozen=True)
class ColoredWitness:
    """A degree in which a one-colored set is admissible, plus a witness."""

    degree: int
    witness: GenPerm


def colored_admissible_degree(P: PinSet) -> ColoredWitness:
    """Smallest-construction degree N = 2L+1 admitting a one-colored set.

    L is the largest magnitude in P (the least element of |P| under the
    reversed order), so all of P fits below the midpoint and the standard
    interleaving witnesses it in Z_m wr S_N.
    """
    if not P.elements:
        raise ValueError("empty set has no colored degree")
    colors = {cv.color for cv in P.elements}
    if len(colors) != 1:
        raise ValueError(f"set uses colors {sorted(colors)}; expected exactly one")
    largest = max(P.magnitude_set())
    degree = 2 * largest + 1
    witness = canonical_witness(PinSet(P.m, degree, P.elements))
    return ColoredWitness(degree, witness)
