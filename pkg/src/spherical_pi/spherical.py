"""The pipeline: from a spherical datum to component and fundamental groups.

A :class:`SphericalDatum` packages a root datum, the weight lattice of
the homogeneous space embedded into the group's character lattice, the
color functionals evaluated on the weight basis, and the characteristic
exponent p.  From it we compute, in the coordinates of the weight basis:

* the color saturation: all fractional weights on which every color
  functional is integral;
* its restriction to the ambient character lattice, obtained by imposing
  integrality of the embedding coordinates as additional functionals;
* the prime-to-p parts of pi0 (of the isotropy group) and pi1 (of the
  space) as the p'-parts of those two quotients, with each divisible
  quotient direction contributing one profinite prime-to-p factor to pi1.

Everything before the final p'-extraction is characteristic-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .arith import is_prime
from .intmat import DimensionError, IntMatrix, snf, solve_in_lattice, stack_rows
from .lattices import FinGenAbQuotient, SaturatedSet, dual_saturation, p_prime_part
from .root_data import RootDatum, restrict_coroots

PASS = "pass"
WARN = "warn"
FAIL = "fail"


class ValidationError(ValueError):
    """A strict-mode validation check failed."""


@dataclass(frozen=True)
class SphericalDatum:
    """Input to the pipeline.

    ``lattice_embedding`` is a d x r integer matrix whose columns are the
    weight-basis vectors in character-lattice coordinates (full column
    rank).  ``colors`` is an m x r integer matrix; row D holds the values
    of the color functional D on the weight basis.  ``char_exponent`` is
    1 in characteristic zero and the characteristic otherwise.
    """

    root_datum: RootDatum
    lattice_embedding: IntMatrix
    colors: IntMatrix
    char_exponent: int
    label: str = ""

    def __post_init__(self) -> None:
        if self.lattice_embedding.rows != self.root_datum.rank:
            raise DimensionError(
                f"lattice embedding has {self.lattice_embedding.rows} rows, "
                f"expected {self.root_datum.rank}"
            )
        if self.colors.cols != self.lattice_embedding.cols:
            raise DimensionError(
                f"colors have {self.colors.cols} columns, expected "
                f"{self.lattice_embedding.cols}"
            )
        if snf(self.lattice_embedding).rank != self.lattice_embedding.cols:
            raise ValueError("lattice embedding is rank-deficient")
        p = self.char_exponent
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"characteristic exponent must be a positive int, got {p!r}")
        if p != 1 and not is_prime(p):
            raise ValueError(f"characteristic exponent must be 1 or a prime, got {p}")

    @property
    def rank(self) -> int:
        """Rank r of the weight lattice."""
        return self.lattice_embedding.cols

    @property
    def ambient_rank(self) -> int:
        """Rank d of the character lattice."""
        return self.root_datum.rank

    @property
    def color_count(self) -> int:
        return self.colors.rows

    def with_char_exponent(self, p: int) -> "SphericalDatum":
        return replace(self, char_exponent=p)


@dataclass(frozen=True)
class PiResult:
    """Prime-to-p part of pi0 or pi1.

    ``zhat_rank`` counts profinite prime-to-p factors (always 0 for pi0);
    the invariant factors are coprime to p and form a divisibility chain.
    """

    zhat_rank: int
    invariant_factors: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        if self.zhat_rank < 0:
            raise ValueError("zhat rank must be nonnegative")
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} is not >= 2")
            if self.p > 1 and d % self.p == 0:
                raise ValueError(f"invariant factor {d} is divisible by p = {self.p}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f"invariant factors {factors} are not a divisibility chain")
        if self.p < 1 or (self.p != 1 and not is_prime(self.p)):
            raise ValueError(f"characteristic exponent must be 1 or a prime, got {self.p}")

    @property
    def is_trivial(self) -> bool:
        return self.zhat_rank == 0 and not self.invariant_factors


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    level: str
    message: str


@dataclass(frozen=True)
class Report:
    """Everything the pipeline produces for one datum.

    Quotient and pi fields are None only when the corresponding stage
    failed; the failure then appears in ``validation``.
    """

    datum: SphericalDatum
    saturation_quotient: FinGenAbQuotient | None
    ambient_saturation_quotient: FinGenAbQuotient | None
    pi0: PiResult | None
    pi1: PiResult | None
    validation: tuple[CheckOutcome, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.pi0 is not None and self.pi0.zhat_rank != 0:
            raise ValueError("pi0 cannot have profinite factors")


def validate(sd: SphericalDatum, strict: bool = False) -> tuple[CheckOutcome, ...]:
    """Run the input sanity checks.

    The structural checks (embedding rank, characteristic exponent) are
    enforced at construction already and are reported as passes.  The
    substantial check is that every simple coroot, restricted to the
    weight lattice, is an integer combination of the color functionals;
    genuine homogeneous data always satisfies it, so a failure is an
    error under ``strict`` and a warning otherwise.
    """
    outcomes = [
        CheckOutcome(
            "embedding-rank",
            PASS,
            f"lattice embedding has full column rank {sd.rank}",
        )
    ]
    restricted = restrict_coroots(sd.root_datum, sd.lattice_embedding)
    colors_t = sd.colors.transpose()
    bad = [
        i
        for i in range(restricted.rows)
        if solve_in_lattice(colors_t, restricted[i]) is None
    ]
    if bad:
        indices = ", ".join(str(i) for i in bad)
        outcomes.append(
            CheckOutcome(
                "coroot-span",
                WARN,
                f"restricted simple coroot(s) {indices} lie outside the "
                "integer row span of the color functionals",
            )
        )
    else:
        outcomes.append(
            CheckOutcome(
                "coroot-span",
                PASS,
                "every simple coroot restricts to an integer combination "
                "of the color functionals",
            )
        )
    outcomes.append(
        CheckOutcome(
            "char-exponent",
            PASS,
            "characteristic exponent is 1 (characteristic zero)"
            if sd.char_exponent == 1
            else f"characteristic exponent {sd.char_exponent} is prime",
        )
    )
    if strict and any(o.level != PASS for o in outcomes):
        raise ValidationError(
            "; ".join(o.message for o in outcomes if o.level != PASS)
        )
    return tuple(outcomes)


def color_saturation(sd: SphericalDatum) -> tuple[SaturatedSet, FinGenAbQuotient]:
    """Fractional weights on which every color functional is integral.

    Returned in weight-basis coordinates; the quotient is taken over the
    weight lattice itself.
    """
    return dual_saturation(sd.rank, sd.colors)


def _ambient_constraints(sd: SphericalDatum) -> IntMatrix:
    # integrality against the colors AND integrality of the ambient
    # coordinates, imposed simultaneously
    return stack_rows(sd.colors, sd.lattice_embedding)


def ambient_color_saturation(
    sd: SphericalDatum,
) -> tuple[SaturatedSet, FinGenAbQuotient]:
    """Part of the color saturation lying in the ambient character lattice.

    A fractional weight x (weight-basis coordinates) lies in the character
    lattice exactly when its ambient coordinates E x are integral, so the
    intersection is the saturation for the stacked functional matrix
    [colors; embedding].  The embedding has full column rank, hence the
    quotient over the weight lattice is always finite.
    """
    return dual_saturation(sd.rank, _ambient_constraints(sd))


def ambient_saturation_quotient(sd: SphericalDatum) -> FinGenAbQuotient:
    return ambient_color_saturation(sd)[1]


def pi0_p_prime(sd: SphericalDatum) -> PiResult:
    """Prime-to-p part of the component group of the isotropy subgroup.

    This is the p'-part of the finite quotient of the ambient saturation
    by the weight lattice; the p-part of pi0 is not determined by the
    datum.
    """
    q = ambient_saturation_quotient(sd)
    if q.divisible_rank:
        raise RuntimeError(
            "ambient saturation quotient is not finite; the embedding lost rank"
        )
    stripped = p_prime_part(q, sd.char_exponent)
    return PiResult(0, stripped.invariant_factors, sd.char_exponent)


def pi1_p_prime(sd: SphericalDatum) -> PiResult:
    """Prime-to-p part of the etale fundamental group of the space.

    Finite invariant factors of the color saturation quotient contribute
    their p'-parts; every divisible direction contributes one profinite
    prime-to-p factor.
    """
    _, q = color_saturation(sd)
    stripped = p_prime_part(q, sd.char_exponent)
    return PiResult(q.divisible_rank, stripped.invariant_factors, sd.char_exponent)


def full_report(sd: SphericalDatum) -> Report:
    """Validate and run the whole pipeline, downgrading math failures.

    Never raises on a structurally valid datum: a stage that fails turns
    into a FAIL validation entry and a missing field instead.
    """
    outcomes = list(validate(sd, strict=False))
    sat_q: FinGenAbQuotient | None = None
    amb_q: FinGenAbQuotient | None = None
    pi0: PiResult | None = None
    pi1: PiResult | None = None
    try:
        _, sat_q = color_saturation(sd)
        pi1 = pi1_p_prime(sd)
    except Exception as exc:  # pragma: no cover - defensive
        outcomes.append(CheckOutcome("color-saturation", FAIL, str(exc)))
    try:
        amb_q = ambient_saturation_quotient(sd)
        pi0 = pi0_p_prime(sd)
    except Exception as exc:  # pragma: no cover - defensive
        outcomes.append(CheckOutcome("ambient-saturation", FAIL, str(exc)))
    return Report(
        datum=sd,
        saturation_quotient=sat_q,
        ambient_saturation_quotient=amb_q,
        pi0=pi0,
        pi1=pi1,
        validation=tuple(outcomes),
    )
