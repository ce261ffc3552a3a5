"""Free quasi-particle spectrum of the trigonometric model.

Everything is exact rational arithmetic; momenta carry the unit 2*pi/L and
energies its square, with L kept symbolic.  The quasi-momentum uses the
half-coupling staircase

    kappa_i = (2 pi / L) [lam_i + (b/2)(N + 1 - 2 i) + q],

the unique choice consistent with the ground-state energy, the excitation
eigenvalues, and the exclusion spacing at once.  The variant with a full
coupling staircase circulates in print; it is reachable through
printed_form=True for comparison but is not part of the verified contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TooManyParts
from .partitions import Partition

MOMENTUM_UNIT = "2*pi/L"
ENERGY_UNIT = "(2*pi/L)^2"
GROUND_ENERGY_UNIT = "(pi/L)^2"


@dataclass(frozen=True)
class ModelParams:
    nparticles: int
    beta: Fraction
    q: Fraction = Fraction(0)
    length: str | Fraction = "2pi"

    def __post_init__(self):
        if self.nparticles < 1:
            raise TooManyParts(f"need at least one particle, got {self.nparticles}")


def ground_energy(params: ModelParams) -> Fraction:
    """Ground state energy in units of (pi/L)^2: b^2 N (N^2 - 1) / 3."""
    n = params.nparticles
    return params.beta**2 * Fraction(n * (n * n - 1), 3)


def quasi_momenta(
    lam: Partition, params: ModelParams, printed_form: bool = False
) -> list[Fraction]:
    """Quasi-momenta in units of 2*pi/L, one per particle, strictly ordered."""
    lam = Partition(lam)
    n = params.nparticles
    if len(lam) > n:
        raise TooManyParts(f"l({lam}) = {len(lam)} > {n} particles")
    padded = lam.pad(n)
    stair = params.beta if printed_form else params.beta / 2
    return [
        Fraction(padded[i - 1]) + stair * (n + 1 - 2 * i) + params.q
        for i in range(1, n + 1)
    ]


def total_momentum(lam: Partition, params: ModelParams) -> Fraction:
    return sum(quasi_momenta(lam, params), Fraction(0))


def total_energy(lam: Partition, params: ModelParams) -> Fraction:
    """Sum of squared quasi-momenta, in units of (2*pi/L)^2."""
    return sum((k * k for k in quasi_momenta(lam, params)), Fraction(0))


@dataclass(frozen=True)
class SpectrumRecord:
    lam: Partition
    params: ModelParams
    kappa: tuple[Fraction, ...]
    momentum: Fraction
    energy: Fraction
    ground: Fraction

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "kappa": [str(k) for k in self.kappa],
            "momentum": str(self.momentum),
            "energy": str(self.energy),
        }


def spectrum_record(lam: Partition, params: ModelParams) -> SpectrumRecord:
    kappa = tuple(quasi_momenta(lam, params))
    return SpectrumRecord(
        lam=Partition(lam),
        params=params,
        kappa=kappa,
        momentum=sum(kappa, Fraction(0)),
        energy=sum((k * k for k in kappa), Fraction(0)),
        ground=ground_energy(params),
    )


@dataclass(frozen=True)
class WavefunctionDescriptor:
    """Shape of the full eigenfunction: a power of the product of all
    variables, the pair-difference factor to the coupling, and a Jack factor."""

    jack_lam: Partition
    nparticles: int
    ring_exponent: Fraction
    pair_exponent: Fraction

    def to_json(self) -> dict:
        return {
            "lambda": list(self.jack_lam),
            "nparticles": self.nparticles,
            "product_power": str(self.ring_exponent),
            "pair_difference_power": str(self.pair_exponent),
            "jack_normalization": "monic",
        }


def wavefunction_descriptor(lam: Partition, params: ModelParams) -> WavefunctionDescriptor:
    lam = Partition(lam)
    n = params.nparticles
    if len(lam) > n - 1:
        raise TooManyParts(f"descriptor needs l(lambda) <= {n - 1}, got {len(lam)}")
    return WavefunctionDescriptor(
        jack_lam=lam,
        nparticles=n,
        ring_exponent=params.q - Fraction(n - 1) * params.beta / 2,
        pair_exponent=params.beta,
    )
