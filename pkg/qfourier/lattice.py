"""Discrete lattice model of the 4-f filter

A periodic Fourier-plane mask e^{i g(θ)}, θ = 2πν(x_f - x0), moves light
between lattice sites. A photon entering at site a leaves at site a + t with
amplitude U_t = (1/2π) ∫ e^{i g(θ)} e^{itθ} dθ. For the sinusoidal grating
g = A_p cos θ this is U_t = i^t J_t(A_p), the tight-binding walk.

The functions here never touch the continuous engine and serve as its
reference.
"""

# Standard library imports
import functools
import logging
import math
import operator
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

# Third party imports
import numpy as np

# QFourier imports
from qfourier import _exceptions
from qfourier.biphoton import ExchangeSymmetry

log = logging.getLogger(__name__)

# Range of the Bessel function implementation
MAX_ORDER = 60
MAX_ARGUMENT = 30.0

UNITARITY_TOLERANCE = 1e-10
QUADRATURE_TOLERANCE = 1e-8
MIN_QUADRATURE_POINTS = 256

# Rescale the downward recurrence before it overflows
_RESCALE = 1e200

# Powers of i, indexed by order mod 4
_I_POWERS = np.array([1, 1j, -1, -1j])


#
# Bessel functions
#
def _check_bessel_range(order: int, x: float) -> None:
    """Raise InvalidArgument outside |order| <= 60, |x| <= 30"""
    if abs(order) > MAX_ORDER:
        raise _exceptions.InvalidArgument(
            f"Bessel order {order} is outside [-{MAX_ORDER}, {MAX_ORDER}]"
        )
    if not abs(x) <= MAX_ARGUMENT:
        raise _exceptions.InvalidArgument(
            f"Bessel argument {x} is outside [-{MAX_ARGUMENT}, {MAX_ARGUMENT}]"
        )


def _bessel_series(order: int, x: float) -> float:
    """Power series Σ (-1)^k (x/2)^(2k+n) / (k! (k+n)!), for small |x|"""
    half = x / 2
    term = half ** order / math.factorial(order)
    total = term
    k = 0
    while term != 0 and abs(term) > 1e-17 * abs(total):
        k += 1
        term *= -(half * half) / (k * (k + order))
        total += term
    return total


def _bessel_downward(order_max: int, x: float) -> np.ndarray:
    """J_0(x), ..., J_order_max(x) by Miller's downward recurrence, x > 0

    The recurrence J_(k-1) = (2k/x) J_k - J_(k+1) is started far above the
    largest order and normalized with J_0 + 2 Σ J_2k = 1.
    """
    top = max(order_max, math.ceil(x))
    start = 2 * ((top + 40 + int(math.sqrt(40 * top))) // 2)

    values = np.zeros(start + 1)
    j_next, j = 0.0, 1e-30
    values[start] = j
    for k in range(start, 0, -1):
        j_next, j = j, 2 * k / x * j - j_next
        values[k - 1] = j
        if abs(j) > _RESCALE:
            values[k - 1 :] /= _RESCALE
            j_next /= _RESCALE
            j /= _RESCALE

    norm = values[0] + 2 * values[2::2].sum()
    return values[: order_max + 1] / norm


def bessel_j_sequence(order_max: int, x: float) -> np.ndarray:
    """Bessel functions of the first kind, J_0(x) up to J_order_max(x)"""
    _check_bessel_range(order_max, x)
    if order_max < 0:
        raise _exceptions.InvalidArgument(f"order_max must be >= 0, got {order_max}")

    ax = abs(x)
    if ax < 1:
        values = np.array([_bessel_series(k, ax) for k in range(order_max + 1)])
    else:
        values = _bessel_downward(order_max, ax)

    if x < 0:
        values[1::2] *= -1
    return values


def bessel_j(order: int, x: float) -> float:
    """Bessel function of the first kind J_order(x), accurate to 1e-12"""
    order = operator.index(order)
    _check_bessel_range(order, x)
    value = bessel_j_sequence(abs(order), x)[abs(order)]
    return float(-value if order < 0 and order % 2 else value)


#
# Transfer amplitudes
#
@dataclass(frozen=True, eq=False)
class LatticeAmplitudes:
    """Complex amplitudes on the sites -n_max, ..., n_max"""

    n_max: int
    amp: np.ndarray

    def __post_init__(self) -> None:
        """Store the amplitudes as an immutable complex array"""
        amp = np.array(self.amp, dtype=complex)
        if amp.shape != (2 * self.n_max + 1,):
            raise _exceptions.InvalidArgument(
                f"Expected {2 * self.n_max + 1} amplitudes, got shape {amp.shape}"
            )
        amp.setflags(write=False)
        object.__setattr__(self, "amp", amp)

    @property
    def sites(self) -> np.ndarray:
        """Site indices"""
        return np.arange(-self.n_max, self.n_max + 1)

    @property
    def probabilities(self) -> np.ndarray:
        """Occupation probabilities |amp|²"""
        return np.abs(self.amp) ** 2

    @property
    def norm2(self) -> float:
        """Total probability Σ|amp|²"""
        return float(self.probabilities.sum())

    def at(self, offsets: np.ndarray) -> np.ndarray:
        """Amplitudes at the given sites, zero outside the window"""
        offsets = np.asarray(offsets)
        inside = np.abs(offsets) <= self.n_max
        values = np.zeros(offsets.shape, dtype=complex)
        values[inside] = self.amp[offsets[inside] + self.n_max]
        return values

    def with_origin(self, origin_phase: float) -> "LatticeAmplitudes":
        """Amplitudes for a mask shifted by θ0 = 2πν·x0, U_t → U_t e^{itθ0}"""
        if origin_phase == 0:
            return self
        shift = np.exp(1j * self.sites * origin_phase)
        return LatticeAmplitudes(self.n_max, self.amp * shift)

    def __getitem__(self, site: int) -> complex:
        """Amplitude at one site"""
        return complex(self.at(np.array([site]))[0])


def walk_coefficients(amplitude: float, n_max: int) -> LatticeAmplitudes:
    """Transfer amplitudes U_t = i^t J_t(A_p) of the sinusoidal grating"""
    orders = np.arange(n_max + 1)
    half = _I_POWERS[orders % 4] * bessel_j_sequence(n_max, amplitude)

    # U_(-t) = i^(-t) J_(-t) = U_t
    coefficients = LatticeAmplitudes(n_max, np.concatenate([half[:0:-1], half]))
    _require_contained(coefficients, n_max, amplitude)
    return coefficients


def _require_contained(
    coefficients: LatticeAmplitudes, n_max: int, amplitude: float
) -> None:
    """Raise TruncationError if the walk leaks out of the sites -n_max, ..., n_max"""
    window = coefficients.at(np.arange(-n_max, n_max + 1))
    kept = float(np.sum(np.abs(window) ** 2))
    if kept < 1 - UNITARITY_TOLERANCE:
        raise _exceptions.TruncationError(
            f"n_max = {n_max} keeps only {kept:.12f} of the walk at "
            f"A_p = {amplitude}, increase n_max"
        )


@dataclass(frozen=True)
class ExtraPhase:
    """Phase added to the grating, a function of the cell angle θ in [0, 2π)

    Breakpoints mark discontinuities, the quadrature splits the cell there.
    """

    phase: Callable[[np.ndarray], np.ndarray]
    breakpoints: Tuple[float, ...] = ()
    name: str = "extra"

    def __post_init__(self) -> None:
        """Sort and validate the breakpoints"""
        breakpoints = tuple(sorted(float(b) for b in self.breakpoints))
        if any(not 0 < b < 2 * math.pi for b in breakpoints):
            raise _exceptions.InvalidArgument(
                f"Breakpoints must lie inside (0, 2π), got {breakpoints}"
            )
        object.__setattr__(self, "breakpoints", breakpoints)

    def __call__(self, theta: np.ndarray) -> np.ndarray:
        """Evaluate the phase"""
        return np.asarray(self.phase(theta), dtype=float) * np.ones_like(theta)


def _quarter_cell(theta: np.ndarray, delta: float) -> np.ndarray:
    """δ where |θ - π| < π/4, else 0"""
    return np.where(np.abs(theta - math.pi) < math.pi / 4, delta, 0.0)


def zernike_quarter_phase(delta: float = math.pi / 4) -> ExtraPhase:
    """Phase δ on the central quarter of the cell, matching `ZernikeQuarter`"""
    return ExtraPhase(
        phase=functools.partial(_quarter_cell, delta=delta),
        breakpoints=(3 * math.pi / 4, 5 * math.pi / 4),
        name="zernike_quarter",
    )


def _quadrature_nodes(
    breakpoints: Tuple[float, ...], points: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for ∫ over [0, 2π)

    Without breakpoints the periodic midpoint rule is used. Otherwise each
    smooth segment gets its own Gauss-Legendre rule.
    """
    if not breakpoints:
        theta = 2 * np.pi * (np.arange(points) + 0.5) / points
        return theta, np.full(points, 2 * np.pi / points)

    nodes, weights = np.polynomial.legendre.leggauss(points)
    edges = (0.0, *breakpoints, 2 * np.pi)
    theta = [(b - a) / 2 * nodes + (a + b) / 2 for a, b in zip(edges, edges[1:])]
    scaled = [(b - a) / 2 * weights for a, b in zip(edges, edges[1:])]
    return np.concatenate(theta), np.concatenate(scaled)


def _transfer_by_quadrature(
    amplitude: float, extra: Optional[ExtraPhase], n_max: int, points: int
) -> np.ndarray:
    """U_t for |t| <= n_max with the given number of quadrature points"""
    breakpoints = () if extra is None else extra.breakpoints
    theta, weights = _quadrature_nodes(breakpoints, points)
    phase = amplitude * np.cos(theta)
    if extra is not None:
        phase = phase + extra(theta)

    offsets = np.arange(-n_max, n_max + 1)
    kernel = np.exp(1j * np.outer(offsets, theta))
    return kernel @ (weights * np.exp(1j * phase)) / (2 * np.pi)


def transfer_coefficients(
    amplitude: float,
    extra: Optional[ExtraPhase] = None,
    n_max: int = 12,
    quadrature_points: int = MIN_QUADRATURE_POINTS,
) -> LatticeAmplitudes:
    """Transfer amplitudes of the grating with an extra phase, by quadrature

    The result is accepted when doubling the number of points changes no
    amplitude by more than 1e-8.
    """
    if quadrature_points < MIN_QUADRATURE_POINTS:
        raise _exceptions.InvalidArgument(
            f"Need at least {MIN_QUADRATURE_POINTS} quadrature points, "
            f"got {quadrature_points}"
        )

    coarse = _transfer_by_quadrature(amplitude, extra, n_max, quadrature_points)
    fine = _transfer_by_quadrature(amplitude, extra, n_max, 2 * quadrature_points)
    change = float(np.max(np.abs(fine - coarse)))
    if change > QUADRATURE_TOLERANCE:
        raise _exceptions.QuadratureError(
            f"Transfer amplitudes changed by {change:.3g} when doubling "
            f"{quadrature_points} quadrature points"
        )

    log.debug("Quadrature converged to %.3g with %d points", change, quadrature_points)
    return LatticeAmplitudes(n_max, fine)


#
# Two-photon lattice states
#
@dataclass(frozen=True, eq=False)
class LatticeBiphoton:
    """Two-photon amplitude over pairs of sites -n_max, ..., n_max"""

    n_max: int
    amp: np.ndarray
    symmetry: ExchangeSymmetry = ExchangeSymmetry.BOSONIC

    def __post_init__(self) -> None:
        """Store the amplitudes as an immutable complex matrix"""
        size = 2 * self.n_max + 1
        amp = np.array(self.amp, dtype=complex)
        if amp.shape != (size, size):
            raise _exceptions.InvalidArgument(
                f"Expected a {size}×{size} amplitude, got shape {amp.shape}"
            )
        amp.setflags(write=False)
        object.__setattr__(self, "amp", amp)

    @classmethod
    def path_entangled(
        cls,
        coefficients: LatticeAmplitudes,
        a: int,
        b: int,
        phi: float,
        n_max: int,
    ) -> "LatticeBiphoton":
        """Walked state of (|2,0⟩ + e^{iφ}|0,2⟩)/√2 on sites a and b"""
        _require_distinct(a, b)
        col_a = _column(coefficients, a, n_max)
        col_b = _column(coefficients, b, n_max)
        amp = np.outer(col_a, col_a) + np.exp(1j * phi) * np.outer(col_b, col_b)
        return cls(n_max, amp / np.sqrt(2))

    @classmethod
    def pair(
        cls,
        coefficients: LatticeAmplitudes,
        a: int,
        b: int,
        symmetry: ExchangeSymmetry,
        n_max: int,
    ) -> "LatticeBiphoton":
        """Walked state of one boson or fermion on each of sites a and b"""
        _require_distinct(a, b)
        col_a = _column(coefficients, a, n_max)
        col_b = _column(coefficients, b, n_max)
        amp = np.outer(col_a, col_b) + symmetry.sign * np.outer(col_b, col_a)
        return cls(n_max, amp / np.sqrt(2), symmetry)

    @property
    def sites(self) -> np.ndarray:
        """Site indices along each axis"""
        return np.arange(-self.n_max, self.n_max + 1)

    @property
    def norm2(self) -> float:
        """Probability that both photons stay inside the window"""
        return float(np.sum(np.abs(self.amp) ** 2))

    def symmetry_error(self) -> float:
        """Largest deviation from the declared exchange symmetry"""
        return float(np.max(np.abs(self.amp - self.symmetry.sign * self.amp.T)))

    def correlation(self) -> np.ndarray:
        """Coincidence probabilities Γ_qr, normalized to unit sum"""
        gamma = np.abs(self.amp) ** 2
        gamma = np.triu(gamma) + np.triu(gamma, 1).T
        total = gamma.sum()
        if total == 0:
            raise _exceptions.TruncationError("No probability left inside the window")
        return gamma / total


def _column(coefficients: LatticeAmplitudes, site: int, n_max: int) -> np.ndarray:
    """Amplitudes on sites -n_max, ..., n_max for a photon entering at site"""
    return coefficients.at(np.arange(-n_max, n_max + 1) - site)


def _require_distinct(a: int, b: int) -> None:
    """Raise InvalidArgument if the two input sites coincide"""
    if a == b:
        raise _exceptions.InvalidArgument(f"Input sites must differ, got {a} twice")


def oracle_correlation(
    phi: float,
    amplitude: float,
    a: int,
    b: int,
    n_max: int,
    origin_phase: float = 0.0,
) -> np.ndarray:
    """Γ of the walked path-entangled state, on sites -n_max, ..., n_max"""
    reach = n_max + max(abs(a), abs(b))
    coefficients = walk_coefficients(amplitude, reach)
    _require_contained(coefficients, n_max, amplitude)
    coefficients = coefficients.with_origin(origin_phase)
    state = LatticeBiphoton.path_entangled(coefficients, a, b, phi, n_max)
    return state.correlation()


def oracle_with_extra_phase(
    phi: float,
    amplitude: float,
    extra: ExtraPhase,
    a: int,
    b: int,
    quadrature_points: int = MIN_QUADRATURE_POINTS,
    n_max: int = 12,
    origin_phase: float = 0.0,
) -> np.ndarray:
    """Γ of the walked path-entangled state through grating and extra phase

    Transfer amplitudes decay slowly for discontinuous extra phases, so Γ is
    renormalized to unit sum inside the window.
    """
    reach = n_max + max(abs(a), abs(b))
    coefficients = transfer_coefficients(
        amplitude, extra, reach, quadrature_points
    ).with_origin(origin_phase)
    state = LatticeBiphoton.path_entangled(coefficients, a, b, phi, n_max)
    log.debug("%.6f of the %s walk stays in the window", state.norm2, extra.name)
    return state.correlation()


#
# Metrics
#
def participation_number(probabilities: np.ndarray) -> float:
    """Effective number of occupied sites, (Σp)² / Σp²"""
    p = np.asarray(probabilities, dtype=float)
    return float(p.sum() ** 2 / np.sum(p ** 2))


def diagonal_fraction(gamma: np.ndarray) -> float:
    """Share of coincidences with both photons on the same site"""
    gamma = np.asarray(gamma)
    return float(np.trace(gamma) / gamma.sum())


def distinguishability(gamma: np.ndarray, other: np.ndarray) -> float:
    """Half the L1 distance between two correlation maps, each normalized"""
    gamma, other = np.asarray(gamma), np.asarray(other)
    return float(np.abs(gamma / gamma.sum() - other / other.sum()).sum() / 2)


def lattice_marginal(gamma: np.ndarray) -> np.ndarray:
    """Expected photon number per site, summing to 2 for normalized Γ"""
    gamma = np.asarray(gamma)
    return gamma.sum(axis=0) + gamma.sum(axis=1)


def marginal_change(marginal: np.ndarray, reference: np.ndarray) -> float:
    """L1 distance between two marginals as a share of the reference flux"""
    marginal, reference = np.asarray(marginal), np.asarray(reference)
    return float(np.abs(marginal - reference).sum() / reference.sum())


def max_relative_deviation(
    values: np.ndarray, reference: np.ndarray, floor: float = 1e-3
) -> float:
    """Largest |values - reference| / reference over entries with reference > floor"""
    values, reference = np.asarray(values), np.asarray(reference)
    significant = reference > floor
    if not np.any(significant):
        return 0.0
    deviation = np.abs(values - reference)[significant] / reference[significant]
    return float(deviation.max())
