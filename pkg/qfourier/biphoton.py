"""Two-photon amplitudes, their propagation and detection

A two-photon state B(x₁, x₂) is stored either densely as an n×n array or as a
short Schmidt sum Σ c_r u_r(x₁) v_r(x₂). Non-interacting photons see the same
single-photon map U on each coordinate, B' = U B Uᵀ, so a Schmidt sum is
propagated by transforming its modes one by one. The dense representation is
kept as the reference for the low-rank one.
"""

# Standard library imports
import enum
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Tuple

# Third party imports
import numpy as np

# QFourier imports
from qfourier import _exceptions
from qfourier.field import NORM_TOLERANCE, Field1D, Grid, gaussian_mode
from qfourier.ops import MaskOp, SinglePhotonOp

log = logging.getLogger(__name__)

# Orthogonality required between modes of path-entangled and pair states
OVERLAP_TOLERANCE = 1e-6

# Slack when snapping detector bins to whole samples, in units of dx
_SNAP_EPS = 1e-9


class ExchangeSymmetry(enum.Enum):
    """Behaviour of a two-particle amplitude under exchange of coordinates"""

    BOSONIC = "bosonic"
    FERMIONIC = "fermionic"

    @property
    def sign(self) -> int:
        """+1 for symmetric, -1 for anti-symmetric amplitudes"""
        return 1 if self is ExchangeSymmetry.BOSONIC else -1


class SchmidtTerm(NamedTuple):
    """One product term c·u(x₁)·v(x₂) of a Schmidt sum"""

    coefficient: complex
    u: Field1D
    v: Field1D


@dataclass(frozen=True, eq=False)
class BiphotonState:
    """Two-photon amplitude, either dense or as a Schmidt sum"""

    grid: Grid
    symmetry: ExchangeSymmetry
    dense: Optional[np.ndarray] = None
    terms: Tuple[SchmidtTerm, ...] = ()

    def __post_init__(self) -> None:
        """Check that exactly one representation is given"""
        if (self.dense is None) == (not self.terms):
            raise _exceptions.InvalidArgument(
                "A biphoton state is either dense or a non-empty Schmidt sum"
            )

        if self.dense is not None:
            dense = np.array(self.dense, dtype=complex)
            if dense.shape != (self.grid.n, self.grid.n):
                raise _exceptions.InvalidArgument(
                    f"Dense amplitude has shape {dense.shape}, expected "
                    f"{(self.grid.n, self.grid.n)}"
                )
            dense.setflags(write=False)
            object.__setattr__(self, "dense", dense)
        else:
            terms = tuple(SchmidtTerm(complex(c), u, v) for c, u, v in self.terms)
            for term in terms:
                self.grid.require(term.u.grid, "Schmidt mode")
                self.grid.require(term.v.grid, "Schmidt mode")
            object.__setattr__(self, "terms", terms)

    @property
    def is_dense(self) -> bool:
        """True for the dense representation"""
        return self.dense is not None

    @property
    def rank(self) -> int:
        """Number of Schmidt terms, or the grid size for dense states"""
        return self.grid.n if self.is_dense else len(self.terms)

    @property
    def amplitude(self) -> np.ndarray:
        """The dense amplitude B_jk = B(x_j, x_k)"""
        if self.dense is not None:
            return self.dense

        amplitude = np.zeros((self.grid.n, self.grid.n), dtype=complex)
        for c, u, v in self.terms:
            amplitude += c * np.outer(u.amp, v.amp)
        return amplitude

    @property
    def norm2(self) -> float:
        """Squared norm ΣΣ|B|² dx²"""
        dx = self.grid.dx
        if self.dense is not None:
            return float(np.sum(np.abs(self.dense) ** 2) * dx * dx)

        coefficients, u_modes, v_modes = self._mode_arrays()
        gram_u = u_modes.conj() @ u_modes.T * dx
        gram_v = v_modes.conj() @ v_modes.T * dx
        weights = np.outer(coefficients.conj(), coefficients)
        return float(np.real(np.sum(weights * gram_u * gram_v)))

    def symmetry_error(self) -> float:
        """Largest relative deviation from the declared exchange symmetry"""
        amplitude = self.amplitude
        scale = np.max(np.abs(amplitude))
        if scale == 0:
            return 0.0
        residual = amplitude - self.symmetry.sign * amplitude.T
        return float(np.max(np.abs(residual)) / scale)

    def _mode_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Coefficients and mode amplitudes of a Schmidt sum as arrays"""
        coefficients = np.array([t.coefficient for t in self.terms], dtype=complex)
        u_modes = np.array([t.u.amp for t in self.terms])
        v_modes = np.array([t.v.amp for t in self.terms])
        return coefficients, u_modes, v_modes


@dataclass(frozen=True)
class DetectorArray:
    """Fiber-coupled detectors of half-width w centred on lattice sites"""

    centers: Tuple[float, ...]
    half_width: float
    labels: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Validate that the bins are uniform and do not overlap"""
        centers = tuple(float(c) for c in self.centers)
        labels = tuple(int(q) for q in self.labels) or tuple(range(len(centers)))
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "labels", labels)

        if not centers:
            raise _exceptions.InvalidArgument("A detector array needs detectors")
        if len(labels) != len(centers):
            raise _exceptions.InvalidArgument("Need one label per detector")
        if not self.half_width > 0:
            raise _exceptions.InvalidArgument(
                f"Detector half-width must be positive, got {self.half_width}"
            )

        pitch = self.pitch
        if len(centers) > 1:
            steps = np.diff(centers)
            if np.any(np.abs(steps - pitch) > 1e-9 * abs(pitch)) or pitch <= 0:
                raise _exceptions.InvalidArgument(
                    "Detectors must be uniformly spaced in increasing order"
                )
            if 2 * self.half_width > pitch * (1 + 1e-12):
                raise _exceptions.InvalidArgument(
                    f"Bins of width {2 * self.half_width} overlap at pitch {pitch}"
                )

    @classmethod
    def lattice(
        cls, pitch: float, half_width: float, sites: Iterable[int], origin: float = 0
    ) -> "DetectorArray":
        """Detectors centred on lattice sites x_s = origin + s·pitch"""
        sites = tuple(sites)
        return cls(
            centers=tuple(origin + s * pitch for s in sites),
            half_width=half_width,
            labels=sites,
        )

    @property
    def count(self) -> int:
        """Number of detectors"""
        return len(self.centers)

    @property
    def pitch(self) -> float:
        """Distance between neighbouring detectors"""
        if len(self.centers) < 2:
            return 2 * self.half_width
        return (self.centers[-1] - self.centers[0]) / (len(self.centers) - 1)

    def bin_slices(self, grid: Grid) -> List[slice]:
        """Sample ranges of every bin, snapped inward to whole samples

        A sample belongs to a bin when its whole cell [x - dx/2, x + dx/2] lies
        inside [center - w, center + w].
        """
        slices = []
        for center in self.centers:
            left = (center - self.half_width - grid.x_min) / grid.dx
            right = (center + self.half_width - grid.x_min) / grid.dx
            lo, hi = int(np.ceil(left - _SNAP_EPS)), int(np.floor(right + _SNAP_EPS))
            if lo < 0 or hi > grid.n:
                raise _exceptions.InvalidArgument(
                    f"Detector at {center} with half-width {self.half_width} "
                    f"lies outside the grid [{grid.x_min}, {grid.x_max}]"
                )
            if hi <= lo:
                raise _exceptions.InvalidArgument(
                    f"Detector half-width {self.half_width} is narrower than one "
                    f"sample ({grid.dx})"
                )
            slices.append(slice(lo, hi))
        return slices

    def snapped_half_width(self, grid: Grid) -> float:
        """Half-width actually integrated over after snapping"""
        widths = {(s.stop - s.start) for s in self.bin_slices(grid)}
        return min(widths) * grid.dx / 2


@dataclass(frozen=True, eq=False)
class CorrelationMap:
    """Coincidence probabilities Γ_qr between detector bins"""

    gamma: np.ndarray
    detectors: DetectorArray
    snapped_half_width: float = field(default=0.0)

    def __post_init__(self) -> None:
        """Freeze the matrix"""
        gamma = np.array(self.gamma, dtype=float)
        gamma.setflags(write=False)
        object.__setattr__(self, "gamma", gamma)

    @property
    def total(self) -> float:
        """Probability that both photons land in some bin"""
        return float(self.gamma.sum())

    def normalized(self) -> np.ndarray:
        """Γ rescaled to unit sum"""
        total = self.total
        if total == 0:
            raise _exceptions.InvalidArgument("Can not normalize an empty map")
        return self.gamma / total

    def diagonal_fraction(self) -> float:
        """Share of coincidences with both photons in the same bin"""
        return float(np.trace(self.gamma) / self.total)


#
# State builders
#
def build_path_entangled(
    grid: Grid, x_a: float, x_b: float, waist: float, phi: float
) -> BiphotonState:
    """The N=2 path-entangled state (|2,0⟩ + e^{iφ}|0,2⟩)/√2"""
    mode_a = gaussian_mode(grid, x_a, waist)
    mode_b = gaussian_mode(grid, x_b, waist)
    _require_orthogonal(mode_a, mode_b)

    half = 1 / np.sqrt(2)
    terms = (
        SchmidtTerm(half, mode_a, mode_a),
        SchmidtTerm(np.exp(1j * phi) * half, mode_b, mode_b),
    )
    return BiphotonState(grid, ExchangeSymmetry.BOSONIC, terms=terms)


def build_product_pair(mode: Field1D) -> BiphotonState:
    """Two photons in the same mode, B = mode(x₁)·mode(x₂)"""
    _require_normalized(mode)
    terms = (SchmidtTerm(1.0, mode, mode),)
    return BiphotonState(mode.grid, ExchangeSymmetry.BOSONIC, terms=terms)


def build_boson_pair(mode_a: Field1D, mode_b: Field1D) -> BiphotonState:
    """One boson in each of two orthogonal modes, (ab + ba)/√2"""
    return _build_pair(mode_a, mode_b, ExchangeSymmetry.BOSONIC)


def build_fermion_pair(mode_a: Field1D, mode_b: Field1D) -> BiphotonState:
    """One fermion in each of two orthogonal modes, (ab - ba)/√2"""
    return _build_pair(mode_a, mode_b, ExchangeSymmetry.FERMIONIC)


def _build_pair(
    mode_a: Field1D, mode_b: Field1D, symmetry: ExchangeSymmetry
) -> BiphotonState:
    """Symmetrized or anti-symmetrized product of two orthogonal modes"""
    _require_normalized(mode_a)
    _require_normalized(mode_b)
    _require_orthogonal(mode_a, mode_b)

    half = 1 / np.sqrt(2)
    terms = (
        SchmidtTerm(half, mode_a, mode_b),
        SchmidtTerm(symmetry.sign * half, mode_b, mode_a),
    )
    return BiphotonState(mode_a.grid, symmetry, terms=terms)


def _require_normalized(mode: Field1D) -> None:
    """Raise InvalidArgument unless the mode has unit norm"""
    if not mode.is_normalized:
        raise _exceptions.InvalidArgument(
            f"Mode is not normalized (norm² = {mode.norm2:.12g})"
        )


def _require_orthogonal(mode_a: Field1D, mode_b: Field1D) -> None:
    """Raise InvalidArgument unless the modes are orthogonal"""
    overlap = abs(mode_a.inner(mode_b))
    if overlap >= OVERLAP_TOLERANCE:
        raise _exceptions.InvalidArgument(
            f"Modes overlap (|⟨a|b⟩| = {overlap:.3g}), they must be orthogonal"
        )


#
# Representation changes
#
def to_dense(state: BiphotonState) -> BiphotonState:
    """The same state in the dense representation"""
    if state.is_dense:
        return state
    return BiphotonState(state.grid, state.symmetry, dense=state.amplitude)


def schmidt_decompose(state: BiphotonState, tol: float = 1e-12) -> BiphotonState:
    """Orthogonal Schmidt sum of a state, dropping weights below tol·σ_max

    Dense states are decomposed by SVD of B·dx. Schmidt sums with
    non-orthogonal modes are orthogonalized by QR of the mode matrices
    followed by an SVD of the small r×r core.
    """
    grid = state.grid
    root_dx = np.sqrt(grid.dx)
    if state.dense is not None:
        left, sigma, right_h = np.linalg.svd(state.dense * grid.dx)
        left_modes, right_modes = left, right_h.T
    else:
        coefficients, u_modes, v_modes = state._mode_arrays()
        q_u, r_u = np.linalg.qr(u_modes.T * root_dx)
        q_v, r_v = np.linalg.qr(v_modes.T * root_dx)
        core = r_u @ np.diag(coefficients) @ r_v.T
        core_left, sigma, core_right_h = np.linalg.svd(core)
        left_modes, right_modes = q_u @ core_left, q_v @ core_right_h.T

    keep = sigma > tol * sigma[0] if sigma.size and sigma[0] > 0 else sigma > 0
    terms = tuple(
        SchmidtTerm(
            complex(sigma[r]),
            Field1D(grid, left_modes[:, r] / root_dx),
            Field1D(grid, right_modes[:, r] / root_dx),
        )
        for r in np.flatnonzero(keep)
    )
    if not terms:
        raise _exceptions.InvalidArgument("Can not decompose a zero state")
    log.debug("Schmidt decomposition kept %d of %d terms", len(terms), sigma.size)
    return BiphotonState(grid, state.symmetry, terms=terms)


def schmidt_number(state: BiphotonState) -> float:
    """Effective number of Schmidt modes, K = 1 / Σ p_r²"""
    terms = schmidt_decompose(state).terms
    weights = np.array([abs(t.coefficient) ** 2 for t in terms])
    weights /= weights.sum()
    return float(1 / np.sum(weights ** 2))


#
# Propagation
#
def apply_single_photon_op(state: BiphotonState, op: SinglePhotonOp) -> BiphotonState:
    """Let each photon pass through the same linear device, B' = U B Uᵀ"""
    op.grid_in.require(state.grid, "state")
    if state.dense is not None:
        dense = op.apply(op.apply(state.dense, axis=0), axis=1)
        return BiphotonState(op.grid_out, state.symmetry, dense=dense)

    terms = tuple(SchmidtTerm(c, op(u), op(v)) for c, u, v in state.terms)
    return BiphotonState(op.grid_out, state.symmetry, terms=terms)


def apply_mask(
    state: BiphotonState, mask: np.ndarray, grid: Optional[Grid] = None
) -> BiphotonState:
    """Apply the two-photon mask M(x₁)M(x₂) built from a one-dimensional mask"""
    if grid is not None:
        state.grid.require(grid, "mask")
    return apply_single_photon_op(state, MaskOp(mask, state.grid))


#
# Detection
#
def intensity_marginal(state: BiphotonState) -> np.ndarray:
    """Photon density I(x_j) = 2 Σ_k |B_jk|² dx, integrating to 2·norm²"""
    dx = state.grid.dx
    if state.dense is not None:
        return 2 * np.sum(np.abs(state.dense) ** 2, axis=1) * dx

    coefficients, u_modes, v_modes = state._mode_arrays()
    weighted = coefficients[:, None] * u_modes
    gram_v = v_modes.conj() @ v_modes.T * dx
    marginal = np.einsum("rx,rs,sx->x", weighted.conj(), gram_v, weighted)
    return 2 * np.real(marginal)


def correlation_map(state: BiphotonState, det: DetectorArray) -> CorrelationMap:
    """Coincidence probabilities Γ_qr integrated over pairs of detector bins"""
    grid = state.grid
    slices = det.bin_slices(grid)
    dx = grid.dx

    if state.dense is not None:
        density = np.abs(state.dense) ** 2 * dx * dx
        rows = np.array([density[s].sum(axis=0) for s in slices])
        gamma = np.array([[row[s].sum() for s in slices] for row in rows])
    else:
        coefficients, u_modes, v_modes = state._mode_arrays()
        weighted = coefficients[:, None] * u_modes
        overlaps_u = np.array([_gram(weighted[:, s], dx) for s in slices])
        overlaps_v = np.array([_gram(v_modes[:, s], dx) for s in slices])
        gamma = np.real(np.einsum("qts,rts->qr", overlaps_u, overlaps_v))

    return CorrelationMap(
        gamma=_mirror_upper(np.maximum(gamma, 0)),
        detectors=det,
        snapped_half_width=det.snapped_half_width(grid),
    )


def binned_probabilities(mode: Field1D, det: DetectorArray) -> np.ndarray:
    """Single-photon probability of landing in each detector bin"""
    density = mode.intensity * mode.grid.dx
    return np.array([density[s].sum() for s in det.bin_slices(mode.grid)])


def binned_marginal(state: BiphotonState, det: DetectorArray) -> np.ndarray:
    """Expected number of photons in each detector bin"""
    marginal = intensity_marginal(state) * state.grid.dx
    return np.array([marginal[s].sum() for s in det.bin_slices(state.grid)])


def _gram(modes: np.ndarray, dx: float) -> np.ndarray:
    """Overlap matrix Σ conj(m_t) m_s dx between rows of a mode array"""
    return modes.conj() @ modes.T * dx


def _mirror_upper(matrix: np.ndarray) -> np.ndarray:
    """Symmetric matrix built from the upper triangle, so Γ_qr == Γ_rq exactly"""
    return np.triu(matrix) + np.triu(matrix, 1).T

