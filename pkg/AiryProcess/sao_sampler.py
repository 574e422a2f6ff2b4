"""
AiryProcess Stochastic Airy Operator Sampler
============================================

Tridiagonal discretization of H_beta f = -f'' + x f + (2/sqrt(beta)) f B'
on a uniform mesh. Each replicate draws its white noise from a Philox
stream keyed by (seed, replicate), so a replicate's spectrum does not
depend on which worker computes it or in which order.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple, TypeVar

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from general.Common.helpers import Timer
from general.Configuration.config_manager import MAX_SEED
from general.Error.error_manager import DomainError, NumericError, TruncationError
from general.Logging.logger_manager import get_logger, log_computation_event
from general.Validation.input_validation import NumericValidator
from .airy_process_models import SaoMesh, SpectrumSample
from .airy_zeros import airy_eigenvalue

logger = get_logger(__name__)

MAX_K = 200
ResultT = TypeVar('ResultT')


def replicate_generator(seed: int, replicate: int) -> np.random.Generator:
    """Counter-based stream for one (seed, replicate) pair."""
    seed = NumericValidator.require_int_range('seed', seed, 0, MAX_SEED)
    replicate = NumericValidator.require_int_range('replicate', replicate, 0, MAX_SEED)
    key = np.array([seed, replicate], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sao_bands(mesh: SaoMesh, noise: Optional[np.ndarray] = None,
              noise_scale: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """Diagonal 2/h^2 + x_i + (2/sqrt(beta)) g_i / sqrt(h) and off-diagonal -1/h^2."""
    h = mesh.h
    diagonal = 2.0 / (h * h) + mesh.points()
    if noise is not None and noise_scale != 0.0:
        diagonal = diagonal + noise_scale * (2.0 / math.sqrt(mesh.beta)) * noise / math.sqrt(h)
    off_diagonal = np.full(mesh.n - 1, -1.0 / (h * h))
    return diagonal, off_diagonal


def check_mesh_for_level(mesh: SaoMesh, level: float, what: str):
    """Mesh invariant n*h >= 2*level."""
    if level >= mesh.max_resolved_eigenvalue:
        raise TruncationError(
            f"mesh too short for {what}",
            {'level': level, 'mesh_length': mesh.length, 'required_length': 2.0 * level, **mesh.to_dict()},
        )


def _draw_noise(mesh: SaoMesh, seed: int, replicate: int) -> np.ndarray:
    return replicate_generator(seed, replicate).standard_normal(mesh.n)


def sample_sao_spectrum(mesh: SaoMesh, k: int, seed: int, replicate: int = 0,
                        noise_scale: float = 1.0) -> SpectrumSample:
    """Lowest k eigenvalues of one discretized operator, by Sturm-sequence bisection."""
    k = NumericValidator.require_int_range('k', k, 1, MAX_K)
    if k > mesh.n:
        raise DomainError("k exceeds the number of mesh points", {'k': k, 'n': mesh.n})
    check_mesh_for_level(mesh, airy_eigenvalue(k), f"k={k}")

    diagonal, off_diagonal = sao_bands(mesh, _draw_noise(mesh, seed, replicate), noise_scale)
    try:
        eigenvalues = eigh_tridiagonal(
            diagonal, off_diagonal, eigvals_only=True,
            select='i', select_range=(0, k - 1), lapack_driver='stebz',
        )
    except LinAlgError as e:
        raise NumericError(f"tridiagonal eigensolve failed: {e}",
                           {'seed': seed, 'replicate': replicate, 'k': k})
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    if eigenvalues.shape != (k,) or (k > 1 and not np.all(np.diff(eigenvalues) > 0)):
        raise NumericError("eigensolver returned a degenerate spectrum",
                           {'seed': seed, 'replicate': replicate, 'k': k})
    return SpectrumSample(mesh=mesh, eigenvalues=eigenvalues, seed=seed, k=k, replicate=replicate)


def count_below(mesh: SaoMesh, s: float, seed: int, replicate: int = 0) -> int:
    """#{k : Lambda_k <= s} for one replicate."""
    diagonal, off_diagonal = sao_bands(mesh, _draw_noise(mesh, seed, replicate))
    # Gershgorin lower bound for the spectrum
    floor = float(np.min(diagonal)) - 2.0 / (mesh.h * mesh.h) - 1.0
    if s <= floor:
        return 0
    try:
        found = eigh_tridiagonal(
            diagonal, off_diagonal, eigvals_only=True,
            select='v', select_range=(floor, s), lapack_driver='stebz',
        )
    except LinAlgError as e:
        raise NumericError(f"tridiagonal eigensolve failed: {e}", {'seed': seed, 'replicate': replicate})
    return int(np.size(found))


def run_replicates(task: Callable[[int], ResultT], n_samples: int, workers: int = 1) -> List[ResultT]:
    """Apply task to replicate indices 0..n_samples-1; results are ordered by index."""
    n_samples = NumericValidator.require_int_range('n_samples', n_samples, 1)
    workers = NumericValidator.require_int_range('workers', workers, 1, 256)
    if workers == 1:
        return [task(i) for i in range(n_samples)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, range(n_samples)))


def sample_spectra(mesh: SaoMesh, k: int, seed: int, n_samples: int,
                   workers: int = 1) -> List[SpectrumSample]:
    """n_samples independent replicates of the lowest k eigenvalues."""
    with Timer("sao_spectra") as timer:
        samples = run_replicates(lambda i: sample_sao_spectrum(mesh, k, seed, replicate=i), n_samples, workers)
    log_computation_event("sao_spectra_sampled", {'k': k, 'seed': seed, 'n_samples': n_samples, 'workers': workers,
                                                  'seconds': timer.elapsed, **mesh.to_dict()}, level="debug")
    return samples


def sample_counts(mesh: SaoMesh, s: float, seed: int, n_samples: int, workers: int = 1) -> np.ndarray:
    """Counts #{k : Lambda_k <= s} over n_samples replicates."""
    s = NumericValidator.require_finite('s', s)
    check_mesh_for_level(mesh, s, f"s={s}")
    counts = run_replicates(lambda i: count_below(mesh, s, seed, replicate=i), n_samples, workers)
    return np.asarray(counts, dtype=np.int64)
