"""Monte Carlo validation of the exact spectral-moment polynomials.

Samples matrices with i.i.d. unit-circle entries, forms the squared ensemble
rho = U U* / N^2, and estimates E[tr(rho^k)] (normalized trace) to compare
against the exact values.  One Hermitian eigendecomposition per sample
serves every power k at once.

Determinism contract: per-sample traces depend only on (seed, sample index)
and are computed in fixed batches aligned to absolute sample indices, so
estimates are bit-identical for every worker count; the final reduction is a
single numpy pairwise sum over the index-ordered array.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import polynomials
from .errors import InternalCheckError
from .sampling import sample_unimodular

__all__ = [
    "MomentEstimate",
    "ValidationEntry",
    "ValidationReport",
    "estimate_moment",
    "validate_against_exact",
    "z_score",
    "sample_unimodular",
]

MAX_DIMENSION = 256
MAX_POWER = 16
MIN_SAMPLES = 100

HERMITIAN_DRIFT_TOL = 1e-8
EIGENVALUE_FLOOR = -1e-10
# Differences below this are floating-point residue of a deterministic
# estimand (e.g. k = 1), not statistical error; they score z = 0.
DETERMINISTIC_DIFF_FLOOR = 1e-12

_BATCH = 1024  # samples per fixed batch; batches are the unit of work splitting


@dataclass(frozen=True)
class MomentEstimate:
    """Monte Carlo estimate of E[tr(rho^k)] at dimension n."""

    k: int
    n: int
    sample_count: int
    mean: float
    std_error: float
    seed: int


@dataclass(frozen=True)
class ValidationEntry:
    k: int
    n: int
    mean: float
    std_error: float
    exact: float
    z: float


@dataclass(frozen=True)
class ValidationReport:
    """Per-(k, n) z-scores of the Monte Carlo means against the exact moments."""

    entries: tuple[ValidationEntry, ...]
    sample_count: int
    seed: int
    max_abs_z: float = field(init=False)
    fraction_within_4: float = field(init=False)

    def __post_init__(self):
        zs = [abs(e.z) for e in self.entries]
        object.__setattr__(self, "max_abs_z", max(zs) if zs else 0.0)
        object.__setattr__(
            self,
            "fraction_within_4",
            (sum(1 for z in zs if z <= 4.0) / len(zs)) if zs else 1.0,
        )

    @property
    def passed(self) -> bool:
        return self.fraction_within_4 >= 0.95 and self.max_abs_z <= 6.0


def _batch_traces(n: int, powers: tuple[int, ...], seed: int,
                  batch: int, total: int) -> np.ndarray:
    """Traces tr(rho^k) for every sample in one fixed batch, shape (count, len(powers)).

    Batch ``batch`` covers absolute sample indices [batch * _BATCH, ...); the
    content depends only on (n, powers, seed, batch), never on the worker
    layout.
    """
    start = batch * _BATCH
    count = min(_BATCH, total - start)
    u = np.empty((count, n, n), dtype=np.complex128)
    for i in range(count):
        u[i] = sample_unimodular(n, seed, start + i)
    rho = u @ u.conj().transpose(0, 2, 1) / n ** 2
    drift = float(np.abs(rho - rho.conj().transpose(0, 2, 1)).max())
    if drift > HERMITIAN_DRIFT_TOL:
        raise InternalCheckError(f"non-Hermitian drift {drift:g} exceeds {HERMITIAN_DRIFT_TOL:g}")
    eigenvalues = np.linalg.eigvalsh(rho)
    if float(eigenvalues.min()) < EIGENVALUE_FLOOR:
        raise InternalCheckError(f"negative eigenvalue {eigenvalues.min():g} below floor")
    out = np.empty((count, len(powers)))
    for col, k in enumerate(powers):
        out[:, col] = (eigenvalues ** k).sum(axis=1) / n
    return out


def _all_traces(n: int, powers: tuple[int, ...], samples: int, seed: int,
                workers: int) -> np.ndarray:
    n_batches = -(-samples // _BATCH)
    if workers <= 1:
        parts = [_batch_traces(n, powers, seed, b, samples) for b in range(n_batches)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(_batch_traces,
                         [n] * n_batches, [powers] * n_batches, [seed] * n_batches,
                         range(n_batches), [samples] * n_batches)
            )
    return np.concatenate(parts, axis=0)


def _mean_and_stderr(values: np.ndarray) -> tuple[float, float]:
    mean = float(np.mean(values))
    stderr = float(np.std(values, ddof=1) / math.sqrt(len(values)))
    return mean, stderr


def z_score(mean: float, std_error: float, exact: float) -> float:
    diff = mean - exact
    if abs(diff) <= DETERMINISTIC_DIFF_FLOOR:
        return 0.0
    if std_error == 0.0:
        return math.inf if diff > 0 else -math.inf
    return diff / std_error


def estimate_moment(n: int, k: int, samples: int, seed: int,
                    workers: int = 1) -> MomentEstimate:
    """Estimate E[tr(rho^k)] at dimension n from ``samples`` independent matrices."""
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension must be in 1..{MAX_DIMENSION}")
    if not 1 <= k <= MAX_POWER:
        raise ValueError(f"power must be in 1..{MAX_POWER}")
    if samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples")
    values = _all_traces(n, (k,), samples, seed, workers)[:, 0]
    mean, stderr = _mean_and_stderr(values)
    return MomentEstimate(k=k, n=n, sample_count=samples, mean=mean,
                          std_error=stderr, seed=seed)


def validate_against_exact(k_max: int, n_list, samples: int, seed: int,
                           workers: int = 1) -> ValidationReport:
    """Monte Carlo vs exact for every (k, n) with k <= k_max and n in ``n_list``.

    Samples are shared across powers for a fixed dimension (one Hermitian
    eigendecomposition serves the whole k-sweep).  The report passes when at
    least 95% of pairs sit within |z| <= 4 and none exceeds |z| = 6.
    """
    if k_max < 1:
        raise ValueError("k_max must be a positive integer")
    powers = tuple(range(1, k_max + 1))
    entries: list[ValidationEntry] = []
    for n in n_list:
        traces = _all_traces(n, powers, samples, seed, workers)
        for col, k in enumerate(powers):
            mean, stderr = _mean_and_stderr(traces[:, col])
            exact = float(polynomials.exact_moment(k, n))
            entries.append(
                ValidationEntry(k=k, n=n, mean=mean, std_error=stderr,
                                exact=exact, z=z_score(mean, stderr, exact))
            )
    return ValidationReport(entries=tuple(entries), sample_count=samples, seed=seed)
