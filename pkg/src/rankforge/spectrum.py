"""Full eigenvalue spectrum of the dense Google matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigenSolverError
from .google import GoogleMatrix

ZERO_FLOOR = 1e-10


@dataclass(frozen=True, eq=False)
class Spectrum:
    eigenvalues: np.ndarray  # complex, sorted by |lambda| desc, then Re desc, then Im desc
    alpha: float

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.eigenvalues)

    def rows(self) -> list[tuple[float, float, float]]:
        return [(float(z.real), float(z.imag), float(abs(z))) for z in self.eigenvalues]


def sort_eigenvalues(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.complex128)
    idx = np.lexsort((-values.imag, -values.real, -np.abs(values)))
    return values[idx]


def full_spectrum(gm: GoogleMatrix) -> Spectrum:
    """All ``n`` eigenvalues of ``G``.

    LAPACK ``geev`` via numpy: balancing, Hessenberg reduction, then shifted
    QR on the Hessenberg form.
    """
    dense = gm.materialize()
    try:
        values = np.linalg.eigvals(dense)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"QR iteration failed to converge: {exc}") from exc
    if not np.all(np.isfinite(values)):
        bad = int(np.flatnonzero(~np.isfinite(values))[0]) + 1
        raise EigenSolverError(f"eigenvalue {bad} is not finite")
    return Spectrum(sort_eigenvalues(values), gm.alpha)


def spectral_stats(s: Spectrum, threshold: float = 0.1) -> tuple[float, float]:
    """Return ``(fraction with |lambda| > threshold, |lambda_2|)``."""
    if threshold < 0:
        raise ValueError(f"threshold must be non-negative, got {threshold}")
    mod = s.moduli
    # roundoff leaves exact zeros of G at ~1e-16; count them as zero
    mod = np.where(mod < ZERO_FLOOR, 0.0, mod)
    fraction = float(np.count_nonzero(mod > threshold) / len(mod))
    lambda2 = float(mod[1]) if len(mod) > 1 else 0.0
    return fraction, lambda2


def trace_check(gm: GoogleMatrix, s: Spectrum) -> float:
    """``|trace(G) - sum(lambda)|``; a self-check on the eigensolver."""
    return float(abs(np.trace(gm.materialize()) - s.eigenvalues.sum()))
