"""Symmetric eigensolver (cyclic Jacobi) and principal-component weights.

The matrices handled here are tiny (a handful of co-authors), so a plain
cyclic Jacobi sweep is both fast enough and unconditionally stable.

Conventions
-----------
* eigenvalues sorted descending; near-equal eigenvalues are ordered by the
  index of their eigenvector's largest-magnitude component;
* each eigenvector is flipped so its largest-magnitude component is positive
  (first such index on magnitude ties);
* the principal vector is displayed "lc1-normalized": divided by its smallest
  component so that component equals 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, MatrixError
from .hmatrix import HMatrix

MAX_SWEEPS = 100
OFF_TOL = 1e-12
SYM_TOL = 1e-12
DEGENERATE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column k pairs with eigenvalues[k]
    source_authors: tuple[str, ...]
    sweeps: int = 0

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def principal(self) -> np.ndarray:
        return self.eigenvectors[:, 0].copy()

    @property
    def lambda1(self) -> float:
        return float(self.eigenvalues[0])


@dataclass(frozen=True, eq=False)
class PrincipalWeights:
    """Principal-eigenvector readings of an H-matrix.

    ``lc1_vector`` is ``None`` when the smallest component vanishes (reducible
    matrix); ``degenerate`` is then set and only the unit-norm form is given.
    """

    lc1_vector: np.ndarray | None
    normalized_weights: np.ndarray
    effective_h: np.ndarray
    authors: tuple[str, ...]
    degenerate: bool = False


def _as_array(m) -> tuple[np.ndarray, tuple[str, ...]]:
    if isinstance(m, HMatrix):
        return np.array(m.entries, dtype=float), m.authors
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise MatrixError(f"expected a non-empty square matrix, got shape {a.shape}")
    return a, tuple(f"a{i + 1}" for i in range(a.shape[0]))


def _sign_fix(v: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(v)))
    return -v if v[k] < 0 else v


def jacobi_eigen(m, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Sweeps stop once the off-diagonal Frobenius norm drops to
    ``1e-12 * ||M||_F``.

    Raises
    ------
    MatrixError
        If `m` is not symmetric to 1e-12 (relative to its largest entry).
    ConvergenceError
        If `max_sweeps` sweeps do not reach the tolerance.
    """
    a, authors = _as_array(m)
    if not np.all(np.isfinite(a)):
        raise MatrixError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.T)) > SYM_TOL * scale:
        raise MatrixError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    v = np.eye(n)
    target = OFF_TOL * float(np.linalg.norm(a))

    mask = ~np.eye(n, dtype=bool)

    def off(x):
        return float(np.linalg.norm(x[mask]))

    sweeps = 0
    while off(a) > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # A <- J^T A J with J = [[c, s], [-s, c]] in the (p, q) plane
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq

    values = np.diag(a).copy()
    vectors = v / np.linalg.norm(v, axis=0)
    vectors = np.column_stack([_sign_fix(vectors[:, k]) for k in range(n)])
    order = _order(values, vectors, scale)
    return EigenDecomposition(values[order], vectors[:, order], authors, sweeps)


def _order(values, vectors, scale) -> list[int]:
    order = sorted(range(len(values)), key=lambda k: -values[k])
    tie = 1e-10 * scale
    out: list[int] = []
    i = 0
    while i < len(order):
        j = i + 1
        while j < len(order) and values[order[i]] - values[order[j]] <= tie:
            j += 1
        block = order[i:j]
        block.sort(key=lambda k: (int(np.argmax(np.abs(vectors[:, k]))), k))
        out.extend(block)
        i = j
    return out


def principal_lc1(d: EigenDecomposition) -> PrincipalWeights:
    """Principal eigenvector scaled so its smallest component is 1.

    Component ``i`` belongs to ``d.source_authors[i]``. ``effective_h`` holds
    ``lambda1 * w_i`` with ``w`` the unit-norm principal vector.
    """
    x = _sign_fix(d.principal)
    # non-negative matrices give a one-signed principal vector; drop -0.0 noise
    if np.all(x >= -1e-12):
        x = np.abs(x)
    w = x / np.linalg.norm(x)
    eff = d.lambda1 * w
    smallest = x[int(np.argmin(np.abs(x)))]
    if abs(smallest) < DEGENERATE_TOL:
        return PrincipalWeights(None, w, eff, d.source_authors, degenerate=True)
    lc1 = x / smallest
    lc1[int(np.argmin(np.abs(x)))] = 1.0
    return PrincipalWeights(lc1, w, eff, d.source_authors)


def effective_h(w: PrincipalWeights, lambda1: float, author_position: int) -> float:
    """Team-aware h of one author: ``lambda1`` times their principal weight."""
    n = len(w.normalized_weights)
    if not 0 <= author_position < n:
        raise IndexError(f"author position {author_position} out of range for n={n}")
    return float(lambda1 * w.normalized_weights[author_position])


def residuals(m, d: EigenDecomposition) -> np.ndarray:
    a, _ = _as_array(m)
    return np.linalg.norm(a @ d.eigenvectors - d.eigenvectors * d.eigenvalues, axis=0)
