"""Floating-point spectral invariants: energy, LEL and incidence energy.

Eigenvalues come from a cyclic Jacobi iteration on the symmetric matrix.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import ConvergenceFailure
from ..tree import Tree

__all__ = [
    "adjacency_matrix",
    "laplacian_matrix",
    "signless_laplacian_matrix",
    "incidence_matrix",
    "jacobi_eigenvalues",
    "energy",
    "lel",
    "incidence_energy",
]

EIGEN_TOL = 1e-10


def adjacency_matrix(tree: Tree) -> np.ndarray:
    a = np.zeros((tree.n, tree.n))
    for u, v in tree.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian_matrix(tree: Tree) -> np.ndarray:
    a = adjacency_matrix(tree)
    return np.diag(a.sum(axis=1)) - a


def signless_laplacian_matrix(tree: Tree) -> np.ndarray:
    a = adjacency_matrix(tree)
    return np.diag(a.sum(axis=1)) + a


def incidence_matrix(tree: Tree) -> np.ndarray:
    """Vertex-edge incidence matrix (unsigned), edges in `tree.edges()` order."""
    edges = tree.edges()
    b = np.zeros((tree.n, len(edges)))
    for j, (u, v) in enumerate(edges):
        b[u, j] = b[v, j] = 1.0
    return b


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = EIGEN_TOL, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted ascending.

    Iterates cyclic sweeps of Jacobi rotations until the off-diagonal
    Frobenius norm drops below ``tol * 1e-3``; by the Wielandt-Hoffman bound
    each eigenvalue is then within `tol` of the diagonal.
    """
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T):
        raise ValueError("matrix must be square and symmetric")
    if n < 2:
        return np.diag(a).copy()
    target = tol * 1e-3
    for sweep in range(max_sweeps):
        off = float(np.linalg.norm(a[~np.eye(n, dtype=bool)]))
        if off < target:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = 100.0 * abs(apq)
                if sweep > 3 and abs(a[p, p]) + g == abs(a[p, p]) and abs(a[q, q]) + g == abs(a[q, q]):
                    a[p, q] = a[q, p] = 0.0
                    continue
                if apq == 0.0:
                    continue
                h = a[q, q] - a[p, p]
                if abs(h) + g == abs(h):
                    t = apq / h  # rotation angle below round-off: tan ~ apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceFailure(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def energy(tree: Tree) -> float:
    """Sum of absolute adjacency eigenvalues."""
    return float(np.sum(np.abs(jacobi_eigenvalues(adjacency_matrix(tree)))))


def lel(tree: Tree) -> float:
    """Laplacian-energy-like invariant: sum of square roots of Laplacian eigenvalues.

    A connected graph has 0 as a simple Laplacian eigenvalue, so the smallest
    computed eigenvalue is set to exactly 0; its square root would otherwise
    turn round-off of order 1e-16 into an error of order 1e-8.
    """
    eigs = jacobi_eigenvalues(laplacian_matrix(tree))
    eigs[0] = 0.0
    return float(np.sum(np.sqrt(np.clip(eigs, 0.0, None))))


def incidence_energy(tree: Tree) -> float:
    """Sum of the singular values of the vertex-edge incidence matrix B.

    Uses the eigenvalues of ``B^T B``, which is nonsingular for a tree.
    """
    if tree.n == 1:
        return 0.0
    b = incidence_matrix(tree)
    eigs = jacobi_eigenvalues(b.T @ b)
    return float(np.sum(np.sqrt(np.clip(eigs, 0.0, None))))
