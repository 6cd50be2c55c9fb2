# coding=utf-8
# Copyright 2020 George Mihaila.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Dense complex matrix kernel for small bipartite operators (total dimension up to 9).

Matrices are plain `numpy.ndarray` objects of dtype complex128. Everything here is a pure
function: inputs are never modified in place.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .configuration import resolve_tolerances

logger = logging.getLogger(__name__)

# subsystem dimensions the operator bases are defined for
SUPPORTED_DIMENSIONS = (2, 3)

MAX_DIMENSION = 9

SUBSYSTEMS = ("A", "B")


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class DimensionError(PreconditionError):
    """Matrix shape does not agree with the declared subsystem dimensions."""


class NotHermitianError(PreconditionError):
    """Input was required to be Hermitian.

    :param
      defect: Frobenius norm of `m - m^dagger`.
    """

    def __init__(self, defect, message=None):
        self.defect = float(defect)
        super().__init__(message or "matrix is not Hermitian, ||m - m^dagger||_F = %.3e" % self.defect)


class ConvergenceError(RuntimeError):
    """Cyclic Jacobi did not reach the off-diagonal tolerance."""


def as_cmatrix(m, name="m"):
    """Validate and convert `m` to a finite 2D complex array.

    :param
      m: array like object.
    :param
      name: argument name used in error messages.
    :return:
      numpy array of dtype complex128.
    """

    if isinstance(m, (str, bytes, dict)) or m is None:
        raise TypeError("`%s` needs to be an array like matrix!" % name)
    matrix = np.array(m, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise DimensionError("`%s` needs to be a 2D matrix, got shape %s!" % (name, str(matrix.shape)))
    if not np.all(np.isfinite(matrix)):
        raise PreconditionError("`%s` has NaN or Inf entries!" % name)
    return matrix


def check_dims(dims, matrix=None):
    """Validate a pair of subsystem dimensions, optionally against a square matrix."""
    if len(dims) != 2 or any(int(d) != d or d < 1 for d in dims):
        raise DimensionError("`dims` needs to be a pair of positive integers, got %s!" % str(dims))
    d1, d2 = int(dims[0]), int(dims[1])
    if d1 * d2 > MAX_DIMENSION:
        raise DimensionError("total dimension %d is above the supported %d!" % (d1 * d2, MAX_DIMENSION))
    if matrix is not None and matrix.shape != (d1 * d2, d1 * d2):
        raise DimensionError("matrix shape %s does not match dims %s!" % (str(matrix.shape), str(dims)))
    return d1, d2


def hermiticity_defect(m):
    """Frobenius norm of m - m^dagger."""
    m = as_cmatrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError("Hermiticity needs a square matrix, got shape %s!" % str(m.shape))
    return float(np.linalg.norm(m - m.conj().T))


def _hermiticity_allowance(m, tol):
    # structural tolerance relative to the size of m, never below the absolute value
    return tol.structural * max(1.0, float(np.linalg.norm(m)))


def is_hermitian(m, tol=None):
    """True when m - m^dagger is within the structural tolerance scaled by max(1, ||m||)."""
    tol = resolve_tolerances(tol)
    m = as_cmatrix(m)
    return hermiticity_defect(m) <= _hermiticity_allowance(m, tol)


def require_hermitian(m, tol=None):
    """Return the Hermitian part of `m`, raising NotHermitianError when `is_hermitian` fails.

    :param
      m: square matrix like object.
    :param
      tol: Tolerances, default when None.
    :return:
      (m + m^dagger) / 2
    """

    tol = resolve_tolerances(tol)
    m = as_cmatrix(m)
    # same rule as `is_hermitian`
    defect = hermiticity_defect(m)
    if defect > _hermiticity_allowance(m, tol):
        raise NotHermitianError(defect)
    return (m + m.conj().T) / 2


def kron(a, b):
    """Kronecker product `a (x) b`, dimensions multiply."""
    return np.kron(as_cmatrix(a, "a"), as_cmatrix(b, "b"))


def partial_transpose(m, dims, subsystem="B"):
    """Transpose the chosen tensor factor of a bipartite operator.

    :param
      m: (d1*d2) x (d1*d2) matrix.
    :param
      dims: pair (d1, d2).
    :param
      subsystem: 'A' for the first factor or 'B' for the second.
    :return:
      partially transposed matrix.
    """

    m = as_cmatrix(m)
    d1, d2 = check_dims(dims, m)
    if subsystem not in SUBSYSTEMS:
        raise ValueError("`subsystem=%s` needs to be one of %s!" % (str(subsystem), str(SUBSYSTEMS)))
    # row index (i, j), column index (k, l)
    tensor = m.reshape(d1, d2, d1, d2)
    if subsystem == "B":
        tensor = tensor.transpose(0, 3, 2, 1)
    else:
        tensor = tensor.transpose(2, 1, 0, 3)
    return tensor.reshape(d1 * d2, d1 * d2).copy()


def partial_trace(m, dims, subsystem="B"):
    """Trace out the chosen tensor factor.

    :param
      subsystem: factor that is traced out.
    :return:
      reduced operator on the remaining factor.
    """

    m = as_cmatrix(m)
    d1, d2 = check_dims(dims, m)
    # row index (i, j), column index (k, l)
    tensor = m.reshape(d1, d2, d1, d2)
    if subsystem == "B":
        # sum over j = l
        return np.einsum("ijkj->ik", tensor)
    if subsystem == "A":
        return np.einsum("ijil->jl", tensor)
    raise ValueError("`subsystem=%s` needs to be one of %s!" % (str(subsystem), str(SUBSYSTEMS)))


def _jacobi_sweeps(a, tol):
    """Cyclic complex Jacobi on a Hermitian matrix; returns (diagonal, accumulated rotations)."""
    n = a.shape[0]
    # accumulated rotations, the eigenvectors at the end
    v = np.eye(n, dtype=complex)
    # stopping rule is relative to the size of the matrix
    scale = max(float(np.linalg.norm(a)), np.finfo(float).tiny)
    off_mask = ~np.eye(n, dtype=bool)

    for sweep in range(tol.max_sweeps):
        off = float(np.sqrt(np.sum(np.abs(a[off_mask]) ** 2)))
        if off <= tol.jacobi * scale:
            logger.debug("jacobi converged after %d sweeps (off=%.2e)", sweep, off)
            return np.real(np.diag(a)).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    # pair already decoupled
                    continue
                phase = apq / r
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # D = diag(1, conj(phase)) makes the pair real, then a real rotation zeroes it
                rotation = np.array([[c, s],
                                     [-s * np.conj(phase), c * np.conj(phase)]])
                pair = [p, q]
                a[:, pair] = a[:, pair] @ rotation
                a[pair, :] = rotation.conj().T @ a[pair, :]
                v[:, pair] = v[:, pair] @ rotation
                # clean the rounding left on the rotated pair
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

    raise ConvergenceError("Jacobi did not converge in %d sweeps!" % tol.max_sweeps)


def hermitian_eig(m, tol=None):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    :param
      m: Hermitian matrix (defect at most the structural tolerance).
    :param
      tol: Tolerances record, default package tolerances.
    :return:
      (eigenvalues ascending, eigenvectors as orthonormal columns). Each eigenvector has its
      largest-magnitude component real and positive.
    """

    tol = resolve_tolerances(tol)
    a = require_hermitian(m, tol)
    values, vectors = _jacobi_sweeps(a.copy(), tol)

    # ascending, ties keep the solver order
    order = np.argsort(values, kind="stable")
    values, vectors = values[order], vectors[:, order]

    # fix the arbitrary phase of every eigenvector
    for k in range(vectors.shape[1]):
        index = int(np.argmax(np.abs(vectors[:, k])))
        pivot = vectors[index, k]
        vectors[:, k] *= np.conj(pivot) / abs(pivot)

    return values, vectors


def min_eigenpair(m, tol=None):
    """Most negative eigenvalue and its eigenvector (first one in solver order on ties)."""
    values, vectors = hermitian_eig(m, tol)
    return float(values[0]), vectors[:, 0]


def singular_values(m, tol=None):
    """Singular values in descending order, via the spectrum of m m^dagger."""
    m = as_cmatrix(m)
    gram = m @ m.conj().T
    values, _ = hermitian_eig(gram, tol)
    # rounding can leave tiny negative eigenvalues
    values = np.clip(values[::-1], 0.0, None)
    return np.sqrt(values[:min(m.shape)])


@dataclass(frozen=True, eq=False)
class OperatorBasis:
    """Identity plus traceless Hermitian generators of d x d operators.

    `norms[i]` is tr(B_i^2): d for the identity and 2 for every generator.
    """

    dim: int
    elements: np.ndarray

    @property
    def norms(self):
        return np.real(np.einsum("kij,kji->k", self.elements, self.elements))

    def __len__(self):
        return self.elements.shape[0]


@lru_cache(maxsize=None)
def _basis_elements(d):
    elements = [np.eye(d, dtype=complex)]
    for k in range(1, d):
        # symmetric and antisymmetric pairs for every j < k, then the k-th diagonal
        for j in range(k):
            sym = np.zeros((d, d), dtype=complex)
            sym[j, k] = sym[k, j] = 1.0
            anti = np.zeros((d, d), dtype=complex)
            anti[j, k] = -1j
            anti[k, j] = 1j
            elements.extend([sym, anti])
        diag = np.zeros((d, d), dtype=complex)
        diag[np.arange(k), np.arange(k)] = 1.0
        diag[k, k] = -k
        elements.append(np.sqrt(2.0 / (k * (k + 1))) * diag)
    stacked = np.array(elements)
    stacked.setflags(write=False)
    return stacked


def operator_basis(d):
    """Pauli basis for d=2, Gell-Mann basis (standard order) for d=3, identity first."""
    if d not in SUPPORTED_DIMENSIONS:
        raise DimensionError("operator basis is defined for d in %s, got %s!" % (str(SUPPORTED_DIMENSIONS), str(d)))
    return OperatorBasis(dim=d, elements=_basis_elements(d))


def orthonormal_basis(d):
    """Basis elements scaled to unit Hilbert-Schmidt norm, shape (d*d, d, d)."""
    basis = operator_basis(d)
    return basis.elements / np.sqrt(basis.norms)[:, None, None]


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Real coefficient table C_ij of `sum_ij C_ij B_i (x) B_j`."""

    dims: tuple
    coeffs: np.ndarray

    @property
    def c00(self):
        return float(self.coeffs[0, 0])

    def terms(self, threshold=0.0):
        """Yield (i, j, C_ij) for the coefficients above `threshold` in magnitude."""
        for (i, j), value in np.ndenumerate(self.coeffs):
            if abs(value) > threshold:
                yield i, j, float(value)

    def reconstruct(self):
        first, second = operator_basis(self.dims[0]), operator_basis(self.dims[1])
        tensor = np.einsum("ij,iac,jbd->abcd", self.coeffs, first.elements, second.elements)
        n = self.dims[0] * self.dims[1]
        return tensor.reshape(n, n)


def decompose(m, dims, tol=None):
    """Coefficients of a Hermitian operator over the product basis B_i (x) B_j.

    C_ij = tr[m (B_i (x) B_j)] / (tr(B_i^2) tr(B_j^2)), so C_00 = tr(m) / (d1 d2).

    :param
      m: Hermitian (d1*d2) x (d1*d2) matrix.
    :param
      dims: pair (d1, d2).
    :return:
      Decomposition record.
    """

    tol = resolve_tolerances(tol)
    m = require_hermitian(m, tol)
    d1, d2 = check_dims(dims, m)
    first, second = operator_basis(d1), operator_basis(d2)

    # tr[m (B_i (x) B_j)] for every pair at once
    tensor = m.reshape(d1, d2, d1, d2)
    overlaps = np.einsum("abce,ica,jeb->ij", tensor, first.elements, second.elements)
    coeffs = overlaps / np.outer(first.norms, second.norms)

    imaginary = float(np.max(np.abs(coeffs.imag)))
    if imaginary > tol.reconstruction * max(1.0, float(np.linalg.norm(m))):
        # a symmetrized input cannot get here unless the basis is broken
        raise PreconditionError("decomposition has imaginary coefficients up to %.3e!" % imaginary)

    return Decomposition(dims=(d1, d2), coeffs=np.real(coeffs))


def hermitian_split(x):
    """Split a square matrix as x = h + i a with h, a Hermitian.

    :return:
      (h, a) with h = (x + x^dagger)/2 and a = (x - x^dagger)/(2i).
    """

    x = as_cmatrix(x, "x")
    if x.shape[0] != x.shape[1]:
        raise DimensionError("`x` needs to be square, got shape %s!" % str(x.shape))
    h = (x + x.conj().T) / 2
    a = (x - x.conj().T) / 2j
    return h, a
