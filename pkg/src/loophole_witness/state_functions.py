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
"""Bipartite kets and density matrices: named states, samplers and structural checks"""

from dataclasses import dataclass

import numpy as np

from .configuration import resolve_tolerances
from .linalg_functions import (PreconditionError,
                               DimensionError,
                               as_cmatrix,
                               check_dims,
                               hermitian_eig,
                               hermiticity_defect,
                               partial_trace,
                               partial_transpose,
                               singular_values)

BELL_STATES = ("phi+", "phi-", "psi+", "psi-")


def as_generator(seed):
    """Seeded numpy Generator; an existing Generator is passed through untouched."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True, eq=False)
class Ket:
    """Unit vector on C^d1 (x) C^d2, amplitudes in row-major |ij> order."""

    dims: tuple
    amplitudes: np.ndarray

    def __post_init__(self):
        d1, d2 = check_dims(self.dims)
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.shape[0] != d1 * d2:
            raise DimensionError("ket has %d amplitudes, dims %s need %d!"
                                 % (amplitudes.shape[0], str(self.dims), d1 * d2))
        norm = float(np.linalg.norm(amplitudes))
        if abs(norm - 1.0) > resolve_tolerances().reconstruction:
            raise PreconditionError("ket norm is %.15f, needs to be 1!" % norm)
        amplitudes.setflags(write=False)
        object.__setattr__(self, "dims", (d1, d2))
        object.__setattr__(self, "amplitudes", amplitudes)

    def projector(self):
        """|v><v|"""
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def coefficient_matrix(self):
        """Amplitudes as a d1 x d2 matrix, rows index the first factor."""
        return self.amplitudes.reshape(self.dims)

    def inner(self, other):
        """<self|other>"""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit trace, positive semidefinite operator with recorded subsystem dimensions.

    Construction checks shape, Hermiticity and trace. The spectrum check is left to
    `density_matrix` so that samplers producing positive operators by construction stay cheap.
    """

    dims: tuple
    matrix: np.ndarray

    def __post_init__(self):
        tol = resolve_tolerances()
        matrix = as_cmatrix(self.matrix, "matrix")
        d1, d2 = check_dims(self.dims, matrix)
        defect = hermiticity_defect(matrix)
        if defect > tol.structural:
            raise PreconditionError("density matrix is not Hermitian (defect %.3e)!" % defect)
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > tol.structural:
            raise PreconditionError("density matrix trace is %s, needs to be 1!" % str(trace))
        matrix = (matrix + matrix.conj().T) / 2
        matrix.setflags(write=False)
        object.__setattr__(self, "dims", (d1, d2))
        object.__setattr__(self, "matrix", matrix)

    def min_eigenvalue(self, tol=None):
        values, _ = hermitian_eig(self.matrix, tol)
        return float(values[0])

    def partial_transpose(self, subsystem="B"):
        return partial_transpose(self.matrix, self.dims, subsystem)

    def expectation(self, operator):
        """tr(operator rho), complex."""
        return complex(np.trace(as_cmatrix(operator, "operator") @ self.matrix))

    def rank(self, tol=None):
        tol = resolve_tolerances(tol)
        values, _ = hermitian_eig(self.matrix, tol)
        return int(np.sum(values > tol.structural))


def density_matrix(matrix, dims, tol=None):
    """Validated DensityMatrix including the positivity check (min eigenvalue >= -structural)."""
    tol = resolve_tolerances(tol)
    state = DensityMatrix(dims=tuple(dims), matrix=matrix)
    # trace and hermiticity are checked by DensityMatrix itself
    lowest = state.min_eigenvalue(tol)
    if lowest < -tol.structural:
        raise PreconditionError("density matrix has negative eigenvalue %.3e!" % lowest)
    return state


def ket_from_amplitudes(amplitudes, dims, normalize=False):
    """Build a Ket, optionally normalizing the given amplitudes first."""
    amplitudes = np.array(amplitudes, dtype=complex).reshape(-1)
    if normalize:
        norm = np.linalg.norm(amplitudes)
        if norm == 0:
            raise PreconditionError("cannot normalize the zero vector!")
        amplitudes = amplitudes / norm
    return Ket(dims=tuple(dims), amplitudes=amplitudes)


def computational_ket(indices, dims):
    """Product basis ket |i j>."""
    d1, d2 = check_dims(dims)
    i, j = indices
    if not (0 <= i < d1 and 0 <= j < d2):
        raise DimensionError("basis index %s outside dims %s!" % (str(indices), str(dims)))
    amplitudes = np.zeros(d1 * d2, dtype=complex)
    amplitudes[i * d2 + j] = 1.0
    return Ket(dims=(d1, d2), amplitudes=amplitudes)


def bell(which):
    """Two-qubit Bell ket: 'phi+', 'phi-', 'psi+' or 'psi-'."""
    # amplitudes over |00>, |01>, |10>, |11>
    table = {"phi+": [1, 0, 0, 1],
             "phi-": [1, 0, 0, -1],
             "psi+": [0, 1, 1, 0],
             "psi-": [0, 1, -1, 0]}
    if which not in table:
        raise ValueError("`which=%s` is not in the Bell states: %s!" % (str(which), str(BELL_STATES)))
    return Ket(dims=(2, 2), amplitudes=np.array(table[which], dtype=complex) / np.sqrt(2))


def maximally_entangled_ket(d=3):
    """(1/sqrt(d)) sum_i |ii>"""
    amplitudes = np.zeros(d * d, dtype=complex)
    amplitudes[np.arange(d) * (d + 1)] = 1.0 / np.sqrt(d)
    return Ket(dims=(d, d), amplitudes=amplitudes)


def adjacent_levels_ket(d=3):
    """Equal superposition of |j, j+1> and |j+1, j>; for d=3 it is (|01>+|10>+|12>+|21>)/2."""
    amplitudes = np.zeros(d * d, dtype=complex)
    for j in range(d - 1):
        # |j, j+1> and |j+1, j>
        amplitudes[j * d + j + 1] = 1.0
        amplitudes[(j + 1) * d + j] = 1.0
    return ket_from_amplitudes(amplitudes, (d, d), normalize=True)


def pure_state(ket):
    """DensityMatrix |v><v| of a Ket."""
    return DensityMatrix(dims=ket.dims, matrix=ket.projector())


def werner(p):
    """p |psi-><psi-| + (1 - p) I/4, entangled iff p > 1/3."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("`p` needs to be in [0, 1], got %s!" % str(p))
    singlet = bell("psi-").projector()
    return density_matrix(p * singlet + (1.0 - p) * np.eye(4) / 4.0, (2, 2))


def rho_b(a):
    """Two-qutrit family (2/7)|psi~><psi~| + (a/7) sigma_+ + ((5 - a)/7) sigma_-.

    PPT for 1 <= a <= 4; the Choi-type map detects it for a > 3.

    :param
      a: mixing parameter in [0, 5].
    """

    if not 0.0 <= a <= 5.0:
        raise ValueError("`a` needs to be in [0, 5], got %s!" % str(a))
    psi = maximally_entangled_ket(3).projector()
    # cyclic shifts |01>, |12>, |20> and their mirror images
    sigma_plus = sum(computational_ket(index, (3, 3)).projector() for index in [(0, 1), (1, 2), (2, 0)]) / 3.0
    sigma_minus = sum(computational_ket(index, (3, 3)).projector() for index in [(1, 0), (2, 1), (0, 2)]) / 3.0
    matrix = (2.0 / 7.0) * psi + (a / 7.0) * sigma_plus + ((5.0 - a) / 7.0) * sigma_minus
    return density_matrix(matrix, (3, 3))


def ppt_min_eigenvalue(rho, tol=None):
    """Minimum eigenvalue of rho^{T_B}; negative means NPPT."""
    values, _ = hermitian_eig(rho.partial_transpose("B"), tol)
    return float(values[0])


def schmidt_weight(ket, tol=None):
    """Square of the largest Schmidt coefficient, in [1/min(d1, d2), 1]."""
    return float(singular_values(ket.coefficient_matrix(), tol)[0] ** 2)


def reduced_state(state, subsystem="B"):
    """Reduced operator after tracing out `subsystem` of a Ket or DensityMatrix."""
    if isinstance(state, Ket):
        return partial_trace(state.projector(), state.dims, subsystem)
    return partial_trace(state.matrix, state.dims, subsystem)


def random_ket(d, seed=None):
    """Haar random unit vector in C^d from a normalized complex Gaussian."""
    rng = as_generator(seed)
    vector = rng.normal(size=d) + 1j * rng.normal(size=d)
    return vector / np.linalg.norm(vector)


def random_unitary(d, seed=None):
    """Haar random d x d unitary (QR of a complex Gaussian with phase correction)."""
    rng = as_generator(seed)
    gaussian = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(gaussian)
    # QR alone is not Haar, fix the phases of the diagonal of r
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def local_rotate(state, first=None, second=None):
    """Apply (U (x) V) to a Ket or DensityMatrix; a missing factor is the identity."""
    d1, d2 = state.dims
    first = np.eye(d1) if first is None else as_cmatrix(first, "first")
    second = np.eye(d2) if second is None else as_cmatrix(second, "second")
    unitary = np.kron(first, second)
    if isinstance(state, Ket):
        return ket_from_amplitudes(unitary @ state.amplitudes, state.dims, normalize=True)
    return DensityMatrix(dims=state.dims, matrix=unitary @ state.matrix @ unitary.conj().T)


def random_density_matrix(dims, seed=None, rank=None):
    """Random mixed state G G^dagger / tr(G G^dagger) from a complex Ginibre matrix."""
    d1, d2 = check_dims(dims)
    n = d1 * d2
    # full rank unless asked otherwise
    rank = n if rank is None else rank
    rng = as_generator(seed)
    ginibre = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    matrix = ginibre @ ginibre.conj().T
    return DensityMatrix(dims=(d1, d2), matrix=matrix / np.trace(matrix).real)


def sample_product_kets(n_samples, dims, seed=None):
    """Vectorized sampler of product kets |a>|b> with Haar local factors.

    :return:
      array of shape (n_samples, d1*d2), one unit vector per row.
    """

    d1, d2 = check_dims(dims)
    rng = as_generator(seed)
    first = rng.normal(size=(n_samples, d1)) + 1j * rng.normal(size=(n_samples, d1))
    second = rng.normal(size=(n_samples, d2)) + 1j * rng.normal(size=(n_samples, d2))
    # normalize every local factor
    first /= np.linalg.norm(first, axis=1, keepdims=True)
    second /= np.linalg.norm(second, axis=1, keepdims=True)
    return np.einsum("ni,nj->nij", first, second).reshape(n_samples, d1 * d2)


def random_product_state(seed=None, dims=(2, 2)):
    """|a><a| (x) |b><b| with Haar uniform local kets; identical seed gives identical matrix."""
    vector = sample_product_kets(1, dims, seed)[0]
    return DensityMatrix(dims=tuple(dims), matrix=np.outer(vector, vector.conj()))
