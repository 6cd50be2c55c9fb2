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
"""Positive maps, linear entanglement witnesses and their nonlinear extension.

Every map is stored as its matrix over the orthonormal Hermitian operator basis
(identity + Pauli / Gell-Mann, each scaled to unit Hilbert-Schmidt norm). In that basis the
adjoint map is the conjugate transpose of the matrix.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from tqdm import tqdm

from .configuration import resolve_tolerances
from .linalg_functions import (DimensionError,
                               PreconditionError,
                               as_cmatrix,
                               check_dims,
                               hermitian_eig,
                               hermitian_split,
                               min_eigenpair,
                               orthonormal_basis,
                               partial_transpose,
                               require_hermitian)
from .state_functions import (DensityMatrix,
                              Ket,
                              as_generator,
                              local_rotate,
                              random_ket,
                              random_unitary,
                              sample_product_kets,
                              schmidt_weight,
                              werner)

logger = logging.getLogger(__name__)

PPT_EIGENVECTOR = "ppt-eigenvector"

MAP_ADJOINT = "map-adjoint"


@dataclass(frozen=True, eq=False)
class PositiveMap:
    """Linear map on d x d operators.

    :param
      dim: operator dimension d.
    :param
      matrix: d^2 x d^2 matrix, row = output basis coefficient, column = input basis coefficient.
    :param
      name: label carried into witness provenance.
    """

    dim: int
    matrix: np.ndarray
    name: str = "map"

    def __post_init__(self):
        matrix = as_cmatrix(self.matrix, "matrix")
        if matrix.shape != (self.dim ** 2, self.dim ** 2):
            raise DimensionError("map matrix needs shape %s, got %s!"
                                 % (str((self.dim ** 2, self.dim ** 2)), str(matrix.shape)))
        # frozen record, the matrix is read only too
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_action(cls, action, dim, name="map"):
        """Tabulate `action` on the orthonormal basis: M_ij = tr(B_i action(B_j))."""
        basis = orthonormal_basis(dim)
        images = np.array([as_cmatrix(action(element.copy()), "action output") for element in basis])
        matrix = np.einsum("iab,jba->ij", basis, images)
        return cls(dim=dim, matrix=matrix, name=name)

    def coefficients(self, x):
        """tr(B_k x) for every orthonormal basis element."""
        return np.einsum("kab,ba->k", orthonormal_basis(self.dim), x)

    def __call__(self, x):
        x = as_cmatrix(x, "x")
        if x.shape != (self.dim, self.dim):
            raise DimensionError("map acts on %dx%d operators, got %s!" % (self.dim, self.dim, str(x.shape)))
        return np.einsum("k,kab->ab", self.matrix @ self.coefficients(x), orthonormal_basis(self.dim))

    def superoperator(self):
        """Same map acting on row-major vectorized operators."""
        vectors = orthonormal_basis(self.dim).reshape(self.dim ** 2, self.dim ** 2)
        return vectors.T @ self.matrix @ vectors.conj()


def identity_map(d):
    return PositiveMap.from_action(lambda x: x, d, name="identity")


def transpose_map(d):
    return PositiveMap.from_action(lambda x: x.T, d, name="transpose")


def _choi_action(x):
    # diagonal gets a_ii + a_(i-1)(i-1) (cyclic), off-diagonal entries flip sign
    out = -x
    out[0, 0] = x[0, 0] + x[2, 2]
    out[1, 1] = x[1, 1] + x[0, 0]
    out[2, 2] = x[2, 2] + x[1, 1]
    return out


def choi_map():
    """Positive but not completely positive qutrit map, maps I to 2I."""
    return PositiveMap.from_action(_choi_action, 3, name="choi")


def map_adjoint(positive_map):
    """Hilbert-Schmidt adjoint: tr[adj(M)(Y)^dagger X] = tr[Y^dagger M(X)]."""
    return PositiveMap(dim=positive_map.dim, matrix=positive_map.matrix.conj().T,
                       name="adjoint(%s)" % positive_map.name)


def hermiticity_check(positive_map, samples=100, seed=0):
    """Largest ||M(X^dagger) - M(X)^dagger||_F over random complex X."""
    rng = as_generator(seed)
    d = positive_map.dim
    worst = 0.0
    for _ in range(samples):
        # random complex input, not Hermitian on purpose
        x = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        defect = np.linalg.norm(positive_map(x.conj().T) - positive_map(x).conj().T)
        worst = max(worst, float(defect))
    return worst


def positivity_spot_check(positive_map, samples=500, seed=0, tol=None):
    """Smallest eigenvalue of M(|v><v|) over random kets; a necessary condition for positivity only."""
    rng = as_generator(seed)
    lowest = np.inf
    for _ in range(samples):
        vector = random_ket(positive_map.dim, rng)
        image = positive_map(np.outer(vector, vector.conj()))
        # symmetrize rounding before the eigensolver
        values, _ = hermitian_eig((image + image.conj().T) / 2, tol)
        lowest = min(lowest, float(values[0]))
    return lowest


def apply_extended(positive_map, rho, dims=None):
    """(I (x) M) applied block-wise on the second factor.

    :param
      positive_map: map on the second factor.
    :param
      rho: DensityMatrix, or any square matrix together with `dims`.
    :return:
      matrix of the same shape.
    """

    if isinstance(rho, DensityMatrix):
        matrix, dims = rho.matrix, rho.dims
    else:
        if dims is None:
            raise DimensionError("`dims` is needed when `rho` is a plain matrix!")
        matrix = as_cmatrix(rho, "rho")
    d1, d2 = check_dims(dims, matrix)
    if d2 != positive_map.dim:
        raise DimensionError("map acts on dimension %d, second factor has %d!" % (positive_map.dim, d2))

    # one d2 x d2 block per pair of first-factor indices, vectorized row major
    blocks = matrix.reshape(d1, d2, d1, d2).transpose(0, 2, 1, 3).reshape(d1, d1, d2 * d2)
    mapped = blocks @ positive_map.superoperator().T
    return mapped.reshape(d1, d1, d2, d2).transpose(0, 2, 1, 3).reshape(d1 * d2, d1 * d2)


@dataclass(frozen=True, eq=False)
class LinearWitness:
    """Hermitian operator W with tr(W rho_s) >= 0 on separable states.

    `provenance` is PPT_EIGENVECTOR for W = |phi><phi|^{T_B} or MAP_ADJOINT for (I (x) M)^+ |phi><phi|.
    """

    dims: tuple
    matrix: np.ndarray
    provenance: str
    positive_map: PositiveMap
    phi: Optional[Ket] = None

    @property
    def trace(self):
        return float(np.trace(self.matrix).real)


def witness_from_ppt(phi):
    """W_phi = |phi><phi|^{T_B}."""
    matrix = partial_transpose(phi.projector(), phi.dims, "B")
    logger.debug("built partial transpose witness on dims %s", str(phi.dims))
    return LinearWitness(dims=phi.dims, matrix=matrix, provenance=PPT_EIGENVECTOR,
                         positive_map=transpose_map(phi.dims[1]), phi=phi)


def witness_from_map(positive_map, phi, tol=None):
    """W = (I (x) M)^+ |phi><phi|, left unnormalized."""
    if phi.dims[1] != positive_map.dim:
        raise DimensionError("map acts on dimension %d, `phi` has dims %s!" % (positive_map.dim, str(phi.dims)))
    matrix = apply_extended(map_adjoint(positive_map), phi.projector(), phi.dims)
    matrix = require_hermitian(matrix, tol)
    logger.debug("built %s adjoint witness on dims %s", positive_map.name, str(phi.dims))
    return LinearWitness(dims=phi.dims, matrix=matrix, provenance=MAP_ADJOINT,
                         positive_map=positive_map, phi=phi)


def detecting_witness(rho, positive_map=None, tol=None):
    """Witness built from the eigenvector of the most negative eigenvalue of (I (x) M)(rho).

    With no map the partial transpose is used and the result is W_phi = |phi><phi|^{T_B}.

    :return:
      LinearWitness, or None when (I (x) M)(rho) has no negative eigenvalue.
    """

    tol = resolve_tolerances(tol)
    if positive_map is None:
        extended = rho.partial_transpose("B")
    else:
        extended = apply_extended(positive_map, rho)
    value, vector = min_eigenpair(extended, tol)
    # nothing negative means nothing to detect
    if value >= -tol.structural:
        logger.info("no negative eigenvalue (min %.3e), nothing to witness", value)
        return None
    phi = Ket(dims=rho.dims, amplitudes=vector / np.linalg.norm(vector))
    if positive_map is None:
        return witness_from_ppt(phi)
    return witness_from_map(positive_map, phi, tol)


def separable_bound(positive_map, psi, restarts=32, max_iterations=500, seed=0, tol=None):
    """Largest <psi|(I (x) M)(|a><a| (x) |b><b|)|psi> over product states, by seesaw.

    For the transpose map this is the Schmidt weight of psi. Alternates the exact optimum over
    |a> (top eigenvector of Psi M(bb^dagger)^T Psi^dagger) and over |b> (top eigenvector of
    M^+(uu^dagger), u = Psi^T conj(a)); every computational basis ket and `restarts` random kets seed |b>.
    """

    if psi.dims[1] != positive_map.dim:
        raise DimensionError("map acts on dimension %d, `psi` has dims %s!" % (positive_map.dim, str(psi.dims)))
    rng = as_generator(seed)
    adjoint = map_adjoint(positive_map)
    coefficients = psi.coefficient_matrix()
    d2 = positive_map.dim

    # every computational basis ket, then random ones
    starts = [np.eye(d2, dtype=complex)[k] for k in range(d2)]
    starts += [random_ket(d2, rng) for _ in range(restarts)]

    best = -np.inf
    for start, b in enumerate(starts):
        previous = -np.inf
        for _ in range(max_iterations):
            # best |a> for the current |b>
            image = positive_map(np.outer(b, b.conj()))
            reduced = coefficients @ image.T @ coefficients.conj().T
            _, vectors = hermitian_eig((reduced + reduced.conj().T) / 2, tol)
            a = vectors[:, -1]
            # best |b> for that |a>
            u = coefficients.T @ a.conj()
            pulled = adjoint(np.outer(u, u.conj()))
            values, vectors = hermitian_eig((pulled + pulled.conj().T) / 2, tol)
            b, value = vectors[:, -1], float(values[-1])
            if value - previous <= 1e-13:
                # seesaw values never decrease, stop when flat
                break
            previous = value
        logger.debug("seesaw start %d reached %.12f", start, value)
        best = max(best, value)
    return best


@dataclass(frozen=True, eq=False)
class NonlinearWitness:
    """F = <W> - (1/s) (<h>^2 + <a>^2) with h + i a the measured operator built from |phi><psi|."""

    linear: LinearWitness
    psi: Ket
    x: np.ndarray
    h: np.ndarray
    a: np.ndarray
    s: float
    schmidt: float
    c0h: float
    c0a: float

    @property
    def dims(self):
        return self.linear.dims

    @property
    def measured_operator(self):
        return self.h + 1j * self.a


def nonlinear_extend(witness, phi, psi, tol=None):
    """Add the quadratic term built from X = |phi><psi| to a linear witness.

    For the partial transpose witness the measured operator is X^{T_B} and s is the Schmidt weight
    of psi. For a map witness it is (I (x) M)^+(X), which reduces to X^{T_B} for the transpose,
    and s is `separable_bound(M, psi)`.
    """

    tol = resolve_tolerances(tol)
    if phi.dims != witness.dims or psi.dims != witness.dims:
        raise DimensionError("`phi`, `psi` and the witness need the same dims!")
    d1, d2 = witness.dims

    x = np.outer(phi.amplitudes, psi.amplitudes.conj())
    schmidt = schmidt_weight(psi, tol)
    if witness.provenance == PPT_EIGENVECTOR:
        measured = partial_transpose(x, witness.dims, "B")
        s = schmidt
    else:
        measured = apply_extended(map_adjoint(witness.positive_map), x, witness.dims)
        s = separable_bound(witness.positive_map, psi, tol=tol)
    if not s > 0:
        raise PreconditionError("nonlinear normalization `s` needs to be positive, got %s!" % str(s))

    h, a = hermitian_split(measured)
    # identity coefficients of h and a
    c0h = float(np.trace(h).real) / (d1 * d2)
    c0a = float(np.trace(a).real) / (d1 * d2)
    logger.info("nonlinear extension: s=%.12f schmidt=%.12f c0h=%.3e c0a=%.3e", s, schmidt, c0h, c0a)
    return NonlinearWitness(linear=witness, psi=psi, x=x, h=h, a=a, s=s, schmidt=schmidt, c0h=c0h, c0a=c0a)


def _real_expectation(operator, rho, tol):
    value = complex(np.trace(operator @ rho.matrix))
    if abs(value.imag) > tol.structural * max(1.0, abs(value.real)):
        raise PreconditionError("expectation has imaginary part %.3e!" % value.imag)
    return value.real


def eval_linear(witness, rho, tol=None):
    """tr(W rho)."""
    tol = resolve_tolerances(tol)
    if rho.dims != witness.dims:
        raise DimensionError("state dims %s do not match witness dims %s!" % (str(rho.dims), str(witness.dims)))
    return _real_expectation(witness.matrix, rho, tol)


def nonlinear_expectations(witness, rho, tol=None):
    """(<W>, <h>, <a>) for rho; the three numbers an experiment measures."""
    tol = resolve_tolerances(tol)
    return (eval_linear(witness.linear, rho, tol),
            _real_expectation(witness.h, rho, tol),
            _real_expectation(witness.a, rho, tol))


def eval_nonlinear(witness, rho, s=None, tol=None):
    """<W> - (1/s)(<h>^2 + <a>^2); `s` defaults to the witness normalization."""
    s = witness.s if s is None else s
    if not s > 0:
        raise PreconditionError("`s` needs to be positive, got %s!" % str(s))
    value, h, a = nonlinear_expectations(witness, rho, tol)
    return value - (h ** 2 + a ** 2) / s


def _quadratic_forms(operator, kets):
    return np.real(np.einsum("ni,ij,nj->n", kets.conj(), operator, kets))


def sampled_minimum(witness, n_samples=10000, seed=0, batch_size=2000, verbose=False):
    """Smallest witness value over random pure product states.

    Works for LinearWitness and NonlinearWitness; samples are drawn in batches.

    :return:
      minimum observed value.
    """

    if batch_size < 1:
        raise ValueError("`batch_size` needs to be at least 1!")
    rng = as_generator(seed)
    nonlinear = isinstance(witness, NonlinearWitness)
    matrix = witness.linear.matrix if nonlinear else witness.matrix

    lowest = np.inf
    batches = range(0, n_samples, batch_size)
    for start in tqdm(batches, desc="product states", disable=not verbose):
        # last batch may be shorter
        kets = sample_product_kets(min(batch_size, n_samples - start), witness.dims, rng)
        values = _quadratic_forms(matrix, kets)
        if nonlinear:
            h = _quadratic_forms(witness.h, kets)
            a = _quadratic_forms(witness.a, kets)
            values = values - (h ** 2 + a ** 2) / witness.s
        lowest = min(lowest, float(np.min(values)))
    return lowest


def _rotated_mixtures(dims, seed, trials):
    """Noisy entangled states rotated by a local phase grid, then by random local unitaries."""
    d1, d2 = dims
    n = d1 * d2

    def base(q):
        if dims == (2, 2):
            return werner(q)
        # isotropic analogue of the werner family
        entangled = np.zeros(n, dtype=complex)
        entangled[np.arange(min(d1, d2)) * (d2 + 1)] = 1.0 / np.sqrt(min(d1, d2))
        matrix = q * np.outer(entangled, entangled.conj()) + (1 - q) * np.eye(n) / n
        return DensityMatrix(dims=dims, matrix=matrix)

    for q in np.linspace(0.35, 1.0, 14):
        for theta in np.linspace(0.0, np.pi, 13):
            phases = np.diag(np.exp(1j * theta * np.arange(d2)))
            yield local_rotate(base(q), second=phases)

    rng = as_generator(seed)
    for _ in range(trials):
        q = rng.uniform(1.0 / 3.0, 1.0)
        yield local_rotate(base(q), random_unitary(d1, rng), random_unitary(d2, rng))


def find_nonlinear_advantage(witness, trials=2000, seed=0, tol=None):
    """Search for a state the linear witness misses (<W> >= 0) but F detects (F < 0).

    :return:
      (rho, linear value, nonlinear value) for the first hit, or None.
    """

    for rho in _rotated_mixtures(witness.dims, seed, trials):
        linear = eval_linear(witness.linear, rho, tol)
        if linear < 0:
            continue
        nonlinear = eval_nonlinear(witness, rho, tol=tol)
        if nonlinear < 0:
            logger.info("nonlinear advantage: <W>=%.6f F=%.6f", linear, nonlinear)
            return rho, linear, nonlinear
    return None
