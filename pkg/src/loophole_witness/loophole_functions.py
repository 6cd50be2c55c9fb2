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
"""Lost-event detector model: measured and true expectation values, closure thresholds,
certification and a click-level Monte Carlo of the equal-count loss model.

Only lost events are modelled (eta_plus = 1) and every outlet loses the same number of clicks.
For a traceless observable the measured mean is then exactly the true mean divided by eta_minus.
"""

import logging
import math
import warnings
from dataclasses import dataclass, asdict
from typing import Optional

import numpy as np

from .configuration import resolve_convention, resolve_tolerances
from .linalg_functions import PreconditionError, decompose, hermitian_eig, require_hermitian
from .state_functions import as_generator
from .witness_functions import NonlinearWitness, nonlinear_expectations, eval_linear

logger = logging.getLogger(__name__)

LINEAR = "linear"

NONLINEAR = "nonlinear"

MODES = (LINEAR, NONLINEAR)

ENTANGLED = "Entangled"

INCONCLUSIVE = "Inconclusive"

LOSS_MODELS = ("equal-count", "bernoulli")

SURFACE_HEADER = ("eta_minus", "x_nl", "boundary_w_m", "mode", "constant_convention")

COMPONENTS_HEADER = ("eta_minus", "h_m", "a_m", "boundary_w_m", "mode", "constant_convention")


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError("`mode=%s` is not in the supported modes: %s!" % (str(mode), str(MODES)))


@dataclass(frozen=True)
class DetectorModel:
    """Lost-event efficiency eta_minus = (N~ - eps)/N~; additional events are not modelled."""

    eta_minus: float
    eta_plus: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.eta_minus <= 1.0:
            raise PreconditionError("`eta_minus` needs to be in (0, 1], got %s!" % str(self.eta_minus))
        if self.eta_plus != 1.0:
            raise PreconditionError("`eta_plus` is fixed at 1, got %s!" % str(self.eta_plus))

    @property
    def offset_factor(self):
        """1 - 1/eta_minus, the factor multiplying every identity coefficient."""
        return 1.0 - 1.0 / self.eta_minus


@dataclass(frozen=True)
class MeasuredTriple:
    """Measured <W>, <H>, <A>."""

    w_m: float
    h_m: float = 0.0
    a_m: float = 0.0

    def __post_init__(self):
        for name in ("w_m", "h_m", "a_m"):
            if not math.isfinite(getattr(self, name)):
                raise PreconditionError("`%s` needs to be finite!" % name)

    @property
    def x_nl(self):
        return math.hypot(self.h_m, self.a_m)


@dataclass(frozen=True)
class WitnessConstants:
    """Identity coefficients and nonlinear normalization entering the thresholds.

    `s` follows the chosen convention and draws the threshold surfaces. `separable_s`, when known,
    is the normalization that keeps F >= 0 on product states, and verdicts never use less.

    :param
      c00: coefficient of I (x) I in the witness.
    :param
      s: nonlinear normalization of the convention.
    :param
      c0h: identity coefficient of H.
    :param
      c0a: identity coefficient of A.
    :param
      convention: how `s` was chosen, recorded in output metadata.
    :param
      separable_s: separable bound of the witness, None when unknown.
    """

    c00: float
    s: float
    c0h: float = 0.0
    c0a: float = 0.0
    convention: str = "schmidt"
    separable_s: Optional[float] = None

    def __post_init__(self):
        if not self.s > 0:
            raise PreconditionError("`s` needs to be positive, got %s!" % str(self.s))
        if self.separable_s is not None and not self.separable_s > 0:
            raise PreconditionError("`separable_s` needs to be positive, got %s!" % str(self.separable_s))
        # frozen record, store the canonical spelling
        object.__setattr__(self, "convention", resolve_convention(self.convention))

    @property
    def certified_s(self):
        """Normalization used for verdicts: the larger of `s` and `separable_s`."""
        return self.s if self.separable_s is None else max(self.s, self.separable_s)

    @classmethod
    def from_nonlinear(cls, witness, convention="schmidt", figure_s=None, tol=None):
        """Constants of a NonlinearWitness under the chosen `s` convention.

        :param
          witness: NonlinearWitness.
        :param
          convention: 'schmidt', 'paper-figure' (needs `figure_s`) or 'separable-bound'.
        :param
          figure_s: normalization behind the printed threshold surfaces.
        :param
          tol: Tolerances for the decomposition.
        :return:
          WitnessConstants carrying the witness's separable bound.
        """

        convention = resolve_convention(convention)
        if convention == "schmidt":
            s = witness.schmidt
        elif convention == "separable-bound":
            s = witness.s
        else:
            if figure_s is None:
                raise PreconditionError("`figure_s` is needed with the 'paper-figure' convention!")
            s = figure_s

        if s < witness.s - resolve_tolerances(tol).structural:
            # surfaces keep the convention, verdicts fall back on the separable bound
            warnings.warn("`s=%.6g` of the '%s' convention is below the separable bound %.6g of the witness, "
                          "certification uses the separable bound" % (s, convention, witness.s))
        c00 = decompose(witness.linear.matrix, witness.dims, tol).c00
        return cls(c00=c00, s=float(s), c0h=witness.c0h, c0a=witness.c0a, convention=convention,
                   separable_s=float(witness.s))


@dataclass(frozen=True)
class Certification:
    verdict: str
    margin: float
    threshold: float
    value: float
    mode: str
    guard_band: float = 0.0

    @property
    def entangled(self):
        return self.verdict == ENTANGLED

    def to_document(self):
        return asdict(self)


def measured_from_true(true_val, c0, det):
    """c0 (1 - 1/eta) + true/eta."""
    return c0 * det.offset_factor + true_val / det.eta_minus


def true_from_measured(measured, c0, det):
    """Exact inverse of `measured_from_true`."""
    return det.eta_minus * (measured - c0 * det.offset_factor)


def linear_threshold(c00, det):
    """Measured linear witness values strictly below C00 (1 - 1/eta) certify entanglement."""
    return c00 * det.offset_factor


def _quadratic_shift(s, c0h, c0a, h_m, a_m, det):
    if not s > 0:
        raise PreconditionError("`s` needs to be positive, got %s!" % str(s))
    k_h = c0h * det.offset_factor
    k_a = c0a * det.offset_factor
    return (det.eta_minus / s) * ((h_m - k_h) ** 2 + (a_m - k_a) ** 2)


def nonlinear_witness_threshold(c00, s, c0h, c0a, h_m, a_m, det):
    """Threshold on the measured linear part <W>_m of a nonlinear witness."""
    return linear_threshold(c00, det) + _quadratic_shift(s, c0h, c0a, h_m, a_m, det)


def nonlinear_threshold(c00, s, c0h, c0a, h_m, a_m, det):
    """Threshold on the measured nonlinear value F_m = <W>_m - (h_m^2 + a_m^2)/s.

    :return:
      C00 (1 - 1/eta) + (eta/s)[(h_m - k_H)^2 + (a_m - k_A)^2] - (h_m^2 + a_m^2)/s
        with k_H = C0H (1 - 1/eta) and k_A = C0A (1 - 1/eta).
    """

    return nonlinear_witness_threshold(c00, s, c0h, c0a, h_m, a_m, det) - (h_m ** 2 + a_m ** 2) / s


def certify(triple, constants, det, mode=LINEAR, guard_band=0.0):
    """Decide whether a measured triple certifies entanglement with the loophole closed.

    Both modes compare w_m against a threshold; in nonlinear mode the threshold is the
    linear-part form of the nonlinear inequality, normalized by `constants.certified_s`.

    :param
      triple: MeasuredTriple.
    :param
      constants: WitnessConstants.
    :param
      det: DetectorModel.
    :param
      mode: 'linear' or 'nonlinear'.
    :param
      guard_band: subtracted from the threshold before the strict comparison.
    :return:
      Certification, Entangled iff margin > 0.
    """

    _check_mode(mode)
    if guard_band < 0:
        # a negative band would loosen the test
        raise ValueError("`guard_band` needs to be non-negative!")

    if mode == LINEAR:
        threshold = linear_threshold(constants.c00, det)
    else:
        # never below the separable bound of the witness
        threshold = nonlinear_witness_threshold(constants.c00, constants.certified_s, constants.c0h,
                                                constants.c0a, triple.h_m, triple.a_m, det)
    # strict inequality, a zero margin stays inconclusive
    margin = (threshold - guard_band) - triple.w_m
    verdict = ENTANGLED if margin > 0 else INCONCLUSIVE
    logger.debug("%s certification: w_m=%.6g threshold=%.6g margin=%.6g", mode, triple.w_m, threshold, margin)
    return Certification(verdict=verdict, margin=margin, threshold=threshold, value=triple.w_m,
                         mode=mode, guard_band=guard_band)


def minimum_efficiency(triple, constants, mode=LINEAR, guard_band=0.0):
    """Smallest eta_minus above which `triple` certifies, solved in closed form.

    The margin grows with eta_minus, so certification holds for every eta in (eta*, 1].

    :return:
      eta*, or None when the triple does not certify even with a perfect detector.
    """

    _check_mode(mode)
    if mode == NONLINEAR and (constants.c0h != 0 or constants.c0a != 0):
        raise PreconditionError("closed form needs c0h = c0a = 0!")
    # same normalization as `certify`
    quadratic = (triple.h_m ** 2 + triple.a_m ** 2) / constants.certified_s if mode == NONLINEAR else 0.0
    c00 = constants.c00
    linear = c00 - triple.w_m - guard_band

    # margin(eta) = 0  <=>  quadratic eta^2 + linear eta - c00 = 0
    if quadratic == 0:
        if linear <= 0:
            return None
        root = c00 / linear
    else:
        discriminant = math.sqrt(linear ** 2 + 4.0 * quadratic * c00)
        if linear > 0:
            root = 2.0 * c00 / (linear + discriminant)
        else:
            root = (discriminant - linear) / (2.0 * quadratic)
    return root if root < 1.0 else None


@dataclass
class ClickRecord:
    """Per-outlet click counts of one simulated measurement.

    `lost_counts` are the clicks physically removed (at most the true count per outlet);
    `nominal_loss` is the equal count the model asks for and `deficit` how much of it could not be taken.
    """

    eigenvalues: np.ndarray
    true_counts: np.ndarray
    lost_counts: np.ndarray
    nominal_loss: int
    deficit: int
    eta_nominal: float
    loss_model: str
    mean: float
    standard_error: float

    @property
    def total_true(self):
        return int(self.true_counts.sum())

    @property
    def total_detected(self):
        return self.total_true - int(self.lost_counts.sum())

    @property
    def eta_realized(self):
        return self.total_detected / self.total_true

    def to_document(self):
        return {"loss_model": self.loss_model,
                "eigenvalues": [float(value) for value in self.eigenvalues],
                "true_counts": [int(count) for count in self.true_counts],
                "lost_counts": [int(count) for count in self.lost_counts],
                "nominal_loss": int(self.nominal_loss),
                "deficit": int(self.deficit),
                "total_true": self.total_true,
                "total_detected": self.total_detected,
                "eta_nominal": self.eta_nominal,
                "eta_realized": self.eta_realized,
                "mean": self.mean,
                "standard_error": self.standard_error}


def simulate_clicks(rho, observable, shots, det, seed=0, loss_model="equal-count", tol=None):
    """Sample eigenvalue clicks of `observable` on `rho` and remove lost events.

    equal-count: every outlet loses eps = floor((1 - eta) shots / k) clicks and the mean is
    (sum n~_i lambda_i - eps sum lambda_i) / (N~ - k eps), which estimates tr(rho S)/eta.
    bernoulli: each click survives with probability eta and the mean of the surviving clicks
    estimates tr(rho S) itself.

    :return:
      (ClickRecord, measured mean).
    """

    tol = resolve_tolerances(tol)
    if loss_model not in LOSS_MODELS:
        raise ValueError("`loss_model=%s` is not in the supported models: %s!" % (str(loss_model), str(LOSS_MODELS)))
    if int(shots) != shots or shots <= 0:
        raise PreconditionError("`shots` needs to be a positive integer, got %s!" % str(shots))
    shots = int(shots)
    observable = require_hermitian(observable, tol)
    if observable.shape != rho.matrix.shape:
        raise PreconditionError("observable shape %s does not match the state!" % str(observable.shape))
    trace = float(np.trace(observable).real)
    if abs(trace) > tol.structural:
        raise PreconditionError("observable needs to be traceless, trace is %.3e!" % trace)

    rng = as_generator(seed)
    eigenvalues, vectors = hermitian_eig(observable, tol)
    probabilities = np.real(np.einsum("ik,ij,jk->k", vectors.conj(), rho.matrix, vectors))
    probabilities = np.clip(probabilities, 0.0, None)
    probabilities /= probabilities.sum()
    true_counts = rng.multinomial(shots, probabilities)
    outlets = eigenvalues.shape[0]

    if loss_model == "equal-count":
        nominal_loss = int(math.floor((1.0 - det.eta_minus) * shots / outlets + 1e-9))
        lost_counts = np.minimum(true_counts, nominal_loss)
        deficit = int(nominal_loss * outlets - lost_counts.sum())
        if deficit > 0:
            warnings.warn("equal-count loss of %d per outlet exceeds the clicks of some outlets, "
                          "%d clicks could not be removed" % (nominal_loss, deficit))
        detected = shots - outlets * nominal_loss
        mean = float(true_counts @ eigenvalues - nominal_loss * eigenvalues.sum()) / detected
        frequencies = true_counts / shots
        spread = math.sqrt(max(float(frequencies @ eigenvalues ** 2 - (frequencies @ eigenvalues) ** 2), 0.0))
        standard_error = spread * math.sqrt(shots) / detected
    else:
        survived = rng.binomial(true_counts, det.eta_minus)
        lost_counts = true_counts - survived
        nominal_loss, deficit = 0, 0
        detected = int(survived.sum())
        if detected == 0:
            raise PreconditionError("no click survived the loss, increase `shots`!")
        mean = float(survived @ eigenvalues) / detected
        second = float(survived @ eigenvalues ** 2) / detected
        standard_error = math.sqrt(max(second - mean ** 2, 0.0) / detected)

    record = ClickRecord(eigenvalues=eigenvalues, true_counts=true_counts, lost_counts=lost_counts,
                         nominal_loss=nominal_loss, deficit=deficit, eta_nominal=det.eta_minus,
                         loss_model=loss_model, mean=mean, standard_error=standard_error)
    if loss_model == "equal-count" and abs(record.eta_realized - det.eta_minus) * shots > outlets:
        warnings.warn("realized efficiency %.6f differs from nominal %.6f" % (record.eta_realized, det.eta_minus))
    logger.info("%d shots, %s loss: mean %.6f +- %.6f", shots, loss_model, mean, standard_error)
    return record, mean


def measured_triple_from_state(witness, rho, det, tol=None):
    """Analytic measured values an experiment with efficiency `det` would report on `rho`.

    :param
      witness: LinearWitness or NonlinearWitness.
    :return:
      MeasuredTriple (h_m = a_m = 0 for a linear witness).
    """

    if isinstance(witness, NonlinearWitness):
        value, h, a = nonlinear_expectations(witness, rho, tol)
        linear, c0h, c0a = witness.linear, witness.c0h, witness.c0a
    else:
        value, h, a = eval_linear(witness, rho, tol), 0.0, 0.0
        linear, c0h, c0a = witness, 0.0, 0.0
    d1, d2 = linear.dims
    c00 = linear.trace / (d1 * d2)
    return MeasuredTriple(w_m=measured_from_true(value, c00, det),
                          h_m=measured_from_true(h, c0h, det),
                          a_m=measured_from_true(a, c0a, det))


def _grid(bounds, name, lowest=None, highest=None):
    lo, hi, steps = bounds
    if int(steps) != steps or steps < 1:
        raise ValueError("`%s` steps needs to be a positive integer!" % name)
    if lo > hi:
        raise ValueError("`%s` needs lo <= hi!" % name)
    if (lowest is not None and lo < lowest) or (highest is not None and hi > highest):
        raise ValueError("`%s` needs to lie in [%s, %s]!" % (name, str(lowest), str(highest)))
    return np.linspace(lo, hi, int(steps))


def surface_grid(constants, eta_range, xnl_range, mode=NONLINEAR):
    """Boundary value of w_m over an (eta_minus, X_nl) grid.

    X_nl^2 is split equally between h_m^2 and a_m^2, which is exact only when c0h = c0a = 0.

    :param
      eta_range: (lo, hi, steps) with 0 < lo.
    :param
      xnl_range: (lo, hi, steps) with 0 <= lo.
    :return:
      list of row dicts keyed by SURFACE_HEADER.
    """

    _check_mode(mode)
    if constants.c0h != 0 or constants.c0a != 0:
        raise PreconditionError("c0h or c0a is nonzero, the boundary depends on h_m and a_m separately: "
                                "use `surface_grid_components`!")
    etas = _grid(eta_range, "eta_range", highest=1.0)
    if etas[0] <= 0:
        raise ValueError("`eta_range` needs to be positive!")
    rows = []
    for eta in etas:
        det = DetectorModel(eta_minus=float(eta))
        for x_nl in _grid(xnl_range, "xnl_range", lowest=0.0):
            component = float(x_nl) / math.sqrt(2.0)
            if mode == LINEAR:
                boundary = linear_threshold(constants.c00, det)
            else:
                # the convention `s`, not the certified one
                boundary = nonlinear_witness_threshold(constants.c00, constants.s, 0.0, 0.0,
                                                       component, component, det)
            rows.append({"eta_minus": float(eta), "x_nl": float(x_nl), "boundary_w_m": boundary,
                         "mode": mode, "constant_convention": constants.convention})
    return rows


def surface_grid_components(constants, eta_range, h_range, a_range, mode=NONLINEAR):
    """Boundary value of w_m over an (eta_minus, h_m, a_m) grid using the full inequality."""
    _check_mode(mode)
    etas = _grid(eta_range, "eta_range", highest=1.0)
    if etas[0] <= 0:
        raise ValueError("`eta_range` needs to be positive!")
    rows = []
    for eta in etas:
        det = DetectorModel(eta_minus=float(eta))
        for h_m in _grid(h_range, "h_range"):
            for a_m in _grid(a_range, "a_range"):
                if mode == LINEAR:
                    boundary = linear_threshold(constants.c00, det)
                else:
                    boundary = nonlinear_witness_threshold(constants.c00, constants.s, constants.c0h,
                                                           constants.c0a, float(h_m), float(a_m), det)
                rows.append({"eta_minus": float(eta), "h_m": float(h_m), "a_m": float(a_m),
                             "boundary_w_m": boundary, "mode": mode,
                             "constant_convention": constants.convention})
    return rows
