# coding=utf-8
# Copyright 2020 George Mihaila.
"""Tests for the lost-event detector model"""

import math
import unittest
import warnings

import numpy as np

from loophole_witness.linalg_functions import PreconditionError, kron, operator_basis
from loophole_witness.loophole_functions import (ENTANGLED,
                                                 INCONCLUSIVE,
                                                 LINEAR,
                                                 NONLINEAR,
                                                 DetectorModel,
                                                 MeasuredTriple,
                                                 WitnessConstants,
                                                 certify,
                                                 linear_threshold,
                                                 measured_from_true,
                                                 measured_triple_from_state,
                                                 minimum_efficiency,
                                                 nonlinear_threshold,
                                                 nonlinear_witness_threshold,
                                                 simulate_clicks,
                                                 surface_grid,
                                                 surface_grid_components,
                                                 true_from_measured)
from loophole_witness.state_functions import (adjacent_levels_ket,
                                              bell,
                                              maximally_entangled_ket,
                                              random_density_matrix,
                                              random_product_state,
                                              werner)
from loophole_witness.witness_functions import (choi_map,
                                                eval_linear,
                                                eval_nonlinear,
                                                nonlinear_extend,
                                                witness_from_map,
                                                witness_from_ppt)

PAULI = operator_basis(2).elements

XX = kron(PAULI[1], PAULI[1])

ZZ = kron(PAULI[3], PAULI[3])

BELL_CONSTANTS = WitnessConstants(c00=0.25, s=0.5)


def bell_witness():
    return nonlinear_extend(witness_from_ppt(bell("phi+")), bell("phi+"), bell("phi-"))


class TestDetectorModel(unittest.TestCase):
    def test_validation(self):
        self.assertRaises(PreconditionError, DetectorModel, 0.0)
        self.assertRaises(PreconditionError, DetectorModel, 1.5)
        self.assertRaises(PreconditionError, DetectorModel, 0.5, 0.9)
        self.assertEqual(DetectorModel(1.0).offset_factor, 0.0)
        self.assertAlmostEqual(DetectorModel(0.5).offset_factor, -1.0)

    def test_triple_validation(self):
        self.assertRaises(PreconditionError, MeasuredTriple, float("nan"))
        self.assertRaises(PreconditionError, MeasuredTriple, 0.0, float("inf"))
        self.assertAlmostEqual(MeasuredTriple(0.0, 0.3, 0.4).x_nl, 0.5)

    def test_constants_validation(self):
        self.assertRaises(PreconditionError, WitnessConstants, 0.25, 0.0)
        self.assertRaises(ValueError, WitnessConstants, 0.25, 0.5, 0.0, 0.0, "largest")
        self.assertRaises(PreconditionError, WitnessConstants, 0.25, 0.5, separable_s=-0.1)
        # the older spelling is stored under the current name
        self.assertEqual(WitnessConstants(0.25, 0.5, convention="published").convention, "paper-figure")
        self.assertEqual(BELL_CONSTANTS.certified_s, 0.5)


class TestMeasuredValues(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(measured_from_true(0.3, 0.25, DetectorModel(1.0)), 0.3)
        self.assertAlmostEqual(measured_from_true(0.0, 0.25, DetectorModel(1 / 3)), -0.5, places=15)
        for eta in (0.2, 0.5, 0.9):
            self.assertAlmostEqual(measured_from_true(0.3, 0.0, DetectorModel(eta)), 0.3 / eta, places=14)

    def test_inverse(self):
        self.assertAlmostEqual(true_from_measured(-0.5, 0.25, DetectorModel(1 / 3)), 0.0, places=15)
        self.assertAlmostEqual(true_from_measured(0.6, 0.0, DetectorModel(0.5)), 0.3, places=15)
        rng = np.random.default_rng(0)
        for eta in (0.2, 0.7, 1.0):
            det = DetectorModel(eta)
            for value, c0 in rng.normal(size=(20, 2)):
                self.assertAlmostEqual(true_from_measured(measured_from_true(value, c0, det), c0, det), value,
                                       places=12)


class TestThresholds(unittest.TestCase):
    def test_linear_examples(self):
        self.assertEqual(linear_threshold(0.25, DetectorModel(1 / 3)), -0.5)
        self.assertEqual(linear_threshold(0.25, DetectorModel(1.0)), 0.0)
        self.assertAlmostEqual(linear_threshold(2 / 9, DetectorModel(0.5)), -2 / 9, places=15)

    def test_nonlinear_perfect_detector(self):
        det = DetectorModel(1.0)
        for h_m, a_m in [(0.0, 0.0), (0.3, -0.2), (1.0, 1.0)]:
            self.assertAlmostEqual(nonlinear_threshold(0.25, 0.5, 0.0, 0.0, h_m, a_m, det), 0.0, places=15)

    def test_nonlinear_closed_forms(self):
        for eta in (0.3, 0.6, 0.9):
            det = DetectorModel(eta)
            for h_m, a_m in [(0.1, 0.2), (0.4, -0.3)]:
                x2 = h_m ** 2 + a_m ** 2
                self.assertAlmostEqual(nonlinear_witness_threshold(0.25, 0.5, 0.0, 0.0, h_m, a_m, det),
                                       0.25 * (1 - 1 / eta) + 2 * eta * x2, places=13)
                self.assertAlmostEqual(nonlinear_witness_threshold(2 / 9, 0.25, 0.0, 0.0, h_m, a_m, det),
                                       (2 / 9) * (1 - 1 / eta) + 4 * eta * x2, places=13)

    def test_identity_offsets(self):
        det = DetectorModel(0.5)
        # k_H = c0h (1 - 1/eta) = -0.1, so h_m = -0.1 cancels the quadratic shift
        self.assertAlmostEqual(nonlinear_witness_threshold(0.25, 0.5, 0.1, 0.0, -0.1, 0.0, det),
                               linear_threshold(0.25, det), places=15)

    def test_bad_s(self):
        self.assertRaises(PreconditionError, nonlinear_threshold, 0.25, 0.0, 0.0, 0.0, 0.1, 0.1, DetectorModel(0.5))


class TestCertify(unittest.TestCase):
    def test_anchor(self):
        det = DetectorModel(1 / 3)
        self.assertTrue(certify(MeasuredTriple(-0.5 - 1e-9), BELL_CONSTANTS, det).entangled)
        result = certify(MeasuredTriple(-0.5 + 1e-9), BELL_CONSTANTS, det)
        self.assertEqual(result.verdict, INCONCLUSIVE)
        self.assertEqual(result.threshold, -0.5)

    def test_examples(self):
        det = DetectorModel(1 / 3)
        self.assertEqual(certify(MeasuredTriple(-0.6), BELL_CONSTANTS, det).verdict, ENTANGLED)
        self.assertEqual(certify(MeasuredTriple(-0.4), BELL_CONSTANTS, det).verdict, INCONCLUSIVE)
        self.assertAlmostEqual(certify(MeasuredTriple(-0.6), BELL_CONSTANTS, det).margin, 0.1, places=14)

    def test_nonlinear_rescues_linear(self):
        det = DetectorModel(0.5)
        # needs h_m^2 + a_m^2 > (w_m - 1/4 (1 - 1/eta)) / (2 eta) = 0.05
        self.assertEqual(certify(MeasuredTriple(-0.2, 0.3), BELL_CONSTANTS, det, LINEAR).verdict, INCONCLUSIVE)
        self.assertEqual(certify(MeasuredTriple(-0.2, 0.3), BELL_CONSTANTS, det, NONLINEAR).verdict, ENTANGLED)
        self.assertEqual(certify(MeasuredTriple(-0.2, 0.2), BELL_CONSTANTS, det, NONLINEAR).verdict, INCONCLUSIVE)
        self.assertEqual(certify(MeasuredTriple(-0.2, 0.0, 0.3), BELL_CONSTANTS, det, NONLINEAR).verdict, ENTANGLED)

    def test_guard_band(self):
        det = DetectorModel(1 / 3)
        self.assertEqual(certify(MeasuredTriple(-0.6), BELL_CONSTANTS, det, guard_band=0.05).verdict, ENTANGLED)
        self.assertEqual(certify(MeasuredTriple(-0.6), BELL_CONSTANTS, det, guard_band=0.2).verdict, INCONCLUSIVE)
        self.assertRaises(ValueError, certify, MeasuredTriple(-0.6), BELL_CONSTANTS, det, LINEAR, -0.1)

    def test_bad_mode(self):
        self.assertRaises(ValueError, certify, MeasuredTriple(-0.6), BELL_CONSTANTS, DetectorModel(0.5), "quadratic")

    def test_document(self):
        document = certify(MeasuredTriple(-0.6), BELL_CONSTANTS, DetectorModel(1 / 3)).to_document()
        self.assertEqual(document["verdict"], ENTANGLED)
        self.assertEqual(document["mode"], LINEAR)

    def test_monotone_in_efficiency(self):
        triple = MeasuredTriple(-0.1, 0.2, 0.1)
        for mode in (LINEAR, NONLINEAR):
            margins = [certify(triple, BELL_CONSTANTS, DetectorModel(eta), mode).margin
                       for eta in np.linspace(0.05, 1.0, 40)]
            self.assertTrue(np.all(np.diff(margins) > 0))

    def test_separable_floor(self):
        det = DetectorModel(0.9)
        triple = MeasuredTriple(-0.01, 0.3, 0.0)
        figure = WitnessConstants(c00=2 / 9, s=0.25, convention="paper-figure", separable_s=0.6)
        self.assertEqual(figure.certified_s, 0.6)
        result = certify(triple, figure, det, NONLINEAR)
        self.assertEqual(result.threshold, nonlinear_witness_threshold(2 / 9, 0.6, 0.0, 0.0, 0.3, 0.0, det))
        # a larger convention value is kept
        loose = WitnessConstants(c00=2 / 9, s=0.8, separable_s=0.6)
        self.assertEqual(certify(triple, loose, det, NONLINEAR).threshold,
                         nonlinear_witness_threshold(2 / 9, 0.8, 0.0, 0.0, 0.3, 0.0, det))
        # w_m between the two thresholds is only certified by the smaller normalization
        between = MeasuredTriple(0.2, 0.3, 0.0)
        self.assertEqual(certify(between, WitnessConstants(c00=2 / 9, s=0.25), det, NONLINEAR).verdict, ENTANGLED)
        self.assertEqual(certify(between, figure, det, NONLINEAR).verdict, INCONCLUSIVE)


class TestMinimumEfficiency(unittest.TestCase):
    def test_linear(self):
        eta = minimum_efficiency(MeasuredTriple(-0.6), BELL_CONSTANTS)
        self.assertAlmostEqual(eta, 0.25 / 0.85, places=14)
        self.assertEqual(certify(MeasuredTriple(-0.6), BELL_CONSTANTS, DetectorModel(eta + 1e-6)).verdict, ENTANGLED)
        self.assertEqual(certify(MeasuredTriple(-0.6), BELL_CONSTANTS, DetectorModel(eta - 1e-6)).verdict,
                         INCONCLUSIVE)
        self.assertIsNone(minimum_efficiency(MeasuredTriple(0.1), BELL_CONSTANTS))
        self.assertIsNone(minimum_efficiency(MeasuredTriple(0.0), BELL_CONSTANTS))

    def test_nonlinear(self):
        for triple in (MeasuredTriple(-0.1, 0.2, 0.1), MeasuredTriple(0.05, 0.3, 0.0), MeasuredTriple(0.3, 0.3, 0.3)):
            eta = minimum_efficiency(triple, BELL_CONSTANTS, NONLINEAR)
            self.assertIsNotNone(eta)
            self.assertAlmostEqual(certify(triple, BELL_CONSTANTS, DetectorModel(eta), NONLINEAR).margin, 0.0,
                                   places=12)
        self.assertIsNone(minimum_efficiency(MeasuredTriple(0.5, 0.1), BELL_CONSTANTS, NONLINEAR))

    def test_identity_offsets_rejected(self):
        constants = WitnessConstants(c00=0.25, s=0.5, c0h=0.1)
        self.assertRaises(PreconditionError, minimum_efficiency, MeasuredTriple(-0.1, 0.2), constants, NONLINEAR)

    def test_separable_floor(self):
        triple = MeasuredTriple(0.05, 0.3, 0.0)
        floored = WitnessConstants(c00=2 / 9, s=0.25, convention="paper-figure", separable_s=0.6)
        self.assertEqual(minimum_efficiency(triple, floored, NONLINEAR),
                         minimum_efficiency(triple, WitnessConstants(c00=2 / 9, s=0.6), NONLINEAR))


class TestWitnessConstants(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        phi = maximally_entangled_ket(3)
        cls.bell_witness = bell_witness()
        cls.bound_witness = nonlinear_extend(witness_from_map(choi_map(), phi), phi, adjacent_levels_ket(3))

    def test_bell(self):
        constants = WitnessConstants.from_nonlinear(self.bell_witness)
        self.assertAlmostEqual(constants.c00, 0.25, delta=1e-12)
        self.assertAlmostEqual(constants.s, 0.5, places=12)
        self.assertEqual(constants.convention, "schmidt")

    def test_bound_conventions(self):
        # both the Schmidt weight and the figure value sit below the separable bound of the Choi witness
        with self.assertWarns(UserWarning):
            schmidt = WitnessConstants.from_nonlinear(self.bound_witness)
        self.assertAlmostEqual(schmidt.c00, 2 / 9, delta=1e-10)
        self.assertAlmostEqual(schmidt.s, 0.5, places=12)
        self.assertEqual(schmidt.certified_s, self.bound_witness.s)
        with self.assertWarns(UserWarning):
            figure = WitnessConstants.from_nonlinear(self.bound_witness, "paper-figure", figure_s=0.25)
        self.assertEqual(figure.s, 0.25)
        self.assertEqual(figure.convention, "paper-figure")
        self.assertEqual(figure.certified_s, self.bound_witness.s)
        bound = WitnessConstants.from_nonlinear(self.bound_witness, "separable-bound")
        self.assertAlmostEqual(bound.s, self.bound_witness.s)
        self.assertRaises(PreconditionError, WitnessConstants.from_nonlinear, self.bound_witness, "paper-figure")
        self.assertRaises(ValueError, WitnessConstants.from_nonlinear, self.bound_witness, "largest")

    def test_alias(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            constants = WitnessConstants.from_nonlinear(self.bound_witness, "published", figure_s=0.25)
        self.assertEqual(constants.convention, "paper-figure")

    def test_bell_has_no_gap(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            constants = WitnessConstants.from_nonlinear(self.bell_witness, "paper-figure", figure_s=0.5)
        self.assertAlmostEqual(constants.certified_s, 0.5, places=12)


class TestSurfaces(unittest.TestCase):
    etas = (0.4, 0.6, 0.8, 1.0)
    xnls = (0.0, 0.25, 0.5, 1.0)

    def check_surface(self, constants, prefactor):
        rows = surface_grid(constants, (0.4, 1.0, 4), (0.0, 1.0, 5))
        values = {(round(row["eta_minus"], 12), round(row["x_nl"], 12)): row["boundary_w_m"] for row in rows}
        for eta in self.etas:
            for x_nl in self.xnls:
                expected = constants.c00 * (1 - 1 / eta) + prefactor * eta * x_nl ** 2
                self.assertAlmostEqual(values[(eta, x_nl)], expected, delta=1e-12)
        self.assertAlmostEqual(values[(1.0, 0.0)], 0.0, delta=1e-15)

    def test_bell_surface(self):
        self.check_surface(BELL_CONSTANTS, 2.0)
        rows = surface_grid(BELL_CONSTANTS, (1 / 3, 1 / 3, 1), (0.0, 0.0, 1))
        self.assertAlmostEqual(rows[0]["boundary_w_m"], -0.5, delta=1e-15)

    def test_bound_surface(self):
        self.check_surface(WitnessConstants(c00=2 / 9, s=0.25, convention="paper-figure"), 4.0)
        self.check_surface(WitnessConstants(c00=2 / 9, s=0.5), 2.0)
        rows = surface_grid(WitnessConstants(c00=2 / 9, s=0.25, convention="paper-figure"), (1, 1, 1), (1, 1, 1))
        self.assertAlmostEqual(rows[0]["boundary_w_m"], 4.0, delta=1e-12)
        self.assertEqual(rows[0]["constant_convention"], "paper-figure")
        # the surface draws the convention value even when verdicts use a larger one
        floored = WitnessConstants(c00=2 / 9, s=0.25, convention="paper-figure", separable_s=0.6)
        self.check_surface(floored, 4.0)

    def test_nonlinear_beats_linear(self):
        nonlinear = surface_grid(BELL_CONSTANTS, (0.01, 1.0, 50), (0.0, 1.0, 21))
        linear = surface_grid(BELL_CONSTANTS, (0.01, 1.0, 50), (0.0, 1.0, 21), mode=LINEAR)
        for row, reference in zip(nonlinear, linear):
            if row["x_nl"] > 0:
                self.assertGreater(row["boundary_w_m"], reference["boundary_w_m"])
            else:
                self.assertEqual(row["boundary_w_m"], reference["boundary_w_m"])

    def test_components(self):
        constants = WitnessConstants(c00=0.25, s=0.5, c0h=0.1)
        self.assertRaises(PreconditionError, surface_grid, constants, (0.5, 1.0, 2), (0.0, 1.0, 2))
        rows = surface_grid_components(constants, (0.5, 1.0, 2), (-0.2, 0.2, 3), (0.0, 0.3, 2))
        self.assertEqual(len(rows), 12)
        for row in rows:
            det = DetectorModel(row["eta_minus"])
            expected = nonlinear_witness_threshold(0.25, 0.5, 0.1, 0.0, row["h_m"], row["a_m"], det)
            self.assertEqual(row["boundary_w_m"], expected)

    def test_bad_grids(self):
        self.assertRaises(ValueError, surface_grid, BELL_CONSTANTS, (0.0, 1.0, 3), (0.0, 1.0, 3))
        self.assertRaises(ValueError, surface_grid, BELL_CONSTANTS, (0.5, 1.2, 3), (0.0, 1.0, 3))
        self.assertRaises(ValueError, surface_grid, BELL_CONSTANTS, (0.5, 1.0, 0), (0.0, 1.0, 3))
        self.assertRaises(ValueError, surface_grid, BELL_CONSTANTS, (0.5, 1.0, 3), (-0.1, 1.0, 3))
        self.assertRaises(ValueError, surface_grid, BELL_CONSTANTS, (0.5, 1.0, 3), (0.0, 1.0, 3), "cubic")


class TestSimulateClicks(unittest.TestCase):
    def test_perfect_detector(self):
        rho = werner(0.9)
        record, mean = simulate_clicks(rho, ZZ, 10 ** 6, DetectorModel(1.0), seed=0)
        self.assertEqual(record.nominal_loss, 0)
        self.assertEqual(record.total_detected, 10 ** 6)
        self.assertLess(abs(mean - rho.expectation(ZZ).real), 5 * record.standard_error)

    def test_scaling_law(self):
        for rho, observable in ((werner(0.9), XX), (werner(0.6), ZZ)):
            true_value = rho.expectation(observable).real
            for eta in (0.5, 0.8):
                outside = 0
                for seed in range(10):
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        record, mean = simulate_clicks(rho, observable, 10 ** 6, DetectorModel(eta), seed=seed)
                    deviation = abs(mean - true_value / eta)
                    self.assertLessEqual(deviation, 5 * record.standard_error)
                    outside += deviation > 3 * record.standard_error
                self.assertLessEqual(outside, 1)

    def test_nominal_loss(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            record, _ = simulate_clicks(werner(0.6), ZZ, 10 ** 6, DetectorModel(0.8), seed=1)
        self.assertEqual(record.nominal_loss, 50000)
        self.assertEqual(record.deficit, 0)
        self.assertAlmostEqual(record.eta_realized, 0.8, places=12)
        np.testing.assert_array_equal(record.lost_counts, np.full(4, 50000))

    def test_deficit_warning(self):
        # P(+1) is 0.05 for werner(0.9) and XX, far below a loss of 1/8 per outlet
        with self.assertWarns(UserWarning):
            record, _ = simulate_clicks(werner(0.9), XX, 10 ** 5, DetectorModel(0.5), seed=2)
        self.assertGreater(record.deficit, 0)
        np.testing.assert_array_equal(record.lost_counts, np.minimum(record.true_counts, record.nominal_loss))

    def test_bernoulli(self):
        rho = werner(0.6)
        record, mean = simulate_clicks(rho, ZZ, 10 ** 6, DetectorModel(0.5), seed=3, loss_model="bernoulli")
        self.assertLess(abs(mean - rho.expectation(ZZ).real), 5 * record.standard_error)
        self.assertAlmostEqual(record.eta_realized, 0.5, delta=0.005)
        self.assertEqual(record.to_document()["loss_model"], "bernoulli")

    def test_determinism(self):
        first, mean = simulate_clicks(werner(0.6), ZZ, 10 ** 4, DetectorModel(0.8), seed=7)
        second, again = simulate_clicks(werner(0.6), ZZ, 10 ** 4, DetectorModel(0.8), seed=7)
        np.testing.assert_array_equal(first.true_counts, second.true_counts)
        self.assertEqual(mean, again)
        self.assertEqual(first.to_document(), second.to_document())

    def test_validation(self):
        det = DetectorModel(0.5)
        self.assertRaises(PreconditionError, simulate_clicks, werner(0.5), np.eye(4), 100, det)
        self.assertRaises(PreconditionError, simulate_clicks, werner(0.5), ZZ, 0, det)
        self.assertRaises(PreconditionError, simulate_clicks, werner(0.5), PAULI[3], 100, det)
        self.assertRaises(ValueError, simulate_clicks, werner(0.5), ZZ, 100, det, 0, "poisson")


class TestSoundness(unittest.TestCase):
    def test_linear_pipeline(self):
        witness = witness_from_ppt(bell("phi+"))
        rng = np.random.default_rng(11)
        for trial in range(1000):
            rho = random_density_matrix((2, 2), rng) if trial % 2 else random_product_state(rng)
            det = DetectorModel(float(rng.uniform(0.05, 1.0)))
            result = certify(measured_triple_from_state(witness, rho, det), BELL_CONSTANTS, det)
            if eval_linear(witness, rho) >= 0:
                self.assertFalse(result.entangled)

    def test_nonlinear_pipeline(self):
        witness = bell_witness()
        constants = WitnessConstants.from_nonlinear(witness)
        rng = np.random.default_rng(12)
        for trial in range(1000):
            rho = random_density_matrix((2, 2), rng) if trial % 2 else random_product_state(rng)
            det = DetectorModel(float(rng.uniform(0.05, 1.0)))
            result = certify(measured_triple_from_state(witness, rho, det), constants, det, NONLINEAR)
            if eval_nonlinear(witness, rho) >= 0:
                self.assertFalse(result.entangled)

    def test_bound_nonlinear_pipeline(self):
        phi = maximally_entangled_ket(3)
        witness = nonlinear_extend(witness_from_map(choi_map(), phi), phi, adjacent_levels_ket(3))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            conventions = [WitnessConstants.from_nonlinear(witness),
                           WitnessConstants.from_nonlinear(witness, "paper-figure", figure_s=0.25),
                           WitnessConstants.from_nonlinear(witness, "separable-bound")]
        rng = np.random.default_rng(13)
        for trial in range(1000):
            # product states are where a too small normalization goes wrong
            rho = random_density_matrix((3, 3), rng) if trial % 2 else random_product_state(rng, (3, 3))
            det = DetectorModel(float(rng.uniform(0.05, 1.0)))
            triple = measured_triple_from_state(witness, rho, det)
            if eval_nonlinear(witness, rho) >= 0:
                for constants in conventions:
                    self.assertFalse(certify(triple, constants, det, NONLINEAR).entangled)

    def test_measured_triple(self):
        witness = bell_witness()
        det = DetectorModel(0.5)
        triple = measured_triple_from_state(witness, werner(0.8), det)
        self.assertAlmostEqual(triple.w_m, 0.25 * (1 - 2) + 2 * (1 - 3 * 0.8) / 4, places=12)
        self.assertAlmostEqual(triple.x_nl, 0.0, places=12)
        # the linear and nonlinear verdicts agree with the ideal values divided by eta
        result = certify(triple, WitnessConstants.from_nonlinear(witness), det, NONLINEAR)
        self.assertAlmostEqual(result.margin, -eval_nonlinear(witness, werner(0.8)) / 0.5, places=12)
        self.assertTrue(math.isclose(measured_triple_from_state(witness.linear, werner(0.8), det).w_m, triple.w_m))


if __name__ == '__main__':
    unittest.main()
