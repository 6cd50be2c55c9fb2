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
"""Tolerances, conventions and run configuration shared by every module"""

from dataclasses import dataclass, field, asdict
from typing import Optional

# how the nonlinear normalization `s` is picked for loophole constants
S_CONVENTIONS = ("schmidt", "paper-figure", "separable-bound")

# older spelling still accepted on the command line
CONVENTION_ALIASES = {"published": "paper-figure"}

OUTPUT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used across the package.

    :param
      structural: Hermiticity, unit trace and positivity checks.
    :param
      reconstruction: decomposition round trip and ket normalization.
    :param
      jacobi: stop when the off-diagonal Frobenius norm falls below this (relative to the matrix norm).
    :param
      positivity: allowed negativity of sampled witness values on product states.
    :param
      max_sweeps: cap on cyclic Jacobi sweeps.
    """

    structural: float = 1e-10
    reconstruction: float = 1e-12
    jacobi: float = 1e-14
    positivity: float = 1e-8
    max_sweeps: int = 100

    def __post_init__(self):
        for name in ("structural", "reconstruction", "jacobi", "positivity"):
            if not getattr(self, name) > 0:
                raise ValueError("`%s` tolerance needs to be positive!" % name)
        if self.max_sweeps < 1:
            raise ValueError("`max_sweeps` needs to be at least 1!")

    def scaled(self, factor):
        """Copy with every floating tolerance multiplied by `factor` (the `--tol` knob)."""
        return Tolerances(structural=self.structural * factor,
                          reconstruction=self.reconstruction * factor,
                          jacobi=self.jacobi,
                          positivity=self.positivity * factor,
                          max_sweeps=self.max_sweeps)


DEFAULT_TOLERANCES = Tolerances()


def resolve_convention(name):
    """Canonical name of an `s` convention, following `CONVENTION_ALIASES`.

    :param
      name: convention name or alias.
    :return:
      one of `S_CONVENTIONS`.
    """

    # map the alias first
    name = CONVENTION_ALIASES.get(name, name)
    if name not in S_CONVENTIONS:
        raise ValueError("`s_convention=%s` is not in the supported conventions: %s"
                         % (str(name), str(S_CONVENTIONS)))
    return name


def resolve_tolerances(tol=None):
    """Return `tol` or the package default when it is None."""
    if tol is None:
        return DEFAULT_TOLERANCES
    if not isinstance(tol, Tolerances):
        raise TypeError("`tol` needs to be a Tolerances record, got %s!" % type(tol).__name__)
    return tol


@dataclass
class RunConfig:
    """Everything a command line run needs besides its subcommand arguments."""

    tolerances: Tolerances = field(default_factory=Tolerances)
    s_convention: str = "schmidt"
    seed: int = 0
    out: Optional[str] = None
    output_format: str = "csv"
    log_file: Optional[str] = None
    verbose: bool = False

    def __post_init__(self):
        self.s_convention = resolve_convention(self.s_convention)
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError("`output_format=%s` is not in the supported formats: %s"
                             % (self.output_format, str(OUTPUT_FORMATS)))

    def metadata(self):
        """Header information written into every output file."""
        # local import keeps `configuration` importable from `__init__`
        from . import __version__
        return {"version": __version__,
                "s_convention": self.s_convention,
                "seed": self.seed,
                "tolerances": asdict(self.tolerances)}
