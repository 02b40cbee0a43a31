"""Renormalized append-rule multiway system and its Pauli-X qubit limit."""

from .continuum import Matrix2c, exact_solution, expm_2x2, expm_limit, l2_error, schrodinger_residual
from .gaussian import GaussianInt
from .harness import (
    ConvergenceRecord,
    SweepConfig,
    export_multiway_dot,
    fit_convergence_rate,
    run_convergence_sweep,
)
from .kernels import BACKEND
from .multiway import CapExceeded, ModelConfig, MultiwayLevel, Word, enumerate_level, level_edges, successors
from .renormalization import QubitTerm, RenormalizedRule, coarse_grain, count_marked, renormalized_ruleset
from .templates import (
    TemplateVector,
    WaveFunction,
    class_multiplicity,
    normalize_template,
    template_binomial,
    template_bruteforce,
    template_closedform,
    template_recurrence,
)

__version__ = "0.1.0"
