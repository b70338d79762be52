"""Exact computations for rank-2 monads on principally polarized abelian threefolds."""

import json

from ._core import (
    GenericityError,
    GenericModel,
    Monad,
    NonIntegralChi,
    SamplingExhausted,
    __version__,
    build_decomposable,
    chain_maps_dim,
    chern_of_cohomology,
    chi_rank2,
    discriminant_dot_theta,
    existence_gate,
    ext1_dim_formula,
    gamma_normal_form,
    kernel_dim,
    model_from_json,
    moduli_dims,
    ob_well_defined,
    rank,
    sample_model,
    twist,
    validate_monad,
)
from . import _core


def hyperext_report(N, seed):
    """Spectral sequence report for the decomposable monad over a sampled model."""
    return json.loads(_core._hyperext_report(sample_model(N, seed)))


def existence_table(m_range=(-6, 6), n_range=(0, 40)):
    return json.loads(_core._existence_table(m_range[0], m_range[1], n_range[0], n_range[1]))


def moduli2_report(seed=1, trials=100):
    return json.loads(_core._moduli2_report(seed, trials))
