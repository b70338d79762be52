import pytest

import theta_monad as tmo


def test_chern_arithmetic():
    assert tmo.chi_rank2(2, 4) == -4
    assert tmo.existence_gate(2, 4) == "EXISTS"
    assert tmo.existence_gate(2, 2) == "BOUNDARY_SEMIHOMOGENEOUS"
    assert tmo.existence_gate(1, 2) == "UNKNOWN_HALF"
    assert tmo.ext1_dim_formula(2, 4) == 13
    assert tmo.twist(2, 4, -1) == (0, 2)
    with pytest.raises(tmo.NonIntegralChi):
        tmo.chi_rank2(1, 1)


def test_exact_rank():
    assert tmo.rank([["1", "2"], ["2", "4"]]) == 1
    assert tmo.kernel_dim([["1", "1", "0"]]) == 2
    assert tmo.rank([["1/3", "1"], ["1", "3"]]) == 1


def test_model_and_monad():
    model = tmo.sample_model(3, 1)
    assert model.N == 3
    assert all(ok for _, ok in model.genericity())
    again = tmo.model_from_json(model.to_json())
    assert again.to_json() == model.to_json()

    monad = tmo.build_decomposable(model)
    assert monad.shape == (2, 6, 2)
    assert all(ok for _, ok in tmo.validate_monad(monad))
    assert tmo.chern_of_cohomology(monad) == (0, 4)
    assert tmo.chain_maps_dim(monad, monad, 0) == 1
    assert tmo.chain_maps_dim(monad, monad, 1) == 15
    assert tmo.ob_well_defined(monad, 1, 10)

    with pytest.raises(ValueError):
        tmo.build_decomposable(tmo.sample_model(2, 1), ["0", "1", "1", "1"])


def test_sampling_budget():
    with pytest.raises(tmo.SamplingExhausted):
        tmo.sample_model(2, 1, 0)


@pytest.mark.parametrize("n", [2, 3])
def test_hyperext_report(n):
    r = tmo.hyperext_report(n, 2)
    assert r["ext_dims"] == [1, 8 * n - 3, 8 * n - 3, 1]
    assert r["degenerate"] and r["formula_match"]
    assert r["ob_kernel"] == 7 * n - 2
    assert r == tmo.hyperext_report(n, 2)


def test_existence_and_moduli():
    t = tmo.existence_table((0, 4), (0, 10))
    assert len(t["cells"]) == 55
    with pytest.raises(ValueError):
        tmo.existence_table((3, 2), (0, 1))
    d = tmo.moduli_dims()
    assert (d["T"], d["P"], d["G_order"]) == (12, 13, 8)
    assert tmo.gamma_normal_form(["2", "3", "1", "6"]) == ("1/1", "1/1")
    rep = tmo.moduli2_report(seed=1, trials=6)
    assert rep["sweep"]["agreements"] == 6
