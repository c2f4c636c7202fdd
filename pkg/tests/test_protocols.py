import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from icausal.core.errors import ChannelError, CorpusError, DimensionError
from icausal.domains.protocols import (
    BELL_TABLE, apply_directly, bell_branches, channel_result, corpus_from_dict, discriminate_bell,
    discriminate_global, entangle_2ics, entangle_result, gram_matrix, implement_nonlocal_channel, is_product,
    load_corpus, nlwe_result, ppt_report, reduce_nlwe, smolin_density, unlock_smolin, validate_corpus,
)
from icausal.domains.protocols.nlwe import REGROUP
from icausal.domains.qcore import (
    I2, SIGMA_X, SIGMA_Z, SWAP, KrausChannel, PureState, bell_state, fidelity, ket, permute, plus_state,
    random_channel, random_density, random_state, trace_distance,
)

seeds = st.integers(min_value=0, max_value=2 ** 32)
TOL = 1e-10


class TestEntangle:
    def test_basis_inputs_give_bell_pair(self):
        plus, minus = entangle_2ics(I2, SIGMA_X, ket(2, 0), ket(2, 0))
        assert plus.probability == pytest.approx(0.5)
        assert fidelity(plus.state, bell_state(3)) == pytest.approx(1.0)
        assert fidelity(minus.state, bell_state(4)) == pytest.approx(1.0)
        assert plus.entropy == pytest.approx(1.0)

    def test_plus_inputs_with_phase_gate(self):
        outcomes = entangle_2ics(I2, SIGMA_Z, plus_state(), plus_state())
        assert [o.probability for o in outcomes] == pytest.approx([0.5, 0.5])
        assert all(o.entropy == pytest.approx(1.0) for o in outcomes)

    def test_commuting_case_has_null_branch(self):
        # U1 = U2 时两个分支相同，− 结果概率为 0
        plus, minus = entangle_2ics(SIGMA_X, SIGMA_X, ket(2, 0), ket(2, 1))
        assert plus.probability == pytest.approx(1.0)
        assert minus.is_null

    def test_result_matches_direct_formula(self):
        result = entangle_result(I2, SIGMA_X, plus_state(), ket(2, 0))
        assert result.min_branch_fidelity == pytest.approx(1.0)
        assert result.probability_sum == pytest.approx(1.0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            entangle_2ics(I2, SIGMA_X, random_state((3,), 0), ket(2, 0))


class TestBell:
    @pytest.mark.parametrize("secret, charlie, same", [(1, "+", False), (2, "-", False), (3, "+", True), (4, "-", True)])
    def test_outcome_pattern(self, secret, charlie, same):
        result = bell_branches(secret)
        assert result.probability_sum == pytest.approx(1.0)
        for branch in result.live_branches:
            assert branch.outcomes[0] == charlie
            assert (branch.outcomes[1] == branch.outcomes[2]) == same
            assert branch.extra["identified"] == secret
        assert BELL_TABLE[(charlie, same)] == secret

    @pytest.mark.parametrize("secret", [1, 2, 3, 4])
    @pytest.mark.parametrize("seed", [0, 1])
    def test_sampled_discrimination(self, secret, seed):
        identified, transcript = discriminate_bell(secret, seed)
        assert identified == secret
        assert transcript.entries[-1].outcome == f"B{secret}"

    def test_invalid_index(self):
        with pytest.raises(DimensionError):
            bell_branches(5)


class TestSmolin:
    def test_state_is_ppt_on_every_cut(self):
        for value in ppt_report(smolin_density()).values():
            assert value >= -TOL

    def test_unlocks_one_ebit(self):
        result = unlock_smolin()
        assert result.probability_sum == pytest.approx(1.0)
        assert result.min_branch_fidelity >= 1 - TOL
        assert result.extra["ebits"] == pytest.approx(1.0)
        assert result.extra["identified_all"]
        assert all(result.extra["ppt"].values())

    def test_dan_correction_per_bell_state(self):
        corrections = {b.outcomes[0]: b.correction for b in unlock_smolin().branches}
        assert corrections == {"B1": "I", "B2": "σz", "B3": "σx", "B4": "iσy"}


class TestNlwe:
    def test_default_corpus(self):
        corpus = load_corpus()
        assert len(corpus.states) == 4
        np.testing.assert_allclose(gram_matrix(corpus.states), np.eye(4), atol=1e-12)
        assert all(is_product(s) for s in corpus.states)

    def test_reduction_preserves_orthogonality(self):
        corpus = load_corpus()
        reduced = reduce_nlwe(corpus.states)
        assert all(r.dims == (2, 2, 2) for r in reduced)
        np.testing.assert_allclose(gram_matrix(reduced), np.eye(4), atol=TOL)
        for state, r in zip(corpus.states, reduced):
            assert fidelity(r, permute(state, REGROUP)) == pytest.approx(1.0)
        np.testing.assert_allclose(np.diag(discriminate_global(reduced)), np.ones(4), atol=TOL)

    def test_result_report(self):
        result = nlwe_result(load_corpus())
        assert result.min_branch_fidelity >= 1 - TOL
        assert result.extra["success_probability"] == pytest.approx(1.0)
        assert result.extra["gram_deviation_after"] <= TOL

    def test_non_orthogonal_corpus_rejected(self):
        entry = {"label": "x", "factors": [[[1, 0], [0, 0]], [[1, 0], [0, 0]], [[1, 0], [0, 0]]]}
        with pytest.raises(CorpusError):
            corpus_from_dict({"name": "dup", "states": [entry, dict(entry, label="y")]})

    def test_malformed_corpus_rejected(self):
        with pytest.raises(CorpusError):
            corpus_from_dict({"states": [{"label": "x"}]})

    def test_entangled_member_rejected(self):
        ghz = PureState.from_vector((2, 2, 2), [1, 0, 0, 0, 0, 0, 0, 1])
        assert not is_product(ghz)
        with pytest.raises(CorpusError):
            validate_corpus([ghz])


class TestChannel:
    def test_identity_channel(self):
        rho = random_density((2, 3), 1)
        out = implement_nonlocal_channel(rho, KrausChannel(6, 6, (np.eye(6),)))
        assert trace_distance(out, rho) < TOL

    def test_swap_on_basis_state(self):
        rho = PureState.basis_state((2, 2), (0, 1)).density()
        out = implement_nonlocal_channel(rho, KrausChannel.from_unitary(SWAP))
        target = PureState.basis_state((2, 2), (1, 0)).density()
        assert trace_distance(out, target) < TOL

    @settings(max_examples=10, deadline=None)
    @given(seed=seeds, n_kraus=st.integers(min_value=1, max_value=4))
    def test_random_channels(self, seed, n_kraus):
        rho = random_density((2, 3), seed)
        channel = random_channel(6, n_kraus, seed + 1)
        out = implement_nonlocal_channel(rho, channel)
        assert trace_distance(out, apply_directly(rho, channel)) < TOL

    def test_non_trace_preserving_output_renormalized(self):
        rho = random_density((2, 2), 3)
        channel = KrausChannel(4, 4, (0.5 * np.eye(4),))
        out = implement_nonlocal_channel(rho, channel)
        assert trace_distance(out, rho) < TOL
        assert not channel_result(rho, channel).extra["trace_preserving"]

    def test_report_branches(self):
        rho = random_density((2, 2), 5, rank=2)
        result = channel_result(rho, KrausChannel.from_unitary(SWAP))
        assert result.probability_sum == pytest.approx(1.0)
        assert len(result.branches) == 8
        assert result.extra["trace_distance"] < TOL

    def test_dimension_checks(self):
        with pytest.raises(DimensionError):
            implement_nonlocal_channel(random_density((3, 2), 0), KrausChannel(6, 6, (np.eye(6),)))
        with pytest.raises(ChannelError):
            implement_nonlocal_channel(random_density((2, 2), 0), KrausChannel(2, 2, (np.eye(2),)))

    def test_vanishing_output_rejected(self):
        rho = PureState.basis_state((2, 2), (0, 0)).density()
        kill = np.zeros((4, 4))
        kill[1, 1] = 1.0
        with pytest.raises(ChannelError):
            implement_nonlocal_channel(rho, KrausChannel(4, 4, (kill,)))
