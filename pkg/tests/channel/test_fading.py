import numpy as np
import pytest

from scalloc.channel import ChannelSampler, FadingSpec, sample_block, user_generators
from scalloc.errors import ContractViolationError


def test_deterministic_fading():
    specs = [FadingSpec(2.0, "deterministic"), FadingSpec(5.0, "deterministic")]
    sampler = ChannelSampler(specs, seed=1)
    for _ in range(3):
        np.testing.assert_array_equal(sampler.sample_block().snr, [2.0, 5.0])


@pytest.mark.parametrize("mean_snr", [0.0, -1.0, float("inf"), float("nan")])
def test_invalid_mean(mean_snr):
    with pytest.raises(ContractViolationError):
        FadingSpec(mean_snr)


def test_same_seed_same_draws():
    specs = [FadingSpec(1.0), FadingSpec(10.0)]
    a = ChannelSampler(specs, seed=11)
    b = ChannelSampler(specs, seed=11)
    c = ChannelSampler(specs, seed=12)
    draws_a = np.stack([a.sample_block().snr for _ in range(5)])
    draws_b = np.stack([b.sample_block().snr for _ in range(5)])
    draws_c = np.stack([c.sample_block().snr for _ in range(5)])
    np.testing.assert_array_equal(draws_a, draws_b)
    assert not np.any(draws_a == draws_c)


def test_sampler_matches_block_sampling():
    specs = [FadingSpec(1.0), FadingSpec(3.0), FadingSpec(0.5)]
    sampler = ChannelSampler(specs, seed=5, chunk_size=7)
    rngs = user_generators(5, len(specs))
    for _ in range(20):
        np.testing.assert_allclose(
            sampler.sample_block().snr, sample_block(specs, rngs).snr, rtol=1e-15
        )


def test_user_streams_are_independent_of_population():
    # adding a user leaves the others' draws unchanged
    small = ChannelSampler([FadingSpec(1.0)], seed=2)
    large = ChannelSampler([FadingSpec(1.0), FadingSpec(4.0)], seed=2)
    for _ in range(10):
        assert small.sample_block().snr[0] == large.sample_block().snr[0]


def test_mean_scaling():
    # a user's draws scale with its mean SNR
    low = ChannelSampler([FadingSpec(1.0)], seed=9)
    high = ChannelSampler([FadingSpec(8.0)], seed=9)
    for _ in range(10):
        assert high.sample_block().snr[0] == pytest.approx(
            8.0 * low.sample_block().snr[0], rel=1e-14
        )


def test_exponential_mean():
    sampler = ChannelSampler([FadingSpec(2.0)], seed=0)
    draws = np.array([sampler.sample_block().snr[0] for _ in range(20000)])
    assert np.all(draws >= 0)
    # standard error of the mean is 2 / sqrt(20000) ~ 0.014
    assert draws.mean() == pytest.approx(2.0, abs=0.07)


def test_exponential_tail_and_variance():
    rngs = user_generators(3, 1)
    draws = np.array(
        [sample_block([FadingSpec(1.0)], rngs).snr[0] for _ in range(20000)]
    )
    # P(snr > 1) = exp(-1) for a unit mean, standard error ~ 0.0034
    assert np.mean(draws > 1.0) == pytest.approx(np.exp(-1.0), abs=0.015)
    # variance of an exponential law is its squared mean, standard error ~ 0.02
    assert draws.var() == pytest.approx(1.0, abs=0.1)


def test_users_are_uncorrelated():
    sampler = ChannelSampler([FadingSpec(1.0), FadingSpec(5.0)], seed=7)
    draws = np.stack([sampler.sample_block().snr for _ in range(200000)])
    # standard error of the sample correlation is ~ 0.0022
    assert abs(np.corrcoef(draws.T)[0, 1]) < 0.01


def test_length_mismatch():
    with pytest.raises(ContractViolationError):
        sample_block([FadingSpec(1.0)], user_generators(0, 2))


def test_empty_population():
    with pytest.raises(ContractViolationError):
        ChannelSampler([], seed=0)
