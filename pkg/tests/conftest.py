import os
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def rationals(max_num=10**6, max_den=10**6, nonzero=False):
    nums = st.integers(-max_num, max_num)
    if nonzero:
        nums = nums.filter(bool)
    return st.builds(Fraction, nums, st.integers(1, max_den))


def coprime_rationals(p, max_num=10**6, max_den=10**6):
    """Rationals whose denominator is prime to p."""
    return st.builds(
        Fraction, st.integers(-max_num, max_num),
        st.integers(1, max_den).filter(lambda d: d % p != 0))


@pytest.fixture
def rng():
    return random.Random(20261018)
