import hypothesis
import pytest

from univpow.words import make_word

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture
def w_babc():
    return make_word("babccaabc")
