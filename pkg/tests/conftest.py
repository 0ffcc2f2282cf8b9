import pytest
from hypothesis import strategies as st

from tfstar.prism import PrismKind
from tfstar.rep import VirtualRep


@pytest.fixture(params=[PrismKind.TRANSVERSAL, PrismKind.CRYSTALLINE], ids=["trans", "crys"])
def kind(request):
    return request.param


def reps(max_len=6, max_coeff=4, max_dinf=3, shifts=(0, -1)):
    """Hypothesis strategy over small gradings."""
    return st.builds(
        VirtualRep,
        st.lists(st.integers(-max_coeff, max_coeff), min_size=1, max_size=max_len).map(tuple),
        st.integers(-max_dinf, max_dinf),
        st.sampled_from(shifts),
    )
