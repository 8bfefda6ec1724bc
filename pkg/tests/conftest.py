import pytest

from negcluster import make_category

# the three desk-scale parameter points used by the exhaustive suites
DESK_PARAMS = [(2, 2), (3, 2), (2, 3)]


@pytest.fixture
def p32():
    return make_category(3, 2)


@pytest.fixture
def p23():
    return make_category(2, 3)


@pytest.fixture(params=DESK_PARAMS, ids=lambda ew: f"e{ew[0]}w{ew[1]}")
def desk_params(request):
    return make_category(*request.param)
