import pytest

from rule150 import _backend


def _backends():
    params = [pytest.param(_backend.pure, id="pure")]
    if _backend.compiled is not None:
        params.append(pytest.param(_backend.compiled, id="compiled"))
    return params


@pytest.fixture(params=_backends())
def kernels(request):
    """Run the test once per available kernel backend."""
    with _backend.using(request.param):
        yield request.param
