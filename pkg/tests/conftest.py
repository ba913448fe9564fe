import pytest

from mvmlab import equation, find_model, holds, lukasiewicz_mvm, var
from mvmlab.mvm import corpus_algebras, oplus
from mvmlab.search import SearchProblem


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    """Compile the jit kernels once so timed tests measure the work,
    not the compiler."""
    m = lukasiewicz_mvm(2)
    x, y = var(0), var(1)
    holds(m.base, equation(oplus(x, y), oplus(y, x)))
    find_model(SearchProblem(
        satisfy=(equation(oplus(x, y), oplus(y, x)),), sizes=(1, 1)))


@pytest.fixture(scope="session")
def corpus():
    return corpus_algebras()


@pytest.fixture()
def l3():
    return lukasiewicz_mvm(3)
