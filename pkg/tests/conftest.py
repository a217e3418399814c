import pytest

from qubrute import SolveConfig, random_instance, solve_incremental, solve_naive, solve_parallel


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation once so individual tests measure only their own work."""
    small = random_instance(5, seed=0)
    solve_naive(small)
    solve_incremental(small)
    solve_parallel(small, SolveConfig(threads=2, fixed_bits=1))
