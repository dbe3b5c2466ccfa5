import pytest

from whittaker_mono.backends import get_backend


@pytest.fixture(scope="session", autouse=True)
def warm_backend():
    """Compile JIT kernels (if the numba backend is active) outside any
    timed assertion."""
    backend = get_backend()
    if hasattr(backend, "warmup"):
        backend.warmup()
    return backend
