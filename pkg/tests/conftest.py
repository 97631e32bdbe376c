from __future__ import annotations

import pytest

from sperndeg import kernels


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request, monkeypatch):
    """Run a test once per available kernel implementation."""
    monkeypatch.setattr(kernels, "_impl", kernels.backends()[request.param])
    return request.param
