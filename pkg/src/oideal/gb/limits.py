"""Resource guards for Groebner computations."""

from __future__ import annotations

import contextlib
import contextvars
import time
from dataclasses import dataclass, replace


class ResourceLimitError(RuntimeError):
    """A configured limit fired; the computation was abandoned, never truncated."""

    def __init__(self, limit: str, value):
        super().__init__(f"resource limit exceeded: {limit} ({value})")
        self.limit = limit
        self.value = value


@dataclass(frozen=True)
class Limits:
    max_basis: int = 20000
    max_pairs: int = 2_000_000
    max_bits: int = 1_000_000
    max_degree: int = 4000
    deadline: float | None = None  # time.monotonic() value

    def with_timeout(self, seconds: float | None) -> "Limits":
        if seconds is None:
            return self
        return replace(self, deadline=time.monotonic() + seconds)

    def check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitError("timeout", "deadline passed")


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("oideal_limits", default=Limits())


def current_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def resource_limits(**overrides):
    """Temporarily tighten or relax limits, e.g. ``with resource_limits(max_pairs=10): ...``."""
    timeout = overrides.pop("timeout_s", None)
    limits = replace(_current.get(), **{k: v for k, v in overrides.items() if v is not None})
    limits = limits.with_timeout(timeout)
    token = _current.set(limits)
    try:
        yield limits
    finally:
        _current.reset(token)
