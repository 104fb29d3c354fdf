"""Shared numerical tolerances.

``eig`` is the accuracy target of the eigensolver; ``compare`` is used for
every downstream equality or inequality decision. Override both for a block
of code with :func:`tolerances`.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace
from typing import Iterator, Optional


@dataclass(frozen=True)
class Tolerances:
    eig: float = 1e-9
    compare: float = 1e-7

    def __post_init__(self) -> None:
        if not (self.eig > 0 and self.compare > 0):
            raise ValueError("tolerances must be positive")


_current: ContextVar[Tolerances] = ContextVar("conebound_tolerances", default=Tolerances())


def current() -> Tolerances:
    return _current.get()


def compare_tol(tol: Optional[float] = None) -> float:
    if tol is None:
        return _current.get().compare
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return tol


@contextmanager
def tolerances(**overrides: float) -> Iterator[Tolerances]:
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
