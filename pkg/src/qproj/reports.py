"""Structured pass/fail records produced by the verification routines.

Every check in the package reports through the same six-field record so
that machine output (one JSON object per line) stays uniform across
modules.  ``params`` identifies the check instance; ``counterexample``
is None on success and a small JSON-ready dict on failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class VerifyReport:
    check: str
    params: dict = field(default_factory=dict)
    passed: bool = True
    domain_size: Optional[int] = None
    image_size: Optional[int] = None
    counterexample: Optional[Any] = None

    def to_json(self):
        return {
            "check": self.check,
            "params": dict(self.params),
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "pass": self.passed,
            "counterexample": self.counterexample,
        }

    def line(self):
        """One human-readable line, e.g. for a terminal summary."""
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        sizes = ""
        if self.domain_size is not None:
            sizes = f" [{self.domain_size}"
            sizes += f"->{self.image_size}]" if self.image_size is not None else "]"
        return f"{status} {self.check} {params}{sizes}".rstrip()
