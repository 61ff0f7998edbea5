from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verification:
    """Outcome of an identity check on a finite truncation.

    Truthy exactly when the identity held everywhere in ``certified``, a
    human-readable description of the index range that was examined.  On
    failure ``witness`` holds the first violating index (an ``int`` for
    polynomial families, an ``(i, l, n)`` tuple for matrices).
    """

    ok: bool
    certified: str
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"verified {self.certified}"
        return f"violated at {self.witness} (checked {self.certified})"
