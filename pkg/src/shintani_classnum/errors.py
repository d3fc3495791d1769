"""Exception type shared by every module; ``code`` carries a stable reason string."""

from __future__ import annotations


class ShintaniError(Exception):
    def __init__(self, code: str, message: str = "") -> None:
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message
