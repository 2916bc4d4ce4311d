"""
Rendered result of one command
"""
from dataclasses import dataclass

from ...core.errors import EXIT_SUCCESS


@dataclass(frozen=True)
class CommandOutput:
    """Text to emit and the exit code to report"""
    text: str
    exit_code: int = EXIT_SUCCESS
