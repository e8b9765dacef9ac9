"""Settings shared by every CLI subcommand."""

import argparse
from dataclasses import dataclass
from typing import Optional

from typing_extensions import Literal

from cubic_composition.classgroup import SearchConfig
from cubic_composition.core.errors import DomainError
from cubic_composition.core.quadring import Discriminant

OutputMode = Literal["text", "json"]


@dataclass(frozen=True)
class CliConfig:
    """Validated command settings.

    The discriminant, when given, is checked on construction so no subcommand
    computes anything with an invalid D.
    """

    discriminant: Optional[int] = None
    output: OutputMode = "text"
    max_depth: Optional[int] = None
    expanded: bool = False
    verbose: int = 0
    stats: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.discriminant is not None:
            Discriminant(self.discriminant)
        if self.max_depth is not None and self.max_depth <= 0:
            raise DomainError(f"--depth must be positive, got {self.max_depth}")
        if self.workers < 1:
            raise DomainError(f"--workers must be at least 1, got {self.workers}")

    @property
    def disc(self) -> Discriminant:
        if self.discriminant is None:
            raise DomainError("this command needs --disc")
        return Discriminant(self.discriminant)

    @property
    def json(self) -> bool:
        return self.output == "json"

    def search_config(self) -> SearchConfig:
        """Search limits: ``--depth`` first, then ``CUBIC_EQUIV_MAX_DEPTH``, then defaults."""
        return SearchConfig.from_env(self.max_depth)

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "CliConfig":
        return cls(
            discriminant=getattr(ns, "disc", None),
            output="json" if getattr(ns, "json", False) else "text",
            max_depth=getattr(ns, "depth", None),
            expanded=getattr(ns, "expanded", False),
            verbose=getattr(ns, "verbose", 0) or 0,
            stats=getattr(ns, "stats", False),
            workers=getattr(ns, "workers", 1) or 1,
        )
