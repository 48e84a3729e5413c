from abc import ABC, abstractmethod
from dataclasses import dataclass

from bnnctl.lib.mcdm import DecisionProblem


class ProblemFormat(ABC):
    """
    Abstract base class for a decision problem file format.
    """
    name: str = ""
    suffixes: tuple[str, ...] = ()

    @abstractmethod
    def parse(self, data: bytes, normalize_weights: bool = False) -> DecisionProblem:
        pass

    @abstractmethod
    def render(self, problem: DecisionProblem) -> bytes:
        pass


@dataclass(frozen=True)
class ProblemDocument:
    """A parsed problem together with the bytes and format it came from."""

    format: str
    source: bytes
    parsed: DecisionProblem
