"""Format factory for decision problem documents."""
from pathlib import Path

from bnnctl.lib.errors import MalformedDocument

from .base import ProblemDocument, ProblemFormat
from .csv_format import CsvFormat
from .json_format import JsonFormat

# Registry of available problem formats
FORMAT_REGISTRY = {
    "json": JsonFormat,
    "csv": CsvFormat,
}


def create_format(format_name: str) -> ProblemFormat:
    """
    Factory function to create format instances.

    Args:
        format_name: The format name (e.g., "json")

    Returns:
        An instance of the matching format class

    Raises:
        ValueError: If the format name is not supported
    """
    if format_name not in FORMAT_REGISTRY:
        available = ", ".join(FORMAT_REGISTRY.keys())
        raise ValueError(f"Unknown format '{format_name}'. Available: {available}")

    return FORMAT_REGISTRY[format_name]()


def format_for_path(path: Path) -> ProblemFormat:
    """Pick the format whose suffix matches path."""
    suffix = Path(path).suffix.lower()
    for format_class in FORMAT_REGISTRY.values():
        if suffix in format_class.suffixes:
            return format_class()
    available = ", ".join(FORMAT_REGISTRY.keys())
    raise MalformedDocument(
        f"cannot tell the format of '{path}' from its suffix; use --format ({available})"
    )


def load_document(
    path: Path, format_name: str | None = None, normalize_weights: bool = False
) -> ProblemDocument:
    """Read and parse a problem file. OSError propagates to the caller."""
    fmt = create_format(format_name) if format_name else format_for_path(path)
    source = Path(path).read_bytes()
    return ProblemDocument(fmt.name, source, fmt.parse(source, normalize_weights))


def get_available_formats():
    """Returns a list of available format names."""
    return list(FORMAT_REGISTRY.keys())
