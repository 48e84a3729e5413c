import sys
from pathlib import Path


def _config_dir() -> Path:
    """Platform-specific configuration directory."""
    if sys.platform.startswith("win"):
        return Path.home() / "AppData" / "Local" / "bnnctl"
    if sys.platform == "darwin":
        return Path.home() / ".local" / "share" / "bnnctl"
    return Path.home() / ".config" / "bnnctl"


CONFIG_DIR = _config_dir()

# User-level defaults for the CLI (precision, operator, output, tie_tolerance)
SETTINGS_FILE = CONFIG_DIR / "settings.json"

# Decimal places shown by table output; JSON output is always full precision
DEFAULT_PRECISION = 3

# Decimal places shown by the `score` command
DEFAULT_SCORE_PRECISION = 6

# Absolute tolerance for score/accuracy/certainty ties when comparing numbers
TIE_TOLERANCE = 1e-9

# Weights must sum to 1 within this tolerance unless normalisation is requested
WEIGHT_SUM_TOLERANCE = 1e-9

# Componentwise tolerance for set equality
SET_EQUALITY_TOLERANCE = 1e-12

# Bundled fixtures (four-car selection problem)
DATA_DIR = Path(__file__).parent / "data"
