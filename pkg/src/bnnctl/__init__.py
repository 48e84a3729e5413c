"""bnnctl - Bipolar neutrosophic number algebra and decision ranking."""

__version__ = "0.1.0"
