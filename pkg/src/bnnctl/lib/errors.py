"""Exceptions raised for invalid numbers, sets, weights and documents.

Every error is a ``ValueError`` and may carry a location (a decision matrix
cell, a CSV row/column, a JSON line/column or a set label). The location is
prefixed to the message so the CLI can print it as-is.
"""


class BnnError(ValueError):
    """Base class for all bnnctl data errors."""

    def __init__(self, message: str, location: str | None = None):
        self.message = message
        self.location = location
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.location:
            return f"{self.location}: {self.message}"
        return self.message

    def at(self, location: str) -> "BnnError":
        """Attach location, keeping any more specific one already set."""
        self.location = f"{location}, {self.location}" if self.location else location
        self.args = (str(self),)
        return self


class ComponentOutOfRange(BnnError):
    def __init__(self, component: str, value: float, bounds: str, location: str | None = None):
        self.component = component
        self.value = value
        super().__init__(f"component {component}={value!r} is outside {bounds}", location)


class NonFiniteComponent(BnnError):
    def __init__(self, component: str, value: float, location: str | None = None):
        self.component = component
        self.value = value
        super().__init__(f"component {component}={value!r} is not a finite number", location)


class NonPositiveLambda(BnnError):
    def __init__(self, value: float):
        self.value = value
        super().__init__(f"lambda must be > 0, got {value!r}")


class DuplicateLabel(BnnError):
    def __init__(self, label: str, location: str | None = None):
        self.label = label
        super().__init__(f"duplicate label '{label}'", location)


class MissingAssignment(BnnError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"no value assigned to '{label}'")


class UniverseMismatch(BnnError):
    pass


class EmptyWeights(BnnError):
    def __init__(self):
        super().__init__("weight vector is empty")


class WeightOutOfRange(BnnError):
    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(f"weight #{index + 1}={value!r} is outside [0, 1]")


class WeightsDontSumToOne(BnnError):
    def __init__(self, total: float):
        self.total = total
        super().__init__(
            f"weights sum to {total!r}, expected 1 (use --normalize-weights to rescale)"
        )


class ZeroWeightSum(BnnError):
    def __init__(self):
        super().__init__("weights sum to 0 and cannot be normalized")


class LengthMismatch(BnnError):
    def __init__(self, items: int, weights: int):
        super().__init__(f"{items} item(s) but {weights} weight(s)")


class EmptyFamily(BnnError):
    def __init__(self):
        super().__init__("cannot aggregate an empty family")


class DimensionMismatch(BnnError):
    pass


class MalformedDocument(BnnError):
    pass


class WrongTupleArity(BnnError):
    def __init__(self, arity: int, location: str | None = None):
        self.arity = arity
        super().__init__(f"expected 6 components (t+,i+,f+,t-,i-,f-), got {arity}", location)


class SettingsError(BnnError):
    pass
