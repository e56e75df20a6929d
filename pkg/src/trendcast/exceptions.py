"""Exception hierarchy for trendcast."""


class TrendcastError(Exception):
    """Base class for every error raised by this package."""


# series
class SeriesTooShort(TrendcastError):
    pass


class NonPositiveValue(TrendcastError):
    def __init__(self, index, value=None):
        self.index = index
        self.value = value
        super().__init__(f"non-positive value {value!r} at index {index}")


class CoverageGap(TrendcastError):
    pass


class NoOverlap(TrendcastError):
    pass


class InvalidSeries(TrendcastError, ValueError):
    pass


# estimation
class RankDeficient(TrendcastError):
    pass


class InsufficientObservations(TrendcastError):
    pass


class BandwidthTooLarge(TrendcastError):
    pass


class SampleMismatch(TrendcastError):
    pass


class NestedViolation(TrendcastError):
    pass


class ConstantSeries(TrendcastError):
    pass


class AlignmentError(TrendcastError):
    pass


class WindowOutOfRange(TrendcastError):
    pass


class UnknownVariable(TrendcastError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


# forecast evaluation
class EmptyForecastSet(TrendcastError):
    pass


class LengthMismatch(TrendcastError):
    pass


class DegenerateLossDifferential(TrendcastError):
    """All loss differentials are equal, so their variance is zero."""


# ingestion / config
class ParseError(TrendcastError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class GapError(TrendcastError):
    def __init__(self, month, path=None):
        self.month = month
        self.path = path
        super().__init__(f"missing month {month}" + (f" in {path}" if path else ""))


class RangeError(TrendcastError):
    def __init__(self, value, line=None, path=None):
        self.value = value
        self.line = line
        self.path = path
        super().__init__(f"value {value!r} outside [0, 100]" + (f" at line {line}" if line else ""))


class NonWeeklySpacing(TrendcastError):
    def __init__(self, date, path=None):
        self.date = date
        self.path = path
        super().__init__(f"week start {date} is not 7 days after the previous row")


class ConfigError(TrendcastError):
    pass


class StageError(TrendcastError):
    """A module error tagged with the country and pipeline stage that raised it."""

    def __init__(self, country, stage, error):
        self.country = country
        self.stage = stage
        self.error = error
        super().__init__(f"[{country}/{stage}] {type(error).__name__}: {error}")
