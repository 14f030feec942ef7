"""Exception hierarchy for the ranking engine."""


class CoCoSoError(Exception):
    """Base class for every error raised by this package."""


class InvalidMatrix(CoCoSoError, ValueError):
    """A decision matrix failed structural validation."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid decision matrix: " + "; ".join(
            f"{v.code}: {v.message}" for v in report.violations))


class DegenerateCriterion(CoCoSoError, ZeroDivisionError):
    """Min-max normalization hit a column whose max equals its min."""

    def __init__(self, criterion, index=None):
        self.criterion = criterion
        self.index = index
        super().__init__(
            f"criterion {criterion!r} has the same value for every alternative; "
            "min-max normalization divides by zero")


class ZeroMinAggregate(CoCoSoError, ZeroDivisionError):
    """The classic k_ib appraisal divides by a zero minimum S or P."""

    def __init__(self, alternatives):
        self.alternatives = tuple(alternatives)
        names = ", ".join(self.alternatives) or "<unnamed>"
        super().__init__(
            f"minimum aggregate score is zero (alternative(s) {names}); "
            "classic k_ib divides by zero")


class AllZeroScores(CoCoSoError, ZeroDivisionError):
    """Every alternative has S + P = 0, so the k_ia shares are undefined."""

    def __init__(self):
        super().__init__("sum of S + P over all alternatives is zero")


class DegenerateLambda(CoCoSoError, ZeroDivisionError):
    """lambda * max S + (1 - lambda) * max P is zero."""

    def __init__(self, lam):
        self.lam = lam
        super().__init__(f"k_ic denominator vanishes for lambda={lam}")


class DegenerateProblem(CoCoSoError, ValueError):
    """TOPSIS cannot separate alternatives because all rows are identical."""


class MatrixParseError(CoCoSoError, ValueError):
    """A matrix file could not be parsed."""

    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class ConfigError(CoCoSoError, ValueError):
    """A problem configuration file is malformed or inconsistent."""


class ScenarioFailed(CoCoSoError):
    """An evaluation inside a sensitivity run failed.

    The original exception is available as ``cause`` (and ``__cause__``).
    """

    def __init__(self, label, cause):
        self.label = label
        self.cause = cause
        super().__init__(f"scenario {label}: {cause}")
