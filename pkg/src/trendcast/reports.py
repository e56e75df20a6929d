"""Hypothesis-test report shared by every test in the package."""

from __future__ import annotations

from dataclasses import dataclass, field

LEVELS = (0.01, 0.05, 0.10)


@dataclass(frozen=True)
class TestReport:
    """Outcome of a hypothesis test.

    ``reject_when`` is ``"below"`` for left-tailed tests (ADF) and
    ``"above"`` for right-tailed ones (KPSS, F). When ``p_value`` is exact
    (F tests) decisions use it; otherwise they compare the statistic with
    the tabulated critical values.
    """

    __test__ = False  # keep pytest from collecting this class

    test_name: str
    statistic: float
    critical_values: dict
    reject_when: str
    n: int
    p_value: float | None = None
    p_exact: bool = False
    spec: dict = field(default_factory=dict)
    df: tuple | None = None
    flags: tuple = ()

    def rejects(self, level: float) -> bool:
        if self.p_exact and self.p_value is not None:
            return self.p_value < level
        cv = self.critical_values.get(level)
        if cv is None:
            raise KeyError(f"no critical value tabulated at level {level}")
        if self.reject_when == "below":
            return self.statistic < cv
        return self.statistic > cv

    @property
    def p_bracket(self) -> str:
        for level in LEVELS:
            if self.rejects(level):
                return f"<{level:.0%}"
        return ">=10%"

    @property
    def stars(self) -> str:
        """``***`` at 1%, ``**`` at 5%, ``*`` at 10%."""
        return {"<1%": "***", "<5%": "**", "<10%": "*"}.get(self.p_bracket, "")

    @property
    def decisions(self) -> dict:
        return {level: self.rejects(level) for level in LEVELS}
