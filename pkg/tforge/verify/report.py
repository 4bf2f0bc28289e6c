"""Check reports shared by every verifier."""

from dataclasses import dataclass, field
from typing import Optional

from rich.table import Table

from tforge.poly.polynomial import BivariatePolynomial


@dataclass
class CheckFailure:
    """One failing instance: its label and the two sides compared."""

    instance: str
    lhs: Optional[BivariatePolynomial] = None
    rhs: Optional[BivariatePolynomial] = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "lhs": str(self.lhs) if self.lhs is not None else None,
            "rhs": str(self.rhs) if self.rhs is not None else None,
            "detail": self.detail,
        }


@dataclass
class EquivalenceReport:
    """Outcome of one check over many instances; passes iff there are no failures."""

    condition: str
    instances_checked: int = 0
    failures: list[CheckFailure] = field(default_factory=list)
    counters: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def record(
        self,
        instance: str,
        lhs: BivariatePolynomial,
        rhs: BivariatePolynomial,
        detail: str = "",
    ) -> bool:
        """Count one comparison, keeping it as a failure when the sides differ."""
        self.instances_checked += 1
        if lhs != rhs:
            self.failures.append(CheckFailure(instance, lhs, rhs, detail))
            return False
        return True

    def fail(self, instance: str, detail: str) -> None:
        self.instances_checked += 1
        self.failures.append(CheckFailure(instance, detail=detail))

    def ok(self) -> None:
        self.instances_checked += 1

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "verdict": self.verdict,
            "instances_checked": self.instances_checked,
            "failures": [f.to_dict() for f in self.failures],
            "counters": dict(self.counters),
            "notes": list(self.notes),
        }

    def render(self, max_failures: int = 10) -> Table:
        """Rich table summarising the report."""
        status = "[green]✓ pass[/green]" if self.passed else "[red]✗ fail[/red]"
        table = Table(title=f"{self.condition}: {status}", show_header=True)
        table.add_column("Instance", style="cyan")
        table.add_column("Left")
        table.add_column("Right")
        table.add_column("Detail", style="dim")

        for failure in self.failures[:max_failures]:
            table.add_row(
                failure.instance,
                str(failure.lhs) if failure.lhs is not None else "-",
                str(failure.rhs) if failure.rhs is not None else "-",
                failure.detail,
            )
        hidden = len(self.failures) - max_failures
        if hidden > 0:
            table.add_row(f"... {hidden} more", "", "", "")
        table.caption = f"{self.instances_checked} instances checked"
        if self.counters:
            table.caption += " | " + ", ".join(f"{k}={v}" for k, v in self.counters.items())
        return table
