# efountain/report.py
from __future__ import annotations
from dataclasses import dataclass, field
import pathlib
from typing import List, Optional, Sequence, Union

import pandas as pd

from efountain.fountain import CheckResult
from efountain.semigroup import FiniteSemigroup

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


def fmt_elements(items: Sequence[int], S: Optional[FiniteSemigroup] = None) -> str:
    if S is None:
        return "(" + ", ".join(str(x) for x in items) + ")"
    return "(" + ", ".join(S.label(x) for x in items) + ")"


def fmt_witness(result: CheckResult, S: Optional[FiniteSemigroup] = None) -> str:
    if result.holds:
        return ""
    return result.describe(S)


@dataclass(frozen=True)
class ReportLine:
    name: str
    status: str
    witness: str = ""

    def render(self) -> str:
        return f"{self.name}: {self.status}" + (f" [{self.witness}]" if self.witness else "")


@dataclass
class Report:
    structure: str
    lines: List[ReportLine] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, status: str, witness: str = "") -> None:
        self.lines.append(ReportLine(name, status, witness))

    def check(self, name: str, result: Union[CheckResult, bool], witness: str = "",
              S: Optional[FiniteSemigroup] = None) -> bool:
        holds = bool(result)
        if not holds and not witness and isinstance(result, CheckResult):
            witness = fmt_witness(result, S)
        self.add(name, PASS if holds else FAIL, "" if holds else witness)
        return holds

    def skip(self, name: str, reason: str = "") -> None:
        self.add(name, SKIPPED, reason)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def status_of(self, name: str) -> Optional[str]:
        for line in self.lines:
            if line.name == name:
                return line.status
        return None

    def failures(self) -> List[ReportLine]:
        return [line for line in self.lines if line.status == FAIL]

    def exit_code(self) -> int:
        return 1 if self.failures() else 0

    def render(self) -> str:
        out = [f"# structure: {self.structure}"]
        out += [f"# {n}" for n in self.notes]
        out += [line.render() for line in self.lines]
        return "\n".join(out) + "\n"

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [(line.name, line.status, line.witness) for line in self.lines],
            columns=["check", "status", "witness"],
        )

    def write(self, path: str) -> None:
        pathlib.Path(path).write_text(self.render())
