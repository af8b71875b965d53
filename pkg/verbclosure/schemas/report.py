from typing import Any, Dict, List, Optional

import orjson
from pydantic import BaseModel, ConfigDict, Field


class Check(BaseModel):
    """One named pass/fail assertion."""
    name: str
    passed: bool = Field(alias="pass")
    detail: str = ""

    model_config = ConfigDict(populate_by_name=True)


class Report(BaseModel):
    """Result of one command: echo, payload, checks and optional witness data."""
    command: str
    inputs: Dict[str, Any] = {}
    result: Dict[str, Any] = {}
    checks: List[Check] = []
    witness: Optional[Dict[str, Any]] = None

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name=name, passed=passed, detail=detail))
        return passed

    def to_json(self) -> str:
        payload = self.model_dump(mode="json", by_alias=True)
        return orjson.dumps(payload, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode()
