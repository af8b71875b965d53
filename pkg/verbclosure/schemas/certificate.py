from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, model_validator


class CertificateStep(BaseModel):
    index: int
    claim: str
    check_id: str
    passed: bool
    witness: Dict[str, Any] = {}
    depends_on: List[int] = []


class Certificate(BaseModel):
    """Ordered chain of machine-checked claims; a step may cite only earlier steps."""
    title: str
    steps: List[CertificateStep] = []

    @model_validator(mode="after")
    def _references_precede(self) -> "Certificate":
        for position, step in enumerate(self.steps):
            if step.index != position:
                raise ValueError(f"step {step.check_id} has index {step.index}, expected {position}")
            for dep in step.depends_on:
                if not 0 <= dep < step.index:
                    raise ValueError(f"step {step.index} cites step {dep}, which does not precede it")
        return self

    def add(
        self,
        claim: str,
        check_id: str,
        passed: bool,
        witness: Optional[Dict[str, Any]] = None,
        depends_on: Sequence[int] = (),
    ) -> CertificateStep:
        index = len(self.steps)
        for dep in depends_on:
            if not 0 <= dep < index:
                raise ValueError(f"step {index} cites step {dep}, which does not precede it")
        step = CertificateStep(
            index=index,
            claim=claim,
            check_id=check_id,
            passed=passed,
            witness=witness or {},
            depends_on=list(depends_on),
        )
        self.steps.append(step)
        return step

    def verify(self) -> bool:
        if not self.steps:
            return False
        established = set()
        for step in self.steps:
            if not step.passed or not set(step.depends_on) <= established:
                return False
            established.add(step.index)
        return True
