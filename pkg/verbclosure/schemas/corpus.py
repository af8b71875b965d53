from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class CorpusLine(BaseModel):
    """One equation of a JSON-lines corpus."""
    word: str = Field(..., min_length=1)
    group: Literal["K", "D", "G"]
    target: str = Field(..., min_length=1)
    vars: int = Field(1, ge=1, le=9)

    model_config = ConfigDict(extra="forbid")
