from typing import List, Optional

from pydantic import BaseModel, Field


class ProbeConfig(BaseModel):
    """Search space of the verbal-closedness probe."""
    max_len: int = Field(4, ge=0)
    # explicit word list; overrides max_len when given
    words: Optional[List[str]] = None
    g_lmax: int = Field(1, ge=0)
    g_kmax: int = Field(1, ge=0)
    k_lmax: int = Field(4, ge=0)
    k_kmax: int = Field(8, ge=0)
    witnesses_per_word: int = Field(8, ge=0)
