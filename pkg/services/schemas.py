import json
import re
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from codes.bincode import BinaryCode, CodeType, WeightProfile, parse_generator
from codes.groupring import GroupSpec
from codes.gray import GrayLayout
from codes.rings import RingId, parse_shorthand
from config import config

_FIELD = re.compile(r"\([^)]*\)|\S+")


class WeightProfileModel(BaseModel):
    n: int
    k: int
    d: int
    type: Literal["I", "II"]
    counts: Dict[int, int]
    family: Optional[str] = None
    params: Dict[str, int] = Field(default_factory=dict)

    @classmethod
    def from_profile(cls, profile: WeightProfile) -> "WeightProfileModel":
        return cls(n=profile.n, k=profile.k, d=profile.d, type=profile.code_type.value,
                   counts=dict(profile.counts), family=profile.family, params=dict(profile.params))

    def to_profile(self) -> WeightProfile:
        return WeightProfile(n=self.n, k=self.k, d=self.d, counts=dict(self.counts),
                             code_type=CodeType(self.type), family=self.family, params=dict(self.params))


class CodeRecord(BaseModel):
    """A persisted code: where it came from, its binary generator and its weight profile."""
    model_config = ConfigDict(from_attributes=True)

    id: Optional[int] = None
    label: Optional[str] = None
    kind: Literal["construction", "extension", "neighbor"]
    provenance: Dict[str, Any]
    parent_id: Optional[int] = None
    gray_chain: Optional[str] = None
    gray_layout: Optional[str] = None
    generator: str
    self_dual: bool = True
    profile: Optional[WeightProfileModel] = None
    search_run_id: Optional[int] = None
    created_at: datetime = Field(default_factory=datetime.utcnow)

    def code(self) -> BinaryCode:
        return parse_generator(self.generator)

    def to_file(self, path: Union[str, Path]) -> Path:
        target = Path(path)
        target.write_text(self.model_dump_json(indent=2))
        return target

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "CodeRecord":
        return cls.model_validate_json(Path(path).read_text())


class ManifestRow(BaseModel):
    """One construction: group, ring, (γ1,γ2,γ3,γ4), v1, v2 in shorthand."""
    group: str
    ring: str
    gamma: str
    v1: str
    v2: str

    @field_validator("group")
    @classmethod
    def _check_group(cls, value: str) -> str:
        GroupSpec.parse(value)
        return value

    @field_validator("ring")
    @classmethod
    def _check_ring(cls, value: str) -> str:
        return RingId.parse(value).value

    @classmethod
    def from_line(cls, text: str) -> "ManifestRow":
        """Parse "C9 F2 (0,0,0,1) 000000011 001110111"; parenthesised fields may contain spaces."""
        fields = _FIELD.findall(text.strip())
        if len(fields) != 5:
            raise ValueError(f"Manifest line needs 5 fields (group ring gamma v1 v2), got {len(fields)}: {text!r}")
        group, ring, gamma, v1, v2 = fields
        return cls(group=group, ring=ring, gamma=gamma, v1=v1, v2=v2)

    def as_line(self) -> str:
        return f"{self.group} {self.ring} {self.gamma} {self.v1} {self.v2}"


class SearchConfig(BaseModel):
    group: str
    ring: str
    gamma_mode: Literal["exhaustive", "fixed"] = "exhaustive"
    gamma: Optional[str] = None
    v_mode: Literal["auto", "exhaustive", "random"] = "auto"
    samples: int = Field(default_factory=lambda: config.search.samples, ge=1)
    seed: Optional[int] = Field(default_factory=lambda: config.search.seed)
    workers: int = Field(default_factory=lambda: config.enumeration.workers, ge=1)
    target_n: Optional[int] = None
    target_d: Optional[int] = None
    family: Optional[str] = None
    params: Dict[str, int] = Field(default_factory=dict)
    exhaustive_limit: int = Field(default_factory=lambda: config.search.exhaustive_limit, ge=1)
    max_candidates: Optional[int] = Field(default=None, ge=1)
    resume_from: int = Field(default=0, ge=0)
    layout: GrayLayout = Field(default_factory=lambda: GrayLayout(config.gray.layout))

    @field_validator("group")
    @classmethod
    def _check_group(cls, value: str) -> str:
        GroupSpec.parse(value)
        return value

    @field_validator("ring")
    @classmethod
    def _check_ring(cls, value: str) -> str:
        return RingId.parse(value).value

    @model_validator(mode="after")
    def _check_gamma(self) -> "SearchConfig":
        if self.gamma_mode == "fixed":
            if not self.gamma:
                raise ValueError("gamma_mode 'fixed' needs a gamma quadruple")
            if len(parse_shorthand(self.gamma, RingId(self.ring))) != 4:
                raise ValueError(f"gamma {self.gamma!r} must have four entries")
        return self

    @property
    def space_size(self) -> int:
        """Number of (v1, v2) pairs."""
        return RingId(self.ring).size ** (2 * GroupSpec.parse(self.group).order)

    @property
    def exhaustive(self) -> bool:
        if self.v_mode == "auto":
            return self.space_size <= self.exhaustive_limit
        return self.v_mode == "exhaustive"

    @property
    def total_candidates(self) -> int:
        return self.space_size if self.exhaustive else self.samples

    @classmethod
    def from_file(cls, path: Union[str, Path], **overrides: Any) -> "SearchConfig":
        """Load a JSON config; non-None overrides win over file values."""
        data = json.loads(Path(path).read_text())
        data.update({key: value for key, value in overrides.items() if value is not None})
        return cls.model_validate(data)


class LedgerEntry(BaseModel):
    ordinal: int
    gamma: str
    v1: str
    v2: str
    fingerprint: List[Any]
    fingerprint_hits: int = 1
    record: CodeRecord


class SearchLedger(BaseModel):
    config: SearchConfig
    entries: List[LedgerEntry] = Field(default_factory=list)
    candidates_examined: int = 0
    screened_out: int = 0
    conditions_failed: int = 0
    hits: int = 0
    resume_token: Optional[int] = None
    search_run_id: Optional[int] = None
    note: str = ("Entries are deduplicated by (n, k, d, A_d, A_d+2, family parameters); "
                 "equal fingerprints do not imply equivalent codes.")


class RowOutcome(BaseModel):
    table: str
    row: int
    status: Literal["PASS", "FAIL", "SKIP", "DISCREPANCY"]
    expected: Dict[str, Any] = Field(default_factory=dict)
    observed: Dict[str, Any] = Field(default_factory=dict)
    amended: bool = False
    interpretation: Optional[str] = None
    message: Optional[str] = None


class ReproductionReport(BaseModel):
    table: str
    title: str
    rows: List[RowOutcome] = Field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for row in self.rows if row.status == status)

    @property
    def exit_code(self) -> int:
        # DISCREPANCY rows are documented in the manifest and do not fail a run
        return 1 if self.count("FAIL") else 0

    def summary(self) -> str:
        text = f"{self.table}: {self.count('PASS')} PASS, {self.count('FAIL')} FAIL, {self.count('SKIP')} SKIP"
        if self.count("DISCREPANCY"):
            text += f", {self.count('DISCREPANCY')} DISCREPANCY"
        return text
