# Copyright 2026 HS-Frames Toolkit Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Model definitions for the files read and written by the toolkit"""

import re
from enum import StrEnum
from typing import Annotated, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
    model_validator,
)

__all__ = [
    "CLASSICAL_THEOREMS",
    "DUAL_THEOREMS",
    "HS_THEOREMS",
    "CheckReport",
    "CheckRun",
    "ComplexPair",
    "GFrameDocument",
    "GMapDocument",
    "GenKind",
    "GenSpec",
    "HSFrameDocument",
    "HSMapDocument",
    "LambdaValue",
    "MatrixDocument",
    "OutputFormat",
    "Seed",
    "SubsetMode",
    "SuiteConfig",
    "SuiteRun",
    "SuiteSummary",
    "Theorem",
    "TheoremSummary",
    "ToleranceOverrides",
    "VectorFrameDocument",
]

ComplexPair = tuple[float, float]
MatrixDocument = list[list[ComplexPair]]
LambdaValue = Annotated[float, Field(ge=0.0, le=1.0)]
Seed = Annotated[int, Field(ge=0, lt=2**64)]

SUBSET_MODE_PATTERN = re.compile(r"^(all|random:[1-9][0-9]*)$")
SubsetMode = Annotated[str, Field(pattern=SUBSET_MODE_PATTERN.pattern)]


class Theorem(StrEnum):
    """Names of the checks that can be swept."""

    LEMMA_PP = "lemma_pp"
    LEMMA_PQ = "lemma_pq"
    PROP_SELFADJOINT = "prop_selfadjoint"
    PROP_OPERATOR = "prop_operator"
    PARSEVAL_IDENTITY = "parseval_identity"
    PARSEVAL_INEQUALITY = "parseval_inequality"
    CANONICAL_DUAL = "canonical_dual"
    ALTERNATE_DUAL = "alternate_dual"
    COMPLEX_IDENTITY = "complex_identity"
    WEIGHTED_IDENTITY = "weighted_identity"
    FRAME_PARSEVAL_IDENTITY = "frame_parseval_identity"
    FRAME_PARSEVAL_INEQUALITY = "frame_parseval_inequality"
    FRAME_CANONICAL_IDENTITY = "frame_canonical_identity"
    FRAME_CANONICAL_INEQUALITY = "frame_canonical_inequality"
    FRAME_ALTERNATE_DUAL = "frame_alternate_dual"
    FRAME_COMPLEX_IDENTITY = "frame_complex_identity"


HS_THEOREMS: tuple[Theorem, ...] = (
    Theorem.LEMMA_PP,
    Theorem.LEMMA_PQ,
    Theorem.PROP_SELFADJOINT,
    Theorem.PROP_OPERATOR,
    Theorem.PARSEVAL_IDENTITY,
    Theorem.PARSEVAL_INEQUALITY,
    Theorem.CANONICAL_DUAL,
    Theorem.ALTERNATE_DUAL,
    Theorem.COMPLEX_IDENTITY,
    Theorem.WEIGHTED_IDENTITY,
)

CLASSICAL_THEOREMS: tuple[Theorem, ...] = (
    Theorem.FRAME_PARSEVAL_IDENTITY,
    Theorem.FRAME_PARSEVAL_INEQUALITY,
    Theorem.FRAME_CANONICAL_IDENTITY,
    Theorem.FRAME_CANONICAL_INEQUALITY,
    Theorem.FRAME_ALTERNATE_DUAL,
    Theorem.FRAME_COMPLEX_IDENTITY,
)

# checks that are evaluated against a dual frame, once per requested dual
DUAL_THEOREMS: frozenset[Theorem] = frozenset(
    {
        Theorem.LEMMA_PP,
        Theorem.LEMMA_PQ,
        Theorem.PROP_OPERATOR,
        Theorem.ALTERNATE_DUAL,
        Theorem.COMPLEX_IDENTITY,
        Theorem.WEIGHTED_IDENTITY,
        Theorem.FRAME_ALTERNATE_DUAL,
        Theorem.FRAME_COMPLEX_IDENTITY,
    }
)


class OutputFormat(StrEnum):
    """Report serialization formats."""

    JSON = "json"
    CSV = "csv"


class VectorFrameDocument(BaseModel):
    """File representation of a frame {f_j} in C^n."""

    model_config = ConfigDict(extra="forbid")

    n: PositiveInt = Field(..., description="Dimension of the ambient space.")
    vectors: list[list[ComplexPair]] = Field(
        ...,
        min_length=1,
        description="The frame vectors, each a list of n [re, im] pairs.",
    )

    @model_validator(mode="after")
    def check_lengths(self) -> Self:
        """Every vector has n entries."""
        for index, vector in enumerate(self.vectors):
            if len(vector) != self.n:
                raise ValueError(
                    f"Vector {index} has {len(vector)} entries, not {self.n}."
                )
        return self


class HSMapDocument(BaseModel):
    """File representation of a single map C^n -> C_2(C^m)."""

    model_config = ConfigDict(extra="forbid")

    coeff: MatrixDocument = Field(
        ...,
        description="The m^2 x n coefficient matrix acting on column-major vec.",
    )


class HSFrameDocument(BaseModel):
    """File representation of an HS-frame."""

    model_config = ConfigDict(extra="forbid")

    n: PositiveInt = Field(..., description="Dimension of the domain.")
    m: PositiveInt = Field(..., description="Side length of the target matrices.")
    maps: list[HSMapDocument] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_shapes(self) -> Self:
        """Every coefficient matrix is m^2 x n."""
        for index, operator_map in enumerate(self.maps):
            rows = operator_map.coeff
            if len(rows) != self.m**2 or any(len(row) != self.n for row in rows):
                raise ValueError(f"Map {index} does not have an m^2 x n coefficient.")
        return self


class GMapDocument(BaseModel):
    """File representation of a single map Lambda_j: C^n -> C^{d_j}."""

    model_config = ConfigDict(extra="forbid")

    matrix: MatrixDocument = Field(..., description="The d_j x n matrix of the map.")


class GFrameDocument(BaseModel):
    """File representation of a g-frame."""

    model_config = ConfigDict(extra="forbid")

    n: PositiveInt = Field(..., description="Dimension of the domain.")
    dims: list[PositiveInt] = Field(..., min_length=1)
    maps: list[GMapDocument] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_shapes(self) -> Self:
        """Map j is d_j x n."""
        if len(self.dims) != len(self.maps):
            raise ValueError("The number of dims does not match the number of maps.")
        for index, (dim, operator_map) in enumerate(
            zip(self.dims, self.maps, strict=True)
        ):
            rows = operator_map.matrix
            if len(rows) != dim or any(len(row) != self.n for row in rows):
                raise ValueError(f"Map {index} is not a d_j x n matrix.")
        return self


class GenKind(StrEnum):
    """Kinds of frame generators."""

    GAUSSIAN_VECTOR = "gaussian_vector"
    HARMONIC = "harmonic"
    GAUSSIAN_HS = "gaussian_hs"
    GAUSSIAN_G = "gaussian_g"
    PARSEVALIZE_OF = "parsevalize_of"


class GenSpec(BaseModel):
    """A deterministic recipe for a frame."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    kind: GenKind
    n: PositiveInt | None = Field(default=None, description="Ambient dimension.")
    m: PositiveInt | None = Field(
        default=None, description="Side length of HS targets (gaussian_hs only)."
    )
    count: PositiveInt | None = Field(
        default=None, alias="N", description="Number of frame elements."
    )
    dims: list[PositiveInt] | None = Field(
        default=None, description="Target dimensions d_j (gaussian_g only)."
    )
    seed: Seed = Field(default=0, description="Seed of the random stream.")
    of: "GenSpec | None" = Field(
        default=None, description="Inner recipe (parsevalize_of only)."
    )

    @model_validator(mode="after")
    def check_kind_fields(self) -> Self:
        """Check that the fields required by the kind are present."""
        required = {
            GenKind.GAUSSIAN_VECTOR: ("n", "count"),
            GenKind.HARMONIC: ("n", "count"),
            GenKind.GAUSSIAN_HS: ("n", "m", "count"),
            GenKind.GAUSSIAN_G: ("n", "dims"),
            GenKind.PARSEVALIZE_OF: ("of",),
        }[self.kind]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"Kind '{self.kind}' requires: {', '.join(missing)}.")
        if (
            self.kind == GenKind.HARMONIC
            and self.count is not None
            and self.n is not None
            and self.count < self.n
        ):
            raise ValueError("A harmonic frame needs N >= n.")
        if (
            self.kind == GenKind.GAUSSIAN_G
            and self.count is not None
            and self.dims is not None
            and self.count != len(self.dims)
        ):
            raise ValueError("N must equal the number of dims.")
        return self

    def with_seed(self, seed: int) -> "GenSpec":
        """Return the same recipe with another seed (applied to inner recipes)."""
        inner = self.of.with_seed(seed) if self.of is not None else None
        return self.model_copy(update={"seed": seed, "of": inner})


class ToleranceOverrides(BaseModel):
    """Tolerances given inline in a suite file."""

    model_config = ConfigDict(extra="forbid")

    tol_eq: PositiveFloat | None = None
    tol_ineq: PositiveFloat | None = None


class SuiteConfig(BaseModel):
    """Contents of a suite file. Unset fields fall back to the service config."""

    model_config = ConfigDict(extra="forbid")

    gen: GenSpec
    trials: PositiveInt = Field(default=20)
    theorems: list[Theorem] = Field(default_factory=lambda: list(HS_THEOREMS))
    lambda_grid: list[LambdaValue] | None = None
    subset_mode: SubsetMode | None = None
    tolerances: ToleranceOverrides | None = None
    dual_scales: list[Annotated[float, Field(ge=0.0)]] | None = None
    seed: Seed | None = None
    format: OutputFormat | None = None


class CheckReport(BaseModel):
    """Outcome of a single identity or inequality check.

    `lhs` and `rhs` are [re, im] pairs; `residual` is |lhs - rhs| (or a Frobenius
    norm for operator identities); `margin` is the signed slack of the inequality.
    """

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    theorem: str
    lhs: ComplexPair
    rhs: ComplexPair
    residual: float
    bound: float | None = None
    margin: float | None = None
    passed: bool = Field(..., alias="pass")
    scale: float
    trial: NonNegativeInt | None = None
    subset: str | None = Field(default=None, alias="K")
    f_index: NonNegativeInt | None = None
    lambda_: float | None = Field(default=None, alias="lambda")
    dual_index: NonNegativeInt | None = None


class TheoremSummary(BaseModel):
    """Aggregate over every check run for one theorem."""

    model_config = ConfigDict(populate_by_name=True)

    worst_residual: float = 0.0
    worst_margin: float | None = None
    checks_run: NonNegativeInt = 0
    passed: bool = Field(default=True, alias="pass")

    def add(self, report: CheckReport) -> None:
        """Fold a report into the aggregate."""
        self.checks_run += 1
        self.worst_residual = max(self.worst_residual, report.residual / report.scale)
        if report.margin is not None:
            relative = report.margin / report.scale
            if self.worst_margin is None or relative < self.worst_margin:
                self.worst_margin = relative
        self.passed = self.passed and report.passed


class SuiteSummary(BaseModel):
    """Aggregate report of a suite run, keyed by theorem name."""

    model_config = ConfigDict(populate_by_name=True)

    seed: int
    trials: PositiveInt
    theorems: dict[str, TheoremSummary] = Field(default_factory=dict)
    passed: bool = Field(default=True, alias="pass")


class CheckRun(BaseModel):
    """Every report of a single-theorem sweep together with its aggregate."""

    theorem: Theorem
    reports: list[CheckReport]
    summary: TheoremSummary


class SuiteRun(BaseModel):
    """Every report of a suite run together with its aggregate."""

    reports: list[CheckReport]
    summary: SuiteSummary
