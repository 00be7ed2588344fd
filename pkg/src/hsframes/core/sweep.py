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

"""The verifier service: sweeps identity checks over subsets, test vectors,
lambda values and duals, for single frame files and for whole suites.
"""

import asyncio
import logging
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import AliasChoices, Field, NonNegativeFloat, PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict

from hsframes.core import classical, identities
from hsframes.core.errors import FrameToolkitError, NotParsevalError
from hsframes.core.generation import (
    AnyFrame,
    bounds_of,
    gen_bounded_weights,
    gen_test_vectors,
    generate,
    parsevalize,
    to_hs_frame,
)
from hsframes.core.hs_frames import (
    DualKind,
    HSDualPair,
    HSFrame,
    canonical_dual_hs,
    dual_partial_operator,
    duality_tolerance,
    is_alternate_dual_hs,
    make_alternate_dual,
    partial_operator_hs,
)
from hsframes.core.identities import PARSEVAL_TOL, CheckRequest, ToleranceConfig
from hsframes.core.operators import (
    ComplexVector,
    MatrixFunction,
    adjoint,
    hermitian_fn,
)
from hsframes.core.streams import derive_seed, substream
from hsframes.core.vector_frames import FrameBounds, SubsetMask, VectorFrame
from hsframes.models import (
    CLASSICAL_THEOREMS,
    DUAL_THEOREMS,
    CheckReport,
    CheckRun,
    LambdaValue,
    OutputFormat,
    Seed,
    SubsetMode,
    SuiteConfig,
    SuiteRun,
    SuiteSummary,
    Theorem,
    TheoremSummary,
)
from hsframes.ports.inbound.verifier import FrameVerifierPort
from hsframes.ports.outbound.dao import (
    FileDao,
    FrameFileDaoPort,
    GenSpecFileDaoPort,
    ResourceNotFoundError,
    SuiteConfigFileDaoPort,
)

log = logging.getLogger(__name__)

__all__ = [
    "LAMBDA_THEOREMS",
    "OPERATOR_THEOREMS",
    "FrameVerifier",
    "SweepConfig",
    "VerifierConfig",
    "select_subsets",
]

# checks evaluated once per lambda of the grid
LAMBDA_THEOREMS: frozenset[Theorem] = frozenset(
    {
        Theorem.PROP_SELFADJOINT,
        Theorem.PROP_OPERATOR,
        Theorem.CANONICAL_DUAL,
        Theorem.ALTERNATE_DUAL,
        Theorem.FRAME_CANONICAL_INEQUALITY,
    }
)

# checks on operators only, without a test vector
OPERATOR_THEOREMS: frozenset[Theorem] = frozenset(
    {Theorem.LEMMA_PP, Theorem.LEMMA_PQ, Theorem.PROP_OPERATOR}
)

# substream tags of the draws derived from a trial seed
_FRAME_STREAM = 10
_SUBSET_STREAM = 11
_DUAL_STREAM = 12
_WEIGHT_STREAM = 13


class SweepConfig(BaseSettings):
    """Configuration of the sweeps run by the verifier."""

    model_config = SettingsConfigDict(populate_by_name=True)

    seed: Seed = Field(
        default=0,
        validation_alias=AliasChoices("hsframes_seed", "hsframe_seed"),
        description="Master seed of every random draw; derived seeds are used per"
        + " trial, dual and subset sample.",
    )
    workers: PositiveInt = Field(
        default=1, description="Number of worker threads running trials in parallel."
    )
    lambda_grid: list[LambdaValue] = Field(
        default_factory=lambda: [k / 10 for k in range(11)] + [0.5],
        min_length=1,
        description="Values of lambda used by the lambda-dependent checks.",
    )
    subset_mode: SubsetMode = Field(
        default="all",
        description="'all' for every subset (falling back to a random sample above"
        + " the exhaustive limit) or 'random:k' for k sampled subsets plus the"
        + " empty set, J, {0} and J without 0.",
        examples=["all", "random:64"],
    )
    exhaustive_subset_limit: PositiveInt = Field(
        default=12,
        le=24,
        description="Largest N for which mode 'all' enumerates all 2^N subsets.",
    )
    default_random_subsets: PositiveInt = Field(
        default=512,
        description="Sample size used by mode 'all' above the exhaustive limit.",
    )
    test_vectors: PositiveInt = Field(
        default=20,
        description="Number of test vectors f; the standard basis comes first.",
    )
    dual_scales: list[NonNegativeFloat] = Field(
        default_factory=lambda: [0.0, 0.1, 1.0],
        min_length=1,
        description="Perturbation scales of the alternate duals; 0 is the canonical"
        + " dual.",
    )
    weight_bound: float = Field(
        default=2.0,
        ge=1.0,
        description="Bound on |w_j| for the weighted identity; the weights are the"
        + " indicator of K^c plus a perturbation of modulus <= weight_bound - 1.",
    )
    output_format: OutputFormat = Field(
        default=OutputFormat.JSON, description="Format of the emitted reports."
    )


class VerifierConfig(ToleranceConfig, SweepConfig):
    """All settings consumed by the verifier service."""


def _boundary_subsets(size: int, singletons: Iterable[int]) -> list[SubsetMask]:
    """The empty set and J, then each given singleton followed by its complement."""
    forced = [SubsetMask.empty(size), SubsetMask.full(size)]
    for index in singletons:
        single = SubsetMask.from_indices(size, [index])
        forced.extend((single, single.complement()))
    unique: list[SubsetMask] = []
    for mask in forced:
        if mask not in unique:
            unique.append(mask)
    return unique


def select_subsets(
    size: int,
    mode: str,
    seed: int,
    *,
    exhaustive_limit: int = 12,
    default_random: int = 512,
) -> list[SubsetMask]:
    """Return the subsets K swept for an index set of `size` elements.

    Mode 'all' enumerates every subset in bitmask order when size is at most
    `exhaustive_limit`. Above it, the empty set, J, every singleton and every
    complement of a singleton come first, followed by `default_random` sampled
    subsets. Mode 'random:k' samples k distinct subsets after the empty set, J, {0}
    and J without 0. When fewer than k further subsets exist, all are returned.
    """
    kind, _, count_text = mode.partition(":")
    if kind == "all" and size <= exhaustive_limit:
        return [SubsetMask(size=size, bits=bits) for bits in range(1 << size)]
    if kind == "all":
        count = default_random
        forced = _boundary_subsets(size, range(size))
    else:
        count = int(count_text)
        forced = _boundary_subsets(size, [0])
    if (1 << size) - len(forced) <= count:
        return [SubsetMask(size=size, bits=bits) for bits in range(1 << size)]

    rng = substream(seed, _SUBSET_STREAM)
    seen = {mask.bits for mask in forced}
    sampled: list[SubsetMask] = []
    while len(sampled) < count:
        mask = SubsetMask.from_bool(rng.integers(0, 2, size=size).astype(bool))
        if mask.bits not in seen:
            seen.add(mask.bits)
            sampled.append(mask)
    return forced + sampled


class _TrialContext:
    """Everything the checks of one frame share, computed on first use."""

    def __init__(  # noqa: PLR0913
        self,
        *,
        frame: AnyFrame,
        seed: int,
        config: VerifierConfig,
        test_vectors: list[ComplexVector],
        supplied_dual: AnyFrame | None = None,
        allow_parsevalize: bool = True,
    ):
        self.frame = frame
        self.hs = to_hs_frame(frame)
        self.seed = seed
        self.config = config
        self.test_vectors = test_vectors
        self.supplied_dual = supplied_dual
        self.allow_parsevalize = allow_parsevalize

    @cached_property
    def subsets(self) -> list[SubsetMask]:
        """The swept subsets of J."""
        return select_subsets(
            self.hs.count,
            self.config.subset_mode,
            self.seed,
            exhaustive_limit=self.config.exhaustive_subset_limit,
            default_random=self.config.default_random_subsets,
        )

    @cached_property
    def duals(self) -> list[HSDualPair]:
        """The supplied dual, or one dual per configured scale."""
        if self.supplied_dual is not None:
            return [
                HSDualPair(
                    frame=self.hs,
                    dual=to_hs_frame(self.supplied_dual),
                    kind=DualKind.ALTERNATE,
                )
            ]
        duals = []
        for index, scale in enumerate(self.config.dual_scales):
            if scale == 0:
                duals.append(canonical_dual_hs(self.hs))
            else:
                dual_seed = derive_seed(self.seed, _DUAL_STREAM, index)
                duals.append(make_alternate_dual(self.hs, dual_seed, scale))
        return duals

    @cached_property
    def vector_duals(self) -> list[VectorFrame]:
        """The duals as vector frames; the embedded maps are the rows g_j*."""
        return [
            VectorFrame(synthesis_matrix=adjoint(pair.dual.stacked))
            for pair in self.duals
        ]

    @cached_property
    def weight_offsets(self) -> ComplexVector:
        """The perturbation added to the indicator weights."""
        return gen_bounded_weights(
            self.hs.count,
            self.config.weight_bound - 1.0,
            derive_seed(self.seed, _WEIGHT_STREAM),
        )

    @cached_property
    def parseval_hs(self) -> HSFrame:
        """The HS-frame itself if it is Parseval, otherwise its parsevalization."""
        return self._parseval(self.hs, self.hs.bounds)

    @cached_property
    def parseval_vector(self) -> VectorFrame:
        """The vector frame itself if it is Parseval, otherwise its parsevalization."""
        if not isinstance(self.frame, VectorFrame):
            raise TypeError("Not a vector frame")
        return self._parseval(self.frame, bounds_of(self.frame))

    @cached_property
    def sqrt_frame_operator(self) -> np.ndarray:
        """S^1/2 of the HS-frame."""
        return hermitian_fn(self.hs.frame_operator, MatrixFunction.SQRT)

    @cached_property
    def inv_sqrt_frame_operator(self) -> np.ndarray:
        """S^-1/2 of the HS-frame."""
        return hermitian_fn(self.hs.frame_operator, MatrixFunction.INV_SQRT)

    def _parseval[FrameType: (HSFrame, VectorFrame)](
        self, frame: FrameType, bounds: FrameBounds
    ) -> FrameType:
        if bounds.is_parseval(PARSEVAL_TOL):
            return frame
        if not self.allow_parsevalize:
            raise NotParsevalError(lower=bounds.lower, upper=bounds.upper)
        log.debug("Parsevalizing frame with bounds (%g, %g).", *bounds)
        return parsevalize(frame)


@dataclass(frozen=True, eq=False)
class _Case:
    """One point of a sweep."""

    ctx: _TrialContext
    subset: SubsetMask
    f_index: int | None
    lambda_: float | None
    dual_index: int | None

    @property
    def f(self) -> ComplexVector | None:
        """The test vector of this case, if any."""
        return None if self.f_index is None else self.ctx.test_vectors[self.f_index]

    @property
    def dual(self) -> HSDualPair | None:
        """The dual pair of this case, if any."""
        return None if self.dual_index is None else self.ctx.duals[self.dual_index]

    @property
    def tolerances(self) -> ToleranceConfig:
        """The tolerances of the sweep."""
        return self.ctx.config

    def request(self, **overrides) -> CheckRequest:
        """Build the check request of this case, replacing the given fields."""
        fields = {
            "frame": self.ctx.hs,
            "f": self.require_f(),
            "subset": self.subset,
            "dual": self.dual,
            "lambda_": self.lambda_,
            "tolerances": self.tolerances,
        }
        return CheckRequest(**(fields | overrides))

    def dual_operators(self) -> tuple[np.ndarray, np.ndarray]:
        """Return F_K and F_K^c for the dual of this case."""
        pair = self._dual_pair()
        indicator = self.subset.indicator()
        return (
            dual_partial_operator(pair.frame, pair.dual, indicator),
            dual_partial_operator(pair.frame, pair.dual, 1.0 - indicator),
        )

    def require_f(self) -> ComplexVector:
        if self.f is None:
            raise ValueError("This check needs a test vector")
        return self.f

    def _dual_pair(self) -> HSDualPair:
        if self.dual is None:
            raise ValueError("This check needs a dual")
        return self.dual

    def require_lambda(self) -> float:
        if self.lambda_ is None:
            raise ValueError("This check needs a lambda")
        return self.lambda_


def _lemma_pp(case: _Case) -> CheckReport:
    return identities.lemma_pp(*case.dual_operators(), case.tolerances)


def _lemma_pq(case: _Case) -> CheckReport:
    return identities.lemma_pq(*case.dual_operators(), case.tolerances)


def _prop_operator(case: _Case) -> CheckReport:
    return identities.prop_operator(
        *case.dual_operators(), case.require_lambda(), case.tolerances
    )


def _prop_selfadjoint(case: _Case) -> CheckReport:
    # P = S^-1/2 S_K S^-1/2 is self-adjoint with complement S^-1/2 S_K^c S^-1/2
    ctx = case.ctx
    inv_sqrt = ctx.inv_sqrt_frame_operator
    P = inv_sqrt @ partial_operator_hs(ctx.hs, case.subset) @ inv_sqrt
    return identities.prop_selfadjoint(
        P,
        np.eye(ctx.hs.n) - P,
        case.require_lambda(),
        ctx.sqrt_frame_operator @ case.require_f(),
        case.tolerances,
    )


def _parseval_identity(case: _Case) -> CheckReport:
    return identities.parseval_identity(
        case.request(frame=case.ctx.parseval_hs, dual=None)
    )


def _parseval_inequality(case: _Case) -> CheckReport:
    return identities.parseval_inequality(
        case.request(frame=case.ctx.parseval_hs, dual=None)
    )


def _canonical_dual(case: _Case) -> CheckReport:
    return identities.canonical_dual_check(case.request())


def _alternate_dual(case: _Case) -> CheckReport:
    return identities.alternate_dual_check(case.request())


def _complex_identity(case: _Case) -> CheckReport:
    return identities.complex_identity_check(case.request())


def _weighted_identity(case: _Case) -> CheckReport:
    weights = case.subset.complement().indicator() + case.ctx.weight_offsets
    return identities.weighted_identity_check(case.request(weights=weights))


def _frame_parseval_identity(case: _Case) -> CheckReport:
    return classical.frame_parseval_identity(
        case.ctx.parseval_vector, case.require_f(), case.subset, case.tolerances
    )


def _frame_parseval_inequality(case: _Case) -> CheckReport:
    return classical.frame_parseval_inequality(
        case.ctx.parseval_vector, case.require_f(), case.subset, case.tolerances
    )


def _frame_canonical_identity(case: _Case) -> CheckReport:
    return classical.frame_canonical_identity(
        _vector_frame(case), case.require_f(), case.subset, case.tolerances
    )


def _frame_canonical_inequality(case: _Case) -> CheckReport:
    return classical.frame_canonical_inequality(
        _vector_frame(case),
        case.require_f(),
        case.subset,
        case.require_lambda(),
        case.tolerances,
    )


def _frame_alternate_dual(case: _Case) -> CheckReport:
    return classical.frame_alternate_dual(
        _vector_frame(case),
        case.ctx.vector_duals[case.dual_index or 0],
        case.require_f(),
        case.subset,
        case.tolerances,
    )


def _frame_complex_identity(case: _Case) -> CheckReport:
    return classical.frame_complex_identity(
        _vector_frame(case),
        case.ctx.vector_duals[case.dual_index or 0],
        case.require_f(),
        case.subset,
        case.tolerances,
    )


def _vector_frame(case: _Case) -> VectorFrame:
    frame = case.ctx.frame
    if not isinstance(frame, VectorFrame):
        raise TypeError("Not a vector frame")
    return frame


_EVALUATORS: dict[Theorem, Callable[[_Case], CheckReport]] = {
    Theorem.LEMMA_PP: _lemma_pp,
    Theorem.LEMMA_PQ: _lemma_pq,
    Theorem.PROP_SELFADJOINT: _prop_selfadjoint,
    Theorem.PROP_OPERATOR: _prop_operator,
    Theorem.PARSEVAL_IDENTITY: _parseval_identity,
    Theorem.PARSEVAL_INEQUALITY: _parseval_inequality,
    Theorem.CANONICAL_DUAL: _canonical_dual,
    Theorem.ALTERNATE_DUAL: _alternate_dual,
    Theorem.COMPLEX_IDENTITY: _complex_identity,
    Theorem.WEIGHTED_IDENTITY: _weighted_identity,
    Theorem.FRAME_PARSEVAL_IDENTITY: _frame_parseval_identity,
    Theorem.FRAME_PARSEVAL_INEQUALITY: _frame_parseval_inequality,
    Theorem.FRAME_CANONICAL_IDENTITY: _frame_canonical_identity,
    Theorem.FRAME_CANONICAL_INEQUALITY: _frame_canonical_inequality,
    Theorem.FRAME_ALTERNATE_DUAL: _frame_alternate_dual,
    Theorem.FRAME_COMPLEX_IDENTITY: _frame_complex_identity,
}


def _cases(ctx: _TrialContext, theorem: Theorem) -> Iterator[_Case]:
    """Enumerate the sweep of one theorem in (dual, K, f, lambda) order."""
    dual_indices: Sequence[int | None] = (
        range(len(ctx.duals)) if theorem in DUAL_THEOREMS else [None]
    )
    f_indices: Sequence[int | None] = (
        [None] if theorem in OPERATOR_THEOREMS else range(len(ctx.test_vectors))
    )
    lambdas: Sequence[float | None] = (
        ctx.config.lambda_grid if theorem in LAMBDA_THEOREMS else [None]
    )
    for dual_index in dual_indices:
        for subset in ctx.subsets:
            for f_index in f_indices:
                for lambda_ in lambdas:
                    yield _Case(
                        ctx=ctx,
                        subset=subset,
                        f_index=f_index,
                        lambda_=lambda_,
                        dual_index=dual_index,
                    )


def _sweep(
    ctx: _TrialContext, theorems: Sequence[Theorem], trial: int | None
) -> list[CheckReport]:
    """Run every case of the selected theorems and attach the sweep context."""
    reports = []
    for theorem in theorems:
        log.debug("Sweeping '%s' (trial %s).", theorem, trial)
        evaluate = _EVALUATORS[theorem]
        for case in _cases(ctx, theorem):
            report = evaluate(case)
            context = {
                "trial": trial,
                "subset": str(case.subset),
                "f_index": case.f_index,
                "dual_index": case.dual_index,
            }
            # checks with a fixed lambda report it themselves
            if case.lambda_ is not None:
                context["lambda_"] = case.lambda_
            reports.append(report.model_copy(update=context))
    return reports


def _summarize(reports: list[CheckReport]) -> TheoremSummary:
    summary = TheoremSummary()
    for report in reports:
        summary.add(report)
    return summary


class FrameVerifier(FrameVerifierPort):
    """Generates frames and sweeps identity checks over them."""

    def __init__(
        self,
        *,
        config: VerifierConfig,
        frame_dao: FrameFileDaoPort,
        gen_spec_dao: GenSpecFileDaoPort,
        suite_config_dao: SuiteConfigFileDaoPort,
    ):
        self._config = config
        self._frame_dao = frame_dao
        self._gen_spec_dao = gen_spec_dao
        self._suite_config_dao = suite_config_dao

    async def generate_frame(self, *, spec_path: Path, out_path: Path) -> FrameBounds:
        """Generate the frame described by the GenSpec file and write it to
        `out_path`.

        Returns the bounds of the generated frame.
        """
        spec = await self._load(self._gen_spec_dao, spec_path)
        frame = await asyncio.to_thread(generate, spec)
        bounds = bounds_of(frame)
        await self._frame_dao.upsert(data=frame, path=out_path)
        log.info(
            "Generated '%s' frame written to %s with bounds A=%.12g B=%.12g.",
            spec.kind,
            out_path,
            bounds.lower,
            bounds.upper,
        )
        return bounds

    async def check(
        self, *, frame_path: Path, dual_path: Path | None, theorem: Theorem
    ) -> CheckRun:
        """Sweep one theorem over the frame stored in `frame_path`.

        If `dual_path` is given, that frame is validated as a dual and used for the
        dual-dependent theorems instead of the configured duals.

        Raises `FrameFileError` for unreadable inputs, `InvalidDualError` for a
        supplied dual that does not satisfy the duality identity and
        `UnknownTheoremError` for a theorem that does not apply to the frame.
        """
        frame = await self._load(self._frame_dao, frame_path)
        self._check_applicable(theorem, frame)
        dual = None
        if dual_path is not None:
            dual = await self._load(self._frame_dao, dual_path)
            self._validate_dual(frame, dual)

        ctx = _TrialContext(
            frame=frame,
            seed=self._config.seed,
            config=self._config,
            test_vectors=gen_test_vectors(
                to_hs_frame(frame).n, self._config.test_vectors, self._config.seed
            ),
            supplied_dual=dual,
            allow_parsevalize=False,
        )
        reports = await asyncio.to_thread(self._run_logged, ctx, [theorem], None)
        summary = _summarize(reports)
        log.info(
            "Checked '%s': %d checks, worst residual %.3e, worst margin %s, pass=%s.",
            theorem,
            summary.checks_run,
            summary.worst_residual,
            summary.worst_margin,
            summary.passed,
        )
        return CheckRun(theorem=theorem, reports=reports, summary=summary)

    async def run_suite(self, *, suite: SuiteConfig) -> SuiteRun:
        """Run the selected theorems over freshly generated frames, one per trial.

        The reports are ordered by trial, theorem, dual, subset, test vector and
        lambda regardless of how many workers ran the trials.
        """
        config = self._merge(suite)
        semaphore = asyncio.Semaphore(config.workers)

        async def run_trial(trial: int) -> list[CheckReport]:
            async with semaphore:
                return await asyncio.to_thread(self._run_trial, config, suite, trial)

        per_trial = await asyncio.gather(
            *(run_trial(trial) for trial in range(suite.trials))
        )
        reports = [report for trial_reports in per_trial for report in trial_reports]

        summary = SuiteSummary(seed=config.seed, trials=suite.trials)
        for theorem in suite.theorems:
            summary.theorems[theorem.value] = _summarize(
                [report for report in reports if report.theorem == theorem.value]
            )
        summary.passed = all(item.passed for item in summary.theorems.values())
        log.info(
            "Suite with seed %d over %d trials finished, pass=%s.",
            config.seed,
            suite.trials,
            summary.passed,
        )
        return SuiteRun(reports=reports, summary=summary)

    async def load_suite(self, *, path: Path) -> SuiteConfig:
        """Load a suite file.

        Raises `FrameFileError` if the file is missing or invalid.
        """
        return await self._load(self._suite_config_dao, path)

    def _run_trial(
        self, config: VerifierConfig, suite: SuiteConfig, trial: int
    ) -> list[CheckReport]:
        """Generate the frame of one trial and sweep every selected theorem."""
        trial_seed = derive_seed(config.seed, trial)
        frame = generate(suite.gen.with_seed(derive_seed(trial_seed, _FRAME_STREAM)))
        for theorem in suite.theorems:
            self._check_applicable(theorem, frame)
        ctx = _TrialContext(
            frame=frame,
            seed=trial_seed,
            config=config,
            test_vectors=gen_test_vectors(
                to_hs_frame(frame).n, config.test_vectors, trial_seed
            ),
        )
        return self._run_logged(ctx, suite.theorems, trial)

    def _run_logged(
        self, ctx: _TrialContext, theorems: Sequence[Theorem], trial: int | None
    ) -> list[CheckReport]:
        try:
            return _sweep(ctx, theorems, trial)
        except FrameToolkitError as err:
            log.error("Sweep of trial %s failed: %s", trial, err)
            raise

    def _merge(self, suite: SuiteConfig) -> VerifierConfig:
        """Overlay the settings given in a suite file onto the service config."""
        update: dict[str, object] = {}
        if suite.lambda_grid is not None:
            update["lambda_grid"] = suite.lambda_grid
        if suite.subset_mode is not None:
            update["subset_mode"] = suite.subset_mode
        if suite.dual_scales is not None:
            update["dual_scales"] = suite.dual_scales
        if suite.seed is not None:
            update["seed"] = suite.seed
        if suite.format is not None:
            update["output_format"] = suite.format
        if suite.tolerances is not None:
            update |= suite.tolerances.model_dump(exclude_none=True)
        return self._config.model_copy(update=update)

    def _check_applicable(self, theorem: Theorem, frame: AnyFrame) -> None:
        if theorem in CLASSICAL_THEOREMS and not isinstance(frame, VectorFrame):
            error = self.UnknownTheoremError(theorem, type(frame).__name__)
            log.error(error)
            raise error

    def _validate_dual(self, frame: AnyFrame, dual: AnyFrame) -> None:
        hs_frame = to_hs_frame(frame)
        tolerance = duality_tolerance(hs_frame.n, self._config.duality_tol_factor)
        check = is_alternate_dual_hs(hs_frame, to_hs_frame(dual), tol=tolerance)
        if not check.is_dual:
            error = self.InvalidDualError(
                check.residual, check.adjoint_residual, tolerance
            )
            log.error(error)
            raise error

    async def _load[OutputType](
        self, dao: FileDao[Any, OutputType], path: Path
    ) -> OutputType:
        try:
            return await dao.find(path=path)
        except ResourceNotFoundError as err:
            error = self.FrameFileError(path, "file not found")
            log.error(error)
            raise error from err
        except FileDao.DeserializationError as err:
            raise self.FrameFileError(path, str(err)) from err
