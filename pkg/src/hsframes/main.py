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

"""Top-level coroutines behind the commands of the command line interface.

Each returns the exit code of its command; input errors propagate to the caller.
"""

import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import Any

from hexkit.log import configure_logging
from pydantic import ValidationError

from hsframes.adapters.outbound.dao import FileDaoFactory
from hsframes.adapters.outbound.reports import (
    render_bounds,
    render_check,
    render_suite,
)
from hsframes.config import Config
from hsframes.core.errors import FrameToolkitError
from hsframes.inject import prepare_core
from hsframes.models import SuiteConfig, Theorem
from hsframes.ports.inbound.verifier import FrameVerifierPort
from hsframes.ports.outbound.dao import FileDao

__all__ = [
    "INPUT_ERRORS",
    "ExitCode",
    "check_frame",
    "generate_frame",
    "load_config",
    "run_suite",
]

log = logging.getLogger(__name__)

# errors that mean the inputs were unusable, as opposed to a failed check
INPUT_ERRORS: tuple[type[Exception], ...] = (
    FrameToolkitError,
    FrameVerifierPort.FrameFileError,
    FrameVerifierPort.InvalidDualError,
    FrameVerifierPort.UnknownTheoremError,
    FileDao.SerializationError,
    ValidationError,
    OSError,
)


class ExitCode(IntEnum):
    """Exit codes of the commands."""

    PASSED = 0
    FAILED = 1
    INPUT_ERROR = 2


def load_config(config_yaml: Path | None = None, **overrides: Any) -> Config:
    """Build the config from the YAML file, the environment and the given
    overrides, ignoring overrides that are None.
    """
    settings = {key: value for key, value in overrides.items() if value is not None}
    if config_yaml is not None:
        return Config(config_yaml=config_yaml, **settings)
    return Config(**settings)


async def _emit(text: str, out_path: Path | None) -> None:
    """Write the rendered output to the file or, without one, to stdout."""
    if out_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    async with FileDaoFactory.construct() as dao_factory:
        await dao_factory.get_report_dao().upsert(data=text, path=out_path)


async def generate_frame(
    *, spec_path: Path, out_path: Path, config_yaml: Path | None = None
) -> ExitCode:
    """Generate a frame from a GenSpec file and print its bounds."""
    config = load_config(config_yaml)
    configure_logging(config=config)

    async with prepare_core(config=config) as frame_verifier:
        bounds = await frame_verifier.generate_frame(
            spec_path=spec_path, out_path=out_path
        )
    await _emit(render_bounds(bounds) + "\n", None)
    return ExitCode.PASSED


async def check_frame(  # noqa: PLR0913
    *,
    frame_path: Path,
    dual_path: Path | None,
    theorem: Theorem,
    out_path: Path | None = None,
    config_yaml: Path | None = None,
    **overrides: Any,
) -> ExitCode:
    """Sweep one theorem over a frame file and emit a report per check."""
    config = load_config(config_yaml, **overrides)
    configure_logging(config=config)

    async with prepare_core(config=config) as frame_verifier:
        run = await frame_verifier.check(
            frame_path=frame_path, dual_path=dual_path, theorem=theorem
        )
    await _emit(render_check(run, config.output_format), out_path)
    return ExitCode.PASSED if run.summary.passed else ExitCode.FAILED


async def run_suite(
    *,
    suite_path: Path,
    out_path: Path | None = None,
    config_yaml: Path | None = None,
    suite_overrides: dict[str, Any] | None = None,
    **overrides: Any,
) -> ExitCode:
    """Run a suite file, with the given fields of the suite replaced."""
    config = load_config(config_yaml, **overrides)
    configure_logging(config=config)

    async with prepare_core(config=config) as frame_verifier:
        suite = await frame_verifier.load_suite(path=suite_path)
        suite = _override_suite(suite, suite_overrides or {})
        run = await frame_verifier.run_suite(suite=suite)
    await _emit(render_suite(run, suite.format or config.output_format), out_path)
    return ExitCode.PASSED if run.summary.passed else ExitCode.FAILED


def _override_suite(suite: SuiteConfig, overrides: dict[str, Any]) -> SuiteConfig:
    update = {key: value for key, value in overrides.items() if value is not None}
    tolerances = update.pop("tolerances", {})
    if tolerances:
        current = suite.tolerances.model_dump() if suite.tolerances else {}
        update["tolerances"] = current | tolerances
    if not update:
        return suite
    log.debug("Overriding suite fields: %s", ", ".join(sorted(update)))
    return SuiteConfig.model_validate(
        suite.model_dump(by_alias=True, exclude_none=True) | update
    )
