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

"""Entrypoint of the package"""

import asyncio
from collections.abc import Coroutine
from pathlib import Path
from typing import Annotated, Any

import typer

from hsframes.main import (
    INPUT_ERRORS,
    ExitCode,
    check_frame,
    generate_frame,
    run_suite,
)
from hsframes.models import OutputFormat, Theorem

cli = typer.Typer(no_args_is_help=True)


def _parse_floats(text: str | None) -> list[float] | None:
    if text is None:
        return None
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as err:
        message = f"Not a comma separated list of numbers: {text}"
        raise typer.BadParameter(message) from err


def _run(command: Coroutine[Any, Any, ExitCode]) -> None:
    """Run a command, reporting input errors on stderr with exit code 2."""
    try:
        exit_code = asyncio.run(command)
    except INPUT_ERRORS as err:
        typer.echo(f"Error: {err}", err=True)
        raise typer.Exit(code=ExitCode.INPUT_ERROR) from err
    raise typer.Exit(code=exit_code)


ConfigOption = Annotated[
    Path | None, typer.Option("--config", help="YAML file with service settings.")
]
OutOption = Annotated[
    Path | None, typer.Option("--out", help="Write the output here instead of stdout.")
]
LambdaGridOption = Annotated[
    str | None,
    typer.Option(
        "--lambda-grid", "--lambda", help="Comma separated lambda values in [0, 1]."
    ),
]
SubsetModeOption = Annotated[
    str | None, typer.Option("--subset-mode", help="'all' or 'random:k'.")
]
TolEqOption = Annotated[
    float | None, typer.Option("--tol-eq", help="Relative tolerance of identities.")
]
TolIneqOption = Annotated[
    float | None,
    typer.Option("--tol-ineq", help="Relative tolerance of inequalities."),
]
SeedOption = Annotated[int | None, typer.Option("--seed", help="Master seed.")]
FormatOption = Annotated[
    OutputFormat | None, typer.Option("--format", help="Report format.")
]
WorkersOption = Annotated[
    int | None, typer.Option("--workers", help="Number of worker threads.")
]
DualScalesOption = Annotated[
    str | None,
    typer.Option(
        "--dual-scales",
        help="Comma separated perturbation scales of the duals (0 = canonical).",
    ),
]


@cli.command(name="gen")
def sync_generate(
    spec: Annotated[Path, typer.Argument(help="GenSpec JSON file.")],
    out: Annotated[Path, typer.Option("--out", help="Frame file to write.")],
    config: ConfigOption = None,
):
    """Generate a frame from a recipe, write it and print its bounds."""
    _run(generate_frame(spec_path=spec, out_path=out, config_yaml=config))


@cli.command(name="check")
def sync_check(  # noqa: PLR0913
    frame: Annotated[Path, typer.Option("--frame", help="Frame file to check.")],
    theorem: Annotated[Theorem, typer.Option("--theorem", help="Check to sweep.")],
    dual: Annotated[
        Path | None, typer.Option("--dual", help="Dual frame file to use.")
    ] = None,
    lambda_grid: LambdaGridOption = None,
    subset_mode: SubsetModeOption = None,
    tol_eq: TolEqOption = None,
    tol_ineq: TolIneqOption = None,
    seed: SeedOption = None,
    output_format: FormatOption = None,
    dual_scales: DualScalesOption = None,
    out: OutOption = None,
    config: ConfigOption = None,
):
    """Sweep one theorem over a frame file; exits 1 if any check fails."""
    _run(
        check_frame(
            frame_path=frame,
            dual_path=dual,
            theorem=theorem,
            out_path=out,
            config_yaml=config,
            lambda_grid=_parse_floats(lambda_grid),
            subset_mode=subset_mode,
            tol_eq=tol_eq,
            tol_ineq=tol_ineq,
            seed=seed,
            output_format=output_format,
            dual_scales=_parse_floats(dual_scales),
        )
    )


@cli.command(name="suite")
def sync_suite(  # noqa: PLR0913
    suite: Annotated[Path, typer.Argument(help="SuiteConfig JSON file.")],
    trials: Annotated[
        int | None, typer.Option("--trials", help="Number of trials.")
    ] = None,
    theorem: Annotated[
        list[Theorem] | None,
        typer.Option("--theorem", help="Theorem to run; repeat for several."),
    ] = None,
    lambda_grid: LambdaGridOption = None,
    subset_mode: SubsetModeOption = None,
    tol_eq: TolEqOption = None,
    tol_ineq: TolIneqOption = None,
    seed: SeedOption = None,
    output_format: FormatOption = None,
    dual_scales: DualScalesOption = None,
    workers: WorkersOption = None,
    out: OutOption = None,
    config: ConfigOption = None,
):
    """Run a suite of theorems over freshly generated frames; exits 1 if any
    check fails.
    """
    tolerances = {
        key: value
        for key, value in (("tol_eq", tol_eq), ("tol_ineq", tol_ineq))
        if value is not None
    }
    _run(
        run_suite(
            suite_path=suite,
            out_path=out,
            config_yaml=config,
            suite_overrides={
                "trials": trials,
                "theorems": theorem or None,
                "lambda_grid": _parse_floats(lambda_grid),
                "subset_mode": subset_mode,
                "tolerances": tolerances or None,
                "seed": seed,
                "format": output_format,
                "dual_scales": _parse_floats(dual_scales),
            },
            workers=workers,
        )
    )
