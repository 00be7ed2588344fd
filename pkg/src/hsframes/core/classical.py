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

"""Scalar forms of the frame identities, evaluated on the vectors themselves.

These mirror the HS-frame verifiers for the case G_j f = [[<f, f_j>]] but are
computed from analysis coefficients and vector sums only, so that comparing both
paths exercises the embedding.
"""

import numpy as np
import numpy.typing as npt

from hsframes.core.errors import MissingDualError, NotParsevalError
from hsframes.core.identities import PARSEVAL_TOL, ToleranceConfig, build_report
from hsframes.core.operators import ComplexVector, as_vector
from hsframes.core.vector_frames import (
    SubsetMask,
    VectorFrame,
    analysis,
    canonical_dual,
    frame_bounds,
    partial_operator,
)
from hsframes.models import CheckReport, Theorem

__all__ = [
    "frame_alternate_dual",
    "frame_canonical_identity",
    "frame_canonical_inequality",
    "frame_complex_identity",
    "frame_parseval_identity",
    "frame_parseval_inequality",
]


def frame_parseval_identity(
    frame: VectorFrame,
    f: npt.ArrayLike,
    subset: SubsetMask,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """For a Parseval frame check

    sum_K |<f, f_j>|^2 - ||sum_K <f, f_j> f_j||^2
        = sum_K^c |<f, f_j>|^2 - ||sum_K^c <f, f_j> f_j||^2.
    """
    _require_parseval(frame)
    f = as_vector(f, frame.n)
    coefficients, mask = analysis(frame, f), subset.as_bool()
    lhs = _energy(coefficients, mask) - _norm_sq(_synthesize(frame, coefficients, mask))
    rhs = _energy(coefficients, ~mask) - _norm_sq(
        _synthesize(frame, coefficients, ~mask)
    )
    return build_report(
        Theorem.FRAME_PARSEVAL_IDENTITY,
        lhs,
        rhs,
        scale=_scale(f, coefficients),
        tolerances=tolerances or ToleranceConfig(),
        subset=subset,
    )


def frame_parseval_inequality(
    frame: VectorFrame,
    f: npt.ArrayLike,
    subset: SubsetMask,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """For a Parseval frame check

    sum_K |<f, f_j>|^2 + ||sum_K^c <f, f_j> f_j||^2 >= 3/4 ||f||^2.
    """
    _require_parseval(frame)
    f = as_vector(f, frame.n)
    coefficients, mask = analysis(frame, f), subset.as_bool()
    lhs = _energy(coefficients, mask) + _norm_sq(
        _synthesize(frame, coefficients, ~mask)
    )
    rhs = _energy(coefficients, ~mask) + _norm_sq(
        _synthesize(frame, coefficients, mask)
    )
    return build_report(
        Theorem.FRAME_PARSEVAL_INEQUALITY,
        lhs,
        rhs,
        bound=0.75 * _norm_sq(f),
        scale=_scale(f, coefficients),
        tolerances=tolerances or ToleranceConfig(),
        subset=subset,
    )


def frame_canonical_identity(
    frame: VectorFrame,
    f: npt.ArrayLike,
    subset: SubsetMask,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """With the canonical dual {f~_j} check

    sum_K |<f, f_j>|^2 - sum_J |<S_K f, f~_j>|^2
        = sum_K^c |<f, f_j>|^2 - sum_J |<S_K^c f, f~_j>|^2.

    The dual sums run over all of J.
    """
    f = as_vector(f, frame.n)
    coefficients, mask = analysis(frame, f), subset.as_bool()
    dual_K, dual_Kc = _dual_energies(frame, f, subset)
    return build_report(
        Theorem.FRAME_CANONICAL_IDENTITY,
        _energy(coefficients, mask) - dual_K,
        _energy(coefficients, ~mask) - dual_Kc,
        scale=_scale(f, coefficients),
        tolerances=tolerances or ToleranceConfig(),
        subset=subset,
    )


def frame_canonical_inequality(  # noqa: PLR0913
    frame: VectorFrame,
    f: npt.ArrayLike,
    subset: SubsetMask,
    lambda_: float = 0.5,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """With the canonical dual {f~_j} check

    sum_K |<f, f_j>|^2 + sum_J |<S_K^c f, f~_j>|^2
        = sum_K^c |<f, f_j>|^2 + sum_J |<S_K f, f~_j>|^2
        >= (2 lambda - lambda^2) sum_K |<f, f_j>|^2
           + (1 - lambda^2) sum_K^c |<f, f_j>|^2,

    which for the default lambda = 1/2 is 3/4 sum_J |<f, f_j>|^2.
    """
    f = as_vector(f, frame.n)
    coefficients, mask = analysis(frame, f), subset.as_bool()
    dual_K, dual_Kc = _dual_energies(frame, f, subset)
    energy_K, energy_Kc = _energy(coefficients, mask), _energy(coefficients, ~mask)
    return build_report(
        Theorem.FRAME_CANONICAL_INEQUALITY,
        energy_K + dual_Kc,
        energy_Kc + dual_K,
        bound=(2 * lambda_ - lambda_**2) * energy_Kc + (1 - lambda_**2) * energy_K,
        scale=_scale(f, coefficients),
        tolerances=tolerances or ToleranceConfig(),
        subset=subset,
        lambda_=lambda_,
    )


def frame_alternate_dual(  # noqa: PLR0913
    frame: VectorFrame,
    dual: VectorFrame | None,
    f: npt.ArrayLike,
    subset: SubsetMask,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """For an alternate dual {g_j} check

    Re sum_K <f, g_j> conj<f, f_j> + ||sum_K^c <f, g_j> f_j||^2
        = Re sum_K^c <f, g_j> conj<f, f_j> + ||sum_K <f, g_j> f_j||^2
        >= 3/4 ||f||^2.
    """
    if dual is None:
        raise MissingDualError(Theorem.FRAME_ALTERNATE_DUAL)
    f = as_vector(f, frame.n)
    coefficients = analysis(frame, f)
    dual_coefficients, mask = analysis(dual, f), subset.as_bool()
    products = dual_coefficients * coefficients.conj()
    lhs = complex(np.sum(products[mask])).real + _norm_sq(
        _synthesize(frame, dual_coefficients, ~mask)
    )
    rhs = complex(np.sum(products[~mask])).real + _norm_sq(
        _synthesize(frame, dual_coefficients, mask)
    )
    return build_report(
        Theorem.FRAME_ALTERNATE_DUAL,
        lhs,
        rhs,
        bound=0.75 * _norm_sq(f),
        scale=_scale(f, coefficients),
        tolerances=tolerances or ToleranceConfig(),
        subset=subset,
        lambda_=0.5,
    )


def frame_complex_identity(  # noqa: PLR0913
    frame: VectorFrame,
    dual: VectorFrame | None,
    f: npt.ArrayLike,
    subset: SubsetMask,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """For an alternate dual {g_j} check

    sum_K <f, g_j> conj<f, f_j> - ||sum_K <f, g_j> f_j||^2
        = conj(sum_K^c <f, g_j> conj<f, f_j>) - ||sum_K^c <f, g_j> f_j||^2.
    """
    if dual is None:
        raise MissingDualError(Theorem.FRAME_COMPLEX_IDENTITY)
    f = as_vector(f, frame.n)
    coefficients = analysis(frame, f)
    dual_coefficients, mask = analysis(dual, f), subset.as_bool()
    products = dual_coefficients * coefficients.conj()
    lhs = complex(np.sum(products[mask])) - _norm_sq(
        _synthesize(frame, dual_coefficients, mask)
    )
    rhs = complex(np.sum(products[~mask])).conjugate() - _norm_sq(
        _synthesize(frame, dual_coefficients, ~mask)
    )
    return build_report(
        Theorem.FRAME_COMPLEX_IDENTITY,
        lhs,
        rhs,
        scale=_scale(f, coefficients),
        tolerances=tolerances or ToleranceConfig(),
        subset=subset,
    )


def _norm_sq(vector: ComplexVector) -> float:
    return float(np.vdot(vector, vector).real)


def _energy(coefficients: ComplexVector, mask: npt.NDArray[np.bool_]) -> float:
    return float(np.sum(np.abs(coefficients[mask]) ** 2))


def _synthesize(
    frame: VectorFrame, coefficients: ComplexVector, mask: npt.NDArray[np.bool_]
) -> ComplexVector:
    """Return sum_{j in mask} c_j f_j."""
    return frame.synthesis_matrix[:, mask] @ coefficients[mask]


def _scale(f: ComplexVector, coefficients: ComplexVector) -> float:
    return max(1.0, _norm_sq(f), float(np.sum(np.abs(coefficients) ** 2)))


def _dual_energies(
    frame: VectorFrame, f: ComplexVector, subset: SubsetMask
) -> tuple[float, float]:
    """Return sum_J |<S_K f, f~_j>|^2 and sum_J |<S_K^c f, f~_j>|^2."""
    dual = canonical_dual(frame)
    S_K_f = partial_operator(frame, subset) @ f
    S_Kc_f = partial_operator(frame, subset.complement()) @ f
    return (
        float(np.sum(np.abs(analysis(dual, S_K_f)) ** 2)),
        float(np.sum(np.abs(analysis(dual, S_Kc_f)) ** 2)),
    )


def _require_parseval(frame: VectorFrame) -> None:
    bounds = frame_bounds(frame)
    if not bounds.is_parseval(PARSEVAL_TOL):
        raise NotParsevalError(lower=bounds.lower, upper=bounds.upper)
