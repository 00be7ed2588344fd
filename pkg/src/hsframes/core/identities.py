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

"""Verifiers for the HS-frame identities and inequalities and for the operator
lemmas they rest on.

Every verifier evaluates both sides of its statement independently and returns a
`CheckReport`. Equalities pass when |lhs - rhs| <= tol_eq * scale, inequalities
when the margin is >= -tol_ineq * scale. The scale is max(1, ||f||^2,
sum_J ||G_j f||_2^2) for frame statements.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
import numpy.typing as npt
from pydantic import Field, PositiveFloat
from pydantic_settings import BaseSettings

from hsframes.core.errors import (
    DimensionError,
    InvalidInputError,
    InvalidParameterError,
    MissingDualError,
    MissingWeightsError,
    NotParsevalError,
)
from hsframes.core.hs_frames import HSDualPair, HSFrame
from hsframes.core.operators import (
    ComplexMatrix,
    ComplexVector,
    adjoint,
    as_complex_matrix,
    as_vector,
    ensure_hermitian,
    hermitian_eig,
    inner,
)
from hsframes.core.vector_frames import SubsetMask
from hsframes.models import CheckReport, Theorem

__all__ = [
    "PARSEVAL_TOL",
    "CheckRequest",
    "ToleranceConfig",
    "alternate_dual_check",
    "build_report",
    "canonical_dual_check",
    "check_scale",
    "complex_identity_check",
    "lemma_pp",
    "lemma_pq",
    "parseval_identity",
    "parseval_inequality",
    "prop_operator",
    "prop_selfadjoint",
    "weighted_identity_check",
]

# distance of both frame bounds from 1 accepted for a Parseval frame
PARSEVAL_TOL = 1e-8


class ToleranceConfig(BaseSettings):
    """Tolerances applied when deciding whether a check passes."""

    tol_eq: PositiveFloat = Field(
        default=1e-9,
        description="Relative tolerance on the residual of an equality.",
    )
    tol_ineq: PositiveFloat = Field(
        default=1e-10,
        description="Relative tolerance on a negative inequality margin.",
    )
    duality_tol_factor: PositiveFloat = Field(
        default=1e-9,
        description=(
            "Tolerance factor for ||sum G_j* Gamma_j - I||_F; multiplied by sqrt(n)."
        ),
    )


@dataclass(frozen=True, eq=False)
class CheckRequest:
    """Inputs of a single frame check: the frame, a subset K, a test vector f and,
    depending on the statement, a dual pair, a lambda or a weight sequence.
    """

    frame: HSFrame
    f: ComplexVector
    subset: SubsetMask
    dual: HSDualPair | None = None
    lambda_: float | None = None
    weights: npt.NDArray[np.complex128] | None = None
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)

    def __post_init__(self):
        object.__setattr__(self, "f", as_vector(self.f, self.frame.n))
        if self.subset.size != self.frame.count:
            raise DimensionError("subset", self.frame.count, self.subset.size)
        if self.lambda_ is not None and not 0.0 <= self.lambda_ <= 1.0:
            raise InvalidParameterError("lambda", self.lambda_, "must lie in [0, 1]")
        if self.dual is not None and self.dual.frame is not self.frame:
            raise InvalidInputError("The dual pair belongs to another frame")
        if self.weights is not None:
            weights = np.asarray(self.weights, dtype=np.complex128)
            if weights.shape != (self.frame.count,):
                raise DimensionError(
                    "weight sequence", (self.frame.count,), weights.shape
                )
            if not np.all(np.isfinite(weights)):
                raise InvalidInputError("Weights must be finite")
            object.__setattr__(self, "weights", weights)


class _DualTerms(NamedTuple):
    """The four terms shared by the dual-frame identities.

    `weighted` is sum_j w_j [Gamma_j f, G_j f], `rest` the same sum with 1 - w_j,
    `weighted_norm` is ||sum_j w_j G_j* Gamma_j f||^2 and `rest_norm` the same with
    1 - w_j.
    """

    weighted: complex
    rest: complex
    weighted_norm: float
    rest_norm: float


def check_scale(frame: HSFrame, f: ComplexVector) -> float:
    """Return max(1, ||f||^2, sum_J ||G_j f||_2^2)."""
    return max(1.0, _norm_sq(f), float(np.sum(_image_norms(frame, f))))


def build_report(  # noqa: PLR0913
    theorem: Theorem,
    lhs: complex,
    rhs: complex,
    *,
    scale: float,
    tolerances: ToleranceConfig,
    residual: float | None = None,
    bound: float | None = None,
    margin: float | None = None,
    subset: SubsetMask | None = None,
    lambda_: float | None = None,
) -> CheckReport:
    """Assemble a report and decide whether it passes.

    The residual defaults to |lhs - rhs| and the margin to Re(lhs) - bound.
    """
    lhs, rhs = complex(lhs), complex(rhs)
    if residual is None:
        residual = abs(lhs - rhs)
    if margin is None and bound is not None:
        margin = lhs.real - bound
    passed = residual <= tolerances.tol_eq * scale
    if margin is not None:
        passed = passed and margin >= -tolerances.tol_ineq * scale
    return CheckReport(
        theorem=theorem.value,
        lhs=(lhs.real, lhs.imag),
        rhs=(rhs.real, rhs.imag),
        residual=float(residual),
        bound=None if bound is None else float(bound),
        margin=None if margin is None else float(margin),
        passed=bool(passed),
        scale=float(scale),
        subset=None if subset is None else str(subset),
        lambda_=lambda_,
    )


def lemma_pp(
    P: npt.ArrayLike, Q: npt.ArrayLike, tolerances: ToleranceConfig | None = None
) -> CheckReport:
    """Check P - P*P = Q* - Q*Q for P + Q = I.

    lhs and rhs are the traces of both sides; the residual is the Frobenius norm of
    their difference.
    """
    tolerances = tolerances or ToleranceConfig()
    P, Q = _complementary_pair(P, Q, tolerances)
    left = P - adjoint(P) @ P
    right = adjoint(Q) - adjoint(Q) @ Q
    return build_report(
        Theorem.LEMMA_PP,
        np.trace(left),
        np.trace(right),
        residual=float(np.linalg.norm(left - right)),
        scale=_operator_scale(P),
        tolerances=tolerances,
    )


def lemma_pq(
    P: npt.ArrayLike, Q: npt.ArrayLike, tolerances: ToleranceConfig | None = None
) -> CheckReport:
    """Check P + Q*Q = Q* + P*P for P + Q = I."""
    tolerances = tolerances or ToleranceConfig()
    P, Q = _complementary_pair(P, Q, tolerances)
    left = P + adjoint(Q) @ Q
    right = adjoint(Q) + adjoint(P) @ P
    return build_report(
        Theorem.LEMMA_PQ,
        np.trace(left),
        np.trace(right),
        residual=float(np.linalg.norm(left - right)),
        scale=_operator_scale(P),
        tolerances=tolerances,
    )


def prop_selfadjoint(
    P: npt.ArrayLike,
    Q: npt.ArrayLike,
    lambda_: float,
    f: npt.ArrayLike,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """Check, for self-adjoint P + Q = I,

        ||Pf||^2 + 2 lambda <Qf, f> = ||Qf||^2 + 2 (1 - lambda) <Pf, f>
                                      + (2 lambda - 1) ||f||^2
                                    >= (2 lambda - lambda^2) ||f||^2.
    """
    tolerances = tolerances or ToleranceConfig()
    _check_lambda(lambda_)
    P = ensure_hermitian(P)
    Q = ensure_hermitian(Q)
    P, Q = _complementary_pair(P, Q, tolerances)
    f = as_vector(f, P.shape[0])
    Pf, Qf = P @ f, Q @ f
    norm_f = _norm_sq(f)
    lhs = _norm_sq(Pf) + 2 * lambda_ * inner(Qf, f)
    rhs = _norm_sq(Qf) + 2 * (1 - lambda_) * inner(Pf, f) + (2 * lambda_ - 1) * norm_f
    return build_report(
        Theorem.PROP_SELFADJOINT,
        lhs,
        rhs,
        bound=(2 * lambda_ - lambda_**2) * norm_f,
        scale=max(1.0, norm_f, _norm_sq(Pf), _norm_sq(Qf)),
        tolerances=tolerances,
        lambda_=lambda_,
    )


def prop_operator(
    P: npt.ArrayLike,
    Q: npt.ArrayLike,
    lambda_: float,
    tolerances: ToleranceConfig | None = None,
) -> CheckReport:
    """Check, for P + Q = I,

        P*P + lambda (Q* + Q) = Q*Q + (1 - lambda)(P* + P) + (2 lambda - 1) I
                              >= (2 lambda - lambda^2) I

    in the Loewner order. The bound is the scalar 2 lambda - lambda^2 and the margin
    the smallest eigenvalue of the left side minus that multiple of I.
    """
    tolerances = tolerances or ToleranceConfig()
    _check_lambda(lambda_)
    P, Q = _complementary_pair(P, Q, tolerances)
    identity = np.eye(P.shape[0])
    left = adjoint(P) @ P + lambda_ * (adjoint(Q) + Q)
    right = (
        adjoint(Q) @ Q
        + (1 - lambda_) * (adjoint(P) + P)
        + (2 * lambda_ - 1) * identity
    )
    bound = 2 * lambda_ - lambda_**2
    slack = left - bound * identity
    margin = hermitian_eig((slack + adjoint(slack)) / 2).lambda_min
    return build_report(
        Theorem.PROP_OPERATOR,
        np.trace(left),
        np.trace(right),
        residual=float(np.linalg.norm(left - right)),
        bound=bound,
        margin=margin,
        scale=_operator_scale(P),
        tolerances=tolerances,
        lambda_=lambda_,
    )


def parseval_identity(req: CheckRequest) -> CheckReport:
    """Check, for a Parseval HS-frame,

        sum_K ||G_j f||^2 - ||S_K f||^2 = sum_K^c ||G_j f||^2 - ||S_K^c f||^2.
    """
    _require_parseval(req.frame)
    norms = _image_norms(req.frame, req.f)
    mask = req.subset.as_bool()
    S_K_f = _partial_apply(req.frame, req.frame, req.f, mask)
    S_Kc_f = _partial_apply(req.frame, req.frame, req.f, ~mask)
    lhs = float(np.sum(norms[mask])) - _norm_sq(S_K_f)
    rhs = float(np.sum(norms[~mask])) - _norm_sq(S_Kc_f)
    return build_report(
        Theorem.PARSEVAL_IDENTITY,
        lhs,
        rhs,
        scale=check_scale(req.frame, req.f),
        tolerances=req.tolerances,
        subset=req.subset,
    )


def parseval_inequality(req: CheckRequest) -> CheckReport:
    """Check, for a Parseval HS-frame,

        sum_K ||G_j f||^2 + ||S_K^c f||^2 >= 3/4 ||f||^2.

    The right side of the report is the mirrored expression
    sum_K^c ||G_j f||^2 + ||S_K f||^2, which equals the left one.
    """
    _require_parseval(req.frame)
    norms = _image_norms(req.frame, req.f)
    mask = req.subset.as_bool()
    S_K_f = _partial_apply(req.frame, req.frame, req.f, mask)
    S_Kc_f = _partial_apply(req.frame, req.frame, req.f, ~mask)
    lhs = float(np.sum(norms[mask])) + _norm_sq(S_Kc_f)
    rhs = float(np.sum(norms[~mask])) + _norm_sq(S_K_f)
    return build_report(
        Theorem.PARSEVAL_INEQUALITY,
        lhs,
        rhs,
        bound=0.75 * _norm_sq(req.f),
        scale=check_scale(req.frame, req.f),
        tolerances=req.tolerances,
        subset=req.subset,
    )


def canonical_dual_check(req: CheckRequest) -> CheckReport:
    """Check, with the canonical dual G~_j = G_j S^-1,

        sum_J ||G~_j S_K f||^2 + sum_K^c ||G_j f||^2
            = sum_J ||G~_j S_K^c f||^2 + sum_K ||G_j f||^2
            >= (2 lambda - lambda^2) sum_K ||G_j f||^2
               + (1 - lambda^2) sum_K^c ||G_j f||^2.

    The dual sums run over all of J. In addition sum_J ||G~_j S_K f||^2 must equal
    <S^-1 S_K f, S_K f>; the reported residual is the larger of both residuals.
    """
    lambda_ = _require_lambda(req)
    frame = req.frame
    inverse = frame.inverse_frame_operator
    norms = _image_norms(frame, req.f)
    mask = req.subset.as_bool()
    S_K_f = _partial_apply(frame, frame, req.f, mask)
    S_Kc_f = _partial_apply(frame, frame, req.f, ~mask)
    # G~_j x = G_j (S^-1 x)
    dual_sum_K = float(np.sum(_image_norms(frame, inverse @ S_K_f)))
    dual_sum_Kc = float(np.sum(_image_norms(frame, inverse @ S_Kc_f)))
    sum_K = float(np.sum(norms[mask]))
    sum_Kc = float(np.sum(norms[~mask]))
    lhs = dual_sum_K + sum_Kc
    rhs = dual_sum_Kc + sum_K
    chain_residual = abs(dual_sum_K - inner(inverse @ S_K_f, S_K_f))
    return build_report(
        Theorem.CANONICAL_DUAL,
        lhs,
        rhs,
        residual=max(abs(lhs - rhs), chain_residual),
        bound=(2 * lambda_ - lambda_**2) * sum_K + (1 - lambda_**2) * sum_Kc,
        scale=check_scale(frame, req.f),
        tolerances=req.tolerances,
        subset=req.subset,
        lambda_=lambda_,
    )


def alternate_dual_check(req: CheckRequest) -> CheckReport:
    """Check, for an alternate dual {Gamma_j},

        Re sum_K^c [Gamma_j f, G_j f] + ||F_K f||^2
            = Re sum_K [Gamma_j f, G_j f] + ||F_K^c f||^2
            >= (2 lambda - lambda^2) Re sum_K [.] + (1 - lambda^2) Re sum_K^c [.]

    with F_K = sum_K G_j* Gamma_j.
    """
    lambda_ = _require_lambda(req)
    terms = _dual_terms(
        req, Theorem.ALTERNATE_DUAL, req.subset.complement().indicator()
    )
    # weights are the indicator of K^c: `weighted` sums over K^c, `rest` over K
    lhs = terms.weighted.real + terms.rest_norm
    rhs = terms.rest.real + terms.weighted_norm
    return build_report(
        Theorem.ALTERNATE_DUAL,
        lhs,
        rhs,
        bound=(2 * lambda_ - lambda_**2) * terms.rest.real
        + (1 - lambda_**2) * terms.weighted.real,
        scale=check_scale(req.frame, req.f),
        tolerances=req.tolerances,
        subset=req.subset,
        lambda_=lambda_,
    )


def complex_identity_check(req: CheckRequest) -> CheckReport:
    """Check, for an alternate dual {Gamma_j},

        sum_K^c [Gamma_j f, G_j f] + ||F_K f||^2
            = conj(sum_K [Gamma_j f, G_j f]) + ||F_K^c f||^2

    on both the real and the imaginary part.
    """
    terms = _dual_terms(
        req, Theorem.COMPLEX_IDENTITY, req.subset.complement().indicator()
    )
    return build_report(
        Theorem.COMPLEX_IDENTITY,
        terms.weighted + terms.rest_norm,
        terms.rest.conjugate() + terms.weighted_norm,
        scale=check_scale(req.frame, req.f),
        tolerances=req.tolerances,
        subset=req.subset,
    )


def weighted_identity_check(req: CheckRequest) -> CheckReport:
    """Check, for an alternate dual {Gamma_j} and bounded weights {w_j},

        sum_J w_j [Gamma_j f, G_j f] + ||sum_J (1 - w_j) G_j* Gamma_j f||^2
            = conj(sum_J (1 - w_j) [Gamma_j f, G_j f])
              + ||sum_J w_j G_j* Gamma_j f||^2.

    For the indicator weights of K^c both sides coincide with those of
    `complex_identity_check`.
    """
    if req.weights is None:
        raise MissingWeightsError()
    terms = _dual_terms(req, Theorem.WEIGHTED_IDENTITY, req.weights)
    return build_report(
        Theorem.WEIGHTED_IDENTITY,
        terms.weighted + terms.rest_norm,
        terms.rest.conjugate() + terms.weighted_norm,
        scale=check_scale(req.frame, req.f),
        tolerances=req.tolerances,
        subset=req.subset,
    )


def _norm_sq(vector: ComplexVector) -> float:
    return float(np.vdot(vector, vector).real)


def _operator_scale(P: ComplexMatrix) -> float:
    return max(1.0, float(np.linalg.norm(P)) ** 2)


def _check_lambda(lambda_: float) -> None:
    if not 0.0 <= lambda_ <= 1.0:
        raise InvalidParameterError("lambda", lambda_, "must lie in [0, 1]")


def _require_lambda(req: CheckRequest) -> float:
    if req.lambda_ is None:
        raise InvalidParameterError("lambda", None, "is required for this check")
    return req.lambda_


def _require_parseval(frame: HSFrame) -> None:
    bounds = frame.bounds
    if not bounds.is_parseval(PARSEVAL_TOL):
        raise NotParsevalError(lower=bounds.lower, upper=bounds.upper)


def _complementary_pair(
    P: npt.ArrayLike, Q: npt.ArrayLike, tolerances: ToleranceConfig
) -> tuple[ComplexMatrix, ComplexMatrix]:
    P = as_complex_matrix(P)
    Q = as_complex_matrix(Q)
    if P.shape[0] != P.shape[1]:
        raise DimensionError("operator", "a square matrix", P.shape)
    if Q.shape != P.shape:
        raise DimensionError("complementary operator", P.shape, Q.shape)
    residual = float(np.linalg.norm(P + Q - np.eye(P.shape[0])))
    if residual > tolerances.tol_eq * max(1.0, float(np.linalg.norm(P))):
        raise InvalidInputError("P + Q must equal the identity", residual)
    return P, Q


def _image_vectors(frame: HSFrame, f: ComplexVector) -> ComplexMatrix:
    """Return the N x m^2 array whose row j is vec(G_j f)."""
    return (frame.stacked @ f).reshape(frame.count, frame.m**2)


def _image_norms(frame: HSFrame, f: ComplexVector) -> npt.NDArray[np.float64]:
    """Return ||G_j f||_2^2 for every j."""
    images = _image_vectors(frame, f)
    return np.sum(np.abs(images) ** 2, axis=1)


def _contributions(
    frame: HSFrame, dual: HSFrame, f: ComplexVector
) -> npt.NDArray[np.complex128]:
    """Return the N x n array whose row j is G_j* Gamma_j f."""
    blocks = frame.stacked.reshape(frame.count, frame.m**2, frame.n)
    return np.einsum("jkn,jk->jn", blocks.conj(), _image_vectors(dual, f))


def _partial_apply(
    frame: HSFrame,
    dual: HSFrame,
    f: ComplexVector,
    mask: npt.NDArray[np.bool_],
) -> ComplexVector:
    """Return sum_{j in mask} G_j* Gamma_j f."""
    return np.sum(_contributions(frame, dual, f)[mask], axis=0)


def _dual_terms(
    req: CheckRequest, theorem: Theorem, weights: npt.ArrayLike
) -> _DualTerms:
    if req.dual is None:
        raise MissingDualError(theorem)
    frame, dual = req.frame, req.dual.dual
    weights = np.asarray(weights, dtype=np.complex128)
    rest = 1 - weights
    # [Gamma_j f, G_j f]_tau = vdot(vec G_j f, vec Gamma_j f)
    brackets = np.sum(
        _image_vectors(frame, req.f).conj() * _image_vectors(dual, req.f), axis=1
    )
    contributions = _contributions(frame, dual, req.f)
    return _DualTerms(
        weighted=complex(np.sum(weights * brackets)),
        rest=complex(np.sum(rest * brackets)),
        weighted_norm=_norm_sq(weights @ contributions),
        rest_norm=_norm_sq(rest @ contributions),
    )
