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

"""Hilbert-Schmidt frames, g-frames and their duals.

A map G: C^n -> C_2(C^m) is stored as the m^2 x n matrix of f -> vec(G(f)), where
`vec` stacks the columns of an m x m matrix (column-major order). With this fixed
convention `adjoint_apply` is the exact matrix adjoint of `apply` under the
Hilbert-Schmidt inner product.
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from math import isqrt
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from hsframes.core.errors import (
    DimensionError,
    InvalidInputError,
    InvalidParameterError,
)
from hsframes.core.operators import (
    ComplexMatrix,
    ComplexVector,
    MatrixFunction,
    adjoint,
    as_complex_matrix,
    as_vector,
    hermitian_eig,
    hermitian_fn,
    svd,
)
from hsframes.core.streams import complex_normal, substream
from hsframes.core.vector_frames import FrameBounds, SubsetMask, VectorFrame

log = logging.getLogger(__name__)

__all__ = [
    "DualKind",
    "GFrame",
    "HSDualPair",
    "HSDualityCheck",
    "HSFrame",
    "HSOperatorMap",
    "canonical_dual_hs",
    "dual_partial_operator",
    "duality_tolerance",
    "embed_g_frame",
    "embed_vector_frame",
    "g_frame_bounds",
    "g_frame_operator",
    "hs_frame_bounds",
    "hs_frame_operator",
    "is_alternate_dual_hs",
    "make_alternate_dual",
    "partial_operator_hs",
    "unvec",
    "vec",
]

DUALITY_TOL_FACTOR = 1e-9

# relative size below which a projected perturbation counts as zero
NULLSPACE_RTOL = 1e-8


def vec(matrix: ComplexMatrix) -> ComplexVector:
    """Stack the columns of a matrix into a vector."""
    return np.asarray(matrix).reshape(-1, order="F")


def unvec(vector: ComplexVector, m: int) -> ComplexMatrix:
    """Invert `vec` for an m x m matrix."""
    return np.asarray(vector).reshape((m, m), order="F")


def duality_tolerance(n: int, factor: float = DUALITY_TOL_FACTOR) -> float:
    """Default tolerance on ||sum G_j* Gamma_j - I||_F, scaled by sqrt(n)."""
    return factor * float(np.sqrt(n))


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class HSOperatorMap:
    """A linear map G: C^n -> C_2(C^m) represented by its m^2 x n coefficient
    matrix, so that G(f) = unvec(coeff f).
    """

    coeff: ComplexMatrix

    def __post_init__(self):
        coeff = as_complex_matrix(self.coeff)
        m = isqrt(coeff.shape[0])
        if m < 1 or m * m != coeff.shape[0]:
            raise DimensionError(
                "coefficient rows", "a positive square", coeff.shape[0]
            )
        if coeff.shape[1] < 1:
            raise DimensionError("coefficient columns", "at least one", coeff.shape[1])
        object.__setattr__(self, "coeff", coeff)

    @classmethod
    def zero(cls, n: int, m: int) -> "HSOperatorMap":
        """The zero map."""
        return cls(coeff=np.zeros((m * m, n), dtype=np.complex128))

    @property
    def n(self) -> int:
        """Dimension of the domain."""
        return self.coeff.shape[1]

    @property
    def m(self) -> int:
        """Side length of the target matrices."""
        return isqrt(self.coeff.shape[0])

    @cached_property
    def op_norm(self) -> float:
        """Operator norm from C^n to C_2, the largest singular value of `coeff`."""
        return float(np.linalg.norm(self.coeff, ord=2))

    def apply(self, f: npt.ArrayLike) -> ComplexMatrix:
        """Return the m x m matrix G(f)."""
        f = as_vector(f, self.n)
        return unvec(self.coeff @ f, self.m)

    def adjoint_apply(self, T: npt.ArrayLike) -> ComplexVector:
        """Return G*(T), the vector with <G*(T), f> = [T, G(f)]_tau for every f."""
        T = as_complex_matrix(T)
        if T.shape != (self.m, self.m):
            raise DimensionError("target matrix", (self.m, self.m), T.shape)
        return adjoint(self.coeff) @ vec(T)

    def compose(self, operator: ComplexMatrix) -> "HSOperatorMap":
        """Return the map f -> G(A f) for an n x n operator A."""
        return HSOperatorMap(coeff=self.coeff @ operator)

    def scaled(self, factor: complex) -> "HSOperatorMap":
        """Return c G."""
        return HSOperatorMap(coeff=factor * self.coeff)


@dataclass(frozen=True, eq=False)
class HSFrame:
    """A finite family {G_j : j in J} of maps from C^n to C_2(C^m).

    The frame operator is computed lazily and cached; recomputation yields the
    identical value, so concurrent first access is harmless.
    """

    maps: tuple[HSOperatorMap, ...]

    def __post_init__(self):
        maps = tuple(self.maps)
        if not maps:
            raise InvalidParameterError("N", 0, "must be >= 1")
        shape = (maps[0].n, maps[0].m)
        for operator_map in maps:
            if (operator_map.n, operator_map.m) != shape:
                raise DimensionError(
                    "HS-frame map (n, m)", shape, (operator_map.n, operator_map.m)
                )
        object.__setattr__(self, "maps", maps)

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[npt.ArrayLike]) -> "HSFrame":
        """Build a frame from the coefficient matrices of its maps."""
        return cls(maps=tuple(HSOperatorMap(coeff=c) for c in coefficients))

    @classmethod
    def from_stacked(cls, stacked: npt.ArrayLike, m: int) -> "HSFrame":
        """Split an (N m^2) x n matrix into N coefficient blocks."""
        stacked = as_complex_matrix(stacked)
        block = m * m
        if stacked.shape[0] % block:
            raise DimensionError(
                "stacked coefficient rows", f"a multiple of {block}", stacked.shape[0]
            )
        count = stacked.shape[0] // block
        return cls.from_coefficients(
            stacked[j * block : (j + 1) * block] for j in range(count)
        )

    @property
    def n(self) -> int:
        """Dimension of the domain."""
        return self.maps[0].n

    @property
    def m(self) -> int:
        """Side length of the target matrices."""
        return self.maps[0].m

    @property
    def count(self) -> int:
        """Number N of maps."""
        return len(self.maps)

    def __iter__(self) -> Iterator[HSOperatorMap]:
        return iter(self.maps)

    @cached_property
    def stacked(self) -> ComplexMatrix:
        """All coefficient matrices stacked vertically, (N m^2) x n."""
        return _frozen(np.vstack([operator_map.coeff for operator_map in self.maps]))

    @cached_property
    def frame_operator(self) -> ComplexMatrix:
        """S = sum_j G_j* G_j, accumulated map by map."""
        S = np.zeros((self.n, self.n), dtype=np.complex128)
        for operator_map in self.maps:
            S += adjoint(operator_map.coeff) @ operator_map.coeff
        return _frozen((S + adjoint(S)) / 2)

    @cached_property
    def bounds(self) -> FrameBounds:
        """Optimal frame bounds, the extreme eigenvalues of S."""
        eig = hermitian_eig(self.frame_operator)
        return FrameBounds(lower=eig.lambda_min, upper=eig.lambda_max)

    @cached_property
    def inverse_frame_operator(self) -> ComplexMatrix:
        """S^-1; raises `SingularityError` if the family is not a frame."""
        return _frozen(hermitian_fn(self.frame_operator, MatrixFunction.INVERSE))

    def images(self, f: npt.ArrayLike) -> npt.NDArray[np.complex128]:
        """Return the array of shape (N, m, m) holding G_j(f) for every j."""
        f = as_vector(f, self.n)
        blocks = (self.stacked @ f).reshape(self.count, self.m, self.m)
        # rows of a block are columns of the image (column-major vec)
        return blocks.transpose(0, 2, 1)

    def scaled(self, factor: complex) -> "HSFrame":
        """Return {c G_j}."""
        return HSFrame(maps=tuple(g.scaled(factor) for g in self.maps))

    def transformed(self, operator: ComplexMatrix) -> "HSFrame":
        """Return {G_j A} for an n x n operator A."""
        operator = as_complex_matrix(operator)
        if operator.shape != (self.n, self.n):
            raise DimensionError(
                "frame transformation", (self.n, self.n), operator.shape
            )
        return HSFrame(maps=tuple(g.compose(operator) for g in self.maps))


@dataclass(frozen=True, eq=False)
class GFrame:
    """A finite family {Lambda_j : j in J} of maps Lambda_j: C^n -> C^{d_j},
    each stored as a d_j x n matrix.
    """

    maps: tuple[ComplexMatrix, ...]

    def __post_init__(self):
        maps = tuple(as_complex_matrix(matrix) for matrix in self.maps)
        if not maps:
            raise InvalidParameterError("N", 0, "must be >= 1")
        n = maps[0].shape[1]
        for matrix in maps:
            if matrix.shape[1] != n:
                raise DimensionError("g-frame map columns", n, matrix.shape[1])
            if matrix.shape[0] < 1:
                raise DimensionError(
                    "g-frame map rows", "at least one", matrix.shape[0]
                )
        object.__setattr__(self, "maps", maps)

    @property
    def n(self) -> int:
        """Dimension of the domain."""
        return self.maps[0].shape[1]

    @property
    def dims(self) -> tuple[int, ...]:
        """Target dimensions d_j."""
        return tuple(matrix.shape[0] for matrix in self.maps)

    @property
    def count(self) -> int:
        """Number N of maps."""
        return len(self.maps)

    def transformed(self, operator: ComplexMatrix) -> "GFrame":
        """Return {Lambda_j A} for an n x n operator A."""
        return GFrame(maps=tuple(matrix @ operator for matrix in self.maps))


class DualKind(StrEnum):
    """How a dual HS-frame was obtained."""

    CANONICAL = "canonical"
    ALTERNATE = "alternate"


@dataclass(frozen=True, eq=False)
class HSDualPair:
    """An HS-frame together with a dual, sum_j G_j* Gamma_j = I.

    `degenerate` is set when an alternate dual was requested but the canonical dual
    is the only one (the null space of the synthesis map is trivial).
    """

    frame: HSFrame
    dual: HSFrame
    kind: DualKind
    degenerate: bool = field(default=False)


class HSDualityCheck(NamedTuple):
    """Outcome of `is_alternate_dual_hs`."""

    is_dual: bool
    residual: float
    adjoint_residual: float
    dual_lower_bound: float


def hs_frame_operator(frame: HSFrame) -> ComplexMatrix:
    """Return the HS-frame operator S = sum_j G_j* G_j."""
    return frame.frame_operator


def hs_frame_bounds(frame: HSFrame) -> FrameBounds:
    """Return the optimal bounds (lambda_min(S), lambda_max(S))."""
    return frame.bounds


def partial_operator_hs(frame: HSFrame, subset: SubsetMask) -> ComplexMatrix:
    """Return S_K = sum_{j in K} G_j* G_j."""
    if subset.size != frame.count:
        raise DimensionError("subset", frame.count, subset.size)
    S_K = np.zeros((frame.n, frame.n), dtype=np.complex128)
    for j in subset:
        coeff = frame.maps[j].coeff
        S_K += adjoint(coeff) @ coeff
    return (S_K + adjoint(S_K)) / 2


def dual_partial_operator(
    frame: HSFrame, dual: HSFrame, weights: npt.ArrayLike
) -> ComplexMatrix:
    """Return sum_j w_j G_j* Gamma_j; for the indicator of K this is F_K."""
    _check_matching(frame, dual)
    weights = np.asarray(weights, dtype=np.complex128)
    if weights.shape != (frame.count,):
        raise DimensionError("weight sequence", (frame.count,), weights.shape)
    result = np.zeros((frame.n, frame.n), dtype=np.complex128)
    for weight, g, gamma in zip(weights, frame.maps, dual.maps, strict=True):
        if weight != 0:
            result += weight * (adjoint(g.coeff) @ gamma.coeff)
    return result


def canonical_dual_hs(frame: HSFrame) -> HSDualPair:
    """Return the canonical dual {G_j S^-1}.

    Raises `SingularityError` if the family is not a frame.
    """
    return HSDualPair(
        frame=frame,
        dual=frame.transformed(frame.inverse_frame_operator),
        kind=DualKind.CANONICAL,
    )


def is_alternate_dual_hs(
    frame: HSFrame, dual: HSFrame, tol: float | None = None
) -> HSDualityCheck:
    """Test f = sum_j G_j* Gamma_j f = sum_j Gamma_j* G_j f for all f.

    Both identity residuals must be within `tol` (default 1e-9 sqrt(n)) and the dual
    must itself have a positive lower frame bound.
    """
    _check_matching(frame, dual)
    if tol is None:
        tol = duality_tolerance(frame.n)
    identity = np.eye(frame.n)
    mixed = dual_partial_operator(frame, dual, np.ones(frame.count))
    reverse = dual_partial_operator(dual, frame, np.ones(frame.count))
    residual = float(np.linalg.norm(mixed - identity))
    adjoint_residual = float(np.linalg.norm(reverse - identity))
    dual_bounds = hs_frame_bounds(dual)
    return HSDualityCheck(
        is_dual=residual <= tol and adjoint_residual <= tol and dual_bounds.is_frame,
        residual=residual,
        adjoint_residual=adjoint_residual,
        dual_lower_bound=dual_bounds.lower,
    )


def make_alternate_dual(frame: HSFrame, seed: int, scale: float) -> HSDualPair:
    """Construct an alternate dual Gamma_j = G~_j + U_j.

    The perturbation U is a seeded complex Gaussian family projected onto the null
    space of (U_j)_j -> sum_j G_j* U_j and rescaled so that its stacked Frobenius
    norm is `scale` times that of the canonical dual. If that null space is trivial
    the canonical dual is returned with `degenerate` set.
    """
    if np.isnan(scale) or scale < 0:
        raise InvalidParameterError("scale", scale, "must be >= 0")
    canonical = canonical_dual_hs(frame)
    if scale == 0:
        return canonical

    C = frame.stacked
    canonical_stacked = canonical.dual.stacked
    raw = complex_normal(substream(seed), C.shape)
    # orthonormal basis of range(C)^perp, the null space of U -> C* U
    decomposition = svd(C)
    complement = decomposition.u[:, decomposition.rank() :]
    projected = complement @ (adjoint(complement) @ raw)
    projected_norm = float(np.linalg.norm(projected))
    if (
        complement.shape[1] == 0
        or projected_norm <= NULLSPACE_RTOL * float(np.linalg.norm(raw))
    ):
        log.warning(
            "Only the canonical dual exists for an HS-frame with N m^2 = %d"
            + " and n = %d.",
            C.shape[0],
            frame.n,
        )
        return HSDualPair(
            frame=frame, dual=canonical.dual, kind=DualKind.CANONICAL, degenerate=True
        )

    target_norm = scale * float(np.linalg.norm(canonical_stacked))
    perturbation = projected * (target_norm / projected_norm)
    dual = HSFrame.from_stacked(canonical_stacked + perturbation, frame.m)
    check = is_alternate_dual_hs(frame, dual)
    if not check.is_dual:
        raise InvalidInputError(
            "Projected perturbation does not preserve duality", check.residual
        )
    log.debug(
        "Alternate dual built with scale %g (duality residual %.3e).",
        scale,
        check.residual,
    )
    return HSDualPair(frame=frame, dual=dual, kind=DualKind.ALTERNATE)


def embed_vector_frame(frame: VectorFrame) -> HSFrame:
    """Embed {f_j} as the HS-frame with m = 1 and G_j(f) = [[<f, f_j>]]."""
    return HSFrame.from_coefficients(
        adjoint(frame.synthesis_matrix[:, [j]]) for j in range(frame.count)
    )


def g_frame_operator(frame: GFrame) -> ComplexMatrix:
    """Return sum_j Lambda_j* Lambda_j."""
    S = np.zeros((frame.n, frame.n), dtype=np.complex128)
    for matrix in frame.maps:
        S += adjoint(matrix) @ matrix
    return (S + adjoint(S)) / 2


def g_frame_bounds(frame: GFrame) -> FrameBounds:
    """Return the optimal g-frame bounds."""
    eig = hermitian_eig(g_frame_operator(frame))
    return FrameBounds(lower=eig.lambda_min, upper=eig.lambda_max)


def embed_g_frame(frame: GFrame) -> HSFrame:
    """Embed {Lambda_j} into C_2(C^m) with m = max_j d_j.

    G_j(f) is the m x m matrix whose first column is Lambda_j(f) padded with zeros;
    every other column is zero, so ||G_j(f)||_2 = ||Lambda_j(f)||.
    """
    m = max(frame.dims)
    coefficients = []
    for matrix in frame.maps:
        coeff = np.zeros((m * m, frame.n), dtype=np.complex128)
        # the first column of the image occupies the first m entries of vec
        coeff[: matrix.shape[0]] = matrix
        coefficients.append(coeff)
    return HSFrame.from_coefficients(coefficients)


def _check_matching(frame: HSFrame, dual: HSFrame) -> None:
    expected = (frame.n, frame.m, frame.count)
    actual = (dual.n, dual.m, dual.count)
    if expected != actual:
        raise DimensionError("dual HS-frame (n, m, N)", expected, actual)
