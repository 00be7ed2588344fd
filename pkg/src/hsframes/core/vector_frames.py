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

"""Classical frames {f_j} of C^n and the subsets K of their index set."""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from numbers import Integral
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from hsframes.core.errors import DimensionError, InvalidParameterError
from hsframes.core.operators import (
    PD_RTOL,
    ComplexMatrix,
    ComplexVector,
    MatrixFunction,
    adjoint,
    as_complex_matrix,
    as_vector,
    hermitian_eig,
    hermitian_fn,
)

log = logging.getLogger(__name__)

__all__ = [
    "DualityCheck",
    "FrameBounds",
    "SubsetMask",
    "VectorFrame",
    "analysis",
    "canonical_dual",
    "frame_bounds",
    "frame_operator",
    "is_alternate_dual",
    "partial_operator",
    "synthesis",
]


class FrameBounds(NamedTuple):
    """Optimal frame bounds, i.e. the extreme eigenvalues of the frame operator."""

    lower: float
    upper: float

    @property
    def is_frame(self) -> bool:
        """Whether the lower bound clears the positive-definiteness threshold."""
        return self.lower > PD_RTOL * max(self.upper, 0.0)

    def is_parseval(self, tol: float) -> bool:
        """Whether both bounds are within `tol` of 1."""
        return abs(self.lower - 1.0) <= tol and abs(self.upper - 1.0) <= tol


class DualityCheck(NamedTuple):
    """Outcome of a duality test: the verdict and the identity residual."""

    is_dual: bool
    residual: float


@dataclass(frozen=True)
class SubsetMask:
    """A subset K of the index set J = {0, ..., size - 1}, stored as a bitmask.

    Bit j is set iff j is in K.
    """

    size: int
    bits: int = 0

    def __post_init__(self):
        if self.size < 1:
            raise InvalidParameterError("size", self.size, "must be >= 1")
        if self.bits < 0 or self.bits >= 1 << self.size:
            raise InvalidParameterError(
                "bits", self.bits, f"must encode a subset of {self.size} indices"
            )

    @classmethod
    def empty(cls, size: int) -> "SubsetMask":
        """The empty subset."""
        return cls(size=size, bits=0)

    @classmethod
    def full(cls, size: int) -> "SubsetMask":
        """The whole index set J."""
        return cls(size=size, bits=(1 << size) - 1)

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> "SubsetMask":
        """Build the subset containing the given indices."""
        bits = 0
        for index in indices:
            if not 0 <= index < size:
                raise InvalidParameterError("index", index, f"must be in [0, {size})")
            bits |= 1 << index
        return cls(size=size, bits=bits)

    @classmethod
    def from_bool(cls, flags: npt.ArrayLike) -> "SubsetMask":
        """Build the subset from a boolean membership array."""
        flags = np.asarray(flags, dtype=bool)
        return cls.from_indices(flags.size, np.flatnonzero(flags).tolist())

    def complement(self) -> "SubsetMask":
        """Return K^c = J minus K."""
        return SubsetMask(size=self.size, bits=((1 << self.size) - 1) ^ self.bits)

    def __contains__(self, index: object) -> bool:
        if not isinstance(index, Integral):
            return False
        position = int(index)
        return 0 <= position < self.size and bool(self.bits >> position & 1)

    def __iter__(self) -> Iterator[int]:
        return (j for j in range(self.size) if self.bits >> j & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def as_bool(self) -> npt.NDArray[np.bool_]:
        """Return the boolean membership array over J."""
        return np.array([self.bits >> j & 1 for j in range(self.size)], dtype=bool)

    def indicator(self) -> npt.NDArray[np.float64]:
        """Return the 0/1 weight sequence of K."""
        return self.as_bool().astype(np.float64)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> j & 1 else "0" for j in range(self.size))


@dataclass(frozen=True, eq=False)
class VectorFrame:
    """A finite family {f_j : j in J} of vectors in C^n.

    The vectors are stored as the columns of the n x N synthesis matrix. Families
    whose lower bound vanishes (Bessel-only) are representable; operations that need
    a frame raise `SingularityError` for them.
    """

    synthesis_matrix: ComplexMatrix

    def __post_init__(self):
        matrix = as_complex_matrix(self.synthesis_matrix)
        if matrix.shape[0] < 1:
            raise InvalidParameterError("n", matrix.shape[0], "must be >= 1")
        if matrix.shape[1] < 1:
            raise InvalidParameterError("N", matrix.shape[1], "must be >= 1")
        object.__setattr__(self, "synthesis_matrix", matrix)

    @classmethod
    def from_vectors(cls, vectors: Iterable[npt.ArrayLike]) -> "VectorFrame":
        """Build a frame from an ordered collection of vectors of equal length."""
        columns = [as_vector(vector) for vector in vectors]
        if not columns:
            raise InvalidParameterError("N", 0, "must be >= 1")
        n = columns[0].shape[0]
        for column in columns:
            if column.shape[0] != n:
                raise DimensionError("frame vector", n, column.shape[0])
        return cls(synthesis_matrix=np.stack(columns, axis=1))

    @property
    def n(self) -> int:
        """Dimension of the ambient space."""
        return self.synthesis_matrix.shape[0]

    @property
    def count(self) -> int:
        """Number N of frame vectors."""
        return self.synthesis_matrix.shape[1]

    def vector(self, j: int) -> ComplexVector:
        """Return f_j."""
        return self.synthesis_matrix[:, j]

    def __iter__(self) -> Iterator[ComplexVector]:
        return (self.vector(j) for j in range(self.count))

    def scaled(self, factor: complex) -> "VectorFrame":
        """Return {c f_j}."""
        return VectorFrame(synthesis_matrix=factor * self.synthesis_matrix)

    def transformed(self, operator: ComplexMatrix) -> "VectorFrame":
        """Return {A f_j} for an n x n operator A."""
        operator = as_complex_matrix(operator)
        if operator.shape != (self.n, self.n):
            raise DimensionError(
                "frame transformation", (self.n, self.n), operator.shape
            )
        return VectorFrame(synthesis_matrix=operator @ self.synthesis_matrix)


def analysis(frame: VectorFrame, f: npt.ArrayLike) -> ComplexVector:
    """Return the coefficients c_j = <f, f_j>."""
    f = as_vector(f, frame.n)
    return adjoint(frame.synthesis_matrix) @ f


def synthesis(frame: VectorFrame, coefficients: npt.ArrayLike) -> ComplexVector:
    """Return sum_j c_j f_j."""
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    if coefficients.shape != (frame.count,):
        raise DimensionError("coefficient sequence", (frame.count,), coefficients.shape)
    return frame.synthesis_matrix @ coefficients


def frame_operator(frame: VectorFrame) -> ComplexMatrix:
    """Return S = sum_j f_j f_j*."""
    T = frame.synthesis_matrix
    return T @ adjoint(T)


def partial_operator(frame: VectorFrame, subset: SubsetMask) -> ComplexMatrix:
    """Return S_K = sum_{j in K} f_j f_j*."""
    if subset.size != frame.count:
        raise DimensionError("subset", frame.count, subset.size)
    T = frame.synthesis_matrix[:, subset.as_bool()]
    return T @ adjoint(T)


def frame_bounds(frame: VectorFrame) -> FrameBounds:
    """Return the optimal bounds (lambda_min(S), lambda_max(S))."""
    eig = hermitian_eig(frame_operator(frame))
    bounds = FrameBounds(lower=eig.lambda_min, upper=eig.lambda_max)
    if not bounds.is_frame:
        log.warning(
            "Family of %d vectors in C^%d is only Bessel (lower bound %.3e).",
            frame.count,
            frame.n,
            bounds.lower,
        )
    return bounds


def canonical_dual(frame: VectorFrame) -> VectorFrame:
    """Return the canonical dual {S^-1 f_j}.

    Raises `SingularityError` if the family is not a frame.
    """
    inverse = hermitian_fn(frame_operator(frame), MatrixFunction.INVERSE)
    return frame.transformed(inverse)


def is_alternate_dual(
    dual: VectorFrame, frame: VectorFrame, tol: float | None = None
) -> DualityCheck:
    """Test whether f = sum_j <f, g_j> f_j for all f, i.e. sum_j f_j g_j* = I.

    The default tolerance is 1e-9 * sqrt(n) on the Frobenius norm of the residual.
    """
    if (dual.n, dual.count) != (frame.n, frame.count):
        raise DimensionError("dual frame", (frame.n, frame.count), (dual.n, dual.count))
    if tol is None:
        tol = 1e-9 * np.sqrt(frame.n)
    reconstruction = frame.synthesis_matrix @ adjoint(dual.synthesis_matrix)
    residual = float(np.linalg.norm(reconstruction - np.eye(frame.n)))
    return DualityCheck(is_dual=residual <= tol, residual=residual)
