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

"""Deterministic generators of vector frames, g-frames and HS-frames.

Element j of a random frame is drawn from the substream (seed, attempt, j), so the
output only depends on the recipe and never on the order of generation.
"""

import logging
from functools import singledispatch

import numpy as np

from hsframes.core.errors import GenerationError, InvalidParameterError
from hsframes.core.hs_frames import (
    GFrame,
    HSFrame,
    embed_g_frame,
    embed_vector_frame,
    g_frame_bounds,
    g_frame_operator,
    hs_frame_bounds,
)
from hsframes.core.operators import (
    ComplexMatrix,
    ComplexVector,
    MatrixFunction,
    hermitian_fn,
)
from hsframes.core.streams import complex_normal, substream, uniform_disk
from hsframes.core.vector_frames import (
    FrameBounds,
    VectorFrame,
    frame_bounds,
    frame_operator,
)
from hsframes.models import GenKind, GenSpec

log = logging.getLogger(__name__)

__all__ = [
    "MAX_ATTEMPTS",
    "MIN_LOWER_BOUND",
    "AnyFrame",
    "bounds_of",
    "gen_bounded_weights",
    "gen_gaussian_g",
    "gen_gaussian_hs",
    "gen_gaussian_vector",
    "gen_harmonic",
    "gen_random_operator",
    "gen_test_vectors",
    "generate",
    "parsevalize",
    "to_hs_frame",
]

AnyFrame = VectorFrame | HSFrame | GFrame

MAX_ATTEMPTS = 16
MIN_LOWER_BOUND = 1e-8

# substream tags separating the different kinds of draws made from one seed
_TEST_VECTOR_STREAM = 1
_OPERATOR_STREAM = 2
_WEIGHT_STREAM = 3


def gen_gaussian_vector(n: int, count: int, seed: int) -> VectorFrame:
    """Draw N vectors of C^n with i.i.d. standard complex normal entries.

    When N >= n the lower bound is required to exceed MIN_LOWER_BOUND; the frame
    is redrawn from the next attempt stream otherwise.
    """
    _check_positive(n=n, N=count)
    for attempt in range(MAX_ATTEMPTS):
        columns = [
            complex_normal(substream(seed, attempt, j), (n,)) for j in range(count)
        ]
        frame = VectorFrame(synthesis_matrix=np.stack(columns, axis=1))
        if count < n or frame_bounds(frame).lower > MIN_LOWER_BOUND:
            return frame
        log.info("Redrawing Gaussian frame (attempt %d) for seed %d.", attempt, seed)
    raise GenerationError(GenKind.GAUSSIAN_VECTOR, MAX_ATTEMPTS)


def gen_harmonic(n: int, count: int) -> VectorFrame:
    """Return the harmonic Parseval frame: the first n rows of the unitary DFT
    matrix of size N, so f_j = (exp(2 pi i k j / N) / sqrt(N))_k.
    """
    _check_positive(n=n, N=count)
    if count < n:
        raise InvalidParameterError("N", count, f"must be >= n = {n}")
    rows = np.arange(n)[:, np.newaxis]
    columns = np.arange(count)[np.newaxis, :]
    synthesis_matrix = np.exp(2j * np.pi * rows * columns / count) / np.sqrt(count)
    return VectorFrame(synthesis_matrix=synthesis_matrix)


def gen_gaussian_hs(n: int, m: int, count: int, seed: int) -> HSFrame:
    """Draw N maps C^n -> C_2(C^m) with standard complex normal m^2 x n
    coefficients; the lower bound is asserted when N m^2 >= n.
    """
    _check_positive(n=n, m=m, N=count)
    for attempt in range(MAX_ATTEMPTS):
        frame = HSFrame.from_coefficients(
            complex_normal(substream(seed, attempt, j), (m * m, n))
            for j in range(count)
        )
        if count * m * m < n or hs_frame_bounds(frame).lower > MIN_LOWER_BOUND:
            return frame
        log.info("Redrawing Gaussian HS-frame (attempt %d) for seed %d.", attempt, seed)
    raise GenerationError(GenKind.GAUSSIAN_HS, MAX_ATTEMPTS)


def gen_gaussian_g(n: int, dims: list[int] | tuple[int, ...], seed: int) -> GFrame:
    """Draw one d_j x n standard complex normal block per index; the lower bound
    is asserted when sum(d_j) >= n.
    """
    _check_positive(n=n, N=len(dims), **{f"d{j}": d for j, d in enumerate(dims)})
    for attempt in range(MAX_ATTEMPTS):
        frame = GFrame(
            maps=tuple(
                complex_normal(substream(seed, attempt, j), (d, n))
                for j, d in enumerate(dims)
            )
        )
        if sum(dims) < n or g_frame_bounds(frame).lower > MIN_LOWER_BOUND:
            return frame
        log.info("Redrawing Gaussian g-frame (attempt %d) for seed %d.", attempt, seed)
    raise GenerationError(GenKind.GAUSSIAN_G, MAX_ATTEMPTS)


@singledispatch
def parsevalize(frame: AnyFrame) -> AnyFrame:
    """Replace every element by its composition with S^-1/2, so that the new
    frame operator is the identity.

    Raises `SingularityError` if the family is not a frame.
    """
    raise TypeError(f"Cannot parsevalize {type(frame).__name__}.")


@parsevalize.register
def _(frame: VectorFrame) -> VectorFrame:
    return frame.transformed(
        hermitian_fn(frame_operator(frame), MatrixFunction.INV_SQRT)
    )


@parsevalize.register
def _(frame: HSFrame) -> HSFrame:
    return frame.transformed(
        hermitian_fn(frame.frame_operator, MatrixFunction.INV_SQRT)
    )


@parsevalize.register
def _(frame: GFrame) -> GFrame:
    return frame.transformed(
        hermitian_fn(g_frame_operator(frame), MatrixFunction.INV_SQRT)
    )


@singledispatch
def bounds_of(frame: AnyFrame) -> FrameBounds:
    """Return the optimal frame bounds of any kind of frame."""
    raise TypeError(f"No frame bounds for {type(frame).__name__}.")


bounds_of.register(VectorFrame, frame_bounds)
bounds_of.register(HSFrame, hs_frame_bounds)
bounds_of.register(GFrame, g_frame_bounds)


@singledispatch
def to_hs_frame(frame: AnyFrame) -> HSFrame:
    """Return the HS-frame a frame of any kind is verified as."""
    raise TypeError(f"Cannot embed {type(frame).__name__}.")


@to_hs_frame.register
def _(frame: HSFrame) -> HSFrame:
    return frame


to_hs_frame.register(VectorFrame, embed_vector_frame)
to_hs_frame.register(GFrame, embed_g_frame)


def gen_test_vectors(n: int, count: int, seed: int) -> list[ComplexVector]:
    """Return `count` unit vectors of C^n: the standard basis first, then random
    directions drawn from the test-vector stream.
    """
    _check_positive(n=n, count=count)
    identity = np.eye(n, dtype=np.complex128)
    vectors = [identity[k] for k in range(min(n, count))]
    for index in range(count - len(vectors)):
        draw = complex_normal(substream(seed, _TEST_VECTOR_STREAM, index), (n,))
        vectors.append(draw / np.linalg.norm(draw))
    return vectors


def gen_random_operator(n: int, seed: int, hermitian: bool = False) -> ComplexMatrix:
    """Draw an n x n standard complex normal matrix, symmetrized on request."""
    _check_positive(n=n)
    matrix = complex_normal(substream(seed, _OPERATOR_STREAM), (n, n))
    if hermitian:
        matrix = (matrix + matrix.conj().T) / 2
    return matrix


def gen_bounded_weights(count: int, bound: float, seed: int) -> ComplexVector:
    """Draw N complex weights uniformly from the disk |w| <= bound."""
    _check_positive(N=count)
    if np.isnan(bound) or bound < 0:
        raise InvalidParameterError("bound", bound, "must be >= 0")
    return uniform_disk(substream(seed, _WEIGHT_STREAM), count, bound)


def generate(spec: GenSpec) -> AnyFrame:
    """Build the frame described by a recipe."""
    match spec.kind:
        case GenKind.GAUSSIAN_VECTOR:
            return gen_gaussian_vector(_field(spec.n), _field(spec.count), spec.seed)
        case GenKind.HARMONIC:
            return gen_harmonic(_field(spec.n), _field(spec.count))
        case GenKind.GAUSSIAN_HS:
            return gen_gaussian_hs(
                _field(spec.n), _field(spec.m), _field(spec.count), spec.seed
            )
        case GenKind.GAUSSIAN_G:
            return gen_gaussian_g(_field(spec.n), _field(spec.dims), spec.seed)
        case GenKind.PARSEVALIZE_OF:
            return parsevalize(generate(_field(spec.of)))
    raise InvalidParameterError("kind", spec.kind, "is not a known generator")


def _field[T](value: T | None) -> T:
    # GenSpec validation guarantees the fields of its kind are set
    if value is None:
        raise InvalidParameterError("gen", None, "is missing a required field")
    return value


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise InvalidParameterError(name, value, "must be >= 1")
