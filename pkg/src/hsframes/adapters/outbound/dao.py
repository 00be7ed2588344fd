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

"""DAO implementation for JSON documents on the local file system"""

import json
from collections.abc import AsyncGenerator
from contextlib import asynccontextmanager
from functools import singledispatch

import numpy as np
from pydantic import BaseModel

from hsframes.core.generation import AnyFrame
from hsframes.core.hs_frames import GFrame, HSFrame
from hsframes.core.operators import ComplexMatrix
from hsframes.core.vector_frames import VectorFrame
from hsframes.models import (
    GenSpec,
    GFrameDocument,
    GMapDocument,
    HSFrameDocument,
    HSMapDocument,
    MatrixDocument,
    SuiteConfig,
    VectorFrameDocument,
)
from hsframes.ports.outbound.dao import (
    FileDao,
    FileDaoFactoryPort,
    FrameFileDaoPort,
    GenSpecFileDaoPort,
    SuiteConfigFileDaoPort,
    TextFileDaoPort,
)

__all__ = ["FileDaoFactory", "deserialize_frame", "serialize_frame"]


def _to_pairs(matrix: ComplexMatrix) -> MatrixDocument:
    return [[(float(z.real), float(z.imag)) for z in row] for row in matrix]


def _from_pairs(rows: MatrixDocument) -> ComplexMatrix:
    values = np.asarray(rows, dtype=np.float64)
    if values.ndim != 3 or values.shape[-1] != 2:
        raise ValueError("Expected a matrix of [re, im] pairs.")
    return values[..., 0] + 1j * values[..., 1]


@singledispatch
def to_document(frame: AnyFrame) -> BaseModel:
    """Convert a frame into its file representation."""
    raise TypeError(f"Cannot serialize {type(frame).__name__}.")


@to_document.register
def _(frame: VectorFrame) -> VectorFrameDocument:
    return VectorFrameDocument(n=frame.n, vectors=_to_pairs(frame.synthesis_matrix.T))


@to_document.register
def _(frame: HSFrame) -> HSFrameDocument:
    return HSFrameDocument(
        n=frame.n,
        m=frame.m,
        maps=[
            HSMapDocument(coeff=_to_pairs(operator_map.coeff))
            for operator_map in frame.maps
        ],
    )


@to_document.register
def _(frame: GFrame) -> GFrameDocument:
    return GFrameDocument(
        n=frame.n,
        dims=list(frame.dims),
        maps=[GMapDocument(matrix=_to_pairs(matrix)) for matrix in frame.maps],
    )


def from_document(
    document: VectorFrameDocument | HSFrameDocument | GFrameDocument,
) -> AnyFrame:
    """Convert a validated file representation into a frame."""
    match document:
        case VectorFrameDocument():
            return VectorFrame(synthesis_matrix=_from_pairs(document.vectors).T)
        case HSFrameDocument():
            return HSFrame.from_coefficients(
                _from_pairs(operator_map.coeff) for operator_map in document.maps
            )
        case GFrameDocument():
            return GFrame(
                maps=tuple(_from_pairs(g_map.matrix) for g_map in document.maps)
            )
    raise TypeError(f"Not a frame document: {type(document).__name__}.")


def serialize_frame(frame: AnyFrame) -> bytes:
    """Serialize a frame of any kind to JSON."""
    return to_document(frame).model_dump_json(indent=2).encode()


def deserialize_frame(data: bytes) -> AnyFrame:
    """Parse a frame file; its kind is told apart by the keys 'vectors' (vector
    frame), 'dims' (g-frame) and 'm' (HS-frame).
    """
    content = json.loads(data.decode())
    if not isinstance(content, dict):
        raise ValueError("A frame file must contain a JSON object.")
    if "vectors" in content:
        return from_document(VectorFrameDocument.model_validate(content))
    if "dims" in content:
        return from_document(GFrameDocument.model_validate(content))
    if "m" in content:
        return from_document(HSFrameDocument.model_validate(content))
    raise ValueError("Unknown frame kind: expected key 'vectors', 'dims' or 'm'.")


class FileDaoFactory(FileDaoFactoryPort):
    """A factory that produces objects able to read and write the toolkit's JSON
    files
    """

    @classmethod
    @asynccontextmanager
    async def construct(cls, *, indent: int = 2) -> AsyncGenerator["FileDaoFactory"]:
        """Instantiate a FileDaoFactory"""
        yield FileDaoFactory(indent=indent)

    def __init__(self, *, indent: int = 2):
        self._indent = indent

    def get_frame_dao(self) -> FrameFileDaoPort:
        """Return a FrameFileDaoPort instance"""
        return FileDao(
            name="frame",
            serialize_fn=serialize_frame,
            deserialize_fn=deserialize_frame,
        )

    def get_gen_spec_dao(self) -> GenSpecFileDaoPort:
        """Return a GenSpecFileDaoPort instance"""

        def serialize(spec: GenSpec) -> bytes:
            return spec.model_dump_json(
                by_alias=True, exclude_none=True, indent=self._indent
            ).encode()

        return FileDao(
            name="generator spec",
            serialize_fn=serialize,
            deserialize_fn=GenSpec.model_validate_json,
        )

    def get_suite_config_dao(self) -> SuiteConfigFileDaoPort:
        """Return a SuiteConfigFileDaoPort instance"""

        def serialize(suite: SuiteConfig) -> bytes:
            return suite.model_dump_json(
                by_alias=True, exclude_none=True, indent=self._indent
            ).encode()

        return FileDao(
            name="suite",
            serialize_fn=serialize,
            deserialize_fn=SuiteConfig.model_validate_json,
        )

    def get_report_dao(self) -> TextFileDaoPort:
        """Return a TextFileDaoPort instance for rendered reports"""
        return FileDao(
            name="report",
            serialize_fn=str.encode,
            deserialize_fn=bytes.decode,
        )
