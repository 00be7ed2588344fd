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

"""DAO Port definition"""

import asyncio
import logging
from abc import ABC, abstractmethod
from collections.abc import Callable
from pathlib import Path
from typing import Any

from hexkit.protocols.dao import ResourceNotFoundError

from hsframes.core.generation import AnyFrame
from hsframes.models import GenSpec, SuiteConfig

__all__ = [
    "FileDao",
    "FileDaoFactoryPort",
    "FrameFileDaoPort",
    "GenSpecFileDaoPort",
    "ResourceNotFoundError",
    "SuiteConfigFileDaoPort",
    "TextFileDaoPort",
]

log = logging.getLogger(__name__)


class FileDao[InputType: Any, OutputType: Any]:
    """Reads and writes one kind of document as files on the local file system.

    File access runs in a worker thread so that the event loop is not blocked.
    """

    class SerializationError(RuntimeError):
        """Raised when there's an error during data serialization"""

        def __init__(self, path: Path):
            msg = f"Failed to serialize data for file {path}"
            super().__init__(msg)

    class DeserializationError(RuntimeError):
        """Raised when there's an error during data deserialization"""

        def __init__(self, path: Path, reason: str = ""):
            msg = f"Failed to deserialize data from file {path}"
            if reason:
                msg += f": {reason}"
            super().__init__(msg)

    def __init__(
        self,
        *,
        name: str,
        serialize_fn: Callable[[InputType], bytes],
        deserialize_fn: Callable[[bytes], OutputType],
    ):
        """Initialize the FileDao.

        Args:
            name: A short name of the document kind, used in log messages.
            serialize_fn: A function that serializes the input data to bytes before
                it is written.
            deserialize_fn: A function that deserializes the data from bytes to the
                desired format.
        """
        self._name = name
        self._serialize_fn = serialize_fn
        self._deserialize_fn = deserialize_fn

    async def upsert(self, *, data: InputType, path: Path) -> None:
        """Write the data to the given path, replacing any existing file."""
        try:
            serialized_data = self._serialize_fn(data)
        except Exception as err:
            error = self.SerializationError(path)
            log.error(error, exc_info=True)
            raise error from err

        if path.exists():
            log.info("Found pre-existing %s file %s, overwriting.", self._name, path)
        await asyncio.to_thread(path.write_bytes, serialized_data)

    async def find(self, *, path: Path) -> OutputType:
        """Read and deserialize the file at the given path.

        Raises `ResourceNotFoundError` if the file does not exist.
        """
        try:
            serialized_data = await asyncio.to_thread(path.read_bytes)
        except (FileNotFoundError, IsADirectoryError) as err:
            raise ResourceNotFoundError(id_=str(path)) from err

        try:
            deserialized_data = self._deserialize_fn(serialized_data)
        except Exception as err:
            error = self.DeserializationError(path, str(err))
            log.error(error)
            raise error from err
        return deserialized_data


FrameFileDaoPort = FileDao[AnyFrame, AnyFrame]
GenSpecFileDaoPort = FileDao[GenSpec, GenSpec]
SuiteConfigFileDaoPort = FileDao[SuiteConfig, SuiteConfig]
TextFileDaoPort = FileDao[str, str]


class FileDaoFactoryPort(ABC):
    """Port definition of a factory that produces objects able to read and write
    the toolkit's files
    """

    @abstractmethod
    def get_frame_dao(self) -> FrameFileDaoPort:
        """Return a FrameFileDaoPort instance"""

    @abstractmethod
    def get_gen_spec_dao(self) -> GenSpecFileDaoPort:
        """Return a GenSpecFileDaoPort instance"""

    @abstractmethod
    def get_suite_config_dao(self) -> SuiteConfigFileDaoPort:
        """Return a SuiteConfigFileDaoPort instance"""

    @abstractmethod
    def get_report_dao(self) -> TextFileDaoPort:
        """Return a TextFileDaoPort instance for rendered reports"""
