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

"""Module hosting the dependency injection logic."""

from collections.abc import AsyncGenerator
from contextlib import asynccontextmanager, nullcontext

from hsframes.adapters.outbound.dao import FileDaoFactory
from hsframes.config import Config
from hsframes.core.sweep import FrameVerifier
from hsframes.ports.inbound.verifier import FrameVerifierPort
from hsframes.ports.outbound.dao import FileDaoFactoryPort

__all__ = ["prepare_core"]


@asynccontextmanager
async def prepare_core(
    *,
    config: Config,
    file_dao_factory_override: FileDaoFactoryPort | None = None,
) -> AsyncGenerator[FrameVerifierPort]:
    """Constructs and initializes all core components and their outbound dependencies.

    The _override parameters can be used to override the default dependencies.
    """
    async with (
        nullcontext(file_dao_factory_override)
        if file_dao_factory_override
        else FileDaoFactory.construct() as file_dao_factory,
    ):
        yield FrameVerifier(
            config=config,
            frame_dao=file_dao_factory.get_frame_dao(),
            gen_spec_dao=file_dao_factory.get_gen_spec_dao(),
            suite_config_dao=file_dao_factory.get_suite_config_dao(),
        )
