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

"""Config Parameter Modeling and Parsing."""

from hexkit.config import config_from_yaml
from hexkit.log import LoggingConfig
from pydantic import Field

from hsframes.core.sweep import VerifierConfig

SERVICE_NAME: str = "hsframes"

__all__ = ["Config"]


@config_from_yaml(prefix=SERVICE_NAME)
class Config(VerifierConfig, LoggingConfig):
    """Config parameters and their defaults."""

    service_name: str = Field(
        default=SERVICE_NAME, description="Short name of this service"
    )
    service_instance_id: str = Field(
        default="local",
        description="A string that uniquely identifies this run in the logs",
    )
