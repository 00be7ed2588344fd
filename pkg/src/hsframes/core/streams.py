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

"""Deterministic random streams.

Every stream is a Philox (counter-based) generator keyed by a seed and a tuple of
non-negative integers, so that the draws for index j never depend on how many
draws were taken for other indices or in which order they were generated.
"""

import numpy as np

from hsframes.core.errors import InvalidParameterError
from hsframes.core.operators import ComplexMatrix

__all__ = ["complex_normal", "derive_seed", "substream", "uniform_disk"]

SEED_BITS = 64


def substream(seed: int, *keys: int) -> np.random.Generator:
    """Return the generator for the substream identified by (seed, *keys)."""
    for name, value in (("seed", seed), *((f"key{i}", k) for i, k in enumerate(keys))):
        if value < 0 or value >= 2**SEED_BITS:
            raise InvalidParameterError(name, value, "must be a 64-bit unsigned int")
    sequence = np.random.SeedSequence([seed, *keys])
    return np.random.Generator(np.random.Philox(sequence))


def derive_seed(seed: int, *keys: int) -> int:
    """Return a non-negative seed for the child recipe identified by (seed, *keys)."""
    return int(substream(seed, *keys).integers(0, 2**63, dtype=np.int64))


def complex_normal(rng: np.random.Generator, shape: tuple[int, ...]) -> ComplexMatrix:
    """Draw standard complex normal entries (N(0, 1/2) + i N(0, 1/2))."""
    real = rng.standard_normal(shape)
    imag = rng.standard_normal(shape)
    return (real + 1j * imag) * np.sqrt(0.5)


def uniform_disk(
    rng: np.random.Generator, size: int, radius: float
) -> np.ndarray:
    """Draw `size` complex numbers uniformly from the closed disk of `radius`."""
    modulus = radius * np.sqrt(rng.uniform(0.0, 1.0, size))
    phase = rng.uniform(0.0, 2.0 * np.pi, size)
    return modulus * np.exp(1j * phase)
