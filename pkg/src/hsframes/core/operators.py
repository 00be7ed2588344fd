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

"""Dense complex linear algebra on which every frame computation is built.

Matrices are `numpy` arrays of dtype `complex128`. Vectors of the ambient space are
one-dimensional arrays; column vectors of shape (n, 1) are accepted wherever a
vector is expected and flattened on entry.
"""

from dataclasses import dataclass
from enum import StrEnum

import numpy as np
import numpy.typing as npt
from scipy import linalg

from hsframes.core.errors import (
    DecompositionError,
    DimensionError,
    InvalidInputError,
    InvalidParameterError,
    NonHermitianError,
    SingularityError,
)

__all__ = [
    "HERMITICITY_RTOL",
    "PD_RTOL",
    "RANK_RTOL",
    "ComplexMatrix",
    "ComplexVector",
    "HermitianEig",
    "MatrixFunction",
    "SVDResult",
    "adjoint",
    "as_complex_matrix",
    "as_vector",
    "ensure_hermitian",
    "hermitian_eig",
    "hermitian_fn",
    "hermiticity_residual",
    "inner",
    "pseudoinverse",
    "schatten_norm",
    "singular_values",
    "svd",
    "trace_inner",
]

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]

HERMITICITY_RTOL = 1e-10
PD_RTOL = 1e-10
RANK_RTOL = 1e-10


class MatrixFunction(StrEnum):
    """Scalar functions that can be lifted to Hermitian matrices."""

    INVERSE = "inverse"
    SQRT = "sqrt"
    INV_SQRT = "inv_sqrt"


@dataclass(frozen=True)
class SVDResult:
    """Singular value decomposition M = U diag(s) V*.

    The singular values are sorted in nonincreasing order.
    """

    u: ComplexMatrix
    singular_values: npt.NDArray[np.float64]
    v: ComplexMatrix

    @property
    def default_rank_threshold(self) -> float:
        """Numerical-rank threshold relative to the largest singular value."""
        if self.singular_values.size == 0:
            return 0.0
        return RANK_RTOL * float(self.singular_values[0])

    def rank(self, threshold: float | None = None) -> int:
        """Count the singular values strictly above `threshold`."""
        if threshold is None:
            threshold = self.default_rank_threshold
        return int(np.count_nonzero(self.singular_values > threshold))

    def reconstruct(self) -> ComplexMatrix:
        """Multiply the factors back together."""
        k = self.singular_values.size
        return (self.u[:, :k] * self.singular_values) @ adjoint(self.v[:, :k])


@dataclass(frozen=True)
class HermitianEig:
    """Eigendecomposition of a Hermitian matrix with ascending eigenvalues."""

    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: ComplexMatrix

    @property
    def lambda_min(self) -> float:
        """Smallest eigenvalue."""
        return float(self.eigenvalues[0])

    @property
    def lambda_max(self) -> float:
        """Largest eigenvalue."""
        return float(self.eigenvalues[-1])

    def reconstruct(self) -> ComplexMatrix:
        """Multiply the factors back together."""
        vectors = self.eigenvectors
        return (vectors * self.eigenvalues) @ adjoint(vectors)


def as_complex_matrix(matrix: npt.ArrayLike) -> ComplexMatrix:
    """Convert the input to a finite two-dimensional complex array."""
    array = np.asarray(matrix, dtype=np.complex128)
    if array.ndim != 2:
        raise DimensionError("matrix", "a two-dimensional array", array.shape)
    if not np.all(np.isfinite(array)):
        raise InvalidInputError("Matrix has non-finite entries")
    return array


def as_vector(vector: npt.ArrayLike, n: int | None = None) -> ComplexVector:
    """Convert the input to a finite one-dimensional complex array of length `n`.

    Column vectors of shape (n, 1) are flattened.
    """
    array = np.asarray(vector, dtype=np.complex128)
    if array.ndim == 2 and array.shape[1] == 1:
        array = array[:, 0]
    if array.ndim != 1:
        raise DimensionError("vector", "a one-dimensional array", array.shape)
    if n is not None and array.shape[0] != n:
        raise DimensionError("vector", n, array.shape[0])
    if not np.all(np.isfinite(array)):
        raise InvalidInputError("Vector has non-finite entries")
    return array


def inner(f: ComplexVector, g: ComplexVector) -> complex:
    """Return <f, g>, linear in `f` and conjugate-linear in `g`."""
    return complex(np.vdot(g, f))


def adjoint(matrix: ComplexMatrix) -> ComplexMatrix:
    """Return the conjugate transpose."""
    return np.conj(matrix).T


def svd(matrix: npt.ArrayLike, *, full_matrices: bool = True) -> SVDResult:
    """Compute the singular value decomposition of a matrix of any shape.

    Raises `DecompositionError` if the underlying routine does not converge.
    """
    u, s, vh = _lapack_svd(as_complex_matrix(matrix), full_matrices=full_matrices)
    return SVDResult(u=u, singular_values=s, v=adjoint(vh))


def singular_values(matrix: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Return the singular values in nonincreasing order."""
    return _lapack_svd(as_complex_matrix(matrix), compute_uv=False)


def schatten_norm(matrix: npt.ArrayLike, p: float) -> float:
    """Compute the Schatten p-norm (sum_j s_j^p)^(1/p); for p = inf the largest
    singular value.

    Raises `InvalidParameterError` for p < 1.
    """
    if np.isnan(p) or p < 1:
        raise InvalidParameterError("p", p, "must satisfy p >= 1 or be infinite")
    s = singular_values(matrix)
    if s.size == 0 or s[0] == 0.0:
        return 0.0
    largest = float(s[0])
    if np.isinf(p):
        return largest
    # factor out s_1 so that large p does not overflow
    return largest * float(np.sum((s / largest) ** p) ** (1.0 / p))


def trace_inner(T: npt.ArrayLike, S: npt.ArrayLike) -> complex:
    """Return the Hilbert-Schmidt inner product tau(S* T) = sum conj(S_ab) T_ab."""
    T = as_complex_matrix(T)
    S = as_complex_matrix(S)
    if T.shape != S.shape:
        raise DimensionError("trace inner product", T.shape, S.shape)
    return complex(np.vdot(S, T))


def hermiticity_residual(matrix: ComplexMatrix) -> float:
    """Return ||M - M*||_F."""
    return float(np.linalg.norm(matrix - adjoint(matrix)))


def ensure_hermitian(matrix: npt.ArrayLike) -> ComplexMatrix:
    """Check that a square matrix is Hermitian within tolerance and return its
    symmetrization (M + M*) / 2.

    The tolerance is HERMITICITY_RTOL * max(1, ||M||_F).
    """
    matrix = as_complex_matrix(matrix)
    if matrix.shape[0] != matrix.shape[1]:
        raise DimensionError("Hermitian matrix", "a square matrix", matrix.shape)
    tolerance = HERMITICITY_RTOL * max(1.0, float(np.linalg.norm(matrix)))
    residual = hermiticity_residual(matrix)
    if residual > tolerance:
        raise NonHermitianError(residual=residual, tolerance=tolerance)
    return (matrix + adjoint(matrix)) / 2


def hermitian_eig(matrix: npt.ArrayLike) -> HermitianEig:
    """Diagonalize a Hermitian matrix; eigenvalues come back in ascending order.

    Raises `NonHermitianError` for inputs outside the hermiticity tolerance and
    `DecompositionError` if the routine does not converge.
    """
    hermitian = ensure_hermitian(matrix)
    try:
        eigenvalues, eigenvectors = linalg.eigh(hermitian, check_finite=False)
    except linalg.LinAlgError as err:
        raise DecompositionError("Hermitian eigenvalue") from err
    return HermitianEig(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def hermitian_fn(matrix: npt.ArrayLike, fn: MatrixFunction) -> ComplexMatrix:
    """Apply `fn` to the spectrum of a Hermitian matrix.

    The inverse and the inverse square root require every eigenvalue to exceed
    PD_RTOL * lambda_max, otherwise `SingularityError` is raised. The square root
    requires positive semidefiniteness up to the same threshold; eigenvalues inside
    the threshold band are clipped to zero.
    """
    fn = MatrixFunction(fn)
    eig = hermitian_eig(matrix)
    eigenvalues = eig.eigenvalues
    threshold = PD_RTOL * max(eig.lambda_max, 0.0)
    if fn is MatrixFunction.SQRT:
        if eig.lambda_min < -threshold:
            raise InvalidInputError(
                "Square root requires a positive semidefinite matrix",
                residual=-eig.lambda_min,
            )
        values = np.sqrt(np.clip(eigenvalues, 0.0, None))
    else:
        if eig.lambda_min <= threshold:
            raise SingularityError(eigenvalue=eig.lambda_min, threshold=threshold)
        values = 1.0 / eigenvalues
        if fn is MatrixFunction.INV_SQRT:
            values = np.sqrt(values)
    vectors = eig.eigenvectors
    result = (vectors * values) @ adjoint(vectors)
    return (result + adjoint(result)) / 2


def pseudoinverse(
    matrix: npt.ArrayLike, rank_threshold: float | None = None
) -> ComplexMatrix:
    """Compute the Moore-Penrose pseudoinverse.

    Singular values at or below `rank_threshold` are treated as zero. The default
    threshold is RANK_RTOL times the largest singular value.
    """
    if rank_threshold is not None and not rank_threshold > 0:
        raise InvalidParameterError("rank_threshold", rank_threshold, "must be > 0")
    decomposition = svd(matrix, full_matrices=False)
    rank = decomposition.rank(rank_threshold)
    u = decomposition.u[:, :rank]
    v = decomposition.v[:, :rank]
    inverted = 1.0 / decomposition.singular_values[:rank]
    return (v * inverted) @ adjoint(u)


def _lapack_svd(matrix: ComplexMatrix, **kwargs):
    """Run the divide-and-conquer SVD, retrying with the slower but more robust
    QR-based driver when it does not converge.
    """
    try:
        return linalg.svd(matrix, check_finite=False, **kwargs)
    except linalg.LinAlgError:
        pass
    try:
        return linalg.svd(matrix, lapack_driver="gesvd", check_finite=False, **kwargs)
    except linalg.LinAlgError as err:
        raise DecompositionError("singular value") from err
