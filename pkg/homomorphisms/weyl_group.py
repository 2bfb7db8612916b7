"""W(B_n) as signed permutation matrices"""
import numpy as np

from errors import PreconditionError
from monoids.partial_perm import SignedPartialPerm
from presentations.words import GeneratorSymbol, Word


def generator_matrix(g: GeneratorSymbol, n: int) -> np.ndarray:
    """
    Matrix of σ_i, τ or their inverses acting on row vectors.

    Row j holds the image of +v_j, so products read left to right.
    """
    if g.is_epsilon:
        raise PreconditionError(f"{g} is not a unit")
    if not g.is_valid(n):
        raise PreconditionError(f"generator {g} is not valid at rank {n}")
    matrix = np.eye(n, dtype=np.int64)
    if g.is_sigma:
        i = g.index - 1
        matrix[[i, i + 1]] = matrix[[i + 1, i]]
    else:
        matrix[0, 0] = -1
    if g.exponent < 0:
        # orthogonal
        matrix = matrix.T
    return matrix


def word_matrix(w: Word) -> np.ndarray:
    result = np.eye(w.rank, dtype=np.int64)
    for letter in w:
        result = result @ generator_matrix(letter, w.rank)
    return result


def element_matrix(a: SignedPartialPerm) -> np.ndarray:
    """Signed partial permutation matrix; undefined rows are zero"""
    matrix = np.zeros((a.n, a.n), dtype=np.int64)
    for j, entry in enumerate(a.image):
        if entry is not None:
            target, sign = entry
            matrix[j, target - 1] = sign
    return matrix


def matrix_element(matrix: np.ndarray) -> SignedPartialPerm:
    n = matrix.shape[0]
    entries = []
    for row in matrix:
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            entries.append(None)
        elif nonzero.size == 1 and abs(int(row[nonzero[0]])) == 1:
            entries.append((int(nonzero[0]) + 1, int(row[nonzero[0]])))
        else:
            raise PreconditionError(f"row {row.tolist()} is not a signed partial permutation row")
    return SignedPartialPerm(n, tuple(entries))
