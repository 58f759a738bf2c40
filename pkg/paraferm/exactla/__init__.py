from .matrix import SparseMatrix
from .subspace import EchelonBuilder, Subspace, intersect, kernel, membership, radical, rref, subspace_sum

__all__ = (
    'SparseMatrix',
    'Subspace',
    'EchelonBuilder',
    'rref',
    'kernel',
    'membership',
    'intersect',
    'subspace_sum',
    'radical',
)
