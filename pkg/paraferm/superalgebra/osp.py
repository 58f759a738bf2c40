"""
Matrix realizations of osp(1|2n) and sl2.

osp(1|2n) is realized inside gl(1|2n) as the supermatrices preserving the even
supersymmetric form B with B(v0, v0) = 1 and B(v_i, v_{n+i}) = -B(v_{n+i}, v_i) = 1.
Index 0 is even, indices 1..2n are odd; the Cartan element H_i acts on v_i by 1
and on v_{n+i} by -1. Root vectors are the one-dimensional null spaces of the
preservation condition restricted to a weight space of matrix units and are then
rescaled so that every rank-one subalgebra satisfies its normalizations.
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Tuple

import sympy

from paraferm.exceptions import InternalConsistencyError, InvalidArgumentError
from paraferm.superalgebra.algebra import Charge, FormTable, LieSuperalgebra, StructureConstants
from paraferm.utils import to_fraction

log = logging.getLogger(__name__)

HALF = sympy.Rational(1, 2)


class _SupermatrixRealization:

    def __init__(self, n: int) -> None:
        self.n = n
        self.size = 2 * n + 1
        self.form = sympy.zeros(self.size, self.size)
        self.form[0, 0] = 1
        for i in range(1, n + 1):
            self.form[i, n + i] = 1
            self.form[n + i, i] = -1

    def index_parity(self, index: int) -> int:
        return 0 if index == 0 else 1

    def index_weight(self, index: int) -> Charge:
        weight = [0] * self.n
        if 1 <= index <= self.n:
            weight[index - 1] = 1
        elif index > self.n:
            weight[index - self.n - 1] = -1
        return tuple(weight)

    def unit(self, row: int, column: int) -> sympy.Matrix:
        matrix = sympy.zeros(self.size, self.size)
        matrix[row, column] = 1
        return matrix

    def cartan(self, i: int) -> sympy.Matrix:
        return self.unit(i + 1, i + 1) - self.unit(self.n + i + 1, self.n + i + 1)

    def root_vector(self, root: Charge) -> Tuple[sympy.Matrix, int]:
        """Spans the preserving matrices of weight `root`."""
        units = [
            (a, b)
            for a in range(self.size)
            for b in range(self.size)
            if tuple(x - y for x, y in zip(self.index_weight(a), self.index_weight(b))) == tuple(root)
        ]
        parities = {(self.index_parity(a) + self.index_parity(b)) % 2 for a, b in units}
        if len(parities) != 1:
            raise InternalConsistencyError("Weight space {} is not homogeneous".format(root))
        parity = parities.pop()

        # B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0 on basis vectors u = v_r, v = v_s
        constraints = []
        for r in range(self.size):
            for s in range(self.size):
                sign = -1 if parity and self.index_parity(r) else 1
                constraints.append([
                    (self.form[a, s] if b == r else 0) + (sign * self.form[r, a] if b == s else 0)
                    for a, b in units
                ])
        null_space = sympy.Matrix(constraints).nullspace()
        if len(null_space) != 1:
            raise InternalConsistencyError(
                "Root space {} has dimension {}".format(root, len(null_space))
            )
        matrix = sympy.zeros(self.size, self.size)
        for (a, b), value in zip(units, null_space[0]):
            matrix[a, b] = value
        return matrix, parity

    def supertrace(self, matrix: sympy.Matrix) -> sympy.Expr:
        return matrix[0, 0] - sum(matrix[i, i] for i in range(1, self.size))


def _super_commutator(left: sympy.Matrix, left_parity: int, right: sympy.Matrix, right_parity: int) -> sympy.Matrix:
    sign = -1 if left_parity and right_parity else 1
    return left * right - sign * right * left


def _osp_roots(n: int) -> Tuple[List[Charge], List[Charge], List[Charge]]:
    def unit_vector(i: int, scale: int = 1) -> List[int]:
        vector = [0] * n
        vector[i] = scale
        return vector

    long_roots = [tuple(unit_vector(i, 2)) for i in range(n)]
    short_roots = []
    for i, j in combinations(range(n), 2):
        minus = unit_vector(i)
        minus[j] = -1
        plus = unit_vector(i)
        plus[j] = 1
        short_roots.extend([tuple(minus), tuple(plus)])
    odd_roots = [tuple(unit_vector(i)) for i in range(n)]
    return long_roots, short_roots, odd_roots


def _label(prefix: str, vector: Charge) -> str:
    return "{}({})".format(prefix, ",".join(str(coordinate) for coordinate in vector))


def build_osp(n: int) -> LieSuperalgebra:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidArgumentError("osp(1|2n) needs a positive integer n, got {!r}".format(n))

    realization = _SupermatrixRealization(n)
    long_roots, short_roots, odd_roots = _osp_roots(n)
    negate = lambda vector: tuple(-x for x in vector)  # noqa: E731

    matrices: List[sympy.Matrix] = []
    labels: List[str] = []
    parities: List[int] = []
    charges: List[Charge] = []

    def append(label: str, matrix: sympy.Matrix, parity: int, charge: Charge) -> None:
        labels.append(label)
        matrices.append(matrix)
        parities.append(parity)
        charges.append(charge)

    zero_charge = tuple([0] * n)
    for i in range(n):
        append("h{}".format(i + 1), realization.cartan(i), 0, zero_charge)

    even_positive: Dict[Charge, Tuple[sympy.Matrix, sympy.Matrix]] = {}
    odd_pairs: Dict[Charge, Tuple[sympy.Matrix, sympy.Matrix]] = {}

    for i, root in enumerate(long_roots):
        x_plus, _ = realization.root_vector(odd_roots[i])
        x_minus, _ = realization.root_vector(negate(odd_roots[i]))
        anticommutator = _super_commutator(x_plus, 1, x_minus, 1)
        scale = anticommutator[i + 1, i + 1]
        if scale == 0 or anticommutator != scale * realization.cartan(i):
            raise InternalConsistencyError("{x+, x-} is not proportional to h for root %s" % (root,))
        x_minus = x_minus / scale
        e_plus = HALF * _super_commutator(x_plus, 1, x_plus, 1)
        e_minus = -HALF * _super_commutator(x_minus, 1, x_minus, 1)
        even_positive[root] = (e_plus, e_minus)
        odd_pairs[odd_roots[i]] = (x_plus, x_minus)

    for root in short_roots:
        e_plus, _ = realization.root_vector(root)
        e_minus, _ = realization.root_vector(negate(root))
        # h_α = 2 t_α = Σ_i α_i H_i for the Cartan basis with ⟨H_i, H_j⟩ = 2 δ_ij
        coroot = sympy.zeros(realization.size, realization.size)
        for i, coordinate in enumerate(root):
            coroot += coordinate * realization.cartan(i)
        commutator = _super_commutator(e_plus, 0, e_minus, 0)
        pivot = next(i for i, coordinate in enumerate(root) if coordinate)
        scale = commutator[pivot + 1, pivot + 1] / coroot[pivot + 1, pivot + 1]
        if scale == 0 or commutator != scale * coroot:
            raise InternalConsistencyError("[e, f] is not proportional to h for root %s" % (root,))
        even_positive[root] = (e_plus, e_minus / scale)

    for root, (e_plus, _) in even_positive.items():
        append(_label("e", root), e_plus, 0, root)
    for root, (_, e_minus) in even_positive.items():
        append(_label("e", negate(root)), e_minus, 0, negate(root))
    for root, (x_plus, _) in odd_pairs.items():
        append(_label("x", root), x_plus, 1, root)
    for root, (_, x_minus) in odd_pairs.items():
        append(_label("x", negate(root)), x_minus, 1, negate(root))

    index_by_charge = {charge: index for index, charge in enumerate(charges) if any(charge)}

    def decompose(matrix: sympy.Matrix, charge: Charge) -> Dict[int, Fraction]:
        if not any(matrix):
            return {}
        if not any(charge):
            coefficients = {i: matrix[i + 1, i + 1] for i in range(n)}
            expected = sympy.zeros(realization.size, realization.size)
            for i, value in coefficients.items():
                expected += value * matrices[i]
            if expected != matrix:
                raise InternalConsistencyError("Bracket with zero charge left the Cartan subalgebra")
            return {i: to_fraction(value) for i, value in coefficients.items() if value != 0}

        index = index_by_charge.get(charge)
        if index is None:
            raise InternalConsistencyError("Bracket landed on the non-root {}".format(charge))
        basis_matrix = matrices[index]
        row, column = next((r, c) for r in range(realization.size) for c in range(realization.size) if basis_matrix[r, c] != 0)
        coefficient = matrix[row, column] / basis_matrix[row, column]
        if coefficient * basis_matrix != matrix:
            raise InternalConsistencyError("Bracket is not proportional to the root vector of {}".format(charge))
        return {index: to_fraction(coefficient)}

    structure_constants: StructureConstants = {}
    form_table: FormTable = {}
    for i, (left, left_parity) in enumerate(zip(matrices, parities)):
        for j, (right, right_parity) in enumerate(zip(matrices, parities)):
            charge = tuple(a + b for a, b in zip(charges[i], charges[j]))
            coefficients = decompose(_super_commutator(left, left_parity, right, right_parity), charge)
            if coefficients:
                structure_constants[i, j] = coefficients
            value = -realization.supertrace(left * right)
            if value != 0:
                form_table[i, j] = to_fraction(value)

    log.debug("Built osp(1|%d) with %d basis elements", 2 * n, len(labels))
    return LieSuperalgebra(
        name="osp(1|{})".format(2 * n),
        labels=tuple(labels),
        parities=tuple(parities),
        structure_constants=structure_constants,
        form_table=form_table,
        cartan=tuple(range(n)),
        cartan_gram=tuple(
            tuple(form_table.get((i, j), Fraction(0)) for j in range(n)) for i in range(n)
        ),
        sugawara_shift=Fraction(2 * n + 1, 2),
        metadata={"family": "osp", "n": n},
    )


def build_sl2() -> LieSuperalgebra:
    one, two = Fraction(1), Fraction(2)
    h, e, f = 0, 1, 2
    structure_constants: StructureConstants = {
        (e, f): {h: one},
        (f, e): {h: -one},
        (h, e): {e: two},
        (e, h): {e: -two},
        (h, f): {f: -two},
        (f, h): {f: two},
    }
    form_table: FormTable = {(h, h): two, (e, f): one, (f, e): one}
    return LieSuperalgebra(
        name="sl2",
        labels=("h1", "e(2)", "e(-2)"),
        parities=(0, 0, 0),
        structure_constants=structure_constants,
        form_table=form_table,
        cartan=(h,),
        cartan_gram=((two,),),
        sugawara_shift=two,
        metadata={"family": "sl2", "n": 1},
    )
