from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from paraferm.exactla import SparseMatrix, rref
from paraferm.exceptions import ParafermError
from paraferm.superalgebra.algebra import AlgebraElement, LieSuperalgebra, super_sign
from paraferm.superalgebra.roots import RootKind, root_generators
from paraferm.utils import add_scaled, drop_zeros


@dataclass(frozen=True)
class ValidationEntry:
    name: str
    passed: bool
    witness: Optional[str] = None


@dataclass
class ValidationReport:
    algebra: str
    entries: List[ValidationEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def __getitem__(self, name: str) -> ValidationEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def failures(self) -> List[ValidationEntry]:
        return [entry for entry in self.entries if not entry.passed]


def _bracket_into(algebra: LieSuperalgebra, terms: Dict[int, Fraction], right: int) -> Dict[int, Fraction]:
    result: Dict[int, Fraction] = {}
    for index, value in terms.items():
        add_scaled(result, algebra.bracket_basis(index, right), value)
    return drop_zeros(result)


def _bracket_from(algebra: LieSuperalgebra, left: int, terms: Dict[int, Fraction]) -> Dict[int, Fraction]:
    result: Dict[int, Fraction] = {}
    for index, value in terms.items():
        add_scaled(result, algebra.bracket_basis(left, index), value)
    return drop_zeros(result)


def _labels(algebra: LieSuperalgebra, *indices: int) -> str:
    return "(" + ", ".join(algebra.labels[index] for index in indices) + ")"


def _check_antisymmetry(algebra: LieSuperalgebra) -> Optional[str]:
    for a, b in product(range(algebra.dim), repeat=2):
        expected = {index: -super_sign(algebra, a, b) * value for index, value in algebra.bracket_basis(b, a).items()}
        if drop_zeros(dict(algebra.bracket_basis(a, b))) != drop_zeros(expected):
            return _labels(algebra, a, b)
    return None


def _check_jacobi(algebra: LieSuperalgebra) -> Optional[str]:
    # [[a,b],c] = [a,[b,c]] - (-1)^{|a||b|} [b,[a,c]]
    for a, b, c in product(range(algebra.dim), repeat=3):
        left = _bracket_into(algebra, algebra.bracket_basis(a, b), c)
        right = _bracket_from(algebra, a, algebra.bracket_basis(b, c))
        add_scaled(right, _bracket_from(algebra, b, algebra.bracket_basis(a, c)), -super_sign(algebra, a, b))
        if left != drop_zeros(right):
            return _labels(algebra, a, b, c)
    return None


def _check_form_parity(algebra: LieSuperalgebra) -> Optional[str]:
    for (a, b), value in algebra.form_table.items():
        if value != 0 and algebra.parities[a] != algebra.parities[b]:
            return _labels(algebra, a, b)
    return None


def _check_form_supersymmetry(algebra: LieSuperalgebra) -> Optional[str]:
    for a, b in product(range(algebra.dim), repeat=2):
        if algebra.form_basis(a, b) != super_sign(algebra, a, b) * algebra.form_basis(b, a):
            return _labels(algebra, a, b)
    return None


def _check_form_invariance(algebra: LieSuperalgebra) -> Optional[str]:
    for a, b, c in product(range(algebra.dim), repeat=3):
        left = sum((value * algebra.form_basis(index, c) for index, value in algebra.bracket_basis(a, b).items()), Fraction(0))
        right = sum((value * algebra.form_basis(a, index) for index, value in algebra.bracket_basis(b, c).items()), Fraction(0))
        if left != right:
            return _labels(algebra, a, b, c)
    return None


def _check_form_nondegenerate(algebra: LieSuperalgebra) -> Optional[str]:
    gram = SparseMatrix.from_dense(
        [[algebra.form_basis(a, b) for b in range(algebra.dim)] for a in range(algebra.dim)]
    )
    _, rank = rref(gram)
    if rank != algebra.dim:
        return "form has rank {} < {}".format(rank, algebra.dim)
    return None


def _check_cartan_gram(algebra: LieSuperalgebra) -> Optional[str]:
    for i, a in enumerate(algebra.cartan):
        for j, b in enumerate(algebra.cartan):
            if algebra.cartan_gram[i][j] != algebra.form_basis(a, b):
                return _labels(algebra, a, b)
    return None


def _check_root_grading(algebra: LieSuperalgebra) -> Optional[str]:
    charges = algebra.charges
    for a, b in product(range(algebra.dim), repeat=2):
        expected = tuple(x + y for x, y in zip(charges[a], charges[b]))
        for index in algebra.bracket_basis(a, b):
            if charges[index] != expected:
                return _labels(algebra, a, b)
    return None


def _check_root_counts(algebra: LieSuperalgebra) -> Optional[str]:
    counts = algebra.root_datum.counts()
    n = algebra.rank
    if algebra.metadata.get("family") == "osp":
        expected = {RootKind.EVEN_LONG: 2 * n, RootKind.EVEN_SHORT: 2 * n * (n - 1), RootKind.ODD: 2 * n}
    else:
        expected = {RootKind.EVEN_LONG: 2, RootKind.EVEN_SHORT: 0, RootKind.ODD: 0}
    if counts != expected or n + sum(counts.values()) != algebra.dim:
        return "counts {} != {}".format({k.value: v for k, v in counts.items()}, {k.value: v for k, v in expected.items()})
    return None


def _check_highest_root(algebra: LieSuperalgebra) -> Optional[str]:
    theta = algebra.root_datum.highest_root
    if theta.kind is not RootKind.EVEN_LONG or algebra.charge_pairing(theta.vector, theta.vector) != 2:
        return "θ = {}".format(theta.vector)
    return None


def _check_cartan_pairing(algebra: LieSuperalgebra) -> Optional[str]:
    # ⟨t_α, h⟩ = α(h) on the stored Cartan basis
    for root in algebra.root_datum.roots:
        t = algebra.cartan_element(root.vector)
        for i, h in enumerate(algebra.cartan):
            if algebra.form(t, algebra.element(h)) != root.vector[i]:
                return "t_{} against {}".format(root.vector, algebra.labels[h])
    return None


def _relations_for_root(algebra: LieSuperalgebra, vector) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    data = root_generators(algebra, vector)
    e, h, f = data.e_plus, data.h, data.e_minus
    br = algebra.bracket
    relations = [
        ("[e,f]=h", br(e, f), h),
        ("[h,e]=2e", br(h, e), 2 * e),
        ("[h,f]=-2f", br(h, f), -2 * f),
    ]
    if data.has_odd_pair:
        x, y = data.x_plus, data.x_minus
        relations += [
            ("[h,x+]=x+", br(h, x), x),
            ("[h,x-]=-x-", br(h, y), -y),
            ("[e,x+]=0", br(e, x), algebra.zero()),
            ("[f,x+]=-x-", br(f, x), -y),
            ("[e,x-]=-x+", br(e, y), -x),
            ("[f,x-]=0", br(f, y), algebra.zero()),
            ("{x+,x+}=2e", br(x, x), 2 * e),
            ("{x+,x-}=h", br(x, y), h),
            ("{x-,x-}=-2f", br(y, y), -2 * f),
        ]
    return relations


def _check_root_relations(algebra: LieSuperalgebra) -> Optional[str]:
    for root in algebra.root_datum.even_positive:
        for name, actual, expected in _relations_for_root(algebra, root.vector):
            if actual != expected:
                return "{} fails for {}".format(name, root.vector)
    return None


def _check_form_normalization(algebra: LieSuperalgebra) -> Optional[str]:
    for root in algebra.root_datum.even_positive:
        data = root_generators(algebra, root.vector)
        length = algebra.charge_pairing(root.vector, root.vector)
        if algebra.form(data.h, data.h) != 4 / length:
            return "⟨h,h⟩ for {}".format(root.vector)
        if algebra.form(data.e_plus, data.e_minus) != 2 / length:
            return "⟨e,f⟩ for {}".format(root.vector)
        if data.has_odd_pair:
            if algebra.form(data.x_plus, data.x_minus) != 2 or algebra.form(data.x_minus, data.x_plus) != -2:
                return "⟨x+,x-⟩ for {}".format(root.vector)
    return None


_CHECKS: Tuple[Tuple[str, Callable[[LieSuperalgebra], Optional[str]]], ...] = (
    ("super_antisymmetry", _check_antisymmetry),
    ("super_jacobi", _check_jacobi),
    ("form_parity", _check_form_parity),
    ("form_supersymmetry", _check_form_supersymmetry),
    ("form_invariance", _check_form_invariance),
    ("form_nondegenerate", _check_form_nondegenerate),
    ("cartan_gram", _check_cartan_gram),
    ("root_grading", _check_root_grading),
    ("root_counts", _check_root_counts),
    ("highest_root", _check_highest_root),
    ("cartan_pairing", _check_cartan_pairing),
    ("root_relations", _check_root_relations),
    ("form_normalization", _check_form_normalization),
)


def validate_algebra(algebra: LieSuperalgebra) -> ValidationReport:
    report = ValidationReport(algebra.name)
    for name, check in _CHECKS:
        try:
            witness = check(algebra)
        except ParafermError as error:
            witness = str(error)
        report.entries.append(ValidationEntry(name, witness is None, witness))
    return report
