"""The rank 2 numerical Grothendieck group of the Kuznetsov component and the numerical Serre action on it"""

import logging
from functools import cache

from sympy import Matrix, eye

from tiltwall.constants import KU_BASIS, SERRE_DIAGRAM_ARROWS, STRUCTURE_SHEAF, STRUCTURE_SHEAF_TWISTED
from tiltwall.exceptions import DomainError, NotInLattice, TiltWallError
from tiltwall.lattice import chi2
from tiltwall.models.characters import ChernCharacter
from tiltwall.models.kuznetsov import KuClass, SerreMatrix
from tiltwall.type_alias import IntMatrix

logger = logging.getLogger(__name__)


def to_chern(k: KuClass) -> ChernCharacter:
    """
    The character a ch(I) + b ch(S(I)).

    Example::

        to_chern(KuClass(2, 1))  # 4,-1,-5/6,1/6
    """
    line_ideal, serre_line_ideal = KU_BASIS
    return line_ideal.scale(k.a) + serre_line_ideal.scale(k.b)


def from_chern(v: ChernCharacter) -> KuClass:
    """
    Coordinates of ``v`` in the basis ([I], [S(I)]): b = -ch1, a = ch0 - 2b.

    :raises NotInLattice: if ``v`` is not an integral combination of the basis
    """
    if v.ch1.denominator != 1:
        raise NotInLattice(f"{v} has non-integral ch1.")
    b = -int(v.ch1)
    k = KuClass(v.ch0 - 2 * b, b)
    if to_chern(k) != v:
        raise NotInLattice(f"{v} is not in the lattice spanned by ch(I) and ch(S(I)): ch2 or ch3 disagree.")
    return k


def ku_numeric_membership(v: ChernCharacter) -> bool:
    """chi(O_X, v) = chi(O_X(H), v) = 0"""
    return chi2(STRUCTURE_SHEAF, v) == 0 and chi2(STRUCTURE_SHEAF_TWISTED, v) == 0


def pairing_matrix() -> IntMatrix:
    """the Euler pairing chi(b_i, b_j) on the basis ([I], [S(I)]), rows indexed by the first argument"""
    rows = []
    for first in KU_BASIS:
        row = [chi2(first, second) for second in KU_BASIS]
        if any(entry.denominator != 1 for entry in row):
            raise TiltWallError(f"Non-integral Euler pairing {row} on the Kuznetsov basis.")
        rows.append((int(row[0]), int(row[1])))
    return rows[0], rows[1]


def _to_int_matrix(matrix: Matrix) -> IntMatrix:
    if not all(entry.is_integer for entry in matrix):
        raise TiltWallError(f"Serre matrix {matrix.tolist()} is not integral.")
    return (int(matrix[0, 0]), int(matrix[0, 1])), (int(matrix[1, 0]), int(matrix[1, 1]))


@cache
def serre_matrix() -> SerreMatrix:
    """
    The matrix M with chi(x, y) = chi(y, M x), cross-checked against every arrow of the orbit diagrams.

    With G the pairing matrix the condition reads G = M^T G^T, so M = G^-1 G^T.

    :raises TiltWallError: if the derived matrix is not integral, fails M^3 = -1 or misses a diagram arrow
    """
    gram = Matrix(pairing_matrix())
    if gram.det() == 0:
        raise TiltWallError("Degenerate Euler pairing on the Kuznetsov basis.")
    derived = gram.inv() * gram.T
    if derived**3 != -eye(2):
        raise TiltWallError(f"Serre matrix {derived.tolist()} does not cube to -1.")
    matrix = SerreMatrix(_to_int_matrix(derived))
    for source, target, shifted in SERRE_DIAGRAM_ARROWS:
        image = matrix.apply(source)
        if shifted:
            image = -image
        if image != target:
            arrow = "S[1]" if shifted else "S"
            raise TiltWallError(
                f"Serre matrix sends {source.label} by {arrow} to {image.label}, not {target.label}."
            )
    logger.debug("derived Serre matrix %s", matrix.rows)
    return matrix


def serre_apply(k: KuClass, shift: bool = False) -> KuClass:
    """
    Numerical action of S, or of S[1] when ``shift`` is set.

    Example::

        serre_apply(KuClass(-1, 3), shift=True)  # KuClass(3, -2)
    """
    image = serre_matrix().apply(k)
    return -image if shift else image


def serre_orbit(k: KuClass) -> list[KuClass]:
    """the three nodes k, S(k), S[1](S(k)) of an orbit diagram; one more S returns to k"""
    first = serre_apply(k)
    return [k, first, serre_apply(first, shift=True)]


def expected_dim(v: ChernCharacter) -> int:
    """
    Expected dimension 1 - chi(v, v) of a moduli space of stable objects of class ``v``.

    :raises DomainError: if chi(v, v) is not an integer, so ``v`` is not a lattice point
    """
    chi = chi2(v, v)
    if chi.denominator != 1:
        raise DomainError(f"chi({v}, {v}) = {chi} is not integral.")
    return 1 - int(chi)


def curve_class(d: int) -> KuClass:
    """the class (d-2)[I] + [S(I)] of the kernels attached to degree d curves"""
    return KuClass(d - 2, 1)
