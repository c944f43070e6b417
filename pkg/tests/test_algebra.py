import itertools
from fractions import Fraction

import pytest

from fproot.algebra import (AlgebraError, BoundAlgebra, LengthCapExceeded,
                            NonAdmissibleRelation, algebra_from_json,
                            algebra_to_json, build_algebra,
                            dual_numbers_algebra, kronecker_algebra,
                            local_two_loop_algebra, opposite, path_algebra,
                            sqrt2_algebra)
from fproot.exactlin import RatMatrix, rank
from fproot.quiver import Quiver, path_quiver


# -- word-enumeration oracle for monomial quotients ---------------------------

def monomial_quotient_dim_oracle(n_loops, forbidden, max_len):
    """Dimension of k<x_0..x_{n-1}>/(monomials): count words (written left to
    right, leftmost applied last) avoiding every forbidden factor."""
    alphabet = list(range(n_loops))
    count = 0
    for length in range(max_len + 1):
        for word in itertools.product(alphabet, repeat=length):
            if any(word[i:i + len(f)] == f for f in forbidden
                   for i in range(len(word) - len(f) + 1)):
                continue
            count += 1
    return count


def test_two_loop_algebra_dimension_matches_word_oracle():
    for m, n in [(2, 2), (2, 3), (3, 3), (4, 2)]:
        a = local_two_loop_algebra(m, n)
        # words in x (=0), y (=1); forbidden: x^m, y^n, xy
        oracle = monomial_quotient_dim_oracle(
            2, [tuple([0] * m), tuple([1] * n), (0, 1)], m + n + 2)
        assert a.dim == oracle == m * n


def test_two_loop_opposite_is_swapped():
    a = local_two_loop_algebra(2, 3)
    b = local_two_loop_algebra(3, 2)
    assert opposite(a).dim == b.dim == a.dim
    # the opposite of (x^2, y^3, xy) is (x^2, y^3, yx); swapping the loop
    # names identifies it with the (3,2) algebra
    op = opposite(a)
    op_words = sorted(tuple(p.arrows) for p in op.basis)
    swapped = sorted(tuple("y" if l == "x" else "x" for l in p.arrows)
                     for p in b.basis)
    assert op_words == swapped


def test_sqrt2_algebra_basis():
    a = sqrt2_algebra()
    assert a.dim == 5
    lengths = sorted(len(p) for p in a.basis)
    assert lengths == [0, 0, 1, 1, 1]


def test_path_algebra_linear_quiver():
    a = path_algebra(path_quiver(2))
    assert a.dim == 3
    assert path_algebra(path_quiver(4)).dim == 4 + 3 + 2 + 1


def test_dual_numbers():
    a = dual_numbers_algebra()
    assert a.dim == 2


def test_kronecker_algebra_dim():
    assert kronecker_algebra().dim == 4


def test_left_multiply_reduces():
    a = dual_numbers_algebra()
    x = a.basis_with_source("1")[1]
    assert len(x) == 1
    assert a.left_multiply("x", x) == {}  # x * x = 0


def test_nonadmissible_relations_rejected():
    q = Quiver(["1"], [("x", "1", "1")])
    with pytest.raises(NonAdmissibleRelation):
        BoundAlgebra(q, [[(1, ("x",))]])  # length-1 path
    q2 = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    with pytest.raises(NonAdmissibleRelation):
        # (b a): 1 -> 1 and (a b): 2 -> 2 are not parallel
        BoundAlgebra(q2, [[(1, ("b", "a")), (1, ("a", "b"))]])
    with pytest.raises(NonAdmissibleRelation):
        # mixed lengths in one relation
        BoundAlgebra(q, [[(1, ("x", "x")), (1, ("x", "x", "x"))]])


def test_noncomposable_relation_path_rejected():
    q = Quiver(["1", "2"], [("a", "1", "2")])
    with pytest.raises(AlgebraError):
        BoundAlgebra(q, [[(1, ("a", "a"))]])


def test_infinite_dimensional_detected():
    q = Quiver(["1"], [("x", "1", "1")])
    with pytest.raises(LengthCapExceeded):
        BoundAlgebra(q, [], length_cap=12)


def test_scaled_relation_same_quotient():
    q = Quiver(["1"], [("x", "1", "1")])
    a = BoundAlgebra(q, [[(Fraction(3, 7), ("x", "x", "x"))]])
    assert a.dim == 3


def test_commutation_style_relation():
    # two loops with yx = xy: the quotient of the free algebra truncated
    q = Quiver(["1"], [("x", "1", "1"), ("y", "1", "1")])
    a = BoundAlgebra(q, [
        [(1, ("x", "y")), (-1, ("y", "x"))],
        [(1, ("x", "x"))],
        [(1, ("y", "y"))],
    ])
    # commutative: basis 1, x, y, xy
    assert a.dim == 4


def test_algebra_json_roundtrip():
    a = sqrt2_algebra()
    b = algebra_from_json(algebra_to_json(a))
    assert b.dim == a.dim
    assert [p.arrows for p in b.basis] == [p.arrows for p in a.basis]
    with pytest.raises(AlgebraError):
        algebra_from_json("nope")
    with pytest.raises(AlgebraError):
        algebra_from_json('{"arrows": []}')  # vertices block missing
    # a vertex-only file is a legal semisimple algebra
    assert algebra_from_json('{"vertices": ["1", "2"]}').dim == 2
