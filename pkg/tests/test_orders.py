import random
from itertools import product

import pytest

from designideal.errors import DimensionMismatch
from designideal.orders import GREATER, LESS, EQUAL, BlockOrder, TermOrder


def test_lex_example():
    lex = TermOrder("lex")
    assert lex.compare((1, 0), (0, 5)) == GREATER
    assert lex.compare((0, 5), (1, 0)) == LESS


def test_degrevlex_example():
    deg = TermOrder("degrevlex")
    # same total degree; the right-most nonzero entry of the difference is
    # negative, so the left monomial is larger
    assert deg.compare((2, 0, 0), (1, 1, 0)) == GREATER
    assert deg.compare((1, 1, 0), (1, 0, 1)) == GREATER


def test_reflexive_equal():
    for kind in ("lex", "degrevlex"):
        assert TermOrder(kind).compare((2, 1, 3), (2, 1, 3)) == EQUAL


def test_one_is_minimal():
    rng = random.Random(0)
    for kind in ("lex", "degrevlex"):
        order = TermOrder(kind)
        for _ in range(50):
            expo = tuple(rng.randint(0, 4) for _ in range(3))
            if any(expo):
                assert order.compare(expo, (0, 0, 0)) == GREATER


def test_total_antisymmetric_transitive():
    rng = random.Random(1)
    for kind in ("lex", "degrevlex"):
        order = TermOrder(kind)
        pool = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(30)]
        for a, b in product(pool, repeat=2):
            cab, cba = order.compare(a, b), order.compare(b, a)
            assert cab == -cba
            assert (cab == EQUAL) == (a == b)
        for a, b, c in zip(pool, pool[1:], pool[2:]):
            if order.compare(a, b) != LESS and order.compare(b, c) != LESS:
                assert order.compare(a, c) != LESS


def test_multiplicative():
    rng = random.Random(2)
    for kind in ("lex", "degrevlex"):
        order = TermOrder(kind)
        for _ in range(100):
            a, b, g = (tuple(rng.randint(0, 3) for _ in range(4))
                       for _ in range(3))
            shifted = order.compare(
                tuple(x + z for x, z in zip(a, g)),
                tuple(y + z for y, z in zip(b, g)),
            )
            assert shifted == order.compare(a, b)


def test_precedence_permutation():
    order = TermOrder("lex", precedence=("x2", "x1"))
    key = order.key_function(("x1", "x2"))
    assert key((0, 1)) > key((1, 0))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        TermOrder("lex").compare((1, 0), (1, 0, 0))


def test_block_order_eliminates():
    block = BlockOrder((("t",),))
    key = block.key_function(("t", "x", "y"))
    # any power of t beats any monomial in x and y alone
    assert key((1, 0, 0)) > key((0, 5, 5))
    assert key((0, 2, 0)) > key((0, 1, 1)) or key((0, 2, 0)) < key((0, 1, 1))
