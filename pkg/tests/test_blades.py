"""Blade kernel: frozen worked products, literals, and oracle agreement."""

import pytest

from bladebind.blades import (
    BINARY_LITERAL_MAX,
    BladeIndex,
    DimensionMismatch,
    SignedBlade,
    blade_inverse,
    format_blade,
    geometric_product,
    grade,
    parse_blade,
    product_sign,
    reversion_sign,
    xor_of,
)
from bladebind.reference import (
    product_by_transposition_sort,
    product_sign_slow,
    sign_by_crossing_count,
)


def b(text):
    return BladeIndex.from_bits(text)


def sb(sign, text):
    return SignedBlade(sign, b(text))


# --- frozen worked products -------------------------------------------------


def test_single_generator_squares_to_plus_one():
    assert geometric_product(sb(1, "1"), sb(1, "1")) == sb(1, "0")


def test_generator_absorbs_into_two_blade():
    # e1 * e12 = e2 ; e12 * e1 = -e2
    assert geometric_product(sb(1, "10"), sb(1, "11")) == sb(1, "01")
    assert geometric_product(sb(1, "11"), sb(1, "10")) == sb(-1, "01")


def test_eight_bit_worked_product():
    # positions {1,2,5,7} times {2,6}: three jumps, so the sign is -1
    a = b("11001010")
    c = b("01000100")
    assert product_sign(a, c) == -1
    assert geometric_product(SignedBlade(1, a), SignedBlade(1, c)) == sb(-1, "10001110")


def test_four_blade_times_two_blade_positions():
    a = BladeIndex.from_positions([1, 2, 5, 7], 8)
    c = BladeIndex.from_positions([2, 6], 8)
    assert a == b("11001010") and c == b("01000100")
    prod = product_by_transposition_sort(a, c)
    assert prod.sign == -1
    assert prod.index.positions() == (1, 5, 6, 7)


def test_scalar_is_identity_on_both_sides():
    one = BladeIndex.scalar(4)
    for text in ("0000", "1010", "1111"):
        assert product_sign(one, b(text)) == 1
        assert product_sign(b(text), one) == 1
        assert xor_of(one, b(text)) == b(text)


# --- sign oracle agreement -----------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sign_matches_slow_reference_exhaustively(n):
    for av in range(1 << n):
        for bv in range(1 << n):
            x, y = BladeIndex(n, av), BladeIndex(n, bv)
            assert product_sign(x, y) == product_sign_slow(x, y)


def test_full_product_matches_transposition_sort():
    import random

    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(1, 100)
        x = BladeIndex(n, rng.getrandbits(n))
        y = BladeIndex(n, rng.getrandbits(n))
        got = geometric_product(SignedBlade(1, x), SignedBlade(1, y))
        assert got == product_by_transposition_sort(x, y)
        assert product_sign(x, y) == sign_by_crossing_count(x, y)


def test_below_parity_mask_semantics():
    # machine bit j of the mask = parity of the blade's bits strictly below j
    import random

    rng = random.Random(5)
    for _ in range(50):
        n = rng.randrange(1, 70)
        v = rng.getrandbits(n)
        mask = BladeIndex(n, v).below_parity_mask()
        for j in range(n):
            below = v & ((1 << j) - 1)
            assert (mask >> j) & 1 == below.bit_count() & 1


# --- inverses and reversion -------------------------------------------------------


def test_reversion_sign_by_grade():
    assert [reversion_sign(k) for k in range(6)] == [1, 1, -1, -1, 1, 1]


def test_blade_inverse_cancels():
    import random

    rng = random.Random(3)
    for _ in range(100):
        n = rng.randrange(1, 80)
        x = BladeIndex(n, rng.getrandbits(n))
        prod = blade_inverse(x) * SignedBlade(1, x)
        assert prod == SignedBlade(1, BladeIndex.scalar(n))


def test_unbind_recovers_filler_exhaustively_and_at_scale():
    import random

    # every (a, x) pair at small n, then spot checks at ten-thousand-bit scale
    for n in range(1, 9):
        for a_bits in range(1 << n):
            a = SignedBlade(1, BladeIndex(n, a_bits))
            inv = blade_inverse(a.index)
            for x_bits in range(1 << n):
                x = SignedBlade(1, BladeIndex(n, x_bits))
                assert inv * (a * x) == x

    rng = random.Random(8)
    n = 10_000
    for _ in range(25):
        a = SignedBlade(1, BladeIndex(n, rng.getrandbits(n)))
        x = SignedBlade(1, BladeIndex(n, rng.getrandbits(n)))
        assert blade_inverse(a.index) * (a * x) == x


def test_two_blade_squares_to_minus_one():
    e12 = b("1100")
    assert geometric_product(SignedBlade(1, e12), SignedBlade(1, e12)) == sb(-1, "0000")
    assert blade_inverse(e12).sign == -1


# --- construction and views ----------------------------------------------------


def test_grade_counts_set_bits():
    assert grade(b("0000")) == 0
    assert grade(b("1010")) == 2
    assert b("111").grade() == 3
    assert b("0110").positions() == (2, 3)


def test_from_positions_bounds():
    with pytest.raises(ValueError):
        BladeIndex.from_positions([0], 4)
    with pytest.raises(ValueError):
        BladeIndex.from_positions([5], 4)


def test_constructor_rejects_bad_values():
    with pytest.raises(ValueError):
        BladeIndex(0, 0)
    with pytest.raises(ValueError):
        BladeIndex(4, 16)
    with pytest.raises(ValueError):
        BladeIndex(4, -1)
    with pytest.raises(ValueError):
        BladeIndex.from_bits("10x0")
    with pytest.raises(ValueError):
        BladeIndex.from_bits("")


def test_blade_index_is_immutable():
    x = b("1010")
    with pytest.raises(AttributeError):
        x.value = 3


def test_signed_blade_sign_domain():
    with pytest.raises(ValueError):
        SignedBlade(0, b("10"))
    with pytest.raises(ValueError):
        SignedBlade(2, b("10"))
    assert (-sb(1, "10")).sign == -1


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        product_sign(b("10"), b("100"))
    with pytest.raises(DimensionMismatch):
        xor_of(b("10"), b("100"))


# --- literals -----------------------------------------------------------------


def test_literal_round_trips_binary_and_hex():
    assert parse_blade("1010") == b("1010")
    short = BladeIndex(64, (1 << 63) | 5)
    long = BladeIndex(65, (1 << 64) | 5)
    assert len(format_blade(short)) == 64 and set(format_blade(short)) <= {"0", "1"}
    assert format_blade(long) == long.hex and len(long.hex) == 17
    assert parse_blade(format_blade(short), 64) == short
    assert parse_blade(format_blade(long), 65) == long
    assert BINARY_LITERAL_MAX == 64


def test_parse_blade_needs_n_for_hex():
    with pytest.raises(ValueError):
        parse_blade("a3")  # hex literal without a dimension
    assert parse_blade("a3", 8) == BladeIndex(8, 0xA3)


def test_parse_blade_length_mismatch():
    with pytest.raises(ValueError):
        parse_blade("101", 4)
    with pytest.raises(ValueError):
        parse_blade("zz", 8)


def test_hex_and_bits_views_agree():
    x = b("10110001")
    assert x.hex == "b1"
    assert BladeIndex.from_hex("b1", 8) == x
    assert x.bits == "10110001"


def test_ordering_is_lexicographic_on_literals():
    values = [b("0011"), b("1100"), b("0100")]
    assert sorted(values) == [b("0011"), b("0100"), b("1100")]
