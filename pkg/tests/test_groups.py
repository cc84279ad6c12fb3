"""Group construction, validation, and arithmetic queries."""

import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerchroma import (
    GroupSpecError,
    GroupTableError,
    construct_group,
    element_order,
    euler_phi,
    factorize,
    is_cyclic,
    is_power_of,
    load_table_text,
    validate_table,
)
from conftest import brute_phi


class TestConstructGroup:
    def test_cyclic_15_order_multiset(self):
        group = construct_group("cyclic:15")
        # independent count: order of c^k is n / gcd(k, n)
        expected = Counter(15 // math.gcd(k, 15) for k in range(15))
        assert Counter(group.element_orders) == expected
        assert expected == Counter({1: 1, 3: 2, 5: 4, 15: 8})

    def test_trivial_group(self):
        group = construct_group("cyclic:1")
        assert group.order == 1
        assert group.element_orders == (1,)

    def test_quaternion_2_unique_involution(self):
        group = construct_group("quaternion:2")
        assert group.order == 8
        assert sum(1 for o in group.element_orders if o == 2) == 1

    def test_dihedral_order_convention(self):
        assert construct_group("dihedral:3").order == 6
        assert construct_group("dihedral:7").order == 14

    def test_quaternion_order_convention(self):
        assert construct_group("quaternion:3").order == 12

    def test_product(self):
        group = construct_group("product:cyclic:3,cyclic:5")
        assert group.order == 15
        assert group.label == "product:cyclic:3,cyclic:5"

    def test_nary_product(self):
        group = construct_group("product:cyclic:2,cyclic:2,cyclic:2")
        assert group.order == 8
        assert all(o in (1, 2) for o in group.element_orders)

    def test_label_normalized(self):
        assert construct_group(" cyclic:6 ").label == "cyclic:6"

    @pytest.mark.parametrize(
        "spec",
        ["", "cyclic", "cyclic:", "cyclic:zero", "dihedral:2", "quaternion:1",
         "product:cyclic:3", "product:product:cyclic:2,cyclic:2,cyclic:3", "ring:4"],
    )
    def test_malformed_specs(self, spec):
        with pytest.raises(GroupSpecError):
            construct_group(spec)

    def test_family_tables_validate(self):
        for spec in ("cyclic:12", "dihedral:5", "quaternion:3",
                     "product:cyclic:2,cyclic:4"):
            validate_table(construct_group(spec).table)


class TestTableFiles:
    def test_roundtrip(self, tmp_path):
        group = construct_group("dihedral:3")
        path = tmp_path / "d3.table"
        lines = [str(group.order)] + [" ".join(map(str, row)) for row in group.table]
        path.write_text("\n".join(lines))
        loaded = construct_group(f"table:{path}")
        assert loaded.table == group.table
        assert loaded.order == 6

    def test_comments_and_blanks_ignored(self):
        group = load_table_text("# tiny\n\n2\n0 1\n1 0\n")
        assert group.order == 2

    def test_not_latin(self):
        with pytest.raises(GroupTableError, match="Latin"):
            load_table_text("2\n0 0\n1 1\n")

    def test_wrong_identity(self):
        # Latin square whose row 0 is not the identity row
        with pytest.raises(GroupTableError, match="identity"):
            load_table_text("2\n1 0\n0 1\n")

    def test_not_associative(self):
        # order-5 loop: Latin square with identity but (1*1)*2 != 1*(1*2)
        text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3\n"
        with pytest.raises(GroupTableError, match="associativity"):
            load_table_text(text)

    def test_bad_shapes(self):
        with pytest.raises(GroupTableError):
            load_table_text("")
        with pytest.raises(GroupTableError):
            load_table_text("2\n0 1\n")
        with pytest.raises(GroupTableError):
            load_table_text("2\n0 7\n1 0\n")


class TestQueries:
    def test_identity_order(self):
        group = construct_group("dihedral:4")
        assert element_order(group, 0) == 1

    def test_cyclic_15_element(self):
        group = construct_group("cyclic:15")
        assert element_order(group, 3) == 5

    def test_quaternion_involution(self):
        group = construct_group("quaternion:2")
        involutions = [g for g in range(8) if element_order(group, g) == 2]
        assert len(involutions) == 1

    def test_order_out_of_range(self):
        group = construct_group("cyclic:3")
        with pytest.raises(IndexError):
            element_order(group, 3)

    def test_is_power_of_examples(self):
        group = construct_group("cyclic:15")
        assert is_power_of(group, 10, 5)  # c^10 = (c^5)^2
        assert not is_power_of(group, 3, 5)  # <c^5> = {e, c^5, c^10}
        assert group.powers_of(5) == frozenset({0, 5, 10})
        for g in range(group.order):
            assert is_power_of(group, 0, g)  # identity is a power of everything

    def test_powers_count_matches_order(self):
        for spec in ("cyclic:12", "dihedral:5", "quaternion:3", "product:cyclic:2,cyclic:6"):
            group = construct_group(spec)
            for g in range(group.order):
                assert len(group.powers_of(g)) == element_order(group, g)

    def test_is_cyclic_cyclic_groups(self):
        for n in range(1, 65):
            assert is_cyclic(construct_group(f"cyclic:{n}"))

    def test_is_cyclic_products_gcd_rule(self):
        for a in range(2, 13):
            for b in range(2, 13):
                group = construct_group(f"product:cyclic:{a},cyclic:{b}")
                assert is_cyclic(group) == (math.gcd(a, b) == 1), (a, b)

    def test_product_coprime_has_full_order_element(self):
        group = construct_group("product:cyclic:3,cyclic:5")
        assert 15 in group.element_orders

    def test_product_3_3_all_orders_divide_3(self):
        group = construct_group("product:cyclic:3,cyclic:3")
        assert set(group.element_orders) == {1, 3}
        assert not is_cyclic(group)


class TestArithmetic:
    @pytest.mark.parametrize(
        "n,expected",
        [(15, ((3, 1), (5, 1))), (27, ((3, 3),)), (1, ()), (2, ((2, 1),)), (360, ((2, 3), (3, 2), (5, 1)))],
    )
    def test_factorize(self, n, expected):
        assert factorize(n).factors == expected

    def test_prime_power_predicate(self):
        assert factorize(27).is_prime_power
        assert factorize(2).is_prime_power
        assert not factorize(1).is_prime_power
        assert not factorize(15).is_prime_power

    @given(st.integers(min_value=1, max_value=100_000))
    @settings(max_examples=200, deadline=None)
    def test_factorize_reconstructs(self, n):
        f = factorize(n)
        assert f.value == n
        primes = [p for p, _ in f]
        assert primes == sorted(set(primes))

    @pytest.mark.parametrize("n,expected", [(15, 8), (1, 1), (9, 6)])
    def test_euler_phi_examples(self, n, expected):
        assert euler_phi(n) == expected

    def test_euler_phi_brute_force_all_small(self):
        for n in range(1, 1001):
            assert euler_phi(n) == brute_phi(n), n

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            euler_phi(0)
