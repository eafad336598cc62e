import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwreath.groups import cyclic, klein_four, symmetric
from gwreath.invariant import (
    CompatibleMatrix,
    enumerate_compatible_matrices,
    invariant_mul,
    matrix_is_compatible,
    read_row_by_row,
    sigma_product,
    sigma_product_bruteforce,
    sigma_vector,
    structure_constant_table,
)
from gwreath.linear import LinearCombination
from gwreath.partitions import (
    composition_total,
    count_partitions_of_type,
    enumerate_colored_compositions,
)


def oracle_matrices(group, left, right):
    """Independent compatible-matrix enumeration: try every cell-value grid
    outright and filter by the margin and color conditions."""
    k, l = len(left), len(right)
    n = composition_total(left)
    found = []
    for values in itertools.product(range(n + 1), repeat=k * l):
        grid = [values[i * l:(i + 1) * l] for i in range(k)]
        if any(sum(row) != size for row, (size, _) in zip(grid, left)):
            continue
        if any(
            sum(grid[i][j] for i in range(k)) != right[j][0] for j in range(l)
        ):
            continue
        cells = tuple(
            tuple(
                (grid[i][j], group.mul(right[j][1], left[i][1])) if grid[i][j] else None
                for j in range(l)
            )
            for i in range(k)
        )
        found.append(CompatibleMatrix(cells=cells, row_type=left, col_type=right))
    return found


def test_single_block_pair_one_matrix():
    G = cyclic(5)
    left, right = ((4, 2),), ((4, 3),)
    matrices = list(enumerate_compatible_matrices(G, left, right))
    assert matrices == [
        CompatibleMatrix(cells=(((4, G.mul(3, 2)),),), row_type=left, col_type=right)
    ]


def test_two_singletons_pair_two_matrices():
    G = cyclic(1)
    comp = ((1, 0), (1, 0))
    matrices = list(enumerate_compatible_matrices(G, comp, comp))
    assert len(matrices) == 2
    patterns = {tuple(tuple(bool(c) for c in row) for row in m.cells) for m in matrices}
    assert patterns == {((True, False), (False, True)), ((False, True), (True, False))}


def test_worked_matrix_in_z7():
    G = cyclic(7)
    left = ((4, 1), (6, 2))
    right = ((3, 3), (5, 4), (2, 5))
    matrix = CompatibleMatrix(
        cells=(
            ((2, G.mul(3, 1)), None, (2, G.mul(5, 1))),
            ((1, G.mul(3, 2)), (5, G.mul(4, 2)), None),
        ),
        row_type=left,
        col_type=right,
    )
    assert matrix_is_compatible(G, matrix)
    assert matrix in list(enumerate_compatible_matrices(G, left, right))
    assert read_row_by_row(matrix) == (
        (2, G.mul(3, 1)),
        (2, G.mul(5, 1)),
        (1, G.mul(3, 2)),
        (5, G.mul(4, 2)),
    )


def test_read_row_by_row_simple():
    one_by_one = CompatibleMatrix(cells=(((3, 4),),), row_type=((3, 0),), col_type=((3, 0),))
    assert read_row_by_row(one_by_one) == ((3, 4),)
    diagonal = CompatibleMatrix(
        cells=(((2, 5), None), (None, (3, 6))),
        row_type=((2, 0), (3, 0)),
        col_type=((2, 0), (3, 0)),
    )
    assert read_row_by_row(diagonal) == ((2, 5), (3, 6))


@pytest.mark.parametrize("left,right,order", [
    (((2, 0), (1, 1)), ((1, 1), (2, 0)), 2),
    (((2, 1), (2, 2)), ((1, 0), (3, 2)), 3),
    (((1, 0), (1, 0), (1, 0)), ((2, 0), (1, 0)), 1),
])
def test_enumeration_against_bruteforce_oracle(left, right, order):
    G = cyclic(order)
    fast = list(enumerate_compatible_matrices(G, left, right))
    slow = oracle_matrices(G, left, right)
    assert len(fast) == len(set(fast))
    assert set(fast) == set(slow)
    for matrix in fast:
        assert matrix_is_compatible(G, matrix)


def test_every_reading_is_a_composition():
    G = klein_four()
    left = ((2, 1), (2, 3))
    right = ((1, 2), (3, 0))
    for matrix in enumerate_compatible_matrices(G, left, right):
        reading = read_row_by_row(matrix)
        assert all(size >= 1 for size, _ in reading)
        assert composition_total(reading) == 4


def test_sigma_identity_left_and_right():
    for G, n in ((cyclic(2), 3), (cyclic(3), 2)):
        one = ((n, 0),)
        for comp in enumerate_colored_compositions(G, n):
            assert sigma_product(G, one, comp) == LinearCombination.basis(comp)
            assert sigma_product(G, comp, one) == LinearCombination.basis(comp)


def test_sigma_doubling_classical():
    G = cyclic(1)
    comp = ((1, 0), (1, 0))
    assert sigma_product(G, comp, comp) == LinearCombination({comp: 2})


def test_sigma_color_squaring():
    G = cyclic(2)
    comp = ((2, 1),)
    assert sigma_product(G, comp, comp) == LinearCombination.basis(((2, 0),))


def test_total_mass_conserved():
    # the expansion preserves the number of (P, Q) pairs
    G = cyclic(2)
    comps = list(enumerate_colored_compositions(G, 3))
    for left in comps:
        for right in comps:
            expansion = sigma_product(G, left, right)
            mass = sum(
                coeff * count_partitions_of_type(comp)
                for comp, coeff in expansion.items()
            )
            assert mass == count_partitions_of_type(left) * count_partitions_of_type(right)


@pytest.mark.parametrize("G,n", [(cyclic(1), 3), (cyclic(2), 2), (cyclic(2), 3),
                                 (cyclic(3), 2), (symmetric(3), 2)])
def test_bruteforce_agrees(G, n):
    comps = list(enumerate_colored_compositions(G, n))
    for left in comps:
        for right in comps:
            assert sigma_product(G, left, right) == sigma_product_bruteforce(G, left, right)


def test_bruteforce_identity_case():
    G = cyclic(2)
    for comp in enumerate_colored_compositions(G, 3):
        assert sigma_product_bruteforce(G, ((3, 0),), comp) == LinearCombination.basis(comp)


def test_mismatched_totals():
    G = cyclic(2)
    with pytest.raises(ValueError):
        sigma_product(G, ((2, 0),), ((3, 0),))
    with pytest.raises(ValueError):
        sigma_product_bruteforce(G, ((2, 0),), ((3, 0),))


def test_invariant_mul_identity():
    G = cyclic(2)
    one = LinearCombination.basis(((3, 0),))
    for comp in enumerate_colored_compositions(G, 3):
        x = LinearCombination.basis(comp)
        assert invariant_mul(G, one, x) == x


@settings(deadline=None, max_examples=30)
@given(st.data())
def test_invariant_mul_bilinear(data):
    G = cyclic(2)
    comps = list(enumerate_colored_compositions(G, 2))
    def draw_combo():
        return LinearCombination({
            comp: data.draw(st.integers(min_value=-3, max_value=3))
            for comp in data.draw(st.lists(st.sampled_from(comps), max_size=3))
        })
    x, y, z = draw_combo(), draw_combo(), draw_combo()
    assert invariant_mul(G, x, y + z) == invariant_mul(G, x, y) + invariant_mul(G, x, z)
    assert invariant_mul(G, x + y, z) == invariant_mul(G, x, z) + invariant_mul(G, y, z)


def test_invariant_mul_associative_random():
    import random

    G = cyclic(2)
    comps = list(enumerate_colored_compositions(G, 3))
    rng = random.Random(3)
    for _ in range(20):
        x, y, z = (LinearCombination.basis(comps[rng.randrange(len(comps))])
                   for _ in range(3))
        assert invariant_mul(G, invariant_mul(G, x, y), z) == invariant_mul(
            G, x, invariant_mul(G, y, z)
        )


def test_sigma_vector():
    G = cyclic(2)
    vec = sigma_vector(G, ((2, 1), (1, 0)))
    assert len(vec) == 3
    assert all(coeff == 1 for _, coeff in vec.items())


def test_structure_constant_table_classical_n2():
    table = structure_constant_table(cyclic(1), 2)
    assert table["schema_version"] == 1
    assert table["basis"] == ["(2:0)", "(1:0|1:0)"]
    assert table["products"] == {
        "0,0": [[0, 1]],
        "0,1": [[1, 1]],
        "1,0": [[1, 1]],
        "1,1": [[1, 2]],
    }


def test_structure_constant_table_closed():
    table = structure_constant_table(cyclic(2), 2)
    size = len(table["basis"])
    for key, entries in table["products"].items():
        i, j = map(int, key.split(","))
        assert 0 <= i < size and 0 <= j < size
        for index, coeff in entries:
            assert 0 <= index < size
            assert coeff > 0


def test_structure_constant_table_n1_color_products():
    G = cyclic(3)
    table = structure_constant_table(G, 1)
    basis = table["basis"]
    assert len(basis) == 3
    # sigma_(1:g) * sigma_(1:h) = sigma_(1:hg)
    for i in range(3):
        for j in range(3):
            assert table["products"][f"{i},{j}"] == [[G.mul(j, i), 1]]
