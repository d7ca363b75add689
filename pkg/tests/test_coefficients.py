import pytest

from kohtrees.coefficients import (METHOD_BOTH, METHOD_DIFFERENCE,
                                   METHOD_MARKED, CoefficientReport,
                                   hook_content, kronecker_two_row,
                                   plethysm_two_row, plethysm_two_row_general,
                                   schur_specialization_oracle)
from kohtrees.errors import (BudgetExceededError, CrossCheckFailedError,
                             PreconditionViolationError, SizeMismatchError)
from kohtrees.partitions import Partition, enumerate_partitions
from kohtrees.qpoly import ONE, QPoly, q_binomial


def test_hook_content_base_cases():
    assert hook_content(Partition(), 3) == ONE
    assert hook_content(Partition((1,)), 0) == ONE
    assert hook_content(Partition((1, 1)), 0).is_zero
    assert hook_content(Partition((1, 1, 1)), 1).is_zero
    with pytest.raises(PreconditionViolationError):
        hook_content(Partition((2,)), -1)


def test_hook_content_single_row_is_gaussian():
    for m in range(1, 6):
        for k in range(0, 5):
            assert hook_content(Partition((m,)), k) == q_binomial(m, k)


def test_hook_content_single_column():
    # one column of length m picks the top coefficient shape q^(m(m-1)/2) * C(k+1, m)_q-ish;
    # checked against the tableau count instead of a second formula
    for m in range(1, 5):
        for k in range(0, 5):
            mu = Partition((1,) * m)
            assert hook_content(mu, k) == schur_specialization_oracle(mu, k)


def test_hook_content_known_polynomial():
    assert hook_content(Partition((2, 1)), 2).coeffs == (0, 1, 2, 2, 2, 1)
    assert hook_content(Partition((1, 1)), 1) == QPoly([0, 1])


def test_hook_content_matches_tableau_oracle():
    for size in range(1, 6):
        for mu in enumerate_partitions(size):
            for k in range(0, 5):
                assert hook_content(mu, k) == schur_specialization_oracle(mu, k)


def test_oracle_budget():
    with pytest.raises(BudgetExceededError):
        schur_specialization_oracle(Partition((3, 2)), 4, max_fillings=5)


def test_oracle_base_cases():
    assert schur_specialization_oracle(Partition(), 2) == ONE
    with pytest.raises(PreconditionViolationError):
        schur_specialization_oracle(Partition((1,)), -1)


def test_kronecker_small_values():
    assert kronecker_two_row(2, 2, 0).value == 1
    assert kronecker_two_row(2, 2, 1).value == 0
    assert kronecker_two_row(2, 2, 2).value == 1
    assert kronecker_two_row(3, 4, 6).value == 1


def test_kronecker_methods_agree_and_report():
    both = kronecker_two_row(4, 3, 5, method=METHOD_BOTH)
    marked = kronecker_two_row(4, 3, 5, method=METHOD_MARKED)
    diff = kronecker_two_row(4, 3, 5, method=METHOD_DIFFERENCE)
    assert both.value == marked.value == diff.value
    assert both.method == METHOD_BOTH
    assert marked.method == METHOD_MARKED
    assert diff.method == METHOD_DIFFERENCE
    assert diff.witness_counts is None
    assert marked.witness_counts is not None
    assert sum(marked.witness_counts) == marked.value
    assert both.witness_counts == marked.witness_counts


def test_kronecker_preconditions():
    with pytest.raises(PreconditionViolationError):
        kronecker_two_row(0, 2, 0)
    with pytest.raises(PreconditionViolationError):
        kronecker_two_row(2, 0, 0)
    with pytest.raises(PreconditionViolationError):
        kronecker_two_row(2, 2, 3)
    with pytest.raises(PreconditionViolationError):
        kronecker_two_row(2, 2, -1)
    with pytest.raises(PreconditionViolationError):
        kronecker_two_row(2, 2, 1, method="fastest")


def test_kronecker_budget_propagates():
    with pytest.raises(BudgetExceededError):
        kronecker_two_row(8, 9, 10, method=METHOD_MARKED, max_trees=3)
    assert kronecker_two_row(8, 9, 10, method=METHOD_DIFFERENCE,
                             max_trees=3).value >= 0


def test_kronecker_cross_check_trips_on_disagreement(monkeypatch):
    monkeypatch.setattr("kohtrees.coefficients.count_in_rectangle",
                        lambda n, k, r: 0)
    with pytest.raises(CrossCheckFailedError):
        kronecker_two_row(2, 2, 0, method=METHOD_BOTH)


def test_plethysm_small_values():
    assert plethysm_two_row(Partition((1, 1)), 2, 1).value == 1
    assert plethysm_two_row(Partition((1, 1)), 2, 0).value == 0
    assert plethysm_two_row(Partition((2, 1)), 2, 2).value == 1


def test_plethysm_methods_agree():
    mu = Partition((2, 2))
    for r in range(0, mu.size * 3 // 2 + 1):
        both = plethysm_two_row(mu, 3, r, method=METHOD_BOTH)
        marked = plethysm_two_row(mu, 3, r, method=METHOD_MARKED)
        diff = plethysm_two_row(mu, 3, r, method=METHOD_DIFFERENCE)
        assert both.value == marked.value == diff.value
        assert sum(marked.witness_counts) == marked.value


def test_plethysm_preconditions():
    with pytest.raises(PreconditionViolationError):
        plethysm_two_row(Partition(), 2, 0)
    with pytest.raises(PreconditionViolationError):
        plethysm_two_row(Partition((2,)), 0, 0)
    with pytest.raises(PreconditionViolationError):
        plethysm_two_row(Partition((2,)), 2, 3)


def test_plethysm_cross_check_trips_on_disagreement(monkeypatch):
    monkeypatch.setattr("kohtrees.coefficients.hook_content",
                        lambda mu, k: ONE)
    with pytest.raises(CrossCheckFailedError):
        plethysm_two_row(Partition((2,)), 2, 1, method=METHOD_BOTH)


def test_general_reduction_classic_decompositions():
    # h_2 plethysm h_2 = s_4 + s_22
    assert plethysm_two_row_general(Partition((4,)), Partition((2,)),
                                    Partition((2,))).value == 1
    assert plethysm_two_row_general(Partition((3, 1)), Partition((2,)),
                                    Partition((2,))).value == 0
    assert plethysm_two_row_general(Partition((2, 2)), Partition((2,)),
                                    Partition((2,))).value == 1
    # h_2 plethysm e_2 = s_22 + s_1111
    assert plethysm_two_row_general(Partition((2, 2)), Partition((2,)),
                                    Partition((1, 1))).value == 1
    assert plethysm_two_row_general(Partition((3, 1)), Partition((2,)),
                                    Partition((1, 1))).value == 0
    # e_2 plethysm e_2 = s_211, invisible in two rows
    assert plethysm_two_row_general(Partition((2, 2)), Partition((1, 1)),
                                    Partition((1, 1))).value == 0
    # e_2 plethysm h_2 = s_31
    assert plethysm_two_row_general(Partition((3, 1)), Partition((1, 1)),
                                    Partition((2,))).value == 1
    assert plethysm_two_row_general(Partition((4,)), Partition((1, 1)),
                                    Partition((2,))).value == 0


def test_general_reduction_matches_single_row_case():
    for mu in enumerate_partitions(3):
        for k in range(1, 4):
            total = mu.size * k
            for r in range(total // 2 + 1):
                direct = plethysm_two_row(mu, k, r).value
                via = plethysm_two_row_general(
                    Partition((total - r, r)) if r else Partition((total,)),
                    mu, Partition((k,))).value
                assert via == direct


def test_general_reduction_edge_cases():
    # three-row inner partition gives zero
    assert plethysm_two_row_general(Partition((3, 3)), Partition((2,)),
                                    Partition((1, 1, 1))).value == 0
    # empty outer partition: the plethysm is the constant 1
    assert plethysm_two_row_general(Partition(), Partition(),
                                    Partition((2, 1))).value == 1
    # empty inner partition keeps single-row outer shapes only
    assert plethysm_two_row_general(Partition(), Partition((3,)),
                                    Partition()).value == 1
    assert plethysm_two_row_general(Partition(), Partition((2, 1)),
                                    Partition()).value == 0
    # second row of lam too short to hold |mu| copies of nu_2
    assert plethysm_two_row_general(Partition((4,)), Partition((1, 1)),
                                    Partition((1, 1))).value == 0


def test_general_reduction_validates():
    with pytest.raises(PreconditionViolationError):
        plethysm_two_row_general(Partition((2, 1, 1)), Partition((2,)),
                                 Partition((2,)))
    with pytest.raises(SizeMismatchError):
        plethysm_two_row_general(Partition((3,)), Partition((2,)),
                                 Partition((2,)))


def test_report_is_frozen():
    report = CoefficientReport(1, METHOD_BOTH, (1,))
    with pytest.raises(AttributeError):
        report.value = 2
