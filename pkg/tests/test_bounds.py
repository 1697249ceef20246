from __future__ import annotations

from fractions import Fraction

import pytest

from app.config import settings
from app.models.graph import Graph
from app.services.bounds import (
    bound_caro_wei_vc,
    bound_cubic_half,
    bound_generalized_cw,
    bound_goering,
    bound_report,
    bound_sparse3,
    bound_tree,
    expected_degenerate_size,
)
from app.services.generators import complete_graph, cycle_graph, path_graph, tight_sparse3
from app.services.oracle import psi_exact
from app.utils.errors import PreconditionError


class TestClosedForms:
    def test_goering_on_k2(self):
        assert bound_goering(path_graph(2)) == pytest.approx(0.0)

    def test_goering_on_p3(self):
        assert bound_goering(path_graph(3)) == pytest.approx(1.0)

    def test_caro_wei_on_triangle(self):
        assert bound_caro_wei_vc(complete_graph(3)) == pytest.approx(2.0)

    def test_generalized_on_c4(self):
        assert bound_generalized_cw(cycle_graph(4), 3) == pytest.approx(20 / 9)

    def test_generalized_may_be_negative(self):
        assert bound_generalized_cw(Graph.empty(3), 4) < 0

    def test_expected_degenerate_size(self):
        assert expected_degenerate_size(cycle_graph(6)) == pytest.approx(4.0)

    def test_sparse3_is_exact(self):
        assert bound_sparse3(cycle_graph(5)) == Fraction(15, 6)
        assert bound_sparse3(tight_sparse3(1, 1)) == 6

    def test_cubic_half(self):
        assert bound_cubic_half(cycle_graph(6)) == 3
        assert bound_cubic_half(complete_graph(4)) == 2
        assert bound_cubic_half(Graph.empty(2)) == 0

    def test_tree_bound(self):
        assert bound_tree(path_graph(7), 3) == Fraction(7, 3)
        with pytest.raises(PreconditionError):
            bound_tree(cycle_graph(3), 3)

    def test_k_one_rejected(self):
        with pytest.raises(PreconditionError):
            bound_generalized_cw(path_graph(3), 1)


class TestBoundReport:
    def test_k3_names(self):
        report = bound_report(cycle_graph(4), 3)
        assert list(report.bounds) == ["cubic_half", "generalized_caro_wei", "goering", "sparse3"]

    def test_k2_on_tree(self):
        report = bound_report(path_graph(4), 2)
        assert list(report.bounds) == ["caro_wei", "generalized_caro_wei", "tree"]

    def test_violations_need_a_known_optimum(self):
        assert bound_report(cycle_graph(4), 3).violations(settings.bound_tolerance) == []

    def test_violation_reported(self):
        report = bound_report(Graph.empty(3), 3, psi_known=0)
        assert report.violations(settings.bound_tolerance) == ["generalized_caro_wei"]


class TestDomination:
    @pytest.mark.slow
    def test_bounds_dominate_optimum(self, random_graphs):
        tol = settings.bound_tolerance
        for g in random_graphs(300, 10, seed=41):
            psi2 = psi_exact(g, 2).psi
            psi3 = psi_exact(g, 3).psi
            assert bound_caro_wei_vc(g) + tol >= psi2
            assert bound_goering(g) + tol >= psi3
            assert bound_sparse3(g) >= psi3
            # isolated vertices push the generalized form below zero
            if min(g.degree(v) for v in range(g.n)) >= 1:
                for k in (3, 4):
                    assert bound_generalized_cw(g, k) + tol >= psi_exact(g, k).psi

    def test_report_has_no_violations_on_tight_family(self):
        g = tight_sparse3(2, 1)
        report = bound_report(g, 3, psi_known=psi_exact(g, 3).psi)
        assert report.violations(settings.bound_tolerance) == []
