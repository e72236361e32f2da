"""
Tests for constraints.py
"""

from src.infgon.constraints import ZERO, DifferenceSystem, solve_system


class TestDifferenceSystem:
    """Test cases for integer difference constraints."""

    def test_feasible_chain(self):
        """Test a chain of gaps inside bounds."""
        system = DifferenceSystem()
        system.bounds("a", 0, 10)
        system.bounds("b", None, 10)
        system.gap("a", "b", 2)

        solution = system.solve()

        assert solution is not None
        assert 0 <= solution["a"] <= 10
        assert solution["b"] - solution["a"] >= 2

    def test_infeasible_cycle(self):
        """Test that contradictory gaps are detected."""
        system = DifferenceSystem()
        system.gap("a", "b", 1)
        system.gap("b", "a", 1)

        assert not system.feasible()
        assert system.solve() is None

    def test_bounds_squeeze(self):
        """Test a gap that does not fit between the bounds."""
        system = DifferenceSystem()
        system.bounds("a", 0, None)
        system.bounds("b", None, 1)
        system.gap("a", "b", 2)

        assert system.solve() is None

    def test_tighter_constraint_wins(self):
        """Test that repeated constraints keep the tightest bound."""
        system = DifferenceSystem()
        system.upper("x", 5)
        system.upper("x", 3)
        system.upper("x", 7)

        assert system.graph[ZERO]["x"]["weight"] == 3

    def test_solve_system(self):
        """Test the list interface: x - y <= -3."""
        solution = solve_system([("x", "y", -3)])

        assert solution["y"] - solution["x"] >= 3
