"""Shared fixtures and independent oracles for the test suite."""

import itertools

import pytest

from bilbiq import (
    FiniteBiquandle,
    LinkDiagram,
    crossing_relations,
    parse_spec,
)


@pytest.fixture
def bb1_spec():
    """The (Z_4)^2 structure with alpha = beta = 3, A = [[0,2],[2,0]]."""
    return parse_spec("4,2,3,3,[[0,2],[2,0]]")


def all_assignments_colorings(diagram: LinkDiagram, target: FiniteBiquandle):
    """Exhaustive coloring oracle: test every total assignment against
    every crossing relation.  Independent of the backtracking path."""
    tables = {
        "up": target.up,
        "low": target.low,
        "upbar": target.upbar,
        "lowbar": target.lowbar,
    }
    relations = crossing_relations(diagram)
    out = []
    for assignment in itertools.product(range(target.size), repeat=diagram.n_semiarcs):
        if all(
            tables[r.op][assignment[r.x]][assignment[r.y]] == assignment[r.output]
            for r in relations
        ):
            out.append(assignment)
    return out
