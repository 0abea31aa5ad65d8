"""End-to-end checks on the named fixtures through the verification suites and the CLI."""

import json
from pathlib import Path

import jsonschema
import networkx as nx
import pytest

from rlocal.cli import RunConfig, SUITES, main
from rlocal.cli.suites import MAX_AUTOMORPHISMS
from rlocal.decomposition import decompose

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def _config(r, kmax, **overrides):
    return RunConfig().with_overrides(r=r, kmax=kmax, **overrides).validate()


class TestShapes:
    def test_ring_of_k4_gives_a_hexagon_of_k4(self, ring6):
        d = decompose(ring6, 3, 1)
        shape = nx.Graph((e.u, e.v) for e in d.edges)
        assert nx.is_isomorphic(shape, nx.cycle_graph(6))
        for p in d.parts.values():
            assert nx.is_isomorphic(nx.Graph(list(p.edges)), nx.complete_graph(4))

    def test_path_at_radius_zero(self, p3):
        d = decompose(p3, 0, 1)
        assert len(d.parts) == 2 and len(d.edges) == 1

    def test_hexagon_at_radius_zero(self, c6):
        d = decompose(c6, 0, 1)
        assert nx.is_isomorphic(nx.Graph((e.u, e.v) for e in d.edges), nx.cycle_graph(6))


class TestSuites:
    @pytest.mark.parametrize("name, r, kmax", [("p3", 0, 1), ("k4", 3, 2), ("q3", 4, 2)])
    def test_correspondence(self, request, name, r, kmax):
        g = request.getfixturevalue(name)
        result = SUITES["correspondence"](g, _config(r, kmax))
        assert result.ok, result.details

    def test_correspondence_with_a_non_empty_nested_set(self, two_k5):
        result = SUITES["correspondence"](two_k5, _config(3, 2))
        assert result.ok, result.details
        assert result.details["nested"] >= 1

    def test_correspondence_needs_short_generating_cycles(self, c6):
        result = SUITES["correspondence"](c6, _config(4, 1))
        assert not result.ok
        assert "reason" in result.details

    @pytest.mark.parametrize("kmax", [1, 2])
    @pytest.mark.parametrize(
        "name, r",
        [("p3", 0), ("claw", 0), ("c6", 4), ("k4", 3), ("k23", 4), ("bowtie", 3), ("q3", 4),
         ("two_k5", 3), ("triangle_ring", 3), ("ring6", 3)],
    )
    def test_refinement(self, request, name, r, kmax):
        g = request.getfixturevalue(name)
        result = SUITES["refinement"](g, _config(r, kmax))
        assert result.ok, result.details

    def test_canonicity(self, bowtie):
        result = SUITES["canonicity"](bowtie, _config(3, 1))
        assert result.ok
        assert result.details["automorphisms"] == 8

    def test_canonicity_of_the_ring(self, ring6):
        result = SUITES["canonicity"](ring6, _config(3, 1))
        assert result.ok, result.details
        assert result.details["automorphisms"] == MAX_AUTOMORPHISMS

    @pytest.mark.parametrize(
        "name, r, kmax",
        [("ring6", 3, 1), ("p3", 0, 1), ("k4", 3, 2), ("triangle_ring", 3, 1)],
    )
    def test_folding_the_cover(self, request, name, r, kmax):
        g = request.getfixturevalue(name)
        result = SUITES["main-iii"](g, _config(r, kmax, window_radius=8))
        assert result.ok, result.details


class TestSchemas:
    @pytest.fixture
    def validate(self):
        def check(name, data):
            schema = json.loads((SCHEMAS / name).read_text(encoding="utf-8"))
            jsonschema.validate(data, schema)

        return check

    def test_decomposition_output(self, validate, capsys):
        assert main(["decompose", "fixture:RING6", "--r", "3", "--k", "1", "-q"]) == 0
        validate("decomposition.schema.json", json.loads(capsys.readouterr().out))

    def test_cover_output(self, validate, capsys):
        assert main(["cover", "fixture:C6", "--r", "4", "--window", "8", "-q"]) == 0
        validate("cover.schema.json", json.loads(capsys.readouterr().out))

    def test_inspect_output(self, validate, capsys):
        assert main(["inspect", "fixture:RING6", "nested-set", "--r", "3", "--k", "1", "-q"]) == 0
        validate("inspect.schema.json", json.loads(capsys.readouterr().out))
