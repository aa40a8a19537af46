import json

import pytest

from momentangle.cli import WORKERS_ENV_VAR, build_parser, main, parse_expression
from momentangle.polytopes import (
    SimplePolytope,
    are_combinatorially_isomorphic,
    cube,
    polygon,
    product,
    simplex_polytope,
)
from momentangle.simplicial import SimplicialComplex


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpressionParsing:
    def test_constructors(self):
        assert parse_expression(["polygon", "5"]) == polygon(5)
        assert parse_expression(["simplex", "3"]) == simplex_polytope(3)
        assert parse_expression(["cube", "2"]) == cube(2)
        assert parse_expression(["cube"]) == cube(3)

    def test_nested(self):
        got = parse_expression(["product", "(simplex", "1)", "(simplex", "2)"])
        assert got == product(simplex_polytope(1), simplex_polytope(2))
        got = parse_expression(["cut-vertex", "(", "polygon", "4", ")", "1"])
        assert got == polygon(4).cut_vertex(1)

    def test_errors(self):
        for bad in (
            ["frobnicate"],
            ["polygon"],
            ["polygon", "x"],
            ["polygon", "4", "5"],
            ["(", "polygon", "4"],
            ["product", "polygon", "4"],
        ):
            with pytest.raises(ValueError):
                parse_expression(bad)


class TestBuild:
    def test_polygon_round_trip(self, capsys):
        code, out, _ = run(capsys, "build", "polygon", "5")
        assert code == 0
        payload = json.loads(out)
        assert "schema" not in payload
        assert SimplePolytope.from_json_dict(payload) == polygon(5)

    def test_cut_vertex_builds_a_pentagon(self, capsys):
        code, out, _ = run(capsys, "build", "cut-vertex", "(polygon", "4)", "0")
        assert code == 0
        got = SimplePolytope.from_json_dict(json.loads(out))
        assert are_combinatorially_isomorphic(got, polygon(5))

    def test_product_builds_a_square(self, capsys):
        code, out, _ = run(capsys, "build", "product", "(simplex", "1)", "(simplex", "1)")
        assert code == 0
        got = SimplePolytope.from_json_dict(json.loads(out))
        assert are_combinatorially_isomorphic(got, polygon(4))

    def test_polytope_file_round_trip(self, capsys, tmp_path):
        path = tmp_path / "hexagon.json"
        path.write_text(json.dumps(polygon(6).to_json_dict()))
        code, out, _ = run(capsys, "build", str(path))
        assert code == 0
        assert SimplePolytope.from_json_dict(json.loads(out)) == polygon(6)

    def test_complex_file_round_trip(self, capsys, tmp_path):
        k = polygon(5).dual_complex()
        path = tmp_path / "cycle.json"
        path.write_text(k.to_json())
        code, out, _ = run(capsys, "build", str(path))
        assert code == 0
        assert SimplicialComplex.from_json_dict(json.loads(out)) == k

    def test_no_csv_form(self, capsys):
        code, _, err = run(capsys, "build", "polygon", "4", "--csv")
        assert code == 2
        assert "csv" in err


class TestBetti:
    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "betti", "polygon", "4")
        assert code == 0
        assert "m=4 facets, n=2, dimension 6" in out
        assert "poincare: 1 + 2t^3 + t^6" in out

    def test_simplex_is_a_sphere(self, capsys):
        code, out, _ = run(capsys, "betti", "simplex", "2")
        assert code == 0
        assert "poincare: 1 + t^5" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "betti", "polygon", "6", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["kind"] == "betti"
        assert (payload["m"], payload["n"], payload["dim"]) == (6, 2, 8)
        groups = payload["groups"]
        assert groups["0"]["rank"] == 1
        # rank symmetry of the closed 8-manifold
        for p in range(9):
            low = groups.get(str(p), {"rank": 0})["rank"]
            high = groups.get(str(8 - p), {"rank": 0})["rank"]
            assert low == high
        assert SimplePolytope.from_json_dict(payload["input"]) == polygon(6)

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "betti", "polygon", "4", "--csv")
        assert code == 0
        assert out == "degree,rank,torsion\n0,1,\n3,2,\n6,1,\n"

    def test_complex_input(self, capsys, tmp_path):
        path = tmp_path / "k.json"
        path.write_text(polygon(4).dual_complex().to_json())
        code, out, _ = run(capsys, "betti", str(path))
        assert code == 0
        assert "complex on 4 vertices" in out
        assert "poincare: 1 + 2t^3 + t^6" in out


class TestVerify:
    def test_all_vertices(self, capsys):
        code, out, _ = run(capsys, "verify", "polygon", "3", "--all-vertices")
        assert code == 0
        assert out.count("MATCH") == 3
        assert "3 vertex cut(s) checked: all match" in out

    def test_single_vertex(self, capsys):
        code, out, _ = run(capsys, "verify", "simplex", "3", "0")
        assert code == 0
        assert "both sides: 1 + t^3 + t^5 + t^8" in out

    def test_bare_cube_with_vertex(self, capsys):
        # trailing integer is the vertex, not a cube dimension
        code, out, _ = run(capsys, "verify", "cube", "0")
        assert code == 0
        assert "1 vertex cut(s) checked: all match" in out

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "polygon", "4", "1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["all_match"] is True
        (report,) = payload["reports"]
        assert report["vertex"] == 1
        assert report["polytope"] == "polygon 4"
        assert report["match"] is True
        assert report["lhs"] == report["rhs"]

    def test_csv_report(self, capsys):
        code, out, _ = run(capsys, "verify", "polygon", "3", "0", "--csv")
        assert code == 0
        assert out.splitlines()[0] == "polytope,vertex,match,lhs,rhs"
        assert "polygon 3,0,true,1 + 2t^3 + t^6,1 + 2t^3 + t^6" in out

    def test_needs_vertex_index(self, capsys):
        code, _, err = run(capsys, "verify", "polygon")
        assert code == 2
        assert "vertex index" in err
        # the trailing token is consumed as the vertex, so the expression
        # itself comes up short
        code, _, err = run(capsys, "verify", "polygon", "4")
        assert code == 2
        assert "missing edge count" in err

    def test_workers_do_not_change_bytes(self, capsys):
        _, base, _ = run(capsys, "verify", "polygon", "4", "0", "--json")
        _, parallel, _ = run(
            capsys, "verify", "polygon", "4", "0", "--json", "--workers", "2"
        )
        assert parallel == base


class TestVerifyCorpus:
    def test_csv_summary(self, capsys):
        code, out, _ = run(capsys, "verify-corpus", "--csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "name,m,n,vertices,match"
        assert len(lines) == 13
        assert all(line.endswith(",true") for line in lines[1:])
        assert lines[1].startswith("polygon-3,3,2,3,")


class TestIsotopyCheck:
    def test_human_pass(self, capsys):
        code, out, _ = run(capsys, "isotopy-check", "2", "500", "42")
        assert code == 0
        assert "overall: PASS" in out
        assert "seed=42" in out

    def test_circle_case_includes_closed_form_map(self, capsys):
        code, out, _ = run(capsys, "isotopy-check", "1", "300", "7", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        labels = [p["label"] for p in payload["probes"]]
        assert labels == [
            "standard", "isotopy t=0.0", "isotopy t=0.5", "isotopy t=1.0",
            "f1 t=0.0", "f1 t=1.0",
        ]

    def test_seed_flag_overrides_positional(self, capsys):
        code, out, _ = run(capsys, "isotopy-check", "1", "300", "7", "--seed", "9")
        assert code == 0
        assert "seed=9" in out

    def test_bad_dimension(self, capsys):
        code, _, err = run(capsys, "isotopy-check", "0", "100")
        assert code == 2
        assert ">= 1" in err


class TestErrorsAndLimits:
    def test_unknown_constructor(self, capsys):
        code, _, err = run(capsys, "betti", "frobnicate")
        assert code == 2
        assert "unknown constructor" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "betti", "missing/nope.json")
        assert code == 2
        assert "cannot read" in err

    def test_invalid_polytope_file_names_the_invariant(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps({"dim": 2, "facets": 3, "vertex_facets": [[0, 1], [0, 1]]})
        )
        code, _, err = run(capsys, "betti", str(path))
        assert code == 2
        assert "distinct_vertices" in err

    def test_subset_limit_exit_code(self, capsys):
        code, _, err = run(capsys, "betti", "polygon", "8", "--max-subsets", "4")
        assert code == 3
        assert "2^8 = 256" in err
        assert "--max-subsets" in err

    def test_format_flags_conflict(self, capsys):
        code, _, _ = run(capsys, "betti", "polygon", "4", "--json", "--csv")
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "verify-corpus" in out


class TestOutputRedirect:
    def test_output_file_matches_stdout(self, capsys, tmp_path):
        _, direct, _ = run(capsys, "betti", "polygon", "5", "--json")
        path = tmp_path / "out.json"
        code, out, _ = run(
            capsys, "betti", "polygon", "5", "--json", "--output", str(path)
        )
        assert code == 0
        assert out == ""
        assert path.read_text() == direct


class TestWorkerEnvironment:
    def test_env_sets_default(self, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV_VAR, "3")
        args = build_parser().parse_args(["betti", "polygon", "4"])
        assert args.workers == 3

    def test_flag_beats_env(self, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV_VAR, "3")
        args = build_parser().parse_args(["betti", "polygon", "4", "--workers", "1"])
        assert args.workers == 1

    def test_garbage_env_falls_back(self, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV_VAR, "zap")
        args = build_parser().parse_args(["betti", "polygon", "4"])
        assert args.workers == 1

    def test_env_workers_compute_correctly(self, capsys, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV_VAR, "2")
        code, out, _ = run(capsys, "betti", "polygon", "4")
        assert code == 0
        assert "poincare: 1 + 2t^3 + t^6" in out
