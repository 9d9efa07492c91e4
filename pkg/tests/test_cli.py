import json

from latmink.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


class TestPoints:
    def test_unit_square_doubled(self, capsys):
        code, doc, _ = run_json(capsys, "points", "unit-square.json", "2")
        assert code == 0
        assert doc["result"]["count"] == 9

    def test_sigma_3_2_single(self, capsys):
        code, doc, _ = run_json(capsys, "points", "sigma-3-2.json", "1")
        assert code == 0
        assert doc["result"]["count"] == 4

    def test_sigma_3_3_five_points(self, capsys):
        code, doc, _ = run_json(capsys, "points", "sigma-3-3.json", "1")
        assert code == 0
        assert doc["result"]["count"] == 5
        assert [0, 0, 1] in doc["result"]["points"]

    def test_bundled_name_without_extension(self, capsys):
        code, doc, _ = run_json(capsys, "points", "unit-square", "1")
        assert code == 0
        assert doc["result"]["count"] == 4

    def test_missing_file_is_input_error(self, capsys):
        code, out, err = run(capsys, "points", "no-such-polytope.json", "1")
        assert code == 2
        assert "no such file" in err

    def test_cap_exceeded_exit_code(self, capsys):
        code, out, err = run(capsys, "--cap", "3", "points", "unit-square.json", "5")
        assert code == 3
        assert "cap" in err

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "points", "cross-3d.json", "2")
        _, second, _ = run(capsys, "points", "cross-3d.json", "2")
        assert first == second


class TestMinkowski:
    def test_power_of_square(self, capsys):
        code, doc, _ = run_json(capsys, "minkowski", "unit-square.json", "2")
        assert code == 0
        assert doc["result"]["count"] == 9


class TestCheckEquality:
    def test_sigma_3_2_range(self, capsys):
        code, doc, _ = run_json(capsys, "check-equality", "sigma-3-2.json", "1..2")
        assert code == 0
        rows = doc["result"]
        assert rows[0] == {"n": 1, "holds": True, "witness": None}
        assert rows[1] == {"n": 2, "holds": False, "witness": [0, 0, 1]}

    def test_sigma_5_2_delayed(self, capsys):
        code, doc, _ = run_json(capsys, "check-equality", "sigma-5-2.json", "1..3")
        assert code == 0
        assert [r["holds"] for r in doc["result"]] == [True, True, False]

    def test_sym_example_witness(self, capsys):
        code, doc, _ = run_json(capsys, "check-equality", "sym-example.json", "2")
        assert code == 0
        assert doc["result"][0]["witness"] == [-1, -1, 1]

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "check-equality", "sigma-3-2.json", "2..1")
        assert code == 2


class TestDecompose:
    def test_cube_with_searched_triangulation(self, capsys):
        code, doc, _ = run_json(capsys, "decompose", "unit-cube.json", "2", "1,1,2")
        assert code == 0
        summands = [tuple(s) for s in doc["result"]["summands"]]
        assert len(summands) == 2
        assert tuple(map(sum, zip(*summands))) == (1, 1, 2)

    def test_negative_coordinates_as_separate_tokens(self, capsys):
        code, doc, _ = run_json(capsys, "decompose", "cross-2d.json", "2", "-1", "-1")
        assert code == 0
        assert doc["result"]["summands"] == [[-1, 0], [0, -1]]

    def test_explicit_triangulation_file(self, capsys, tmp_path):
        code, doc, _ = run_json(capsys, "search-primitive", "cross-2d.json")
        assert code == 0
        path = tmp_path / "tri.json"
        path.write_text(json.dumps(doc["result"]["triangulation"]))
        code, doc, _ = run_json(
            capsys,
            "decompose",
            "cross-2d.json",
            "2",
            "1,-1",
            "--triangulation",
            str(path),
        )
        assert code == 0
        assert doc["result"]["summands"] == [[0, -1], [1, 0]]

    def test_point_outside(self, capsys):
        code, _, err = run(capsys, "decompose", "unit-cube.json", "2", "5,0,0")
        assert code == 2

    def test_no_primitive_triangulation(self, capsys):
        code, _, err = run(capsys, "decompose", "sigma-3-2.json", "1", "0,0,0")
        assert code == 2
        assert "no primitive triangulation" in err


class TestClassify:
    def test_sigma_3_2(self, capsys):
        code, doc, _ = run_json(capsys, "classify", "sigma-3-2.json")
        assert code == 0
        result = doc["result"]
        assert result["is_elementary"] and not result["is_primitive"]
        assert result["normalized_volume"] == 2

    def test_sigma_prime(self, capsys):
        code, doc, _ = run_json(capsys, "classify", "sigma-prime-3-2.json")
        assert code == 0
        assert doc["result"]["is_elementary"]


class TestLemma1:
    def test_sigma_matrix(self, capsys):
        code, doc, _ = run_json(capsys, "lemma1", "sigma-3-2-matrix.json")
        assert code == 0
        result = doc["result"]
        assert not result["det_unit"]
        assert result["corner_simplex_elementary"]
        assert not result["singular"]


class TestSearchAndValidate:
    def test_search_cube_then_validate_file(self, capsys, tmp_path):
        code, doc, _ = run_json(capsys, "search-primitive", "unit-cube.json")
        assert code == 0
        assert doc["result"]["found"]
        tri_doc = doc["result"]["triangulation"]
        path = tmp_path / "tri.json"
        path.write_text(json.dumps(tri_doc))
        code, doc2, _ = run_json(capsys, "validate-triangulation", str(path))
        assert code == 0
        assert doc2["result"]["valid"] and doc2["result"]["is_primitive"]

    def test_search_sigma_3_2_exhausts(self, capsys):
        code, doc, _ = run_json(capsys, "search-primitive", "sigma-3-2.json")
        assert code == 0
        assert not doc["result"]["found"]
        assert doc["result"]["exhausted"]

    def test_validate_malformed(self, capsys, tmp_path):
        bad = {
            "polytope": {"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
            "simplices": [
                [[0, 0], [1, 0], [1, 1]],
                [[0, 0], [1, 0], [1, 1]],
            ],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        code, doc, _ = run_json(capsys, "validate-triangulation", str(path))
        assert code == 0
        assert not doc["result"]["valid"]
        assert any("covered volume" in p for p in doc["result"]["problems"])


class TestGroupCommands:
    def test_word_ball_gl2z(self, capsys):
        code, doc, _ = run_json(capsys, "word-ball", "gl2z-swap-shear.json", "1")
        assert code == 0
        assert doc["result"]["count"] == 6

    def test_boundary_z1(self, capsys):
        code, doc, _ = run_json(capsys, "boundary", "z1-segment.json", "2")
        assert code == 0
        assert doc["result"]["elements"] == [[-2], [2]]

    def test_check_boundary_gl2z_fails_at_one(self, capsys):
        code, doc, _ = run_json(capsys, "check-boundary", "gl2z-swap-shear.json", "1")
        assert code == 0
        row = doc["result"][0]
        assert not row["holds"]
        assert [[0, 1], [1, 0]] in row["rhs_minus_lhs"]

    def test_check_boundary_cross_2d_all_hold(self, capsys):
        code, doc, _ = run_json(capsys, "check-boundary", "cross-2d.json", "1..5")
        assert code == 0
        assert all(r["holds"] for r in doc["result"])

    def test_check_boundary_z1_all_hold(self, capsys):
        code, doc, _ = run_json(capsys, "check-boundary", "z1-segment.json", "1..6")
        assert code == 0
        assert all(r["holds"] for r in doc["result"])

    def test_pretty_output(self, capsys):
        code, out, _ = run(capsys, "--pretty", "check-boundary", "z1-segment.json", "1..2")
        assert code == 0
        assert "holds" in out


class TestVerifyPaper:
    def test_quick_run_passes(self, capsys):
        code, doc, _ = run_json(capsys, "verify-paper", "--quick")
        assert code == 0
        assert doc["result"]["failed"] == 0
        assert doc["result"]["passed"] == len(doc["result"]["rows"])
        assert all(r["ok"] for r in doc["result"]["rows"])

    def test_pretty_lists_rows(self, capsys):
        code, out, _ = run(capsys, "--pretty", "verify-paper", "--quick")
        assert code == 0
        assert out.count("PASS") >= 18
