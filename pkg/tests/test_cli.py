from rrge.cli import main
from rrge.io import CSV_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_peters_50(capsys):
    code, out, _ = run(capsys, "rank", "peters:50", "--rho", "2.0")
    assert code == 0
    assert "rank: 49" in out
    assert "betabound certificate: pass" in out
    assert "theorem certificate: pass" in out


def test_rank_peters_20_machine_beta(capsys):
    # at the machine-precision default beta the m = 20 instance certifies
    # full rank
    code, out, _ = run(capsys, "rank", "peters:20")
    assert code == 0
    assert "rank: 20" in out


def test_rank_check_local_example2(capsys):
    code, out, _ = run(capsys, "rank", "example2:0.99", "--rho", "1.0",
                       "--check-local")
    assert code == 0
    assert "local max volume (2x2 block" in out
    assert "yes" in out


def test_rank_check_normal_example1(capsys):
    code, out, _ = run(capsys, "rank", "example1", "--rho", "1.0",
                       "--check-normal", "--check-local")
    assert code == 0
    assert "normal max volume (3x3 block (rows [0, 1, 2], cols [0, 1, 2]), rho=1): yes" in out
    assert "local max volume (3x3 block (rows [0, 1, 2], cols [0, 1, 2]), rho=1): no" in out


def test_rank_random_spec(capsys):
    code, out, _ = run(capsys, "rank", "random:10,10,10,0.5,7")
    assert code == 0
    assert "rank: 10" in out


def test_rank_bad_spec(capsys):
    code, _, err = run(capsys, "rank", "nosuch:3")
    assert code == 1
    assert "error" in err


def test_rank_missing_file(capsys):
    code, _, err = run(capsys, "rank", "/nonexistent/file.mtx")
    assert code == 1
    assert "error" in err


def test_rank_numerical_breakdown_exit_code(tmp_path, capsys):
    path = tmp_path / "tiny.mtx"
    path.write_text("%%MatrixMarket matrix coordinate real general\n"
                    "2 2 2\n1 1 1.0\n2 2 1e-20\n")
    code, _, err = run(capsys, "rank", str(path), "--beta", "1e-30")
    assert code == 2
    assert "breakdown" in err


def test_rank_csv_append(tmp_path, capsys):
    path = tmp_path / "rank.csv"
    code, _, _ = run(capsys, "rank", "peters:10", "--csv", str(path))
    assert code == 0
    code, _, _ = run(capsys, "rank", "peters:12", "--csv", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert lines[0] == ",".join(CSV_HEADER)


def test_compare_empty_inputs(tmp_path, capsys):
    path = tmp_path / "empty.csv"
    code, out, _ = run(capsys, "compare", "--csv", str(path))
    assert code == 0
    assert path.read_text() == ",".join(CSV_HEADER) + "\n"


def test_compare_writes_rows_and_buckets(tmp_path, capsys):
    path = tmp_path / "cmp.csv"
    code, out, _ = run(capsys, "compare", "peters:50", "random:9,12,4,1e-10,3",
                       "--csv", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("peters:50,50,50,")
    assert "pivots/rank buckets:" in out
    assert "[1.00,1.05)" in out


def test_compare_deterministic_up_to_timing(tmp_path, capsys):
    args = ("compare", "peters:30", "random:8,11,3,1e-9,5")

    def strip_elapsed(text):
        rows = []
        for line in text.splitlines():
            cells = line.split(",")
            rows.append(",".join(cells[:-1]))
        return "\n".join(rows)

    path1 = tmp_path / "a.csv"
    path2 = tmp_path / "b.csv"
    assert run(capsys, *args, "--csv", str(path1))[0] == 0
    assert run(capsys, *args, "--csv", str(path2))[0] == 0
    assert strip_elapsed(path1.read_text()) == strip_elapsed(path2.read_text())


def test_compare_parallel_jobs(tmp_path, capsys):
    path = tmp_path / "par.csv"
    code, _, _ = run(capsys, "compare", "peters:12", "peters:14",
                     "--csv", str(path), "--jobs", "2")
    assert code == 0
    lines = path.read_text().splitlines()
    # rows keep input order regardless of completion order
    assert lines[1].startswith("peters:12,")
    assert lines[2].startswith("peters:14,")


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "examples")
    assert code == 0
    assert "examples: pass" in out


def test_verify_lemmas_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemmas",
                       "--trials", "25", "--seed", "1")
    assert code == 0
    assert "lemmas: pass" in out


def test_verify_bounds_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bounds",
                       "--trials", "10", "--seed", "1")
    assert code == 0
    assert "bounds: pass" in out
