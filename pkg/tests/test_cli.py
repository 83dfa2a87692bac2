import json

import pytest

from hexstrip.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_values(capsys):
    assert run(capsys, "count", "--family", "c", "--n", "8", "--k", "3")[:2] == (0, "43\n")
    assert run(capsys, "count", "--family", "h", "--n", "8")[:2] == (0, "108\n")
    assert run(capsys, "count", "--family", "g", "--n", "6")[:2] == (0, "24\n")
    assert run(capsys, "count", "--family", "tri", "--n", "8")[:2] == (0, "24\n")
    code, out, _ = run(capsys, "count", "--family", "gkl", "--n", "6", "--k", "1", "--l", "1")
    assert (code, out) == (0, "6\n")


def test_count_bfile(capsys):
    code, out, _ = run(capsys, "count", "--family", "fib", "--n", "5", "--bfile")
    assert code == 0
    assert out == "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n"
    code, out, _ = run(
        capsys, "count", "--family", "fib", "--n", "5", "--bfile", "--offset", "3"
    )
    assert out == "3 2\n4 3\n5 5\n"


def test_count_usage_errors(capsys):
    assert run(capsys, "count", "--family", "c", "--n", "8")[0] == 2
    assert run(capsys, "count", "--family", "gkl", "--n", "8", "--k", "1")[0] == 2
    assert run(capsys, "count", "--family", "h", "--n", "8", "--k", "2")[0] == 2
    assert run(capsys, "count", "--family", "c", "--n", "3", "--k", "1", "--bfile")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "bogus", "--n", "1"])
    assert exc.value.code == 2


def test_poly(capsys):
    assert run(capsys, "poly", "--n", "5")[:2] == (0, "a^5 + 7*a^3*b + 7*a*b^2\n")
    code, out, _ = run(capsys, "poly", "--n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "n": 4,
        "terms": [
            {"a": 4, "b": 0, "coeff": 1},
            {"a": 2, "b": 1, "coeff": 5},
            {"a": 0, "b": 2, "coeff": 2},
        ],
    }


def test_triangle_formats(capsys):
    code, out, _ = run(capsys, "triangle", "--family", "c", "--rows", "4")
    assert code == 0
    assert out == "1\n1\n1 1\n1 3\n1 5 2\n"
    code, out, _ = run(capsys, "triangle", "--family", "c", "--rows", "4", "--format", "csv")
    assert out == "1\n1\n1,1\n1,3\n1,5,2\n"
    code, out, _ = run(capsys, "triangle", "--family", "t", "--rows", "2", "--format", "json")
    assert json.loads(out) == {"name": "t", "rows": [[1], [1], [2]]}


def test_triangle_csv_round_trip(capsys):
    from hexstrip.counting import Triangle, triangle

    _, out, _ = run(capsys, "triangle", "--family", "u", "--rows", "8", "--format", "csv")
    assert Triangle.from_csv("u", out) == triangle("u", 8)


def test_enumerate_jsonl(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "md", "--n", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2
    assert all(entry["n"] == 2 and entry["model"] == "md" for entry in lines)


def test_enumerate_stats(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "md", "--n", "2", "--stats")
    assert code == 0
    assert json.loads(out) == {
        "(monomers=0,dimers=1)": 1,
        "(monomers=2,dimers=0)": 1,
    }
    code, out, _ = run(capsys, "enumerate", "--model", "mdt", "--n", "3", "--stats")
    assert json.loads(out) == {
        "(monomers=0,dimers=0,trimers=1)": 1,
        "(monomers=1,dimers=1,trimers=0)": 2,
        "(monomers=3,dimers=0,trimers=0)": 1,
    }


def test_enumerate_words(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "mdt", "--n", "3", "--words")
    assert code == 0
    assert sorted(out.split()) == ["dm", "md", "mmm", "t"]


def test_enumerate_cap_error(capsys):
    code, _, err = run(capsys, "enumerate", "--model", "md", "--n", "99")
    assert code == 2
    assert "cap" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "10", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 15
    assert all(r["status"] == "pass" for r in reports)

    code, out, _ = run(capsys, "verify", "--id", "COL-MONO-ODD-PRINTED", "--max-n", "8")
    assert code == 1
    assert "FAIL" in out

    code, _, err = run(capsys, "verify", "--id", "NOPE")
    assert code == 2


def test_verify_plain_single(capsys):
    code, out, _ = run(capsys, "verify", "--id", "TRI-2T", "--max-n", "20")
    assert code == 0
    assert "PASS" in out and "TRI-2T" in out


def test_errata(capsys):
    code, out, _ = run(capsys, "errata")
    assert code == 0
    assert "24" in out and "27" in out
    assert "2n-2k-2" in out


def test_deterministic_output(capsys):
    first = run(capsys, "enumerate", "--model", "mdt", "--n", "6", "--stats")
    second = run(capsys, "enumerate", "--model", "mdt", "--n", "6", "--stats")
    assert first == second
