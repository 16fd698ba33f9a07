import json
from pathlib import Path

import pytest

from atwrank import formats
from atwrank.atw import analyze_atw, subfield_atw_code
from atwrank.cli import main
from atwrank.gfcore import parse_field_spec
from atwrank.rankcodes import rank_weight_distribution
from atwrank.spreads import spread_from_atw, verify_spread
from oracles import rank_distribution

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.mark.parametrize("argv,golden", [
    (["construct", "subfield-atw", "--q", 2, "--d", 2, "--m", 4], "subfield_atw_q2_d2_m4.txt"),
    (["construct", "example1", "--q", 2, "--d", 2, "--m", 4], "subfield_atw_q2_d2_m4.txt"),
    (["construct", "expand-mrd", "--q", 2, "--t", 2, "--l", 3, "--m", 6], "expand_mrd_q2_t2_l3_m6.txt"),
    (["construct", "hadamard", "--q", 2, "--m", 2, "--k", 2], "hadamard_q2_m2_k2.txt"),
])
def test_construct_matches_golden(capsys, tmp_path, argv, golden):
    out = tmp_path / "g.txt"
    code, stdout, _ = run(capsys, *argv, "-o", out)
    assert code == 0 and "field" in stdout
    assert out.read_text() == (DATA / golden).read_text()


def test_golden_files_are_what_they_claim():
    C = formats.read_code((DATA / "subfield_atw_q2_d2_m4.txt").read_text())
    assert rank_distribution(C.sup, [0, 1], C.G) == {0: 1, 2: 75, 4: 180}
    X = formats.read_code((DATA / "expand_mrd_q2_t2_l3_m6.txt").read_text())
    assert (X.n, X.k) == (6, 2)
    assert rank_weight_distribution(X, method="hyperplanes").counts == {0: 1, 4: 1323, 6: 2772}
    H = formats.read_code((DATA / "hadamard_q2_m2_k2.txt").read_text())
    assert rank_distribution(H.sup, [0, 1], H.G) == {0: 1, 2: 15}


def test_construct_to_stdout(capsys):
    code, out, err = run(capsys, "construct", "block-two-weight", "--q", 2, "--d", 1, "--k", 3)
    assert code == 0 and out.startswith("field=2^2:7 base=2^1:2 k=3 n=3") and "field" in err


def test_construct_missing_parameter(capsys):
    code, _, err = run(capsys, "construct", "gabidulin", "--q", 2)
    assert code == 2 and "--m" in err


def test_analyze(capsys):
    code, data = run_json(capsys, "analyze", DATA / "subfield_atw_q2_d2_m4.txt")
    assert code == 0
    assert data["distribution"] == {"metric": "rank", "n": 4, "counts": {"0": 1, "2": 75, "4": 180}}
    assert data["report"]["atw"] is True
    assert data["report"] == analyze_atw(subfield_atw_code(2, 2, 4)).to_dict()
    code, data = run_json(capsys, "analyze", DATA / "subfield_atw_q2_d2_m4.txt", "--metric", "hamming-expansion")
    assert data["distribution"] == {"metric": "hamming", "n": 15, "counts": {"0": 1, "12": 75, "15": 180}}
    assert data["report"]["antipodal"] is True


def test_analyze_block_two_weight(capsys, tmp_path):
    f = tmp_path / "b.txt"
    run(capsys, "construct", "example2", "--q", 2, "--d", 1, "--k", 3, "-o", f)
    code, data = run_json(capsys, "analyze", f)
    assert data["report"]["atw"] is False and data["report"]["two_weight"] is True


def test_analyze_degenerate(capsys, tmp_path):
    f = tmp_path / "deg.txt"
    f.write_text("field=2^4:19 base=2^1:2 k=2 n=3\n1 2 3\n0 1 1\n")
    code, _, err = run(capsys, "analyze", f)
    assert code == 2 and "compress" in err
    code, data = run_json(capsys, "analyze", f, "--compress")
    assert code == 0 and data["distribution"]["n"] == 2


@pytest.mark.parametrize("text", [
    "",
    "field=2^4:19 k=2 n=3\n1 2 3\n",
    "field=2^4:19 base=2^1:2 k=2 n=3\n1 2 3\n",
    "field=2^4:19 base=2^1:2 k=1 n=3\n1 2 x\n",
    "field=2^4:19 base=2^1:2 k=1 n=2\n1 16\n",
    "field=2^4:19 base=2^3:11 k=1 n=2\n1 2\n",
    "field=2^4:18 base=2^1:2 k=1 n=2\n1 2\n",
])
def test_bad_matrix_files(capsys, tmp_path, text):
    f = tmp_path / "bad.txt"
    f.write_text(text)
    code, _, err = run(capsys, "analyze", f)
    assert code == 2 and err.startswith("error:")


def test_missing_file(capsys):
    code, _, _ = run(capsys, "analyze", "/nonexistent/file.txt")
    assert code == 2


@pytest.mark.parametrize("what,path,expect", [
    ("atw", "subfield_atw_q2_d2_m4.txt", 0),
    ("atw", "hadamard_q2_m2_k2.txt", 1),
    ("subspread", "subfield_atw_q2_d2_m4.txt", 0),
    ("theorem6", "subfield_atw_q2_d2_m4.txt", 0),
    ("theorem6", "hadamard_q2_m2_k2.txt", 0),
    ("induced-by-mrd", "expand_mrd_q2_t2_l3_m6.txt", 0),
    ("half-classify", "subfield_atw_q2_d2_m4.txt", 0),
    ("weight-corr", "expand_mrd_q2_t2_l3_m6.txt", 0),
])
def test_verify(capsys, what, path, expect):
    code, data = run_json(capsys, "verify", what, DATA / path)
    assert code == expect and data["pass"] is (expect == 0)


def test_verify_mrd_and_weight_corr_on_gabidulin(capsys, tmp_path):
    f = tmp_path / "g.txt"
    run(capsys, "construct", "gabidulin", "--q", 2, "--m", 4, "--l", 4, "--k", 2, "-o", f)
    assert run_json(capsys, "verify", "mrd", f)[1]["pass"] is True
    code, data = run_json(capsys, "verify", "weight-corr", f)
    assert code == 0 and data["pairs"] == {"0->0": 1, "3->14": 225, "4->15": 30}


def test_spread_pipeline(capsys, tmp_path):
    dump = tmp_path / "s.txt"
    assert run(capsys, "spread", "extract", DATA / "subfield_atw_q2_d2_m4.txt", "-o", dump)[0] == 0
    text = dump.read_text()
    assert text.splitlines()[0] == "N=4 t=2 q=2 count=5"
    S = formats.parse_spread(text)
    assert verify_spread(S).ok
    assert [E.basis for E in S.elements] == [E.basis for E in spread_from_atw(subfield_atw_code(2, 2, 4)).elements]
    code, data = run_json(capsys, "spread", "split", dump)
    assert code == 0 and data["blocks"] == 2
    code, data = run_json(capsys, "verify", "spread", dump)
    assert code == 0
    truncated = tmp_path / "t.txt"
    truncated.write_text("\n".join(text.splitlines()[:4]) + "\n")
    code, data = run_json(capsys, "verify", "spread", truncated)
    assert code == 1 and data["problems"][0].startswith("cover:")
    code, data = run_json(capsys, "spread", "project", dump, "--w", "1 0 1 0;0 1 0 0")
    assert code == 0 and data["subspread"] is True and data["t_prime"] == 1 and data["count"] == 3
    code, data = run_json(capsys, "spread", "project", dump, "--w", "1 0 0 0;0 1 0 0;0 0 1 0")
    assert code == 1 and data["subspread"] is False


def test_spread_extract_expanded(capsys, tmp_path):
    dump = tmp_path / "s.txt"
    run(capsys, "spread", "extract", DATA / "expand_mrd_q2_t2_l3_m6.txt", "-o", dump)
    assert dump.read_text().splitlines()[0] == "N=6 t=2 q=2 count=21"
    assert run_json(capsys, "spread", "split", dump)[1]["blocks"] == 3


def test_spread_extract_non_atw(capsys):
    code, _, err = run(capsys, "spread", "extract", DATA / "hadamard_q2_m2_k2.txt")
    assert code == 2


def test_expand_hamming(capsys, tmp_path):
    out = tmp_path / "h.txt"
    assert run(capsys, "expand-hamming", DATA / "subfield_atw_q2_d2_m4.txt", "-o", out)[0] == 0
    H = formats.read_hamming(out.read_text())
    assert (H.n, H.k) == (15, 2) and H.field == parse_field_spec("2^4:19")
    assert out.read_text().startswith("field=2^4:19 base=2^4:19 k=2 n=15")


def test_search_cli(capsys):
    code, out, _ = run(capsys, "search", "--q", 2, "--m", 2, "--n", 2, "--k", 2, "--json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines[-1]["summary"] is True and lines[-1]["visited"] == 35
    code, out2, _ = run(capsys, "search", "--q", 2, "--m", 2, "--n", 2, "--k", 2, "--json", "--threads", 2)
    assert out2 == out
    code, text, _ = run(capsys, "search", "--q", 2, "--m", 2, "--n", 2, "--k", 2, "--atw-only")
    assert text.splitlines()[-1].startswith("summary ")


def test_search_sample_cli_deterministic(capsys):
    argv = ["search", "--q", 2, "--m", 4, "--n", 4, "--k", 2, "--sample", 50, "--seed", 3, "--json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_search_budget_and_params(capsys):
    code, _, err = run(capsys, "search", "--q", 2, "--m", 3, "--n", 3, "--k", 3, "--budget", 100)
    assert code == 3 and "788035" in err
    code, _, err = run(capsys, "search", "--q", 2, "--m", 2, "--n", 7, "--k", 2)
    assert code == 2


def test_equiv(capsys, tmp_path):
    code, data = run_json(capsys, "equiv", DATA / "subfield_atw_q2_d2_m4.txt", DATA / "subfield_atw_q2_d2_m4.txt")
    assert code == 0 and data["status"] == "yes"
    other = tmp_path / "o.txt"
    other.write_text("field=2^4:19 base=2^1:2 k=2 n=4\n1 2 0 0\n0 0 1 2\n")
    code, data = run_json(capsys, "equiv", DATA / "subfield_atw_q2_d2_m4.txt", other)
    assert code == 1 and data["status"] == "no"
    code, data = run_json(capsys, "equiv", DATA / "subfield_atw_q2_d2_m4.txt", DATA / "subfield_atw_q2_d2_m4.txt",
                          "--budget", 10)
    assert code == 3 and data["status"] == "budget_exceeded"


def test_field(capsys):
    code, data = run_json(capsys, "field", "2^4", "mul", 2, 8)
    assert code == 0 and data["result"] == 3 and data["modulus"] == 19
    assert run(capsys, "field", "2^4", "inv", 0)[0] == 2
    assert run(capsys, "field", "2^4:16")[0] == 2
    assert run(capsys, "field", "2^4", "mul", 2)[0] == 2
    code, data = run_json(capsys, "field", "3^2", "frob", 4, 3)
    assert data["result"] == 7


def test_human_output_is_aligned(capsys):
    code, out, _ = run(capsys, "verify", "atw", DATA / "subfield_atw_q2_d2_m4.txt")
    lines = out.splitlines()
    col = lines[0].index("atw")
    assert all(len(ln) > col and ln[col - 2:col] == "  " for ln in lines)


def test_spread_dump_roundtrip_nonprime_q():
    from atwrank.spreads import desarguesian_spread

    S = desarguesian_spread(2, 2, 4)
    T = formats.parse_spread(formats.format_spread(S))
    assert T.field == S.field and [E.basis for E in T.elements] == [E.basis for E in S.elements]
    assert verify_spread(T).ok


def test_bad_spread_dumps():
    for text in ["", "N=4 t=2 q=2\n", "N=4 t=2 q=2 count=1\n1 0 0\n", "N=4 t=2 q=2 count=1\n1 0 0 2\n"]:
        with pytest.raises(formats.FormatError):
            formats.parse_spread(text)
