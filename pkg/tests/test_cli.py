import io
import subprocess
import sys

import pytest

from knotwidth import dsl
from knotwidth.cli import compare_rows, main
from knotwidth.width import width_direct


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(map(str, argv)), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    (tmp_path / "trefoil.kw").write_text("cup 1\ncup 3\nx 2 +\nx 2 +\nx 2 +\ncap 2\ncap 1\n")
    (tmp_path / "unknot.kw").write_text("cup 1\ncap 1\n")
    (tmp_path / "padded.kw").write_text("cup 1\ncup 2\ncap 3\ncap 1\n")
    (tmp_path / "bad.kw").write_text("cup 1\n\ncap 2\n")
    (tmp_path / "typo.kw").write_text("cup 1\ncapp 1\n")
    return tmp_path


def test_width_decompose_bridge(files):
    assert run("width", files / "trefoil.kw") == (0, "width\t8\n", "")
    assert run("width", files / "unknot.kw")[1] == "width\t2\n"
    assert run("decompose", files / "trefoil.kw")[1] == "thick\t4\nthin\t\n"
    assert run("bridge", files / "trefoil.kw")[1] == "bridge\t2\n"


def test_validation_error_exit_code(files):
    code, out, err = run("width", files / "bad.kw")
    assert code == 2 and out == ""
    assert "bad.kw: line 3" in err
    code, _, err = run("width", files / "typo.kw")
    assert code == 2 and "line 2, col 1" in err


def test_family_k1_roundtrip(tmp_path):
    path = tmp_path / "k1.kw"
    assert run("family", "k1", "--r", 4, "-o", path)[0] == 0
    assert run("width", path)[1] == "width\t134\n"
    assert run("decompose", path)[1] == "thick\t10,10,10\nthin\t4,4\n"
    text = path.read_text()
    assert text.startswith("# family: k1\n# r: 4\n# width: 134\n")


def test_family_k1_boxes(tmp_path):
    code, out, _ = run("family", "k1", "--r", 3, "--box", "s1 s2", "--box", "S4 s3")
    assert code == 0
    p = dsl.parse(out)
    assert width_direct(p) == 98


def test_family_fig4():
    code, out, _ = run("family", "fig4", "--r", 4)
    assert code == 0 and width_direct(dsl.parse(out)) == 136


def test_family_domain_violation():
    code, out, err = run("family", "k1", "--r", 1)
    assert code == 3 and out == ""
    assert "r >= 2" in err


def test_family_bad_box():
    code, _, err = run("family", "k1", "--r", 3, "--box", "s7")
    assert code == 2 and "s7" in err


def test_family_k3_symbolic():
    code, out, _ = run("family", "k3-fig6", "--symbolic")
    assert code == 0
    lines = dict(line.split("\t", 1) for line in out.splitlines())
    assert lines["speculative"] == "yes"
    assert lines["schedule"] == "box order L1 L2 U3 L3 U1 U2"


def test_family_k3_concrete():
    args = ["--r1", 12, "--r2", 40, "--r3", 10, "--s1", 4, "--s2", 6, "--s3", 2]
    code, out, _ = run("family", "k3-fig7", *args)
    assert code == 0 and "# speculative: yes" in out
    dsl.parse(out)
    code, _, err = run("family", "k3-fig7", *args[:-2])
    assert code == 3 and "s3" in err
    code, _, err = run("family", "k3-fig5", *args[:-1], 3)
    assert code == 3


def test_compare_table():
    code, out, _ = run("compare", "--r-min", 2, "--r-max", 6)
    assert code == 0
    assert out == (
        "r\twidth_k1\twidth_fig4\tthinner\n"
        "2\t70\t56\tfig4\n3\t98\t92\tfig4\n4\t134\t136\tk1\n5\t178\t188\tk1\n6\t230\t248\tk1\n"
    )


def test_compare_edges():
    assert run("compare", "--r-min", 5, "--r-max", 3) == (0, "r\twidth_k1\twidth_fig4\tthinner\n", "")
    assert run("compare", "--r-min", 4, "--r-max", 4)[1].splitlines()[1] == "4\t134\t136\tk1"
    assert compare_rows(4, 4) == [(4, 134, 136, "k1")]


def test_sum(files, tmp_path):
    code, out, _ = run("sum", files / "trefoil.kw", files / "trefoil.kw", "-o", tmp_path / "s.kw")
    assert (code, out) == (0, "width\t14\tidentity\tok\n")
    assert run("width", tmp_path / "s.kw")[1] == "width\t14\n"


def test_satellite():
    assert run("satellite", "--r", 4, "--fourplat", 3) == (0, "width\t134\tprofile\tidentical\n", "")
    assert run("satellite", "--r", 2, "--fourplat", "2,-3")[1] == "width\t70\tprofile\tidentical\n"
    code, _, err = run("satellite", "--r", 4, "--fourplat", "1,1")
    assert code == 2 and "components" in err


def test_thin(files):
    code, out, _ = run("thin", files / "padded.kw", "--budget", 10000)
    assert code == 0
    fields = dict(line.split("\t") for line in out.splitlines())
    assert fields["best"] == "2" and fields["exhausted"] == "no"
    witness = files / "padded.thin.kw"
    assert fields["witness"] == str(witness)
    assert width_direct(dsl.read(witness)) == 2


def test_thin_budget_exhausted(tmp_path):
    path = tmp_path / "deep.kw"
    path.write_text("cup 1\ncup 2\ncup 3\ncap 2\ncap 1\ncap 1\n")
    code, out, _ = run("thin", path, "--budget", 2)
    assert code == 4 and "exhausted\tyes" in out


def test_k3_report():
    code, out, _ = run("k3-report", "--s-max", 4)
    assert code == 0
    assert out.startswith("speculative\tyes\n")
    assert "r3_terms\tnone" in out and "fig7_increasing_in_r3\tyes" in out


def test_output_is_deterministic(files):
    assert run("thin", files / "padded.kw") == run("thin", files / "padded.kw")


def test_module_entry_point(files):
    res = subprocess.run(
        [sys.executable, "-m", "knotwidth", "width", str(files / "trefoil.kw")], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout == "width\t8\n"
