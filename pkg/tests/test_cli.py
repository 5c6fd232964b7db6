import json
import subprocess
import sys
from importlib import resources


from hypercalc.checker import check_proof, load_bundle
from hypercalc.cli import INTERNAL, NEGATIVE, OK, PARSE, USAGE, main
from hypercalc.semantics import load_model

FIG = resources.files("hypercalc") / "data" / "figures"


def fig(name):
    return str(FIG / f"{name}.proof")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_fact13(capsys):
    code, out, _ = run(capsys, "check", "--preset", "GD-com", fig("fact13"))
    assert code == OK and out.strip() == "accepted, 9 steps"


def test_check_rejected_has_path(capsys):
    code, out, _ = run(capsys, "check", "--preset", "HLJ", fig("fact13"))
    assert code == NEGATIVE
    assert "RuleDisabled" in out and "path [0, 0, 0, 0, 0, 0]" in out


def test_check_machine_mirrors_report(capsys):
    code, out, _ = run(capsys, "check", "--format", "machine", fig("lin_rs"))
    d = json.loads(out)
    assert code == OK
    assert set(d) == {"verdict", "steps", "rule_histogram", "error", "calculus"}
    b = load_bundle(fig("lin_rs"))
    assert d["steps"] == check_proof(b.config(), b.proof).steps


def test_check_disable(capsys):
    code, _, _ = run(capsys, "check", "--disable", "rs", fig("lin_rs"))
    assert code == NEGATIVE


def test_translate_remark(capsys, tmp_path):
    path = tmp_path / "remark.hseq"
    path.write_text("phi |- psi || psi |- phi\n")
    code, out, _ = run(capsys, "translate", "--mode", "shared", str(path))
    assert code == OK and out.strip() == "(phi -> psi) \\/ (psi -> phi)"
    code, out, _ = run(capsys, "translate", "--mode", "local", "|- P(x) || |- Q(x)")
    assert out.strip() == "(forall x. P(x)) \\/ (forall x. Q(x))"


def test_translate_globals(capsys):
    code, _, err = run(capsys, "translate", "|- P(x!)")
    assert code == NEGATIVE and "global" in err


def test_prove_writes_checkable_file(capsys, tmp_path):
    out_path = tmp_path / "lin.proof"
    code, out, _ = run(capsys, "prove", "--preset", "GD-com", "(p -> q) \\/ (q -> p)", "-o", str(out_path))
    assert code == OK and "found at depth" in out
    code, out, _ = run(capsys, "check", str(out_path))
    assert code == OK


def test_prove_not_found(capsys):
    code, out, _ = run(capsys, "prove", "--preset", "HLJ", "(p -> q) \\/ (q -> p)")
    assert code == NEGATIVE and "exhausted" in out
    code, out, _ = run(capsys, "prove", "--preset", "GD-com", "--depth", "2", "(p -> q) \\/ (q -> p)")
    assert code == NEGATIVE and "within budget" in out


def test_prove_with_witnesses(capsys):
    code, _, _ = run(capsys, "prove", "--preset", "QGD-rs", "--depth", "16", "--witnesses", "x",
                     "(forall x. phi \\/ psi(x)) -> phi \\/ (forall x. psi(x))")
    assert code == OK


def test_extract(capsys, tmp_path):
    src = tmp_path / "ew.proof"
    src.write_text(json.dumps({
        "calculus": {"preset": "CD-free"},
        "proof": {"rule": "ew", "conclusion": "phi |- phi || psi |- chi", "params": {"comp": 1},
                  "premises": [{"rule": "Id", "conclusion": "phi |- phi"}]},
    }))
    dst = tmp_path / "out.proof"
    code, out, _ = run(capsys, "extract", str(src), "-o", str(dst))
    assert code == OK and "index: 0" in out
    code, _, _ = run(capsys, "check", str(dst))
    assert code == OK


def test_extract_refuses_com(capsys):
    code, _, err = run(capsys, "extract", fig("fact13"))
    assert code == NEGATIVE and "com" in err


def test_countermodel(capsys):
    code, out, _ = run(capsys, "countermodel", "(p -> q) \\/ (q -> p)", "--max-domain", "0")
    assert code == OK
    m = load_model(out)
    assert m.n == 3
    code, out, _ = run(capsys, "countermodel", "--class", "linear", "(p -> q) \\/ (q -> p)")
    assert code == NEGATIVE and "none within bounds" in out
    code, _, _ = run(capsys, "countermodel", "--preset", "QGD-rs",
                     "(forall x. phi \\/ psi(x)) -> phi \\/ (forall x. psi(x))")
    assert code == NEGATIVE


def test_countermodel_bounds_are_usage_errors(capsys):
    code, _, _ = run(capsys, "countermodel", "--max-worlds", "9", "p")
    assert code == USAGE
    code, _, _ = run(capsys, "countermodel", "P(x)")
    assert code == USAGE


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", fig("fact13"))
    assert code == OK and out.startswith("\\begin{prooftree}") and "\\mathrm{com}" in out
    code, out, _ = run(capsys, "export", "--to", "text", fig("fact13"))
    assert "(com)" in out
    dst = tmp_path / "f.tex"
    code, _, _ = run(capsys, "export", "--to", "document", fig("acd_rs"), "-o", str(dst))
    text = dst.read_text()
    assert "\\usepackage{bussproofs}" in text and "\\forall" in text


def test_usage_errors(capsys):
    assert run(capsys)[0] == USAGE
    assert run(capsys, "frobnicate")[0] == USAGE
    assert run(capsys, "prove", "p")[0] == USAGE
    assert run(capsys, "prove", "--preset", "HLJ", "--base", "lj", "p")[0] == USAGE
    assert run(capsys, "check", "--preset", "HLJ", "--base", "lj", fig("fact13"))[0] == USAGE
    assert run(capsys, "prove", "--preset", "HLJ", "--enable", "bogus", "p")[0] == USAGE
    assert run(capsys, "prove", "--preset", "NOPE", "p")[0] == USAGE


def test_parse_errors(capsys, tmp_path):
    code, _, err = run(capsys, "translate", "p -> (q |- r")
    assert code == PARSE and "^" in err
    bad = tmp_path / "bad.proof"
    bad.write_text("{not json")
    assert run(capsys, "check", str(bad))[0] == PARSE
    assert run(capsys, "check", str(tmp_path / "missing.proof"))[0] == PARSE


def test_explicit_base(capsys):
    code, _, _ = run(capsys, "prove", "--base", "ljprime", "--enable", "com", "(p -> q) \\/ (q -> p)")
    assert code == OK


def test_exit_codes_distinct():
    assert len({OK, USAGE, PARSE, NEGATIVE, INTERNAL}) == 5


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hypercalc", "check", "--preset", "GD-com", fig("fact13")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "accepted, 9 steps" in r.stdout
