import pytest

from corpus import CD_FREE
from gen import Gen
from hypercalc.calculus import preset
from hypercalc.checker import check_proof
from hypercalc.figures import ACD, GDM, LIN
from hypercalc.search import SearchBudget, normalize, prove, search
from hypercalc.semantics import ModelClass, countermodel_search
from hypercalc.syntax import hyper_alpha_equal, parse_hypersequent
from hypercalc.transform import hyperseq_formula


def goal(text):
    return parse_hypersequent(f"|- {text}")


def found_and_checked(cfg, g, budget):
    out = search(cfg, g, budget)
    assert out.found, (cfg.label(), str(g))
    assert check_proof(cfg, out.proof).accepted
    assert hyper_alpha_equal(out.proof.conclusion, g)
    return out


def test_identity_depth_one():
    for name in ("HLK", "HLJ", "HLJ'", "GD-com", "CD-free", "LJ'"):
        out = found_and_checked(preset(name), parse_hypersequent("p |- p"), SearchBudget(max_depth=1))
        assert out.proof.rule.rule.value == "Id"


def test_lin_gd_com():
    out = found_and_checked(preset("GD-com"), goal(LIN), SearchBudget(max_depth=12))
    assert "com" in check_proof(preset("GD-com"), out.proof).rule_histogram


def test_gdm_gd_ls():
    out = found_and_checked(preset("GD-ls"), goal(GDM), SearchBudget(max_depth=14))
    assert "ls" in check_proof(preset("GD-ls"), out.proof).rule_histogram


def test_acd_quantified_rs():
    found_and_checked(preset("QGD-rs"), goal(ACD), SearchBudget(max_depth=16, witnesses=("x",)))


def test_lin_hlj_exhausts():
    out = search(preset("HLJ"), goal(LIN), SearchBudget(max_depth=12))
    assert not out.found and out.exhausted


def test_classical_sanity():
    found_and_checked(preset("HLK"), goal("p \\/ ~p"), SearchBudget(max_depth=6))
    found_and_checked(preset("HLK"), goal("((p -> q) -> p) -> p"), SearchBudget(max_depth=8))
    out = search(preset("HLJ"), goal("~~p -> p"), SearchBudget(max_depth=12))
    assert not out.found and out.exhausted


def test_depth_cutoff_is_not_exhaustion():
    out = search(preset("GD-com"), goal(LIN), SearchBudget(max_depth=2))
    assert not out.found and not out.exhausted


def test_prove_wrapper():
    assert prove(preset("HLJ"), goal(LIN), SearchBudget(max_depth=6)) is None
    assert prove(preset("HLJ"), goal("p -> p"), SearchBudget(max_depth=3)) is not None


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_depth=0)
    with pytest.raises(ValueError):
        SearchBudget(max_width=0)
    with pytest.raises(ValueError):
        SearchBudget(max_contractions=-1)
    b = SearchBudget(witnesses=("x", "c()"), cut_pool=("p \\/ q",))
    assert str(b.cut_pool[0]) == "p \\/ q"


def test_deterministic():
    a = search(preset("GD-ls"), goal(GDM), SearchBudget(max_depth=14))
    b = search(preset("GD-ls"), goal(GDM), SearchBudget(max_depth=14))
    assert a.proof == b.proof and a.nodes == b.nodes


def test_normalize_absorbs_exchange():
    a = parse_hypersequent("p, q |- r || s |- t")
    b = parse_hypersequent("s |- t || q, p |- r")
    assert normalize(a) == normalize(b)


GOALS = ["p -> p", "p & q -> q & p", "p \\/ q -> q \\/ p", "(p -> q) -> ~q -> ~p",
         "~~(p \\/ ~p)", "p -> q -> p", LIN, "(p -> q) \\/ (q -> p) \\/ p",
         "(forall x. P(x)) -> exists x. P(x)", "(exists x. P(x) & Q(x)) -> exists x. P(x)"]


@pytest.mark.parametrize("cfg_name", ["HLJ'", "GD-com", "CD-free"])
def test_budget_monotonicity(cfg_name):
    cfg = preset(cfg_name)
    budgets = [SearchBudget(max_depth=d, max_width=w, max_contractions=c, witnesses=("x",))
               for d, w, c in [(3, 2, 0), (5, 2, 1), (7, 3, 1), (9, 4, 2)]]
    for text in GOALS:
        found = [search(cfg, goal(text), b).found for b in budgets]
        for k in range(len(found) - 1):
            assert not found[k] or found[k + 1], (text, found)


def test_found_goals_are_valid():
    """Search in CD-free is sound for the intuitionistic models."""
    g = Gen(31, quantifiers=False, props=("p", "q"))
    hits = 0
    for _ in range(150):
        h = goal(str(g.formula(3)))
        out = search(CD_FREE, h, SearchBudget(max_depth=6))
        if out.found:
            hits += 1
            assert check_proof(CD_FREE, out.proof).accepted
            f = hyperseq_formula(h)
            assert countermodel_search(f, ModelClass.ALL_POSETS, 3, 0, 2) is None, str(f)
    assert hits >= 10


def test_search_outputs_always_check():
    g = Gen(32, quantifiers=False, props=("p", "q"))
    for cfg_name in ("HLK", "HLJ", "GD-com", "GD-ls"):
        cfg = preset(cfg_name)
        for _ in range(40):
            h = goal(str(g.formula(3)))
            out = search(cfg, h, SearchBudget(max_depth=5))
            if out.found:
                assert check_proof(cfg, out.proof).accepted
