import pytest

from corpus import CD_FREE, TWELVE, corpus
from gen import Gen
from hypercalc.calculus import R, RuleInstance, preset
from hypercalc.checker import ProofTree, check_proof, derive, proof_stats, step as S
from hypercalc.semantics import (
    KripkeModel, ModelClass, countermodel_search, enumerate_models, signature, valid_in,
)
from hypercalc.syntax import (
    BOT, Hypersequent, Imp, Sequent, alpha_equal, free_vars, parse_formula, parse_hypersequent,
    parse_sequent, sequent_alpha_equal,
)
from hypercalc.transform import (
    GlobalVariablePresent, PreconditionViolated, TranslationMode, extract_component_proof,
    hyperseq_formula, sequent_formula,
)

SHARED, LOCAL = TranslationMode.SHARED, TranslationMode.LOCAL
LJP = preset("LJ'")


def f(text):
    return parse_formula(text)


def test_sequent_formula_examples():
    assert sequent_formula(parse_sequent("phi, psi |- chi")) == f("phi & psi -> chi")
    assert sequent_formula(parse_sequent("|- phi")) == f("phi")
    assert sequent_formula(parse_sequent("phi |-")) == Imp(f("phi"), BOT)
    assert sequent_formula(parse_sequent("a, b, c |- d, e, g")) == f("a & (b & c) -> d \\/ (e \\/ g)")
    assert sequent_formula(parse_sequent("|-")) == BOT


def test_empty_succedent_reads_as_negation():
    # valid exactly when ~phi is, on the oracle's models
    s = sequent_formula(parse_sequent("p & ~p |-"))
    assert countermodel_search(s, ModelClass.ALL_POSETS, 3, 0, 1) is None
    s = sequent_formula(parse_sequent("p |-"))
    assert countermodel_search(s, ModelClass.ALL_POSETS, 3, 0, 1) is not None


def test_remark_hypersequent_both_modes():
    h = parse_hypersequent("phi |- psi || psi |- phi")
    want = f("(phi -> psi) \\/ (psi -> phi)")
    assert hyperseq_formula(h, SHARED) == want == hyperseq_formula(h, LOCAL)


def test_modes_differ_on_open_components():
    h = parse_hypersequent("|- P(x) || |- Q(x)")
    assert hyperseq_formula(h, SHARED) == f("forall x. P(x) \\/ Q(x)")
    assert hyperseq_formula(h, LOCAL) == f("(forall x. P(x)) \\/ (forall x. Q(x))")


def test_closure_order_is_first_occurrence():
    h = parse_hypersequent("R(y, x) |- || |- P(z)")
    assert hyperseq_formula(h, SHARED) == f("forall y. forall x. forall z. (R(y, x) -> bot) \\/ P(z)")


def test_closed_hypersequents_agree():
    g = Gen(21)
    for _ in range(200):
        h = Hypersequent(tuple(Sequent(tuple(g.closed(2) for _ in range(2)), (g.closed(2),))
                               for _ in range(g.rng.randint(1, 3))))
        assert alpha_equal(hyperseq_formula(h, SHARED), hyperseq_formula(h, LOCAL))


def test_globals_rejected():
    with pytest.raises(GlobalVariablePresent):
        hyperseq_formula(parse_hypersequent("|- P(x!)"))


def test_translations_are_closed():
    g = Gen(22)
    for _ in range(200):
        h = g.hyper()
        for mode in (SHARED, LOCAL):
            assert not free_vars(hyperseq_formula(h, mode))


# ------------------------------------------------------------- extraction

def test_single_id():
    p = ProofTree(parse_hypersequent("p |- p"), RuleInstance(R.Id))
    assert extract_component_proof(p) == (0, p)


def test_ew_extension():
    p = derive(CD_FREE, parse_hypersequent("phi |- phi || psi |- chi"), S("ew", S("Id"), comp=1))
    i, q = extract_component_proof(p)
    assert i == 0 and q == p.subproofs[0]


def test_twelve_step_proof():
    p = next(p for name, p in corpus() if name == "twelve")
    assert check_proof(CD_FREE, p).steps == 12
    assert {"forallRms", "cut"} <= set(check_proof(CD_FREE, p).rule_histogram)
    i, q = extract_component_proof(p)
    assert i == 1
    assert check_proof(LJP, q).accepted
    assert sequent_alpha_equal(q.conclusion[0], parse_hypersequent(TWELVE)[1])
    assert proof_stats(q).dominated_by(proof_stats(p))
    assert "forallRss" in check_proof(LJP, q).rule_histogram


@pytest.mark.parametrize("name", [n for n, _ in corpus()])
def test_corpus_extraction(name):
    p = dict(corpus())[name]
    i, q = extract_component_proof(p)
    assert check_proof(LJP, q).accepted
    assert len(q.conclusion) == 1 and sequent_alpha_equal(q.conclusion[0], p.conclusion[i])
    sp, sq = proof_stats(p), proof_stats(q)
    assert sq.steps <= sp.steps and sq.formulas <= sp.formulas and sq.symbols <= sp.symbols
    assert extract_component_proof(p) == (i, q)


def test_semantic_coherence():
    """The extracted component is valid wherever the whole root was."""
    for name, p in corpus():
        i, q = extract_component_proof(p)
        root = hyperseq_formula(p.conclusion)
        comp = hyperseq_formula(q.conclusion)
        preds, consts = signature([root])
        for m in enumerate_models(ModelClass.ALL_POSETS, 3, 2, preds, consts):
            if valid_in(m, root):
                assert valid_in(m, comp), name


def remark_proof():
    return derive(preset("GD-com"), parse_hypersequent("phi |- psi || psi |- phi"),
                  S("com", S("Id"), S("Id"), comp2=1))


def test_negative_witness():
    p = remark_proof()
    assert check_proof(preset("GD-com"), p).accepted and proof_stats(p).steps == 3
    with pytest.raises(PreconditionViolated):
        extract_component_proof(p)
    for s in p.conclusion:
        m = countermodel_search(sequent_formula(s), ModelClass.ALL_POSETS, 3, 0, 2)
        assert m is not None and m.n <= 3


def test_rejected_proof_refused():
    bad = ProofTree(parse_hypersequent("p |- q"), RuleInstance(R.Id))
    with pytest.raises(PreconditionViolated):
        extract_component_proof(bad)


def test_local_reading_entails_shared():
    h = parse_hypersequent("|- P(x) || |- Q(x)")
    shared, local = hyperseq_formula(h, SHARED), hyperseq_formula(h, LOCAL)
    assert countermodel_search(Imp(local, shared), ModelClass.ALL_POSETS, 4, 2, 2) is None
    # two worlds, both individuals everywhere, each satisfying one predicate
    atoms = {("P", ("a",)), ("Q", ("b",))}
    m = KripkeModel(2, {(0, 0), (1, 1), (0, 1)}, [{"a", "b"}] * 2, [atoms, atoms])
    assert valid_in(m, shared) and not valid_in(m, local)
