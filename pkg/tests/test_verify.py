import time

from quillen_strata.cli import run
from quillen_strata.corpus import CORPUS, corpus_group


def test_corpus_is_well_formed():
    assert len(CORPUS) == len(set(CORPUS))
    for dsl in CORPUS:
        G = corpus_group(dsl)
        assert 1 <= G.order <= 24
    # the named extras from the verification contract
    assert "sym:3" in CORPUS and "sym:4" in CORPUS
    assert "dihedral:4" in CORPUS and "dihedral:6" in CORPUS
    orders = {corpus_group(dsl).order for dsl in CORPUS}
    assert set(range(1, 17)) <= orders


def test_verify_all_passes_within_budget(capsys):
    start = time.perf_counter()
    code = run(["verify", "--all"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0, out
    assert "FAIL" not in out
    assert "12/12 suites passed" in out
    assert elapsed < 60, "verify took %.1fs" % elapsed
