import os

import pytest

import assocf

FIXTURES = os.environ.get(
    "ASSOCF_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")
)


def test_trees():
    t = assocf.Tree("((. .) .)")
    assert t.leaves == 3
    assert str(t.expand(1)) == "(((. .) .) .)"
    assert str(t.reflect()) == "(. (. .))"
    assert len(assocf.enumerate_trees(5)) == 14
    with pytest.raises(assocf.ParseError):
        assocf.Tree("((. .)")


def test_group_elements():
    x0 = assocf.Element("x0")
    x1 = assocf.Element("x1")
    assert x0.shift("right") == x1
    assert x0.abelianize() == (1, 0)
    assert assocf.commutator(x0, x1) == assocf.Element("c0")
    assert (x0 * x0.inverse()).is_identity()
    assert x0("1/2^1") == "3/2^2"
    assert x0.pl() == "pl (0/2^0 -> 0/2^0) (1/2^2 -> 1/2^1) (1/2^1 -> 3/2^2) (1/2^0 -> 1/2^0)"
    assert assocf.Element("c0").support() == ("1/2^2", "3/2^2")
    assert x1.stabilizes_halfpowers()
    assert not x0.normal_member(2, 1)


def test_magmas():
    pre = assocf.Magma.load(os.path.join(FIXTURES, "pre_sl2.magma"))
    assert pre.size == 4
    assert pre.simply_perfect
    assert pre.op("a", "b") == "a"
    assert pre.status()["summary"] == "NoLawUpTo(6)"
    s4 = assocf.Magma.zoo("s4_example")
    assert s4.satisfies("(. ((. .) .)) = (. (. (. .)))")
    assert not s4.satisfies("((. .) .) = (. (. .))", threads=2)
    s3 = assocf.Magma.zoo("s3_commutator")
    assert s3.derived_chain_sizes() == [6, 3, 1]
    assert s3.status()["summary"] == "FullF(solvable)"
    assert s3.eventually("((. .) .) = (. (. .))")["holds"]
    assert len(assocf.Magma.zoo("z4").search_laws(4)) == 10
    with pytest.raises(assocf.FormatError):
        assocf.Magma.parse("a b\na b\n")


def test_rewriting():
    assoc = ["((. .) .) = (. (. .))"]
    assert assocf.derivable("(((. .) .) .)", "(. (. (. .)))", assoc) == 2
    x1_law = ["(. ((. .) .)) = (. (. (. .)))"]
    assert assocf.derivable("((. .) (. (. .)))", "((. (. .)) (. .))", x1_law) is None
    x1 = assocf.Element("x1")
    assert assocf.member(assocf.Element("x2"), [x1]).startswith("In")
    assert all(g.stabilizes_halfpowers() for g in assocf.closure([x1], 2))
