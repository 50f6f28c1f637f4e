import pytest

from frobcrit.criteria import check_main, conjugated_borel_check
from frobcrit.embed import (
    diagonal,
    folding_AC,
    folding_B3G2,
    folding_E6F4,
    frobenius_twisted_diagonal,
    identity,
    levi,
    so_in_sl,
)
from frobcrit.registry import (
    DONKIN_RECORDS,
    example_frobenius_twist,
    example_sln_son,
    example_sp4,
    example_triple_diagonal,
    lookup_donkin,
    minimal_rank_suite,
)
from frobcrit.rootsys import build_root_system


# -- Donkin pair lookups ---------------------------------------------------------

def test_record_table():
    assert [(r.name, r.min_p) for r in DONKIN_RECORDS] == [
        ("levi-subgroup", 2),
        ("involution-fixed-points", 3),
    ]


@pytest.mark.parametrize("emb,p,status", [
    (levi(build_root_system("C2"), (1,)), 2, "yes"),
    (identity("G2"), 2, "yes"),
    (so_in_sl(5), 3, "yes"),
    (so_in_sl(5), 2, "unknown"),
    (folding_E6F4(), 3, "yes"),
    (folding_E6F4(), 2, "unknown"),
    (folding_B3G2(), 5, "yes"),
    (folding_AC(3), 3, "yes"),
    (diagonal("A1", 2), 3, "yes"),
    (diagonal("A1", 2), 2, "unknown"),
    (diagonal("A1", 3), 5, "unknown"),
    (frobenius_twisted_diagonal("A1", 3), 3, "unknown"),
], ids=lambda v: v.label if hasattr(v, "label") else str(v))
def test_lookup_matrix(emb, p, status):
    hit = lookup_donkin(emb, p)
    assert hit.status == status
    assert hit.detail


def test_lookup_never_answers_no():
    # absence of a record is not a counterexample
    for emb in (diagonal("A1", 3), frobenius_twisted_diagonal("A1", 2)):
        for p in (2, 3, 5, 7):
            assert lookup_donkin(emb, p).status in ("yes", "unknown")


def test_small_p_miss_names_the_bound():
    hit = lookup_donkin(so_in_sl(5), 2)
    assert "p >= 3" in hit.detail


# -- minimal rank suite ------------------------------------------------------------

def test_suite_contents():
    labels = [emb.label for emb, _ in minimal_rank_suite()]
    assert labels == [
        "identity:A2",
        "diagonal:B2:k=2",
        "folding_AC:m=2", "folding_AC:m=3", "folding_AC:m=4",
        "folding_DB:n=4", "folding_DB:n=5", "folding_DB:n=6",
        "folding_E6F4",
        "folding_B3G2",
    ]
    assert all(expected for _, expected in minimal_rank_suite())


def test_suite_dominance_matches_expectation():
    from frobcrit.criteria import CriterionInput
    for emb, expected in minimal_rank_suite():
        J = tuple(range(1, emb.g.rank + 1))
        rep = check_main(CriterionInput(emb, J, 3))
        assert rep.condition1_dominant == expected, emb.label


# -- Sp4 worked example -------------------------------------------------------------

def test_sp4_setup():
    ex = example_sp4()
    assert ex.embedding.label == "levi:C2:J=[1]"
    assert ex.embedding.g.spec_string() == "C2"
    assert ex.embedding.h.spec_string() == "A1"
    assert ex.J == (1, 2)
    assert tuple(x.word for x in ex.conjugators) == ((), (2,), (2, 1), (2, 1, 2))
    assert ex.expected_verdicts == (True, False, False, True)


def test_sp4_verdicts_recompute():
    ex = example_sp4()
    got = tuple(conjugated_borel_check(ex.embedding, x, ex.J)
                for x in ex.conjugators)
    assert got == ex.expected_verdicts


def test_sp4_diagram():
    d = example_sp4().diagram
    assert d.nodes == tuple(f"X{i}" for i in range(1, 12))
    assert d.edges == (
        ("X1", "X2", "single"), ("X1", "X3", "double"), ("X1", "X4", "single"),
        ("X2", "X5", "single"), ("X3", "X6", "single"), ("X4", "X7", "single"),
        ("X5", "X8", "single"), ("X5", "X9", "single"), ("X6", "X9", "single"),
        ("X6", "X10", "single"), ("X7", "X10", "single"), ("X7", "X11", "single"),
    )
    assert d.closed_orbit_conjugator == {"X8": 1, "X9": 2, "X10": 3, "X11": 4}
    assert d.split_compatible == (("X2", "X5", "X8"), ("X4", "X7", "X11"))
    assert d.pairwise_split == (("X5", "X9"), ("X6", "X9"),
                                ("X7", "X10"), ("X6", "X10"))
    assert d.unresolved == ("X3",)


def test_sp4_diagram_is_consistent():
    d = example_sp4().diagram
    nodes = set(d.nodes)
    for upper, lower, kind in d.edges:
        assert upper in nodes and lower in nodes
        assert kind in ("single", "double")
    for chain in d.split_compatible:
        assert all(n in nodes for n in chain)
    assert set(d.closed_orbit_conjugator) <= nodes
    # the closed orbits are exactly the sinks of the diagram
    uppers = {u for u, _, _ in d.edges}
    sinks = nodes - uppers
    assert sinks == set(d.closed_orbit_conjugator)
    # conjugator indices address the example's conjugator list
    k = len(example_sp4().conjugators)
    assert set(d.closed_orbit_conjugator.values()) == set(range(1, k + 1))


# -- parameterized example families ---------------------------------------------------

def test_sln_son_shapes():
    [even] = example_sln_son(4)
    assert even.embedding.label == "so_in_sl:n=4"
    assert even.J == (1, 3) and even.p == 3
    first, second = example_sln_son(5)
    assert first.J == (1, 3, 4)
    assert second.J == (1, 2, 4)
    [n6] = example_sln_son(6)
    assert n6.J == (1, 2, 4, 5)
    with pytest.raises(ValueError):
        example_sln_son(3)


@pytest.mark.parametrize("n", range(4, 9))
def test_sln_son_all_split(n):
    for inp in example_sln_son(n):
        rep = check_main(inp)
        assert rep.condition1_dominant
        assert "SPLIT_PJ" in rep.tags()
        assert lookup_donkin(inp.embedding, 3).status == "yes"


def test_triple_diagonal_inputs():
    inp = example_triple_diagonal("A1")
    assert inp.embedding.label == "diagonal:A1:k=3"
    assert inp.J == (1, 2, 3) and inp.p == 2
    rep = check_main(inp)
    assert not rep.condition1_dominant
    assert rep.tags() == ()


def test_triple_diagonal_other_types():
    for h in ("A2", "G2"):
        rep = check_main(example_triple_diagonal(h))
        assert not rep.condition1_dominant
        assert rep.conclusions == []


def test_frobenius_twist_inputs():
    inputs = example_frobenius_twist()
    assert [i.p for i in inputs] == [2, 3, 5]
    for inp in inputs:
        assert inp.J == (1,)
        assert inp.surjectivity_source == "user-asserted"
        rep = check_main(inp)
        assert rep.lie_separability.status == "fails"
        assert "SPLIT_PJ" in rep.tags()
