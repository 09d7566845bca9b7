from fractions import Fraction

import pytest

from quivdef.quiver import (
    Arrow,
    BoundTooSmall,
    GradedQuotient,
    Quiver,
    QuiverPresentation,
    Relation,
    bounded_quotient,
    compose,
    trivial_path,
)

F = Fraction


def a2_quiver():
    return Quiver(
        ["1", "2"],
        [Arrow("a1", "1", "2", 1), Arrow("b1", "2", "1", 1)],
    )


def a2_presentation():
    q = a2_quiver()
    return QuiverPresentation(
        q,
        [
            Relation([(1, q.path_from_arrows(["a1", "b1", "a1"]))]),
            Relation([(1, q.path_from_arrows(["b1", "a1", "b1"]))]),
        ],
    )


def a4_presentation():
    k = 4
    vs = [str(i) for i in range(1, k + 1)]
    arrows = []
    for i in range(1, k):
        arrows.append(Arrow("a%d" % i, str(i), str(i + 1), 1))
        arrows.append(Arrow("b%d" % i, str(i + 1), str(i), 1))
    q = Quiver(vs, arrows)
    rels = []
    for i in range(1, k - 1):
        rels.append(Relation([(1, q.path_from_arrows(["a%d" % (i + 1), "a%d" % i]))]))
        rels.append(Relation([(1, q.path_from_arrows(["b%d" % i, "b%d" % (i + 1)]))]))
    for i in range(2, k):
        rels.append(
            Relation(
                [
                    (1, q.path_from_arrows(["b%d" % i, "a%d" % i])),
                    (-1, q.path_from_arrows(["a%d" % (i - 1), "b%d" % (i - 1)])),
                ]
            )
        )
    return QuiverPresentation(q, rels)


def bhat2_presentation():
    q = Quiver(
        ["1", "2"],
        [
            Arrow("x1", "1", "2", 1),
            Arrow("x2", "2", "1", 1),
            Arrow("y1", "1", "1", 2),
            Arrow("y2", "2", "2", 2),
        ],
    )
    rels = []
    for x in ("x1", "x2"):
        for y in ("y1", "y2"):
            xa, ya = q.arrow_by_name[x], q.arrow_by_name[y]
            if xa.source == ya.target:
                rels.append(Relation([(1, q.path_from_arrows([x, y]))]))
            if ya.source == xa.target:
                rels.append(Relation([(1, q.path_from_arrows([y, x]))]))
    return QuiverPresentation(q, rels)


def test_enumerate_paths_a2_degree1():
    q = a2_quiver()
    labels = {p.label for p in q.enumerate_paths(1)}
    assert labels == {"e1", "e2", "a1", "b1"}


def test_enumerate_paths_a2_degree2_composability():
    q = a2_quiver()
    paths = q.enumerate_paths(2)
    labels = {p.label for p in paths}
    # brute force: all words of length two, keep the composable ones
    words = set()
    for a in q.arrows:
        for b in q.arrows:
            if b.source == a.target:
                words.add("%s*%s" % (b.name, a.name))
    assert labels == {"e1", "e2", "a1", "b1"} | words
    assert words == {"a1*b1", "b1*a1"}


def test_enumerate_paths_bhat2_degree2():
    pres = bhat2_presentation()
    labels = {p.label for p in pres.quiver.enumerate_paths(2)}
    assert labels == {"e1", "e2", "x1", "x2", "x2*x1", "x1*x2", "y1", "y2"}


def test_composition_is_right_to_left():
    q = a2_quiver()
    p = compose(q.arrow_path("b1"), q.arrow_path("a1"))
    assert p.label == "b1*a1" and p.source == "1" and p.target == "1"
    assert compose(q.arrow_path("a1"), q.arrow_path("a1")) is None


def test_bounded_quotient_a2_dimension():
    alg = bounded_quotient(a2_presentation(), 3)
    assert alg.dim == 6
    assert sorted(alg.labels) == sorted(["e1", "e2", "a1", "b1", "a1*b1", "b1*a1"])
    assert alg.check_identity()
    assert alg.check_associativity() is None
    assert alg.check_graded() is None


def test_bounded_quotient_a4_dimension():
    alg = bounded_quotient(a4_presentation(), 3)
    assert alg.dim == 14
    assert alg.check_associativity() is None


def test_a2_left_multiplication_rank():
    alg = bounded_quotient(a2_presentation(), 3)
    loop = alg.index[alg.quiver.path_from_arrows(["a1", "b1"])]
    rows = alg.left_mult_rows({loop: F(1)})
    from quivdef.linalg import rank_matrix

    assert rank_matrix(rows) == 1


def test_bhat2_is_a_truncation_not_an_error():
    pres = bhat2_presentation()
    with pytest.raises(BoundTooSmall):
        bounded_quotient(pres, 3)
    gq = bounded_quotient(pres, 3, allow_truncation=True)
    assert isinstance(gq, GradedQuotient) and gq.truncated


def test_bhat2_graded_components():
    gq = GradedQuotient(bhat2_presentation())
    assert gq.dim(0) == 2
    assert [p.label for p in gq.component(2)] == ["x2*x1", "y1", "x1*x2", "y2"]
    assert gq.dim(4) == 4


def bhat2_dimension_oracle(d):
    """Count pure x-words and pure y-words of degree d by direct walk."""
    if d == 0:
        return 2
    count = 0
    # x-words alternate x1/x2 and have degree = length
    count += 2 if d >= 1 else 0
    # y-words are powers of the loops y1, y2, degree = 2*length
    if d % 2 == 0:
        count += 2
    return count


def test_bhat2_dimensions_match_walk_oracle():
    gq = GradedQuotient(bhat2_presentation())
    for d in range(7):
        assert gq.dim(d) == bhat2_dimension_oracle(d)


def test_quotient_dimension_independent_of_arrow_order():
    pres = a2_presentation()
    rev = QuiverPresentation(
        Quiver(list(pres.quiver.vertices), list(reversed(pres.quiver.arrows))),
        pres.relations,
    )
    assert bounded_quotient(pres, 3).dim == bounded_quotient(rev, 3).dim


def test_inhomogeneous_relation_rejected():
    q = a2_quiver()
    with pytest.raises(ValueError):
        Relation(
            [
                (1, q.path_from_arrows(["b1", "a1"])),
                (-1, trivial_path("1")),
            ]
        )


def test_presentation_json_roundtrip():
    pres = a2_presentation()
    text = pres.to_json()
    back = QuiverPresentation.from_json(text)
    assert back.to_json() == text
    assert bounded_quotient(back, 3).dim == 6


def test_graded_multiplication_respects_relations():
    gq = GradedQuotient(bhat2_presentation())
    x1 = gq.reduce_path(gq.quiver.arrow_path("x1"))
    y1 = gq.reduce_path(gq.quiver.arrow_path("y1"))
    assert gq.mul(1, x1, 2, y1) == {}
    x2 = gq.reduce_path(gq.quiver.arrow_path("x2"))
    loop = gq.mul(1, x2, 1, x1)
    assert gq.element_label(2, loop) == "(1)x2*x1"
