import pytest

from tiedbracket.diagram import (
    BAR0,
    BAR1,
    TWO as KIND_TWO,
    ZERO as KIND_ZERO,
    ColorMapError,
    ColorMismatchError,
    Complexity,
    CrossingClass,
    CrossingRecord,
    DanglingArcError,
    MissingColorError,
    TiedDiagram,
    WrongClassError,
    disjoint_union,
    random_diagram,
    unknot,
)

TREFOIL = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
HOPF = [(1, 3, 2, 4), (3, 1, 4, 2)]


def tied_hopf(c1=1, c2=2):
    return TiedDiagram.from_pd(HOPF, [c1, c2])


def test_validate_ok():
    TiedDiagram.from_pd(TREFOIL).validate()
    tied_hopf().validate()


def test_validate_dangling():
    with pytest.raises(DanglingArcError):
        TiedDiagram((CrossingRecord((1, 2, 3, 4)),), {1: 1, 2: 1, 3: 1, 4: 1}).validate()


def test_validate_missing_color():
    crossings = tuple(CrossingRecord(t) for t in TREFOIL)
    colors = {a: 1 for a in range(1, 7)}
    del colors[4]
    with pytest.raises(MissingColorError):
        TiedDiagram(crossings, colors).validate()


def test_validate_color_mismatch():
    crossings = tuple(CrossingRecord(t) for t in TREFOIL)
    colors = {a: 1 for a in range(1, 7)}
    colors[2] = 2
    with pytest.raises(ColorMismatchError):
        TiedDiagram(crossings, colors).validate()


def test_components():
    assert len(tied_hopf().components()) == 2
    assert len(TiedDiagram.from_pd(TREFOIL).components()) == 1
    d = TiedDiagram((), {}, (1, 1, 2))
    assert d.components() == [] and d.component_count() == 3
    # deterministic order: sorted by smallest arc id
    comps = tied_hopf().components()
    assert min(comps[0]) < min(comps[1])


def test_classify():
    d = tied_hopf()
    # crossing 0: under arcs color 1, over arcs color 2
    assert d.classify(0) is CrossingClass.LEGAL
    assert d.classify(1) is CrossingClass.ILLEGAL_TYPE2
    assert TiedDiagram.from_pd(HOPF, [1, 1]).classify(0) is CrossingClass.ILLEGAL_TYPE1


def test_complexity():
    assert tied_hopf().complexity() == Complexity(2, 1)
    assert TiedDiagram((), {}, (1,)).complexity() == Complexity(0, 0)
    assert Complexity(2, 1) < Complexity(2, 2) < Complexity(3, 0)
    with pytest.raises(ValueError):
        Complexity(1, 2)


def two_color_6_4():
    """Six crossings, two colors: a color-1 circle (arcs 1..8) with two
    self-crossings, and a color-2 circle (arcs 9..12) passing under it twice
    (illegal type 2) and over it twice (legal)."""
    quads = [
        (1, 4, 2, 5),    # color 1 over color 1
        (2, 6, 3, 7),    # color 1 over color 1
        (9, 3, 10, 4),   # color 1 over color 2: over index lower -> illegal
        (10, 5, 11, 6),  # color 1 over color 2
        (7, 11, 8, 12),  # color 2 over color 1: legal
        (8, 12, 1, 9),   # color 2 over color 1
    ]
    return TiedDiagram.from_pd(quads, [1, 2])


def test_complexity_census_6_4():
    d = two_color_6_4()
    kinds = [d.classify(x) for x in range(6)]
    assert kinds.count(CrossingClass.ILLEGAL_TYPE1) == 2
    assert kinds.count(CrossingClass.ILLEGAL_TYPE2) == 2
    assert kinds.count(CrossingClass.LEGAL) == 2
    assert d.complexity() == Complexity(6, 4)


def test_smooth_type1_kink():
    kink = TiedDiagram.from_pd([(1, 1, 2, 2)])
    a = kink.smooth_type1(0, BAR0)
    b = kink.smooth_type1(0, BAR1)
    counts = sorted([len(a.free_loops), len(b.free_loops)])
    assert counts == [1, 2]
    assert set(a.free_loops) <= {1} and set(b.free_loops) <= {1}
    with pytest.raises(WrongClassError):
        tied_hopf().smooth_type1(1, BAR0)


def test_smooth_type1_complexity_drop():
    d = tied_hopf().smooth_type2(1, KIND_ZERO)
    assert d.complexity() == Complexity(1, 1)
    done = d.smooth_type1(0, BAR0)
    assert done.complexity() < d.complexity()
    assert done.complexity().total == 0


def test_smooth_type2_kind_two():
    d = tied_hopf()
    flipped = d.smooth_type2(1, KIND_TWO)
    assert all(flipped.classify(x) is CrossingClass.LEGAL for x in range(2))
    assert flipped.component_count() == 2 and flipped.n_colors == 2
    with pytest.raises(WrongClassError):
        flipped.smooth_type2(1, KIND_TWO)


def test_smooth_type2_merge():
    d = tied_hopf()
    merged = d.smooth_type2(1, KIND_ZERO)
    assert merged.n_colors == 1
    assert len(merged.components()) == 1
    assert merged.classify(0) is CrossingClass.ILLEGAL_TYPE1
    with pytest.raises(WrongClassError):
        d.smooth_type2(0, KIND_ZERO)  # crossing 0 is legal


def test_is_aj_state():
    assert TiedDiagram((), {}, (1, 2, 2)).is_aj_state()
    # two distinctly colored circles crossing twice, second color always on top
    overlap = TiedDiagram.from_pd([(1, 3, 2, 4), (2, 4, 1, 3)], [1, 2])
    assert overlap.is_aj_state()
    assert overlap.complexity() == Complexity(2, 0)
    assert not TiedDiagram.from_pd(HOPF, [1, 1]).is_aj_state()


def test_disjoint_union():
    d = tied_hopf()
    grown = disjoint_union(d, unknot(), share_colors=False)
    assert grown.n_colors == d.n_colors + 1
    assert len(grown.free_loops) == 1

    shared = disjoint_union(d, unknot(), share_colors=True, color_map={1: 2})
    assert shared.n_colors == d.n_colors
    assert len(shared.free_loops) == 1

    uu = disjoint_union(unknot(), unknot(), share_colors=False)
    assert sorted(uu.free_loops) == [1, 2]

    with pytest.raises(ColorMapError):
        disjoint_union(d, unknot(), share_colors=True)
    with pytest.raises(ColorMapError):
        disjoint_union(d, unknot(), share_colors=True, color_map={2: 1})


def test_canonical_code_relabeling():
    d = TiedDiagram.from_pd(TREFOIL)
    relabeled = d.relabel_arcs({1: 10, 2: 20, 3: 33, 4: 4, 5: 57, 6: 6})
    assert d.canonical_code() == relabeled.canonical_code()
    reordered = TiedDiagram(d.crossings[::-1], dict(d.arc_color), d.free_loops)
    assert d.canonical_code() == reordered.canonical_code()
    assert d.canonical_code() != unknot().canonical_code()


def test_canonical_code_color_swap():
    # the standard Hopf diagram is symmetric in its two components, so the
    # two colorings give the same colored diagram up to renaming
    assert tied_hopf(1, 2).canonical_code() == tied_hopf(2, 1).canonical_code()
    # mirror image differs
    d = TiedDiagram.from_pd(TREFOIL)
    mirrored = TiedDiagram(
        tuple(CrossingRecord((r.slots[1], r.slots[2], r.slots[3], r.slots[0])) for r in d.crossings),
        dict(d.arc_color),
        (),
    )
    assert d.canonical_code() != mirrored.canonical_code()


def test_normalized_colors():
    d = TiedDiagram.from_pd(HOPF, [3, 7]).normalized_colors()
    assert set(d.arc_color.values()) == {1, 2}


def test_from_pd_errors():
    with pytest.raises(Exception):
        TiedDiagram.from_pd([(1, 2, 3)])
    with pytest.raises(Exception):
        TiedDiagram.from_pd(HOPF, [1])  # wrong number of colors
    with pytest.raises(Exception):
        TiedDiagram.from_pd(HOPF, [1, 0])  # non-positive color


def test_random_diagram_valid():
    for seed in range(20):
        d = random_diagram(seed, seed % 6 + 1, seed % 3 + 1, seed % 2)
        d.validate()
