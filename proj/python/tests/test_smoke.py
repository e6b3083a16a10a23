import pytest

import p2flis


def test_leaf_function():
    assert [p2flis.leaf_function(n) for n in (1, 2, 17, 18, 19, 35)] == [0, 2, 9, 10, 10, 18]
    assert p2flis.is_saturated(35)


def test_generate_and_round_trip():
    p = p2flis.generate("sun", 3)
    assert p.is_valid()
    kites, darts = p.half_tile_counts()
    q = p2flis.generate("sun", 4)
    assert q.half_tile_counts() == (2 * kites + darts, kites + darts)
    text = p.to_text()
    assert p2flis.Patch.from_text(text).to_text() == text


def test_search_and_chain():
    t = p2flis.Tiling(p2flis.generate("sun", 6))
    rec = p2flis.search_max_leaves(t, 18, witness_cap=4)
    assert rec.max_leaves == 10
    assert len(rec.witnesses) == 4
    report = p2flis.chain_report(t, rec.witnesses[0])
    assert report["shape"] == 1
    assert len(report["primes"]) == 1
    assert report["angles"] in {"4", "6", "8"}


def test_census_and_stars():
    t = p2flis.Tiling(p2flis.generate("sun", 6))
    rows, exceptions = p2flis.prime_census(t)
    assert exceptions == 0
    assert [r["class_id"] for r in rows] == [1, 2, 3, 4, 5, 6]
    assert set(t.star_colors()) <= set("RGB")
    assert t.star_graph_text().startswith("STARGRAPH v1")
    assert p2flis.render_svg(t, stars=True).startswith("<?xml")


def test_words():
    assert p2flis.sea_caterpillars("686486") == [("residue", 0, 1), ("cape4", 2, 4), ("residue", 5, 5)]
    assert p2flis.forbidden_patterns("6446", [2, 3, 6, 2]) == [("angles44", 1)]


def test_errors():
    with pytest.raises(p2flis.Error):
        p2flis.generate("rhombus", 1)
    with pytest.raises(p2flis.Error):
        p2flis.Patch.from_text("P2PATCH v9\n")
