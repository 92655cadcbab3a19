from hypothesis import given
from hypothesis import strategies as st

from steinlab.report import CheckItem, VerificationReport, merge

values = st.recursive(st.none() | st.booleans() | st.integers(-100, 100) | st.text(max_size=8),
                      lambda inner: st.lists(inner, max_size=3) | st.dictionaries(st.text(max_size=4), inner, max_size=3),
                      max_leaves=8)
items = st.builds(CheckItem, st.from_regex(r"C[0-9]{1,2}(\.[a-z]{1,5})?", fullmatch=True),
                  st.text(max_size=20), values, values, st.booleans())


@given(st.lists(items, max_size=6), st.lists(st.text(max_size=10), max_size=3))
def test_json_round_trip(its, notes):
    rep = VerificationReport("suite", its, notes)
    again = VerificationReport.from_json(rep.to_json())
    assert again.to_json() == rep.to_json()
    assert again.passed == rep.passed == all(i.passed for i in its)


def test_overall_is_the_conjunction():
    rep = VerificationReport("s")
    assert rep.passed
    rep.check("A", "a", 1, 1)
    assert rep.passed
    rep.check("B", "b", [1], [2])
    assert not rep.passed
    assert rep.check("C", "c", "x", "y", passed=True)


def test_items_are_sorted_naturally_and_output_is_deterministic():
    rep = VerificationReport("s")
    for cid in ("C10", "C2.b", "C2.a", "C1"):
        rep.check(cid, "", 0, 0)
    ids = [i["check_id"] for i in rep.as_dict()["items"]]
    assert ids == ["C1", "C2.a", "C2.b", "C10"]
    assert rep.to_json() == rep.to_json()
    assert "wall_time" not in rep.as_dict()
    rep.wall_time = 1.23456
    assert rep.as_dict()["wall_time"] == 1.235


def test_markdown_escapes_pipes():
    rep = VerificationReport("s")
    rep.check("A", "a|b", "x|y", "x|y")
    md = rep.to_markdown()
    assert "PASS" in md and "x\\|y" in md


def test_merge_prefixes_notes():
    a, b = VerificationReport("a"), VerificationReport("b")
    a.check("A", "", 1, 1)
    b.note("hello")
    m = merge("ab", [a, b])
    assert len(m.items) == 1 and m.notes == ["b: hello"]
