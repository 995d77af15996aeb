import pytest
from hypothesis import given, settings, strategies as st

from afbackdoor import (
    ArgumentationFramework,
    ParseError,
    parse_apx,
    parse_tgf,
    serialize_apx,
)

from conftest import DATA_DIR, make_five_af, random_af


class TestParseApx:
    def test_two_arguments_one_attack(self):
        af = parse_apx("arg(a).\narg(b).\natt(a,b).")
        assert af.arguments == ("a", "b")
        assert af.attacks == (("a", "b"),)

    def test_five_framework_file(self):
        text = (DATA_DIR / "five.apx").read_text(encoding="utf-8")
        assert parse_apx(text) == make_five_af()

    def test_comments_and_blank_lines_ignored(self):
        af = parse_apx("% header\n\narg(a).\n  \n% more\narg(b).\n")
        assert af.arguments == ("a", "b")

    def test_undeclared_attack_endpoint(self):
        with pytest.raises(ParseError, match="line 1.*undeclared.*'a'"):
            parse_apx("att(a,b).")

    def test_duplicate_declaration(self):
        with pytest.raises(ParseError, match="line 2.*duplicate"):
            parse_apx("arg(a).\narg(a).")

    def test_malformed_line_reports_number(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_apx("arg(a).\narg(b).\nattack a b\n")

    def test_duplicate_attacks_collapse(self):
        af = parse_apx("arg(a).\narg(b).\natt(a,b).\natt(a,b).")
        assert af.attacks == (("a", "b"),)


class TestParseTgf:
    def test_two_nodes_one_edge(self):
        af = parse_tgf("1\n2\n#\n1 2")
        assert af.arguments == ("1", "2")
        assert af.attacks == (("1", "2"),)

    def test_five_framework_matches_apx(self):
        apx = parse_apx((DATA_DIR / "five.apx").read_text(encoding="utf-8"))
        tgf = parse_tgf((DATA_DIR / "five.tgf").read_text(encoding="utf-8"))
        assert apx == tgf

    def test_duplicate_node(self):
        with pytest.raises(ParseError, match="duplicate node"):
            parse_tgf("1\n1\n#\n")

    def test_missing_separator(self):
        with pytest.raises(ParseError, match="missing '#'"):
            parse_tgf("1\n2\n")

    def test_unknown_edge_endpoint(self):
        with pytest.raises(ParseError, match="unknown endpoint"):
            parse_tgf("1\n#\n1 2")

    def test_malformed_edge_line(self):
        with pytest.raises(ParseError, match="malformed edge"):
            parse_tgf("1\n2\n#\n1 2 3")


class TestSerializeApx:
    def test_layout(self):
        af = ArgumentationFramework(["a", "b"], [("a", "b")])
        assert serialize_apx(af) == "arg(a).\narg(b).\natt(a,b).\n"

    def test_empty_framework(self):
        assert serialize_apx(ArgumentationFramework([])) == ""

    def test_five_round_trip(self):
        five = make_five_af()
        assert parse_apx(serialize_apx(five)) == five

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 7), st.integers(0, 10_000),
           st.sampled_from([0.0, 0.2, 0.5]))
    def test_round_trip_random(self, n, seed, p):
        af = random_af(n, p, seed, self_attacks=True)
        assert parse_apx(serialize_apx(af)) == af

    def test_names_survive_round_trip(self):
        names = ["x_1", "A-b", "ü", "0", "long.name'with\"quotes"]
        af = ArgumentationFramework(names, [(names[0], names[1])])
        assert parse_apx(serialize_apx(af)).arguments == tuple(names)
