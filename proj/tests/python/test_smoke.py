import pytest

import lamdist


def test_parse_and_print_round_trip():
    t = lamdist.parse("((f a) b)")
    assert str(t) == "f a b"
    assert lamdist.parse(str(t)) == t
    assert t.size == 5
    assert t.kind == "app"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        lamdist.parse("(\\x. x")


def test_distinct_names_and_alpha():
    t = lamdist.parse("(\\x. x) (\\x. x)")
    assert not lamdist.has_distinct_names(t)
    u = lamdist.distinct_names(t)
    assert lamdist.has_distinct_names(u)
    assert lamdist.alpha_eq(t, u)
    assert lamdist.free_vars(lamdist.parse("(\\x. x) (\\y. z)")) == ["z"]


def test_spine():
    s = lamdist.spine(lamdist.parse("(\\y. \\x. z) s u"))
    assert s["head"] == "z"
    assert [kind for kind, _ in s["word"]] == ["arg", "arg", "abs", "abs"]
    assert s["matching"] == [(0, 3), (1, 2)]
    assert s["e_context"]
    assert (s["n_lambda"], s["n_app"], s["n_pairs"]) == (0, 0, 2)


def test_canonical_form_golden():
    t = lamdist.parse("(\\y. \\x. v) s t")
    assert str(lamdist.canon(t)) == "(\\y. (\\x. v) t) s"
    for order in ("leftmost", "rightmost", "random"):
        assert lamdist.alpha_eq(lamdist.normalize_e(t, order), lamdist.canon(t))


def test_equivalences():
    a = lamdist.parse("(\\y. (\\x. v) t) s")
    b = lamdist.parse("(\\x. (\\y. v) s) t")
    assert lamdist.equivalent(a, b, "sigma") is True
    assert lamdist.equivalent(a, b, "deep-e") is False
    omega = lamdist.parse("(\\x. x x) (\\x. x x)")
    assert lamdist.equivalent(omega, omega, "beta", 30) is None
    with pytest.raises(ValueError):
        lamdist.equivalent(a, b, "nope")


def test_reduce():
    r = lamdist.reduce(lamdist.parse("(\\x. x x) y"), "affine")
    assert str(r["term"]) == "y y"
    assert [rule for rule, _, _ in r["steps"]] == ["linear", "linear", "garbage"]
    assert not r["exhausted"]
    assert lamdist.reduce(lamdist.parse("(\\x. x x) (\\x. x x)"), "beta", 10)["exhausted"]


def test_types_and_measure():
    assert lamdist.typecheck(lamdist.parse("x y"), "x:o->o,y:o") == "o"
    assert lamdist.typecheck(lamdist.parse("\\x:o. x")) == "o->o"
    with pytest.raises(TypeError):
        lamdist.typecheck(lamdist.parse("\\x:o. x x"))
    assert lamdist.measure(lamdist.parse("\\x:o. x")) == 2
    assert lamdist.measure(lamdist.parse("(\\x:o. x) y"), {"y": "o"}) == 4
    assert lamdist.measure(lamdist.parse("y"), "y:o") == 1


def test_suites():
    names = lamdist.suite_names()
    assert "measure-decrease" in names
    r = lamdist.run_suite("canonical-uniqueness", seed=2, count=25)
    assert (r["passed"], r["failed"]) == (25, 0)
    with pytest.raises(ValueError):
        lamdist.run_suite("no-such-suite")


def test_cli_entry_point():
    code, out, _ = lamdist.cli(["canon", "(\\y. \\x. v) s t"])
    assert (code, out) == (0, "(\\y. (\\x. v) t) s\n")
    code, _, err = lamdist.cli(["reduce"])
    assert code == 2 and err
