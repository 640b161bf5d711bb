import json

import pytest

import morphdet

A3 = json.dumps({
    "field": "Q",
    "quiver": {
        "vertices": ["1", "2", "3"],
        "arrows": [{"name": "a", "source": "2", "target": "1"}, {"name": "b", "source": "3", "target": "2"}],
    },
})


def test_fixtures_replay():
    names = morphdet.fixture_names()
    assert len(names) == 5
    for name in names:
        report = morphdet.run(morphdet.fixture_text(name))
        assert report["passed"], name
        assert morphdet.oracle(morphdet.fixture_text(name), jobs=2)["passed"], name


def test_modules():
    w = morphdet.Workspace(A3)
    p3 = w.module("P(3)")
    assert p3.dims == [1, 1, 1]
    assert p3.name == "P(3)"
    assert p3.is_projective() and p3.is_injective()
    assert w.module("socle(P(3))") == w.module("S(1)")
    left, middle, right = morphdet.ar_sequence(w.module("I(2)"))
    assert left.name == "P(2)"
    assert sorted(m.name for m in morphdet.decompose(middle)) == ["P(3)", "S(2)"]
    assert morphdet.tau(w.module("S(2)")).name == "S(1)"
    assert morphdet.ext_dim(w.module("S(2)"), w.module("S(1)")) == 1


def test_determiners():
    w = morphdet.Workspace(A3)
    alpha = w.morphism("inclusion(socle(P(3)))")
    assert alpha.is_mono() and not alpha.is_epi()
    assert [m.name for m in morphdet.minimal_determiner(alpha)] == ["P(2)"]
    assert morphdet.auslander_determiner(alpha).name == "P(2)"
    assert morphdet.almost_factors_through(w.module("P(2)"), alpha)
    assert not morphdet.determines(w.module("P(3)"), alpha)
    assert morphdet.determines_oracle(w.module("P(2)"), alpha, w.universe())


def test_composition():
    w = morphdet.Workspace(A3)
    f = w.morphism("inclusion(socle(P(3)))")
    g = w.morphism("id(P(3))")
    assert g @ f == f
    assert (f + f).rank == 1
    assert f.matrices[0] == ["1"]


def test_errors():
    with pytest.raises(morphdet.InputError, match=r"\$\.field"):
        morphdet.run('{"field": "F4", "quiver": {"vertices": ["1"]}}')
    with pytest.raises(ValueError):
        morphdet.Workspace(A3).module("nope")
    with pytest.raises(morphdet.InputError):
        morphdet.fixture_text("missing")
