import pytest
from hypothesis import given
from hypothesis import strategies as st

from stringhh.generate import CLASSES, GenerationExhausted, RandomSpec, random_presentation, satisfies
from stringhh.presentation import classify, emit_presentation


def test_string_example():
    p = random_presentation(RandomSpec("string", 6, 8, 0.5, 42))
    assert classify(p).string
    assert len(p.quiver.arrows) == 8


def test_same_seed_same_presentation():
    spec = RandomSpec("string", 6, 8, 0.5, 42)
    assert emit_presentation(random_presentation(spec)) == emit_presentation(random_presentation(spec))


def test_impossible_spec_exhausts():
    with pytest.raises(GenerationExhausted) as info:
        random_presentation(RandomSpec("gentle", 1, 5, 0.5, 1), max_attempts=50)
    assert "gentle" in str(info.value)


@pytest.mark.parametrize(
    "args",
    [("tree", 3, 2, 0.5, 1), ("string", 0, 2, 0.5, 1), ("string", 3, 2, 1.5, 1), ("string", 3, -1, 0.5, 1), ("string", 3, 2, 0.5, -1)],
)
def test_random_spec_validation(args):
    with pytest.raises(ValueError):
        RandomSpec(*args)


def test_child_seeds_are_stable_and_distinct():
    spec = RandomSpec("quadratic", 5, 6, 0.5, 7)
    seeds = [spec.child(i).seed for i in range(50)]
    assert len(set(seeds)) == 50
    assert seeds == [spec.child(i).seed for i in range(50)]
    assert spec.child(3).target == "quadratic"


def test_cli_args_round_trip():
    spec = RandomSpec("gentle", 5, 6, 0.25, 99)
    assert spec.cli_args() == "--class gentle --vertices 5 --arrows 6 --density 0.25 --seed 99"


@given(st.sampled_from(CLASSES), st.integers(2, 7), st.integers(0, 9), st.sampled_from([0.0, 0.3, 0.7, 1.0]), st.integers(0, 2**64 - 1))
def test_generated_presentations_satisfy_class(target, nv, na, density, seed):
    spec = RandomSpec(target, nv, na, density, seed)
    try:
        p = random_presentation(spec, max_attempts=200)
    except GenerationExhausted:
        return
    r = classify(p)
    assert r.triangular
    assert satisfies(r, target)
    assert len(p.quiver.arrows) == na
    assert len(p.quiver.vertices) == nv
