import random

import pytest

from fraglang.functor import ShapeError, Term, Slot
from fraglang.generate import enumerate_terms, random_term
from fraglang.lang import enat, none, some
from fraglang.oracle import (
    Atom,
    ENone,
    ESome,
    Ins,
    Lookup,
    Nil,
    Plus,
    embed,
    mono_infer,
    mono_step,
    project,
)
from fraglang.sweeps import oracle_sweep, trace_sweep
from fraglang.typecheck import LangType
from goldens import exp_term

EXP_MONO = Lookup(Ins(Nil(), Atom(0), Atom(1)), Plus(Atom(0), Atom(1)))


def test_embed_literal():
    assert embed(enat(6)) == Atom(6)


def test_embed_worked_example():
    assert embed(exp_term()) == EXP_MONO


def test_embed_option_cases():
    assert embed(none()) == ENone()
    assert embed(some(enat(1))) == ESome(Atom(1))


def test_project_inverts_embed_exhaustively():
    for t in enumerate_terms(1):
        assert project(embed(t)) == t


def test_project_inverts_embed_on_random_terms():
    rng = random.Random(31)
    for _ in range(500):
        t = random_term(rng, 7)
        assert project(embed(t)) == t


def test_embed_rejects_malformed_terms():
    with pytest.raises(ShapeError):
        embed(Term(Slot(enat(0))))


def test_mono_infer_examples():
    assert mono_infer(Atom(6)) is LangType.NAT
    assert mono_infer(EXP_MONO) is LangType.OPTION
    assert mono_infer(Plus(Nil(), Atom(1))) is None
    assert mono_infer(ESome(Plus(Nil(), Nil()))) is LangType.OPTION


def test_mono_step_examples():
    assert mono_step(Plus(Atom(0), Atom(1))) == Atom(1)
    assert mono_step(EXP_MONO) == Lookup(Ins(Nil(), Atom(0), Atom(1)), Atom(1))
    assert mono_step(Atom(5)) is None


def test_mono_step_lookup_resolution():
    hit = Lookup(Ins(Nil(), Atom(0), Atom(1)), Atom(0))
    assert mono_step(hit) == ESome(Atom(1))
    miss = Lookup(Ins(Nil(), Atom(0), Atom(1)), Atom(2))
    assert mono_step(miss) == ENone()
    assert mono_step(Lookup(Atom(0), Atom(0))) is None


def test_typing_and_step_equivalence_small_exhaustive():
    report = oracle_sweep(enumerate_terms(1))
    assert report.ok, report.offenders


def test_trace_equivalence():
    terms = list(enumerate_terms(1))
    rng = random.Random(41)
    terms += [random_term(rng, 8) for _ in range(300)]
    report = trace_sweep(terms, fuel=32)
    assert report.ok, report.offenders
