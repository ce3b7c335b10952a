import random

from fraglang.generate import enumerate_terms, random_term
from fraglang.lang import (
    array_payload,
    assign,
    enat,
    index,
    nat_value,
    nil,
    none,
    option_payload,
    plus,
    plus_parts,
    some,
)
from fraglang.typecheck import (
    LangType,
    LiftWtArray,
    LiftWtNat,
    LiftWtOption,
    LiftWtSum,
    OkIns,
    OkLookup,
    OkNil,
    OkSum,
    infer,
    typing_subject,
    validate_typing,
)
from fraglang.functor import InL, InR, Pair, Slot
from goldens import exp_term, wt_exp


def test_subject_of_nat_rule():
    assert typing_subject(LiftWtNat(6)) == (enat(6), LangType.NAT)


def test_subject_of_option_rule():
    from fraglang.lang import NONE_PAYLOAD

    assert typing_subject(LiftWtOption(NONE_PAYLOAD)) == (none(), LangType.OPTION)


def test_subject_of_worked_example():
    assert typing_subject(wt_exp()) == (exp_term(), LangType.OPTION)


def test_validate_worked_example():
    assert validate_typing(wt_exp(), exp_term(), LangType.OPTION)


def test_validate_rejects_wrong_type():
    assert not validate_typing(LiftWtNat(6), enat(6), LangType.ARRAY)


def test_validate_rejects_non_nat_premise():
    bad = LiftWtSum(OkSum(LiftWtNat(0), LiftWtArray(OkNil()), enat(0), nil()))
    subject, ty = typing_subject(bad)
    assert not validate_typing(bad, subject, ty)


def test_infer_worked_example_matches_golden():
    result = infer(exp_term())
    assert result is not None
    ty, derivation = result
    assert ty is LangType.OPTION
    assert derivation == wt_exp()


def test_infer_rejects_plus_of_array():
    assert infer(plus(nil(), enat(1))) is None


def test_infer_accepts_any_option_payload():
    # the option rule never inspects its payload
    result = infer(some(nil()))
    assert result is not None
    ty, derivation = result
    assert ty is LangType.OPTION
    assert derivation == LiftWtOption(option_payload(some(nil())))
    # even an ill-typed payload is fine
    assert infer(some(plus(nil(), nil())))[0] is LangType.OPTION


def test_infer_array_rules():
    assert infer(nil())[0] is LangType.ARRAY
    assert infer(assign(nil(), enat(0), enat(1)))[0] is LangType.ARRAY
    assert infer(index(nil(), enat(0)))[0] is LangType.OPTION
    assert infer(assign(nil(), none(), enat(1))) is None
    assert infer(index(enat(0), enat(0))) is None


def _all_typings(t):
    """Rule-by-rule search for every derivation of t, independent of infer."""
    n = nat_value(t)
    if n is not None:
        yield LangType.NAT, LiftWtNat(n)
    op = option_payload(t)
    if op is not None:
        yield LangType.OPTION, LiftWtOption(op)
    parts = plus_parts(t)
    if parts is not None:
        left, right = parts
        for lty, lw in _all_typings(left):
            for rty, rw in _all_typings(right):
                if lty is LangType.NAT and rty is LangType.NAT:
                    yield LangType.NAT, LiftWtSum(OkSum(lw, rw, left, right))
    ap = array_payload(t)
    if ap is not None:
        match ap:
            case InL(InR(_)):
                yield LangType.ARRAY, LiftWtArray(OkNil())
            case InL(InL(Pair(Slot(a), Pair(Slot(i), Slot(e))))):
                for aty, aw in _all_typings(a):
                    for ety, ew in _all_typings(e):
                        for ity, iw in _all_typings(i):
                            if (aty, ety, ity) == (LangType.ARRAY, LangType.NAT, LangType.NAT):
                                yield LangType.ARRAY, LiftWtArray(OkIns(aw, ew, iw, a, e, i))
            case InR(Pair(Slot(a), Slot(i))):
                for aty, aw in _all_typings(a):
                    for ity, iw in _all_typings(i):
                        if (aty, ity) == (LangType.ARRAY, LangType.NAT):
                            yield LangType.OPTION, LiftWtArray(OkLookup(aw, iw, a, i))


def test_infer_agrees_with_declarative_search():
    for t in enumerate_terms(1):
        found = list(_all_typings(t))
        inferred = infer(t)
        types = {ty for ty, _ in found}
        assert len(types) <= 1  # uniqueness: at most one type derivable
        if inferred is None:
            assert not found
        else:
            assert types == {inferred[0]}
            assert any(d == inferred[1] for _, d in found)


def test_infer_soundness_on_random_terms():
    rng = random.Random(21)
    typed = 0
    for _ in range(500):
        t = random_term(rng, 6)
        result = infer(t)
        if result is None:
            continue
        ty, derivation = result
        assert validate_typing(derivation, t, ty)
        typed += 1
    assert typed > 50


def test_derivations_store_their_terms():
    # validators are self-contained: mangling a stored term breaks validation
    derivation = infer(plus(enat(1), enat(2)))[1]
    mangled = LiftWtSum(OkSum(derivation.inner.left_wt, derivation.inner.right_wt, enat(1), enat(3)))
    assert not validate_typing(mangled, plus(enat(1), enat(2)), LangType.NAT)
