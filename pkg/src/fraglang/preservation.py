"""Derivation transformers witnessing type preservation.

Each fragment's transformer rewrites its own typing derivations across
its own step derivations.  Everything about the outside world (how to
type literals, how to re-enter the composed relation, and the induction
hypothesis itself) arrives as explicit hooks, and the composed
transformer is the one-time instantiation of those hooks with the
composed constructors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .functor import Payload
from .lang import LIFT_ARRAY, array_lookup, enat
from .semantics import (
    ArrayStep,
    ComposedStep,
    Lookup,
    StepI,
    StepL,
    StepR,
    StepRAny,
    StepV,
    SumStep,
    ViaArray,
    ViaSum,
)
from .subobject import upcast
from .typecheck import (
    ArrayTyping,
    ComposedTyping,
    LiftWtArray,
    LiftWtNat,
    LiftWtOption,
    LiftWtSum,
    OkLookup,
    OkSum,
    SumTyping,
)


class SubjectMismatchError(Exception):
    """A step and a typing derivation disagree about their subject term."""


@dataclass(frozen=True)
class PreservationHooks:
    """What a fragment transformer assumes about the composed language."""

    wt_nat: Callable[[int], ComposedTyping]
    wt_option: Callable[[Payload], ComposedTyping]
    lift_sum_wt: Callable[[SumTyping], ComposedTyping]
    lift_array_wt: Callable[[ArrayTyping], ComposedTyping]
    induction: Callable[[ComposedStep, ComposedTyping], ComposedTyping]


def typed_array_lookup(a: Payload, n: int) -> tuple[Payload, ComposedTyping]:
    """Lookup that also returns the typing derivation for its result."""
    result = array_lookup(a, n)
    return result, LiftWtOption(result)


def preservation_sum(
    hooks: PreservationHooks, step: SumStep, wt: SumTyping
) -> ComposedTyping:
    """Rewrite a sum typing across a sum step."""
    if not isinstance(wt, OkSum):
        raise SubjectMismatchError(f"sum step against non-sum typing {wt!r}")
    match step:
        case StepL(inner, left, left_after, right):
            if wt.left != left or wt.right != right:
                raise SubjectMismatchError("left-congruence subject mismatch")
            rewritten = hooks.induction(inner, wt.left_wt)
            return hooks.lift_sum_wt(OkSum(rewritten, wt.right_wt, left_after, right))
        case StepR(inner, left_nat, right, right_after):
            if wt.left != enat(left_nat) or wt.right != right:
                raise SubjectMismatchError("right-congruence subject mismatch")
            rewritten = hooks.induction(inner, wt.right_wt)
            return hooks.lift_sum_wt(
                OkSum(wt.left_wt, rewritten, enat(left_nat), right_after)
            )
        case StepRAny(inner, left, right, right_after):
            if wt.left != left or wt.right != right:
                raise SubjectMismatchError("right-congruence subject mismatch")
            rewritten = hooks.induction(inner, wt.right_wt)
            return hooks.lift_sum_wt(OkSum(wt.left_wt, rewritten, left, right_after))
        case StepV(n, m):
            if wt.left != enat(n) or wt.right != enat(m):
                raise SubjectMismatchError("literal-reduction subject mismatch")
            return hooks.wt_nat(n + m)
    raise SubjectMismatchError(f"not a sum step: {step!r}")


def preservation_array(
    hooks: PreservationHooks, step: ArrayStep, wt: ArrayTyping
) -> ComposedTyping:
    """Rewrite an array typing across an array step."""
    match step:
        case StepI(inner, array, idx, idx_after):
            if not isinstance(wt, OkLookup) or wt.array != array or wt.index != idx:
                raise SubjectMismatchError("index-congruence subject mismatch")
            rewritten = hooks.induction(inner, wt.index_wt)
            return hooks.lift_array_wt(
                OkLookup(wt.array_wt, rewritten, array, idx_after)
            )
        case Lookup(chain, idx):
            if (
                not isinstance(wt, OkLookup)
                or wt.array != upcast(LIFT_ARRAY, chain)
                or wt.index != enat(idx)
            ):
                raise SubjectMismatchError("lookup subject mismatch")
            return hooks.wt_option(array_lookup(chain, idx))
    raise SubjectMismatchError(f"not an array step: {step!r}")


def preserve(step: ComposedStep, wt: ComposedTyping) -> ComposedTyping:
    """Rewrite a composed typing across a composed step.

    Recursion is structural on the step derivation, so the knot-tied
    induction terminates.
    """
    match (step, wt):
        case (ViaSum(s), LiftWtSum(w)):
            return preservation_sum(COMPOSED_HOOKS, s, w)
        case (ViaArray(s), LiftWtArray(w)):
            return preservation_array(COMPOSED_HOOKS, s, w)
    raise SubjectMismatchError(
        f"step {type(step).__name__} cannot pair with typing {type(wt).__name__}"
    )


# Instantiated once: the composed language supplies its own constructors
# as every hook, closing the induction with preserve itself.
COMPOSED_HOOKS = PreservationHooks(
    wt_nat=LiftWtNat,
    wt_option=LiftWtOption,
    lift_sum_wt=LiftWtSum,
    lift_array_wt=LiftWtArray,
    induction=preserve,
)
