"""Reified small-step derivations and the deterministic driver.

Each fragment owns its own derivation constructors; the composed relation
wraps them.  Derivations store the terms they mention, so a derivation can
be checked against a claimed (source, target) pair with no extra context.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .functor import InR, Pair, Payload, ShapeError, Slot, Term, is_natural, validate_payload
from .lang import (
    ARRAY,
    LIFT_ARRAY,
    LIFT_OPTION,
    array_lookup,
    array_payload,
    enat,
    index,
    nat_value,
    plus,
    plus_parts,
)
from .subobject import upcast


class MalformedDerivationError(Exception):
    """A derivation tree is not built from the step constructors."""


class FuelExhaustedError(Exception):
    """A trace ran out of fuel while its term could still step."""


@dataclass(frozen=True)
class StepL:
    """Congruence on the left summand: e1 + e2 steps to e1' + e2."""

    inner: "ComposedStep"
    left: Term
    left_after: Term
    right: Term


@dataclass(frozen=True)
class StepR:
    """Congruence on the right summand once the left is a literal."""

    inner: "ComposedStep"
    left_nat: int
    right: Term
    right_after: Term


@dataclass(frozen=True)
class StepRAny:
    """Right congruence without the literal guard on the left operand.

    Experimental relaxation; only accepted when the driver/validator are
    invoked with allow_any_left.
    """

    inner: "ComposedStep"
    left: Term
    right: Term
    right_after: Term


@dataclass(frozen=True)
class StepV:
    """Reduction of two literals: n + m steps to their sum."""

    n: int
    m: int


SumStep = Union[StepL, StepR, StepRAny, StepV]


@dataclass(frozen=True)
class StepI:
    """Congruence on the index operand of a lookup."""

    inner: "ComposedStep"
    array: Term
    idx: Term
    idx_after: Term


@dataclass(frozen=True)
class Lookup:
    """Resolution of a lookup on a lifted array payload and literal index."""

    chain: Payload
    idx: int


ArrayStep = Union[StepI, Lookup]


@dataclass(frozen=True)
class ViaSum:
    step: SumStep


@dataclass(frozen=True)
class ViaArray:
    step: ArrayStep


ComposedStep = Union[ViaSum, ViaArray]


def _sum_endpoints(s: SumStep) -> tuple[Term, Term]:
    match s:
        case StepL(_, left, left_after, right):
            return plus(left, right), plus(left_after, right)
        case StepR(_, left_nat, right, right_after):
            lit = enat(left_nat)
            return plus(lit, right), plus(lit, right_after)
        case StepRAny(_, left, right, right_after):
            return plus(left, right), plus(left, right_after)
        case StepV(n, m):
            return plus(enat(n), enat(m)), enat(n + m)
    raise MalformedDerivationError(f"not a sum step: {s!r}")


def _array_endpoints(s: ArrayStep) -> tuple[Term, Term]:
    match s:
        case StepI(_, array, idx, idx_after):
            return index(array, idx), index(array, idx_after)
        case Lookup(chain, idx):
            source = index(upcast(LIFT_ARRAY, chain), enat(idx))
            return source, upcast(LIFT_OPTION, array_lookup(chain, idx))
    raise MalformedDerivationError(f"not an array step: {s!r}")


def step_endpoints(d: ComposedStep) -> tuple[Term, Term]:
    """The (source, target) pair a derivation claims to relate."""
    match d:
        case ViaSum(s):
            return _sum_endpoints(s)
        case ViaArray(s):
            return _array_endpoints(s)
    raise MalformedDerivationError(f"not a composed step: {d!r}")


def validate_step(
    d: ComposedStep, source: Term, target: Term, *, allow_any_left: bool = False
) -> bool:
    """True iff d is well-formed, recursively valid, and relates source to target."""
    try:
        got_source, got_target = step_endpoints(d)
    except (MalformedDerivationError, ShapeError, TypeError):
        return False
    if got_source != source or got_target != target:
        return False
    return _valid(d, allow_any_left)


def _valid(d: ComposedStep, relaxed: bool) -> bool:
    match d:
        case ViaSum(StepL(inner, left, left_after, _)):
            return validate_step(inner, left, left_after, allow_any_left=relaxed)
        case ViaSum(StepR(inner, left_nat, right, right_after)):
            return is_natural(left_nat) and validate_step(
                inner, right, right_after, allow_any_left=relaxed
            )
        case ViaSum(StepRAny(inner, _, right, right_after)):
            return relaxed and validate_step(
                inner, right, right_after, allow_any_left=relaxed
            )
        case ViaSum(StepV(n, m)):
            return is_natural(n) and is_natural(m)
        case ViaArray(StepI(inner, _, idx, idx_after)):
            return validate_step(inner, idx, idx_after, allow_any_left=relaxed)
        case ViaArray(Lookup(chain, idx)):
            return is_natural(idx) and validate_payload(ARRAY, chain)
    return False


def drive_step(
    t: Term, *, allow_any_left: bool = False
) -> Optional[tuple[Term, ComposedStep]]:
    """One deterministic step, or None on a normal form.

    Strategy: addition reduces its left operand to a literal, then its
    right, then the pair; lookup reduces its index to a literal, then
    resolves when the array operand is a lifted array payload.
    """
    parts = plus_parts(t)
    if parts is not None:
        left, right = parts
        n1 = nat_value(left)
        if n1 is None:
            inner = drive_step(left, allow_any_left=allow_any_left)
            if inner is not None:
                left_after, d = inner
                return plus(left_after, right), ViaSum(StepL(d, left, left_after, right))
            if allow_any_left:
                stuck_right = drive_step(right, allow_any_left=allow_any_left)
                if stuck_right is not None:
                    right_after, d = stuck_right
                    return (
                        plus(left, right_after),
                        ViaSum(StepRAny(d, left, right, right_after)),
                    )
            return None
        n2 = nat_value(right)
        if n2 is None:
            inner = drive_step(right, allow_any_left=allow_any_left)
            if inner is None:
                return None
            right_after, d = inner
            return plus(left, right_after), ViaSum(StepR(d, n1, right, right_after))
        return enat(n1 + n2), ViaSum(StepV(n1, n2))
    ap = array_payload(t)
    if ap is not None:
        lookup_parts = _lookup_parts(ap)
        if lookup_parts is not None:
            array, idx = lookup_parts
            n = nat_value(idx)
            if n is None:
                inner = drive_step(idx, allow_any_left=allow_any_left)
                if inner is None:
                    return None
                idx_after, d = inner
                return index(array, idx_after), ViaArray(StepI(d, array, idx, idx_after))
            chain = array_payload(array)
            if chain is None:
                return None
            target = upcast(LIFT_OPTION, array_lookup(chain, n))
            return target, ViaArray(Lookup(chain, n))
    return None


def _lookup_parts(array_pl: Payload) -> Optional[tuple[Term, Term]]:
    match array_pl:
        case InR(Pair(Slot(a), Slot(i))):
            return a, i
    return None


def trace(
    t: Term, fuel: int, *, allow_any_left: bool = False
) -> list[tuple[Term, ComposedStep]]:
    """Iterate the driver at most ``fuel`` times, stopping at a normal form.

    Raises FuelExhaustedError when the final term still steps.
    """
    steps: list[tuple[Term, ComposedStep]] = []
    current = t
    for _ in range(fuel):
        result = drive_step(current, allow_any_left=allow_any_left)
        if result is None:
            return steps
        current, derivation = result
        steps.append((current, derivation))
    if drive_step(current, allow_any_left=allow_any_left) is not None:
        raise FuelExhaustedError(f"term still steps after {fuel} steps")
    return steps
