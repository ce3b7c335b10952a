"""Polynomial functor descriptors, their payloads, and fixed-point terms.

A descriptor names one layer of tree structure: a recursion slot, an atom
drawn from a base set, or a sum or product of smaller descriptors.  A
payload is a value of that layer; a term ties the knot by filling every
recursion slot with another term.  Everything here is immutable and
compared structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Union


class ShapeError(Exception):
    """A payload was used against a descriptor it does not inhabit."""


class BaseSet(Enum):
    """The closed universe of atom sets: naturals and the unit set."""

    NAT = "nat"
    UNIT = "unit"


@dataclass(frozen=True)
class Unit:
    """The single inhabitant of the unit set."""

    def __repr__(self) -> str:
        return "unit"


UNIT = Unit()


@dataclass(frozen=True)
class Rec:
    """Recursion slot: interpreted as the argument type itself."""


@dataclass(frozen=True)
class Atom:
    """Constant layer holding a value of a base set."""

    set: BaseSet


@dataclass(frozen=True)
class Sum:
    """Disjoint sum of two layers (a tagged choice)."""

    left: "FunctorDesc"
    right: "FunctorDesc"


@dataclass(frozen=True)
class Prod:
    """Cartesian product of two layers (both present)."""

    left: "FunctorDesc"
    right: "FunctorDesc"


FunctorDesc = Union[Rec, Atom, Sum, Prod]


@dataclass(frozen=True)
class Slot:
    """A filled recursion slot.

    Holds a Term in ordinary use; during a fold the slot temporarily
    carries the recursive result instead.
    """

    term: Any


@dataclass(frozen=True)
class AtomVal:
    """An atom tagged with its base set: a natural or the unit value."""

    set: BaseSet
    value: Any


@dataclass(frozen=True)
class InL:
    """Left injection into a sum layer."""

    payload: "Payload"


@dataclass(frozen=True)
class InR:
    """Right injection into a sum layer."""

    payload: "Payload"


@dataclass(frozen=True)
class Pair:
    """Both components of a product layer."""

    fst: "Payload"
    snd: "Payload"


Payload = Union[Slot, AtomVal, InL, InR, Pair]


@dataclass(frozen=True)
class Term:
    """One unrolling of the fixed point: a payload whose slots hold terms."""

    node: Payload


def is_natural(value: Any) -> bool:
    # bool is an int subclass; keep it out of the naturals.
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def _atom_ok(base: BaseSet, value: Any) -> bool:
    if base is BaseSet.NAT:
        return is_natural(value)
    return value == UNIT


def validate_payload(
    f: FunctorDesc,
    p: Payload,
    check_slot: Callable[[Any], bool] | None = None,
) -> bool:
    """Decide whether ``p`` is a value of ``f``'s interpretation.

    Total: any (descriptor, payload) pair is accepted or rejected, never an
    error.  ``check_slot`` judges what may sit in a recursion slot; the
    default accepts any Term one layer deep.
    """
    if check_slot is None:
        check_slot = lambda t: isinstance(t, Term)
    match (f, p):
        case (Rec(), Slot(t)):
            return check_slot(t)
        case (Atom(base), AtomVal(got, value)):
            return got is base and _atom_ok(base, value)
        case (Sum(left, _), InL(q)):
            return validate_payload(left, q, check_slot)
        case (Sum(_, right), InR(q)):
            return validate_payload(right, q, check_slot)
        case (Prod(left, right), Pair(a, b)):
            return validate_payload(left, a, check_slot) and validate_payload(
                right, b, check_slot
            )
    return False


def valid_term(f: FunctorDesc, t: Any) -> bool:
    """Deep validity: every layer of ``t`` inhabits ``f``."""
    return isinstance(t, Term) and validate_payload(
        f, t.node, lambda sub: valid_term(f, sub)
    )


def fmap(f: FunctorDesc, fn: Callable[[Any], Any], p: Payload) -> Payload:
    """Apply ``fn`` to every slot of ``p``, leaving structure and atoms alone.

    Raises ShapeError when ``p`` does not inhabit ``f``.
    """
    match (f, p):
        case (Rec(), Slot(t)):
            return Slot(fn(t))
        case (Atom(base), AtomVal(got, value)) if got is base and _atom_ok(base, value):
            return p
        case (Sum(left, _), InL(q)):
            return InL(fmap(left, fn, q))
        case (Sum(_, right), InR(q)):
            return InR(fmap(right, fn, q))
        case (Prod(left, right), Pair(a, b)):
            return Pair(fmap(left, fn, a), fmap(right, fn, b))
    raise ShapeError(f"payload {p!r} does not inhabit descriptor {f!r}")


def fold(f: FunctorDesc, algebra: Callable[[Payload], Any], t: Term) -> Any:
    """Collapse ``t`` bottom-up with a one-layer algebra.

    The algebra sees the node payload with every slot already replaced by
    the recursive result for the subterm it held.
    """
    if not isinstance(t, Term):
        raise ShapeError(f"fold expects a Term, got {t!r}")
    return algebra(fmap(f, lambda sub: fold(f, algebra, sub), t.node))
