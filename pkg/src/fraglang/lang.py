"""The composed language: naturals, options, sums, and arrays.

Each fragment is a descriptor; the whole language is their left-nested
disjoint sum under the fixed point.  Smart constructors lift fragment
payloads along the fragment's path, and destructors invert them.
"""

from __future__ import annotations

from typing import Optional

from .functor import (
    Atom,
    AtomVal,
    BaseSet,
    InL,
    InR,
    Pair,
    Payload,
    Prod,
    Rec,
    ShapeError,
    Slot,
    Sum,
    Term,
    UNIT,
    validate_payload,
)
from .subobject import ContainsPath, Direction, downcast, upcast

NAT = Atom(BaseSet.NAT)
OPTION = Sum(Rec(), Atom(BaseSet.UNIT))
SUM = Prod(Rec(), Rec())
# Three cases: assignment (a, i, e), the empty array, and lookup (a, i).
ARRAY = Sum(
    Sum(Prod(Rec(), Prod(Rec(), Rec())), Atom(BaseSet.UNIT)),
    Prod(Rec(), Rec()),
)
FEXPR = Sum(Sum(Sum(NAT, OPTION), SUM), ARRAY)

_L = Direction.LEFT
_R = Direction.RIGHT

LIFT_NAT = ContainsPath((_L, _L, _L), FEXPR)
LIFT_OPTION = ContainsPath((_R, _L, _L), FEXPR)
LIFT_SUM = ContainsPath((_R, _L), FEXPR)
LIFT_ARRAY = ContainsPath((_R,), FEXPR)

LIFT_PATHS = {
    "nat": LIFT_NAT,
    "option": LIFT_OPTION,
    "sum": LIFT_SUM,
    "array": LIFT_ARRAY,
}

NONE_PAYLOAD = InR(AtomVal(BaseSet.UNIT, UNIT))
NIL_PAYLOAD = InL(InR(AtomVal(BaseSet.UNIT, UNIT)))


def some_payload(e: Term) -> Payload:
    return InL(Slot(e))


def enat(n: int) -> Term:
    """A natural-number literal."""
    return upcast(LIFT_NAT, AtomVal(BaseSet.NAT, n))


def plus(e1: Term, e2: Term) -> Term:
    """Addition of two expressions."""
    return upcast(LIFT_SUM, Pair(Slot(e1), Slot(e2)))


def some(e: Term) -> Term:
    """A present optional value."""
    return upcast(LIFT_OPTION, some_payload(e))


def none() -> Term:
    """The absent optional value."""
    return upcast(LIFT_OPTION, NONE_PAYLOAD)


def nil() -> Term:
    """The empty array."""
    return upcast(LIFT_ARRAY, NIL_PAYLOAD)


def assign(a: Term, i: Term, e: Term) -> Term:
    """Array a extended with e written at index i."""
    return upcast(LIFT_ARRAY, InL(InL(Pair(Slot(a), Pair(Slot(i), Slot(e))))))


def index(a: Term, i: Term) -> Term:
    """Array lookup of index i in a."""
    return upcast(LIFT_ARRAY, InR(Pair(Slot(a), Slot(i))))


def nat_value(t: Term) -> Optional[int]:
    """The literal under a natural, or None."""
    p = downcast(LIFT_NAT, t)
    if isinstance(p, AtomVal):
        return p.value
    return None


def plus_parts(t: Term) -> Optional[tuple[Term, Term]]:
    p = downcast(LIFT_SUM, t)
    if isinstance(p, Pair):
        return p.fst.term, p.snd.term
    return None


def option_payload(t: Term) -> Optional[Payload]:
    return downcast(LIFT_OPTION, t)


def array_payload(t: Term) -> Optional[Payload]:
    return downcast(LIFT_ARRAY, t)


def is_value(t: Term) -> bool:
    """Normal forms the step rules treat as results.

    Naturals; nil; assignment chains whose indices and elements are all
    literals; none; and some of a value.  Lookup nodes are never values.
    """
    if nat_value(t) is not None:
        return True
    op = option_payload(t)
    if op is not None:
        match op:
            case InR(AtomVal()):
                return True
            case InL(Slot(e)):
                return is_value(e)
    ap = array_payload(t)
    if ap is not None:
        return _is_value_array(ap)
    return False


def _is_value_array(p: Payload) -> bool:
    match p:
        case InL(InR(AtomVal())):
            return True
        case InL(InL(Pair(Slot(a), Pair(Slot(i), Slot(e))))):
            if nat_value(i) is None or nat_value(e) is None:
                return False
            inner = array_payload(a)
            return inner is not None and _is_value_array(inner)
    return False


def array_lookup(a: Payload, n: int) -> Payload:
    """Scan an assignment chain for index n; the outermost write wins.

    Returns an option payload: some of the stored element on a hit, none
    when the chain ends at nil.  The scan fails closed (none) on any node
    that is not an assignment or nil, and on any non-literal index, since
    no rule ever evaluates inside an assignment.
    """
    if not validate_payload(ARRAY, a):
        raise ShapeError(f"array_lookup expects an array payload, got {a!r}")
    while True:
        match a:
            case InL(InR(AtomVal())):
                return NONE_PAYLOAD
            case InL(InL(Pair(Slot(rest), Pair(Slot(i), Slot(e))))):
                stored = nat_value(i)
                if stored is None:
                    return NONE_PAYLOAD
                if stored == n:
                    return some_payload(e)
                inner = array_payload(rest)
                if inner is None:
                    return NONE_PAYLOAD
                a = inner
            case _:
                # A lookup node: the chain is not all assignments.
                return NONE_PAYLOAD
