"""A monolithic twin of the composed language, used as ground truth.

One flat expression type, one recursive type checker, one recursive
stepper.  No derivations, no functors, no lifts: just the language the
modular machinery is supposed to add up to, for equivalence testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .functor import InL, InR, Pair, ShapeError, Slot, Term
from .lang import (
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
from .typecheck import LangType


@dataclass(frozen=True)
class Atom:
    n: int


@dataclass(frozen=True)
class ESome:
    e: "MonoExpr"


@dataclass(frozen=True)
class ENone:
    pass


@dataclass(frozen=True)
class Nil:
    pass


@dataclass(frozen=True)
class Lookup:
    a: "MonoExpr"
    i: "MonoExpr"


@dataclass(frozen=True)
class Ins:
    a: "MonoExpr"
    i: "MonoExpr"
    e: "MonoExpr"


@dataclass(frozen=True)
class Plus:
    e1: "MonoExpr"
    e2: "MonoExpr"


MonoExpr = Union[Atom, ESome, ENone, Nil, Lookup, Ins, Plus]


def embed(t: Term) -> MonoExpr:
    """Transliterate a composed term into the flat type."""
    n = nat_value(t)
    if n is not None:
        return Atom(n)
    op = option_payload(t)
    if op is not None:
        match op:
            case InL(Slot(e)):
                return ESome(embed(e))
            case InR(_):
                return ENone()
    parts = plus_parts(t)
    if parts is not None:
        return Plus(embed(parts[0]), embed(parts[1]))
    ap = array_payload(t)
    if ap is not None:
        match ap:
            case InL(InR(_)):
                return Nil()
            case InL(InL(Pair(Slot(a), Pair(Slot(i), Slot(e))))):
                return Ins(embed(a), embed(i), embed(e))
            case InR(Pair(Slot(a), Slot(i))):
                return Lookup(embed(a), embed(i))
    raise ShapeError(f"not a term of the composed language: {t!r}")


def project(m: MonoExpr) -> Term:
    """Inverse of embed."""
    match m:
        case Atom(n):
            return enat(n)
        case ESome(e):
            return some(project(e))
        case ENone():
            return none()
        case Nil():
            return nil()
        case Lookup(a, i):
            return index(project(a), project(i))
        case Ins(a, i, e):
            return assign(project(a), project(i), project(e))
        case Plus(e1, e2):
            return plus(project(e1), project(e2))
    raise ShapeError(f"not a monolithic expression: {m!r}")


def mono_infer(m: MonoExpr) -> Optional[LangType]:
    match m:
        case Atom(_):
            return LangType.NAT
        case ESome(_) | ENone():
            # Option contents are unconstrained, matching the modular rule.
            return LangType.OPTION
        case Nil():
            return LangType.ARRAY
        case Plus(e1, e2):
            if mono_infer(e1) is LangType.NAT and mono_infer(e2) is LangType.NAT:
                return LangType.NAT
            return None
        case Ins(a, i, e):
            if (
                mono_infer(a) is LangType.ARRAY
                and mono_infer(i) is LangType.NAT
                and mono_infer(e) is LangType.NAT
            ):
                return LangType.ARRAY
            return None
        case Lookup(a, i):
            if mono_infer(a) is LangType.ARRAY and mono_infer(i) is LangType.NAT:
                return LangType.OPTION
            return None
    return None


def _chain_lookup(a: MonoExpr, n: int) -> MonoExpr:
    # Mirrors array_lookup: outermost write wins, fail closed to ENone.
    while True:
        match a:
            case Nil():
                return ENone()
            case Ins(rest, Atom(stored), e):
                if stored == n:
                    return ESome(e)
                a = rest
            case _:
                return ENone()


def mono_step(m: MonoExpr) -> Optional[MonoExpr]:
    """One deterministic step mirroring the modular driver's strategy."""
    match m:
        case Plus(Atom(n1), Atom(n2)):
            return Atom(n1 + n2)
        case Plus(Atom(n1), e2):
            stepped = mono_step(e2)
            return None if stepped is None else Plus(Atom(n1), stepped)
        case Plus(e1, e2):
            stepped = mono_step(e1)
            return None if stepped is None else Plus(stepped, e2)
        case Lookup(a, Atom(n)):
            if isinstance(a, (Nil, Ins, Lookup)):
                return _chain_lookup(a, n)
            return None
        case Lookup(a, i):
            stepped = mono_step(i)
            return None if stepped is None else Lookup(a, stepped)
    return None
