"""Containment paths into sum-structured descriptors and the lifts they induce.

A path is a list of left/right choices selecting one summand of a root
descriptor; the empty path selects the root itself.  Each path induces an
injective lift from payloads of the selected summand into terms over the
root, with a partial inverse that peels the injection spine back off.

Order convention (fixed by the constructors this mirrors): the first step
of a path wraps the payload first, so it becomes the innermost injection,
while the descriptor walk that finds the target reads the steps last to
first.  A path (right, left) therefore targets root.left.right and lifts a
payload p to the node InL(InR(p)).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .functor import (
    FunctorDesc,
    InL,
    InR,
    Payload,
    ShapeError,
    Sum,
    Term,
    validate_payload,
)


class MalformedPathError(Exception):
    """A path step met a descriptor that is not a sum."""


class Direction(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class ContainsPath:
    """A proof sketch that one descriptor is a (nested) summand of another."""

    steps: tuple[Direction, ...]
    root: FunctorDesc


@dataclass(frozen=True)
class Injection:
    """A path packaged as an arrow from summand payloads into root terms."""

    path: ContainsPath


@dataclass(frozen=True)
class LazyCoercion:
    """A delayed lift: the injection and its argument kept apart.

    Keeping the payload uncoerced is what lets validators pattern-match on
    the fragment value instead of re-parsing an injection spine.
    """

    injection: Injection
    payload: Payload


def path_target(path: ContainsPath) -> FunctorDesc:
    """The sub-descriptor a path selects; raises on a step into a non-sum."""
    desc = path.root
    for step in reversed(path.steps):
        if not isinstance(desc, Sum):
            raise MalformedPathError(
                f"path step {step.value} reaches non-sum descriptor {desc!r}"
            )
        desc = desc.left if step is Direction.LEFT else desc.right
    return desc


def upcast(path: ContainsPath, p: Payload) -> Term:
    """Lift a payload of the path's target into a term over the root."""
    if not validate_payload(path_target(path), p):
        raise ShapeError(
            f"payload {p!r} does not inhabit the target of path {path.steps!r}"
        )
    node = p
    for step in path.steps:
        node = InL(node) if step is Direction.LEFT else InR(node)
    return Term(node)


def downcast(path: ContainsPath, t: Term) -> Optional[Payload]:
    """Partial inverse of upcast: recover the payload, or None.

    Returns the unique p with upcast(path, p) == t when t's node carries
    exactly the injection spine the path dictates.
    """
    node = t.node
    # The outermost injection corresponds to the last path step.
    for step in reversed(path.steps):
        if step is Direction.LEFT and isinstance(node, InL):
            node = node.payload
        elif step is Direction.RIGHT and isinstance(node, InR):
            node = node.payload
        else:
            return None
    if not validate_payload(path_target(path), node):
        return None
    return node


def apply(injection: Injection, p: Payload) -> Term:
    """Run an injection arrow on a payload."""
    return upcast(injection.path, p)


def coerce(lazy: LazyCoercion) -> Term:
    """Force a delayed lift."""
    return apply(lazy.injection, lazy.payload)
