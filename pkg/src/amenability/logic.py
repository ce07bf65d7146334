"""Three-valued (Kleene) connectives; ``None`` means "conditional"."""

from __future__ import annotations

from typing import Optional

Tri = Optional[bool]


def not3(x: Tri) -> Tri:
    return None if x is None else not x


def and3(*xs: Tri) -> Tri:
    if any(x is False for x in xs):
        return False
    if any(x is None for x in xs):
        return None
    return True


def or3(*xs: Tri) -> Tri:
    if any(x is True for x in xs):
        return True
    if any(x is None for x in xs):
        return None
    return False


def implies3(p: Tri, q: Tri) -> Tri:
    return or3(not3(p), q)


def iff3(p: Tri, q: Tri) -> Tri:
    if p is None or q is None:
        return None
    return p == q


def all_equal3(*xs: Tri) -> Tri:
    if any(x is None for x in xs):
        return None
    return len(set(xs)) <= 1


def verdict_str(x: Tri) -> str:
    return "conditional" if x is None else ("true" if x else "false")
