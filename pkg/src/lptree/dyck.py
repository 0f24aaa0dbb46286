"""Dyck paths as strings over {U, D}."""

from __future__ import annotations

from .errors import InvalidPath
from .family import Family

__all__ = ["DyckPath", "last_descent_length", "peaks"]


class DyckPath(str):
    """A Dyck path of semilength n: ``U`` is an ascent, ``D`` a descent."""

    __slots__ = ()
    family = Family.DYCK

    def __new__(cls, steps) -> DyckPath:
        if not isinstance(steps, str):
            steps = "".join("U" if s in ("U", 1, True) else "D" for s in steps)
        if not steps:
            raise InvalidPath("empty path")
        height = 0
        for col, s in enumerate(steps):
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise InvalidPath(f"bad step {s!r} at {col}")
            if height < 0:
                raise InvalidPath(f"path dips below zero at step {col}")
        if height:
            raise InvalidPath("path does not return to zero")
        return str.__new__(cls, steps)

    @classmethod
    def _trusted(cls, steps: str) -> DyckPath:
        return str.__new__(cls, steps)

    @property
    def n(self) -> int:
        return len(self) // 2

    @property
    def level(self) -> int:
        return len(self) // 2

    def heights(self) -> list[int]:
        """Heights of the 2n+1 lattice points."""
        out = [0]
        for s in self:
            out.append(out[-1] + (1 if s == "U" else -1))
        return out

    def __repr__(self) -> str:
        return f"DyckPath({str.__str__(self)!r})"


def last_descent_length(d: DyckPath) -> int:
    return len(d) - len(d.rstrip("D"))


def peaks(d: DyckPath) -> int:
    return d.count("UD")
