from enum import Enum


class Family(str, Enum):
    """The three Catalan families grown by the generating tree."""

    LP = "lp"
    DYCK = "dyck"
    PERM = "perm"

    def __str__(self) -> str:
        return self.value
