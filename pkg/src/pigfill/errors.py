"""Exception types shared across the package."""

from __future__ import annotations


class GraphInputError(ValueError):
    """Malformed graph input: bad endpoint, self-loop, broken partition, parse failure."""


class ClassMembershipError(ValueError):
    """The input graph is not in the graph class an algorithm requires.

    ``witness``, when present, is a ``(kind, vertices)`` pair naming an induced
    forbidden subgraph that proves non-membership.
    """

    def __init__(self, required_class: str, witness: tuple[str, tuple[int, ...]] | None = None):
        self.required_class = required_class
        self.witness = witness
        msg = f"graph is not {required_class}"
        if witness is not None:
            msg += f" (induced {witness[0]} on vertices {list(witness[1])})"
        super().__init__(msg)


class OracleBudgetError(RuntimeError):
    """A brute-force oracle refused an input that exceeds its budget."""
