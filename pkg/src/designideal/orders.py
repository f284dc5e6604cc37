"""Term orderings on exponent vectors.

An order object turns an exponent tuple into a sortable key; larger key means
larger monomial. Two public kinds are supported (lexicographic and graded
reverse lexicographic), plus an internal block order used for elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch

GREATER, EQUAL, LESS = 1, 0, -1


def _permutation(variables, precedence):
    if precedence is None:
        return tuple(range(len(variables)))
    if sorted(precedence) != sorted(variables):
        raise ValueError("precedence must permute the variable list")
    return tuple(variables.index(name) for name in precedence)


def _lex_key(expo, perm):
    return tuple(expo[i] for i in perm)


def _degrevlex_key(expo, perm):
    return (sum(expo), tuple(-expo[i] for i in reversed(perm)))


@dataclass(frozen=True)
class TermOrder:
    """A term ordering: ``lex`` or ``degrevlex`` with a variable precedence.

    The default precedence ranks variables in their declared order (first
    variable largest)."""

    kind: str = "degrevlex"
    precedence: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown order kind: {self.kind!r}")
        if self.precedence is not None:
            object.__setattr__(self, "precedence", tuple(self.precedence))

    def key_function(self, variables):
        """Key callable for exponent tuples over the given variable list."""
        perm = _permutation(tuple(variables), self.precedence)
        if self.kind == "lex":
            return lambda expo: _lex_key(expo, perm)
        return lambda expo: _degrevlex_key(expo, perm)

    def compare(self, alpha, beta, variables=None) -> int:
        """Three-way comparison of two exponent tuples."""
        if len(alpha) != len(beta):
            raise DimensionMismatch(
                f"exponent lengths differ: {len(alpha)} vs {len(beta)}"
            )
        if variables is None:
            variables = tuple(f"x{i + 1}" for i in range(len(alpha)))
        key = self.key_function(variables)
        ka, kb = key(alpha), key(beta)
        if ka > kb:
            return GREATER
        if ka < kb:
            return LESS
        return EQUAL


@dataclass(frozen=True)
class BlockOrder:
    """Elimination order: variables in earlier blocks dominate later ones,
    graded reverse lexicographic inside each block. Variables not named in
    any block form a final implicit block."""

    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(tuple(block) for block in self.blocks)
        )

    def key_function(self, variables):
        variables = tuple(variables)
        named = [name for block in self.blocks for name in block]
        rest = tuple(v for v in variables if v not in named)
        groups = [tuple(variables.index(n) for n in block if n in variables)
                  for block in self.blocks]
        groups.append(tuple(variables.index(n) for n in rest))

        def key(expo):
            return tuple(
                (sum(expo[i] for i in grp),
                 tuple(-expo[i] for i in reversed(grp)))
                for grp in groups
            )

        return key


DEFAULT_ORDER = TermOrder("degrevlex")


def order_from_name(name: str) -> TermOrder:
    return TermOrder(name)
