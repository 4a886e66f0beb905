from ._assocf import (
    BudgetError,
    Element,
    FormatError,
    Magma,
    ParseError,
    Tree,
    closure,
    commutator,
    derivable,
    enumerate_trees,
    member,
    zoo_names,
)

__all__ = [
    "BudgetError",
    "Element",
    "FormatError",
    "Magma",
    "ParseError",
    "Tree",
    "closure",
    "commutator",
    "derivable",
    "enumerate_trees",
    "member",
    "zoo_names",
]
