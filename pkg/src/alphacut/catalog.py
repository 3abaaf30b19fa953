"""Named small lattices used in examples, tests and the CLI (``builtin:<name>``)."""

from .errors import SchemaError
from .lattice import build_lattice, chain


def m5():
    """Two incomparable atoms under a single coatom: semilinear, not prelinear."""
    return build_lattice(
        ["bot", "b", "c", "a", "top"],
        [("bot", "b"), ("bot", "c"), ("b", "a"), ("c", "a"), ("a", "top")],
    )


def n6():
    """Six-element distributive lattice that is not semilinear at (b, a, c)."""
    return build_lattice(
        ["bot", "b", "a", "c", "d", "top"],
        [("bot", "b"), ("bot", "c"), ("b", "a"), ("b", "d"), ("c", "d"), ("a", "top"), ("d", "top")],
    )


def b3():
    """Boolean algebra on three atoms; coatoms d = a|b, e = a|c, f = b|c."""
    return build_lattice(
        ["bot", "a", "c", "b", "d", "e", "f", "top"],
        [
            ("bot", "a"), ("bot", "b"), ("bot", "c"),
            ("a", "d"), ("b", "d"), ("a", "e"), ("c", "e"), ("b", "f"), ("c", "f"),
            ("d", "top"), ("e", "top"), ("f", "top"),
        ],
    )  # fmt: skip


def b2():
    return build_lattice(["bot", "x", "y", "top"], [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")])


def m3():
    """The diamond: three pairwise incomparable atoms, not distributive."""
    atoms = ["x", "y", "z"]
    return build_lattice(["bot", *atoms, "top"], [("bot", t) for t in atoms] + [(t, "top") for t in atoms])


def n5():
    """The pentagon, the other non-distributive five-element lattice."""
    return build_lattice(
        ["bot", "p", "q", "r", "top"],
        [("bot", "p"), ("p", "q"), ("q", "top"), ("bot", "r"), ("r", "top")],
    )


def group_example_lattice():
    """``0 < l3 < {l1, l2} < l4 < 1``, the value lattice of the fuzzy group example."""
    return build_lattice(
        ["0", "l3", "l1", "l2", "l4", "1"],
        [("0", "l3"), ("l3", "l1"), ("l3", "l2"), ("l1", "l4"), ("l2", "l4"), ("l4", "1")],
    )


BUILTINS = {
    "m5": m5,
    "n6": n6,
    "b3": b3,
    "b2": b2,
    "m3": m3,
    "n5": n5,
    "group-example": group_example_lattice,
}


def builtin(name: str):
    """Look up ``name`` (``m5``, ``n6``, ``b3``, ``c<k>`` for a k-chain, ...)."""
    if name in BUILTINS:
        return BUILTINS[name]()
    if name.startswith("c") and name[1:].isdigit() and int(name[1:]) >= 1:
        return chain(int(name[1:]))
    raise SchemaError(f"unknown builtin lattice {name!r}")


GROUP_EXAMPLE_GRADES = {
    ("x1", "x1", "x4"): "l1", ("x1", "x2", "x3"): "l3",
    ("x1", "x3", "x2"): "l3", ("x1", "x4", "x1"): "l1",
    ("x2", "x1", "x3"): "l3", ("x2", "x2", "x4"): "l2",
    ("x2", "x3", "x1"): "l3", ("x2", "x4", "x2"): "l2",
    ("x3", "x1", "x2"): "l3", ("x3", "x2", "x1"): "l3",
    ("x3", "x3", "x4"): "l3", ("x3", "x4", "x3"): "l3",
    ("x4", "x1", "x1"): "l1", ("x4", "x2", "x2"): "l2",
    ("x4", "x3", "x3"): "l3", ("x4", "x4", "x4"): "l4",
}  # fmt: skip


def group_example():
    """
    Five points, ``A(xi) = li`` for i <= 4 and ``A(x5) = 0``, with the graded
    Klein-four table whose identity is ``x4``. Returns ``(carrier, table)``.
    """
    from .fuzzyset import FuzzySet
    from .group import GradedOpTable

    L = group_example_lattice()
    base = ("x1", "x2", "x3", "x4", "x5")
    A = FuzzySet(base, L, ("l1", "l2", "l3", "l4", "0"))
    return A, GradedOpTable(base, L, dict(GROUP_EXAMPLE_GRADES))
