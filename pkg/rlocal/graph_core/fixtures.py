"""Named graphs used by tests, examples and the ``fixture:NAME`` pseudo-path."""

from __future__ import annotations

from itertools import combinations, product

from .graph import Graph


def complete_edges(vertices):
    return list(combinations(vertices, 2))


def glue_ring(n: int, part: Graph, a: str, b: str) -> Graph:
    """Glue n copies of part in a cycle, identifying b of copy i with a of copy i+1.

    Copy i maps a to a{i}, b to a{i+1 mod n} and every other vertex v to v{i}.
    """
    def name(v, i):
        if v == a:
            return f"a{i}"
        if v == b:
            return f"a{(i + 1) % n}"
        return f"{v}{i}"

    edges = [(name(u, i), name(v, i)) for i in range(n) for u, v in part.edges]
    return Graph.from_edges(edges)


def _p3():
    return Graph.from_edges([("a", "b"), ("b", "c")])


def _bowtie():
    return Graph.from_edges(complete_edges(["v", "a1", "a2"]) + complete_edges(["v", "b1", "b2"]))


def _cycle(n):
    return Graph.from_edges((str(i), str((i + 1) % n)) for i in range(n))


def _k4():
    return Graph.from_edges(complete_edges(["u", "v", "w1", "w2"]))


def _k23():
    return Graph.from_edges((s, t) for s in ("u", "w") for t in ("x", "y", "z"))


def _ring6():
    return glue_ring(6, Graph.from_edges(complete_edges(["a", "b", "p", "q"])), "a", "b")


def _triangle_ring():
    return glue_ring(6, Graph.from_edges(complete_edges(["a", "b", "c"])), "a", "b")


def _two_k5():
    return Graph.from_edges(
        complete_edges(["u", "w", "x1", "x2", "x3"]) + complete_edges(["u", "w", "y1", "y2", "y3"])
    )


def _q3():
    words = ["".join(bits) for bits in product("01", repeat=3)]
    return Graph.from_edges(
        (s, t) for s, t in combinations(words, 2) if sum(x != y for x, y in zip(s, t)) == 1
    )


def _claw():
    return Graph.from_edges([("c", "l1"), ("c", "l2"), ("c", "l3")])


FIXTURES = {
    "P3": _p3,
    "BOWTIE": _bowtie,
    "C6": lambda: _cycle(6),
    "K4": _k4,
    "K23": _k23,
    "RING6": _ring6,
    "TRIANGLE_RING": _triangle_ring,
    "Q3": _q3,
    "CLAW": _claw,
    "TWO_K5": _two_k5,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name.upper()]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
