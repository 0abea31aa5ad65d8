from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph, make_edge


@dataclass(frozen=True)
class Walk:
    """A walk v0 e0 v1 ... vk; in a simple graph the vertices determine the edges."""

    vertices: tuple[str, ...]

    @classmethod
    def of(cls, *vertices) -> "Walk":
        return cls(tuple(str(v) for v in vertices))

    def __len__(self):
        return max(len(self.vertices) - 1, 0)

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(make_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

    def is_closed(self) -> bool:
        return self.start == self.end

    def is_walk_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

    def inverse(self) -> "Walk":
        return Walk(self.vertices[::-1])

    def concat(self, other: "Walk") -> "Walk":
        if self.end != other.start:
            raise ValueError("walks do not meet")
        return Walk(self.vertices + other.vertices[1:])

    def reduced(self) -> "Walk":
        """Cancel every backtrack u e v e u; the result is independent of cancellation order."""
        stack: list[str] = []
        for v in self.vertices:
            if len(stack) >= 2 and stack[-2] == v:
                stack.pop()
            else:
                stack.append(v)
        return Walk(tuple(stack))

    def is_reduced(self) -> bool:
        return all(a != c for a, c in zip(self.vertices, self.vertices[2:]))

    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)
