"""Suffix automaton of a finite word.

Each state stands for the set of factors sharing one end-position set; the
factor lengths of a state form the interval ``(link.length, length]``. The
construction is the classical online one and runs in time linear in the
word length for a fixed alphabet.
"""

from dataclasses import dataclass, field, replace
from typing import Optional

from digit_complexity_lab.words.word import FiniteWord


@dataclass(eq=False)
class Node:
    id: int
    length: int = 0
    link: Optional["Node"] = None
    transitions: dict[int, "Node"] = field(default_factory=dict)
    # 0-based index of the last symbol of the first occurrence.
    first_end: int = -1
    last_end: int = -1
    is_clone: bool = False


class SuffixAutomaton:
    """Suffix automaton with first and last occurrence end positions."""

    def __init__(self, word: FiniteWord) -> None:
        self.word = word
        self.root = Node(id=0)
        self.nodes: list[Node] = [self.root]
        self._build()
        self._propagate_last_ends()

    def _build(self) -> None:
        current = self.root
        for position, symbol in enumerate(self.word.symbols):
            last = current
            current = Node(
                id=len(self.nodes),
                length=last.length + 1,
                first_end=position,
                last_end=position,
            )
            self.nodes.append(current)

            p: Optional[Node] = last
            while p is not None and symbol not in p.transitions:
                p.transitions[symbol] = current
                p = p.link

            if p is None:
                current.link = self.root
                continue

            q = p.transitions[symbol]
            if q.length == p.length + 1:
                current.link = q
                continue

            # replace() copies shallowly, so the transitions need their own dict.
            clone = replace(
                q,
                id=len(self.nodes),
                length=p.length + 1,
                transitions=q.transitions.copy(),
                is_clone=True,
            )
            self.nodes.append(clone)
            current.link = clone
            q.link = clone

            while p is not None and p.transitions.get(symbol) is q:
                p.transitions[symbol] = clone
                p = p.link

    def _propagate_last_ends(self) -> None:
        # End-position sets of a state include those of its link-tree children.
        for node in sorted(self.nodes[1:], key=lambda n: n.length, reverse=True):
            if node.link is not None and node.last_end > node.link.last_end:
                node.link.last_end = node.last_end

    def __len__(self) -> int:
        return len(self.nodes)

    def contains(self, factor: bytes) -> bool:
        """Whether ``factor`` occurs in the word."""
        node = self.root
        for symbol in factor:
            nxt = node.transitions.get(symbol)
            if nxt is None:
                return False
            node = nxt
        return True

    def length_intervals(self) -> list[tuple[int, int]]:
        """The factor-length interval ``(link.length, length]`` of every state."""
        return [
            (node.link.length, node.length)
            for node in self.nodes[1:]
            if node.link is not None
        ]

    def distinct_factor_counts(self, n_max: int) -> list[int]:
        """Counts of distinct factors of lengths ``1..n_max`` (index 0 unused).

        A state contributes one factor to each length in its interval, so the
        counts come from a difference array over the intervals.
        """
        diff = [0] * (n_max + 2)
        for low, high in self.length_intervals():
            start = low + 1
            if start > n_max:
                continue
            diff[start] += 1
            diff[min(high, n_max) + 1] -= 1
        counts = [0] * (n_max + 1)
        running = 0
        for n in range(1, n_max + 1):
            running += diff[n]
            counts[n] = running
        return counts
