"""
Depth first search driven by an explicit stack of nodes.

A node decides in `logic` what happens next: push a child or pop itself.
The machine applies that decision after each call, so the search never
recurses and can be stopped from any node.
"""

from __future__ import annotations

from enum import Enum
from typing import cast


__all__ = ["SearchMachine", "StackOperations", "SearchNode"]


class StackOperations(Enum):
    NOP = 0
    POP = 1
    PUSH = 2


class SearchNode:
    def __init__(self) -> None:
        super().__init__()
        self.next_state: tuple[StackOperations, SearchNode | None] = (StackOperations.NOP, None)

    def on_enter(self):
        """Called once, when the node is pushed."""
        self.next_state = (StackOperations.NOP, None)

    def on_resume(self):
        """Called when the last child was popped and the node is on top again."""
        self.next_state = (StackOperations.NOP, None)

    def on_exit(self):
        """Called when the node is popped or the search stops."""

    def logic(self):
        """Expand the node: push a child, or pop when there is nothing left to try."""

    def pop_state(self):
        self.next_state = (StackOperations.POP, None)

    def push_state(self, child: SearchNode):
        self.next_state = (StackOperations.PUSH, child)


class SearchMachine[S: SearchNode]:
    """Runs a search from its root node and counts the nodes it enters."""

    def __init__(self, root: S):
        self.stack: list[S] = []
        self.explored = 0
        self.execute_state_transition(StackOperations.PUSH, root)

    @property
    def running(self) -> bool:
        return len(self.stack) > 0

    @property
    def state(self) -> S | None:
        """The node on top of the stack."""
        if self.stack:
            return self.stack[-1]
        return None

    def execute_state_transition(self, op: StackOperations, new: S | None):
        match (op, new):
            case (StackOperations.NOP, None):
                pass
            case (StackOperations.POP, None):
                if self.stack:
                    self.stack.pop().on_exit()
                if self.stack:
                    self.stack[-1].on_resume()
            case (StackOperations.PUSH, None):
                raise ValueError("a child node must be given to push")
            case (StackOperations.PUSH, new):
                self.stack.append(new)
                self.explored += 1
                new.on_enter()
            case _:
                raise ValueError(f"cannot apply {op} with {new!r}")

    def go_to_next_state(self):
        assert self.state is not None
        op, new = self.state.next_state
        self.execute_state_transition(op, cast(S | None, new))

    def stop(self):
        """Drop every node, ending the search."""
        while self.stack:
            self.stack.pop().on_exit()

    def run(self):
        while self.running:
            self.state.logic()
            if self.running:
                self.go_to_next_state()
