import pytest

from pickernel.search import SearchMachine, SearchNode, StackOperations


class Counter(SearchNode):
    """Visits a complete binary tree of the given depth."""

    def __init__(self, log: list, depth: int, name: str = ""):
        super().__init__()
        self.log = log
        self.depth = depth
        self.name = name
        self.children = ["0", "1"] if depth else []

    def on_enter(self):
        super().on_enter()
        self.log.append(("enter", self.name))

    def on_exit(self):
        self.log.append(("exit", self.name))

    def logic(self):
        if self.children:
            child = self.children.pop(0)
            self.push_state(Counter(self.log, self.depth - 1, self.name + child))
        else:
            self.pop_state()


def test_depth_first_order():
    log = []
    machine = SearchMachine(Counter(log, 2))
    machine.run()
    entered = [name for what, name in log if what == "enter"]
    assert entered == ["", "0", "00", "01", "1", "10", "11"]
    assert machine.explored == 7
    assert not machine.running
    assert machine.state is None


def test_every_node_exits():
    log = []
    SearchMachine(Counter(log, 3)).run()
    assert sorted(name for what, name in log if what == "enter") == sorted(
        name for what, name in log if what == "exit"
    )


def test_nop_keeps_the_stack():
    machine = SearchMachine(Counter([], 1))
    machine.execute_state_transition(StackOperations.NOP, None)
    assert len(machine.stack) == 1
    assert machine.explored == 1


class Stopper(SearchNode):
    def __init__(self, machine_box: list):
        super().__init__()
        self.machine_box = machine_box

    def logic(self):
        self.machine_box[0].stop()


def test_stop_ends_the_search():
    box = []
    log = []
    machine = SearchMachine(Counter(log, 1))
    box.append(machine)
    machine.execute_state_transition(StackOperations.PUSH, Stopper(box))
    machine.run()
    assert not machine.running
    assert ("exit", "") in log
    assert machine.explored == 2


def test_a_child_is_needed():
    machine = SearchMachine(Counter([], 0))
    with pytest.raises(ValueError):
        machine.execute_state_transition(StackOperations.PUSH, None)
    with pytest.raises(ValueError):
        machine.execute_state_transition(StackOperations.POP, Counter([], 0))
