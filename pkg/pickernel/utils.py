from __future__ import annotations

import itertools
import typing
from concurrent.futures import ThreadPoolExecutor

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator


def edge(u: int, v: int) -> tuple[int, int]:
    """Return the unordered pair {u, v} as a sorted tuple."""
    return (u, v) if u < v else (v, u)


def sorted_edges(edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Normalize and sort a collection of unordered pairs, dropping duplicates."""
    return sorted({edge(u, v) for u, v in edges})


def pairs(items: Iterable[int]) -> Iterator[tuple[int, int]]:
    """All unordered pairs of the sorted items, in lexicographic order."""
    return itertools.combinations(sorted(items), 2)


def pool_map[T, R](fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """
    Map fn over items, possibly with a pool of worker threads.

    The result is always in the order of items, so the merge is deterministic
    whatever the number of workers. Only use it with read-only functions.

    Args:
        fn: The function to apply.
        items: The inputs.
        jobs: Number of workers. With 1 (the default) no pool is created.
    """

    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


__all__ = [
    "edge",
    "sorted_edges",
    "pairs",
    "pool_map",
]

# This just helps me to remember to add new utilities to __all__
IGNORE = [ThreadPoolExecutor, annotations]
for name, f in list(globals().items()):
    if name not in __all__ and callable(f) and f not in IGNORE and not name.startswith("_"):
        raise RuntimeError(f"{name} is not exported, did you forget to add it to __all__?")
