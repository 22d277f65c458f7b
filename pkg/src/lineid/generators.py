"""Generators for the digraph families used throughout the package.

Kautz digraphs carry their words as vertex labels, in lexicographic order,
so that vertex ids agree with the lexicographic lineage numbering of the
iterated line digraph of the complete symmetric digraph.
"""

from __future__ import annotations

from itertools import product

from .digraph import Digraph, is_strongly_connected
from .errors import PreconditionError
from .line import line_digraph

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

FIXTURES = ("config-a", "config-b", "config-c", "tt3", "rotational-tournament-5")


def complete_symmetric(n: int) -> Digraph:
    if n < 2:
        raise PreconditionError("complete symmetric digraph needs n >= 2")
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise PreconditionError("directed cycle needs n >= 2")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def kautz_words(d: int, k: int) -> list[tuple[int, ...]]:
    """All words of length k over {0..d} with no two equal consecutive letters, sorted."""
    return [w for w in product(range(d + 1), repeat=k) if all(a != b for a, b in zip(w, w[1:]))]


def word_to_label(word) -> str:
    return "".join(ALPHABET[x] for x in word)


def label_to_word(label: str) -> tuple[int, ...]:
    return tuple(ALPHABET.index(c) for c in label)


def kautz(d: int, k: int) -> Digraph:
    """K(d, k): arcs x1..xk -> x2..xk y for every letter y != xk."""
    if d < 1 or k < 1:
        raise PreconditionError("Kautz digraph needs d >= 1 and k >= 1")
    if d >= len(ALPHABET):
        raise PreconditionError(f"Kautz labels support d <= {len(ALPHABET) - 1}")
    words = kautz_words(d, k)
    index = {w: i for i, w in enumerate(words)}
    arcs = []
    for w in words:
        for y in range(d + 1):
            if y != w[-1]:
                arcs.append((index[w], index[w[1:] + (y,)]))
    return Digraph(len(words), arcs, [word_to_label(w) for w in words])


class Lcg:
    """64-bit linear congruential stream (Knuth's MMIX constants).

    ``state <- state * 6364136223846793005 + 1442695040888963407 (mod 2**64)``;
    :meth:`random` returns the top 53 bits of the new state scaled into [0, 1)
    and :meth:`below` is ``floor(random() * n)``. The stream is fully
    specified so instances reproduce bit-exactly in any language.
    """

    MUL = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state * self.MUL + self.INC) & self.MASK
        return self.state

    def random(self) -> float:
        return (self.next() >> 11) / float(1 << 53)

    def below(self, n: int) -> int:
        return int(self.random() * n)

    def shuffle(self, items: list) -> None:
        # Fisher-Yates, from the back
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def random_strongly_connected(
    n: int,
    p: float,
    seed: int = 0,
    min_in: int = 0,
    oriented: bool = False,
    max_attempts: int = 200,
) -> Digraph:
    """Random strongly connected digraph, deterministic in ``seed``.

    Each attempt draws from ``Lcg(seed + attempt)``: shuffle the vertices
    into a Hamiltonian backbone cycle, shuffle the remaining ordered pairs
    (listed lexicographically) and keep each with probability ``p`` (pairs
    whose reverse is present are skipped when ``oriented``), then patch vertices
    whose in-degree is below ``min_in`` with uniformly chosen admissible
    tails, vertices in increasing order. An attempt whose patching gets
    stuck is discarded.
    """
    if n < 3:
        raise PreconditionError("random generator needs n >= 3")
    if not 0 < p <= 1:
        raise PreconditionError("arc probability must lie in (0, 1]")
    limit = (n - 1) // 2 if oriented else n - 1
    if min_in > limit:
        kind = "oriented" if oriented else "simple"
        raise PreconditionError(f"no {kind} digraph on {n} vertices has minimum in-degree {min_in}")
    for attempt in range(max_attempts):
        rng = Lcg(seed + attempt)
        graph = _attempt(n, p, min_in, oriented, rng)
        if graph is not None:
            return graph
    raise PreconditionError(
        f"could not satisfy min_in={min_in}, oriented={oriented} on {n} vertices "
        f"after {max_attempts} attempts"
    )


def _attempt(n, p, min_in, oriented, rng):
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
    # visiting pairs in random order keeps dense oriented draws from being transitive
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in arcs]
    rng.shuffle(pairs)
    for u, v in pairs:
        if oriented and (v, u) in arcs:
            continue
        if rng.random() < p:
            arcs.add((u, v))
    for v in range(n):
        while sum(1 for (_, h) in arcs if h == v) < min_in:
            tails = [
                u for u in range(n)
                if u != v and (u, v) not in arcs and not (oriented and (v, u) in arcs)
            ]
            if not tails:
                return None
            arcs.add((tails[rng.below(len(tails))], v))
    graph = Digraph(n, arcs)
    # the backbone already guarantees this; kept as a cheap guard
    assert is_strongly_connected(graph)
    return graph


def fixture(name: str) -> Digraph:
    """Small named digraphs exhibiting the forbidden configurations and friends.

    ``config-a``, ``config-b`` and ``config-c`` are line digraphs of small
    strongly connected parents in which the vertices of in-degree 1 avoid
    digons, so the line-digraph decision procedure applies to them.
    """
    if name == "config-a":
        # two directed triangles sharing vertex 0; the triangle 01 -> 12 -> 20
        # has two vertices of in-degree 1
        parent = Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        return line_digraph(parent).graph
    if name == "config-b":
        # digon 0 <-> 1; 2 has the single in-neighbor 1
        parent = Digraph(4, [(0, 1), (1, 0), (2, 0), (1, 2), (3, 1), (0, 3)])
        return line_digraph(parent).graph
    if name == "config-c":
        # K(2,2) = L(K3)
        return line_digraph(complete_symmetric(3)).graph
    if name == "tt3":
        return Digraph(3, [(0, 1), (0, 2), (1, 2)])
    if name == "rotational-tournament-5":
        return Digraph(5, [(i, (i + s) % 5) for i in range(5) for s in (1, 2)])
    raise PreconditionError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
