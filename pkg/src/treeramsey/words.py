"""Reduced words in Z2*Z2*Z2 = <a, b, c | a^2 = b^2 = c^2 = e>.

Elements are plain ``str`` values over the alphabet ``"abc"`` with no two
equal adjacent letters; the identity is the empty string. Every generator is
its own inverse, so the Cayley graph is the 3-regular tree and the word metric
is the tree path length.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

LETTERS = "abc"
IDENTITY = ""
IDENTITY_TEXT = "-"

# ball(radius) materializes 1 + 3 * (2**radius - 1) words
MAX_BALL_RADIUS = 20

Word = str


class WordError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    """A requested object is larger than the configured cap."""


def _check_letters(raw: Iterable[str]) -> list[str]:
    letters = list(raw)
    for ch in letters:
        if ch not in LETTERS:
            raise WordError(f"not a generator: {ch!r}")
    return letters


def reduce(raw: Iterable[str]) -> Word:
    """Cancel adjacent equal letters until none remain."""
    stack: list[str] = []
    for ch in _check_letters(raw):
        if stack and stack[-1] == ch:
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def is_reduced(w: str) -> bool:
    return all(ch in LETTERS for ch in w) and all(x != y for x, y in zip(w, w[1:]))


def multiply(g: Word, h: Word) -> Word:
    # only the junction can cancel when both factors are reduced
    i = 0
    n = min(len(g), len(h))
    while i < n and g[len(g) - 1 - i] == h[i]:
        i += 1
    return g[: len(g) - i] + h[i:]


def inverse(g: Word) -> Word:
    return g[::-1]


def length(g: Word) -> int:
    return len(g)


def distance(g: Word, h: Word) -> int:
    """Word-metric distance ``|g^-1 h|``."""
    return len(multiply(inverse(g), h))


def direction(v: Word, x: Word) -> str:
    """First letter of ``v^-1 x``: which of the three branches at ``v`` holds ``x``."""
    if v == x:
        raise WordError("a vertex has no direction from itself")
    return multiply(inverse(v), x)[0]


def successors(w: Word) -> str:
    """Letters that extend ``w`` without cancellation, in letter order."""
    return "".join(ch for ch in LETTERS if not w or ch != w[-1])


def sphere(radius: int, first: str | None = None) -> Iterator[Word]:
    """Reduced words of exactly ``radius`` letters in lexicographic order.

    ``first`` restricts the leading letter (a branch at the identity).
    """
    if radius < 0:
        return
    if radius == 0:
        if first is None:
            yield IDENTITY
        return
    starts = LETTERS if first is None else first

    def rec(prefix: str, left: int) -> Iterator[Word]:
        if left == 0:
            yield prefix
            return
        for ch in LETTERS:
            if ch != prefix[-1]:
                yield from rec(prefix + ch, left - 1)

    for ch in starts:
        yield from rec(ch, radius - 1)


def ball_size(radius: int) -> int:
    return 1 + 3 * (2**radius - 1)


def ball(radius: int, cap: int = MAX_BALL_RADIUS) -> list[Word]:
    """All words of length <= radius, ordered by (length, letters)."""
    if radius < 0:
        raise WordError("radius must be non-negative")
    if radius > cap:
        raise ResourceLimitError(f"ball radius {radius} exceeds cap {cap}")
    out: list[Word] = []
    for k in range(radius + 1):
        out.extend(sphere(k))
    return out


def parse_word(text: str, *, require_reduced: bool = False) -> Word:
    """Parse the ASCII form; ``"-"`` is the identity. Unreduced input is reduced."""
    text = text.strip()
    if text == IDENTITY_TEXT:
        return IDENTITY
    if not text:
        raise WordError("empty word text; use '-' for the identity")
    w = reduce(text)
    if require_reduced and w != text:
        raise WordError(f"{text!r} is not reduced")
    return w


def format_word(w: Word) -> str:
    return w if w else IDENTITY_TEXT
