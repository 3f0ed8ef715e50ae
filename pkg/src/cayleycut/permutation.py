"""Permutations of 1..n in one-line notation, with ranking and parity.

A permutation is a plain tuple: position i (1-based) holds the symbol
``p[i - 1]``.  Generators act on positions, so applying the transposition
(a, b) exchanges whatever symbols currently sit at positions a and b.
Ranking uses the lexicographic factorial-number-system (Lehmer) code,
giving every permutation of order n a dense index in ``0 .. n! - 1``.

Text form: symbols run together for n <= 9 (``"1324"``), comma-separated
for n >= 10 (``"1,3,2,10"``).  All values are immutable tuples and safe to
share between workers.
"""

from __future__ import annotations

from math import factorial

__all__ = [
    "identity",
    "is_permutation",
    "apply_transposition",
    "rank",
    "unrank",
    "parity",
    "parse_permutation",
    "format_permutation",
]


def identity(n: int) -> tuple[int, ...]:
    """The identity arrangement (1, 2, ..., n)."""
    if n < 2:
        raise ValueError(f"order must be at least 2, got {n}")
    return tuple(range(1, n + 1))


def is_permutation(entries) -> bool:
    """True if entries is an arrangement of the symbols 1..n with n >= 2."""
    n = len(entries)
    return n >= 2 and sorted(entries) == list(range(1, n + 1))


def _check(p) -> None:
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..n: {p!r}")


def apply_transposition(p, a: int, b: int) -> tuple[int, ...]:
    """Swap the symbols at positions a and b (1-based).

    Applying the same (a, b) twice returns the original tuple; the input
    is never modified.  Raises ValueError for a == b or positions outside
    1..n (an invalid generator).
    """
    n = len(p)
    if a == b or not (1 <= a <= n) or not (1 <= b <= n):
        raise ValueError(f"invalid generator positions ({a}, {b}) for order {n}")
    q = list(p)
    q[a - 1], q[b - 1] = q[b - 1], q[a - 1]
    return tuple(q)


def rank(p) -> int:
    """Lexicographic rank of p among all permutations of its order.

    The identity has rank 0 and the reversed arrangement has rank n! - 1;
    sorting permutations lexicographically sorts their ranks numerically.
    """
    _check(p)
    n = len(p)
    r = 0
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                smaller += 1
        r += smaller * factorial(n - 1 - i)
    return r


def unrank(index: int, n: int) -> tuple[int, ...]:
    """The permutation of order n with the given lexicographic rank."""
    if n < 2:
        raise ValueError(f"order must be at least 2, got {n}")
    if not (0 <= index < factorial(n)):
        raise IndexError(f"rank {index} out of range for order {n}")
    symbols = list(range(1, n + 1))
    out = []
    r = index
    for i in range(n - 1, -1, -1):
        d, r = divmod(r, factorial(i))
        out.append(symbols.pop(d))
    return tuple(out)


def parity(p) -> int:
    """0 if p is even, 1 if odd; any position swap flips the value."""
    _check(p)
    seen = [False] * len(p)
    flips = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        flips += length - 1
    return flips & 1


def format_permutation(p) -> str:
    """Render as concatenated symbols for n <= 9, comma-separated above."""
    _check(p)
    if len(p) <= 9:
        return "".join(str(s) for s in p)
    return ",".join(str(s) for s in p)


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse both text forms; accepts commas even for small n."""
    body = text.strip()
    if "," in body:
        try:
            entries = tuple(int(part) for part in body.split(","))
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
    else:
        if not body.isdigit():
            raise ValueError(f"cannot parse permutation from {text!r}")
        entries = tuple(int(ch) for ch in body)
    if not is_permutation(entries):
        raise ValueError(f"not a permutation of 1..n: {text!r}")
    return entries
