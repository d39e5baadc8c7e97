"""Digit changes and the ends of maximal constant runs."""

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.words.word import FiniteWord


def nbdc(word: FiniteWord, n: int) -> int:
    """Number of ``1 <= k <= n`` with ``a_k != a_{k+1}``.

    Raises:
        InputError: If ``n`` is negative or the word has fewer than ``n + 1`` symbols.
    """
    if n < 0:
        raise InputError("n must be non-negative")
    if len(word) < n + 1:
        raise InputError(f"nbdc({n}) needs {n + 1} digits, word has {len(word)}")
    s = word.symbols
    return sum(1 for k in range(n) if s[k] != s[k + 1])


def nbdc_profile(word: FiniteWord) -> list[int]:
    """``[nbdc(0), nbdc(1), ..., nbdc(len(word) - 1)]`` in one pass."""
    if len(word) < 1:
        raise InputError("the word is empty")
    s = word.symbols
    values = [0]
    for k in range(len(s) - 1):
        values.append(values[-1] + (s[k] != s[k + 1]))
    return values


def run_boundaries(word: FiniteWord) -> list[int]:
    """1-based positions ``n_j`` with ``a_{n_j} != a_{n_j + 1}``.

    The last run of the word is not known to end, so it contributes nothing.

    Raises:
        InputError: If the word has fewer than two symbols.
    """
    if len(word) < 2:
        raise InputError("run boundaries need at least two digits")
    s = word.symbols
    return [k + 1 for k in range(len(s) - 1) if s[k] != s[k + 1]]
