"""Base digit source module."""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.arithmetic.positional import digits_to_int
from digit_complexity_lab.config import DEFAULT_MAX_DIGITS
from digit_complexity_lab.errors import GuardRailError, InputError
from digit_complexity_lab.metrics import get_lab_metrics
from digit_complexity_lab.utils.resources import check_memory_headroom
from digit_complexity_lab.words.word import FiniteWord

logger = structlog.get_logger(__name__)


class DigitStream:
    """Growable, certified prefix of one source's expansion.

    Digits already emitted never change; asking for more recomputes a longer
    prefix from the source and keeps it.
    """

    def __init__(self, source: "BaseDigitSource") -> None:
        self.source = source
        self._digits = b""

    @property
    def base(self) -> int:
        return self.source.base

    def __len__(self) -> int:
        return len(self._digits)

    def ensure(self, count: int) -> None:
        """Make at least ``count`` digits available."""
        if count <= len(self._digits):
            return
        target = min(max(count, 2 * len(self._digits)), self.source.max_digits)
        computed = self.source.compute_digits(target)
        if computed[: len(self._digits)] != self._digits:
            raise InputError(f"{self.source.get_name()} produced an unstable prefix")
        new = len(computed) - len(self._digits)
        self._digits = computed
        get_lab_metrics().digits_certified.labels(source=self.source.get_name()).inc(
            new
        )
        logger.debug("digits_extended", source=self.source.get_name(), count=target)

    def prefix(self, count: int) -> FiniteWord:
        self.ensure(count)
        return FiniteWord(self._digits[:count], self.base)

    def load(self, digits: bytes) -> None:
        """Seed the stream with digits read back from a trusted cache."""
        if len(digits) > len(self._digits):
            self._digits = bytes(digits)


class BaseDigitSource(ABC):
    """Base class for all digit sources.

    A source produces the canonical base-``b`` expansion of one real number in
    ``[0, 1)``: the expansion never ends in an infinite run of ``b - 1``.
    Every digit it emits is certified.
    """

    def __init__(self, base: int, max_digits: int = DEFAULT_MAX_DIGITS) -> None:
        """Initialize the source.

        Args:
            base: Digit base, at least 2.
            max_digits: Guard rail on the number of digits a caller may request.
        """
        if base < 2:
            raise InputError(f"base must be at least 2, got {base}")
        self.base = base
        self.max_digits = max_digits
        self.stream = DigitStream(self)

    @abstractmethod
    def get_name(self) -> str:
        """Short source kind, used as a metrics label."""
        raise NotImplementedError

    @abstractmethod
    def spec_string(self) -> str:
        """Text that identifies the number and base; stored in cache headers."""
        raise NotImplementedError

    @abstractmethod
    def compute_digits(self, count: int) -> bytes:
        """Compute the first ``count`` certified digits from scratch."""
        raise NotImplementedError

    @property
    def is_rational(self) -> bool:
        """Whether the source value is known to be rational."""
        return False

    @property
    def exact_value(self) -> Optional[Fraction]:
        """The value when it is a known rational, else ``None``."""
        return None

    def digits(self, count: int) -> FiniteWord:
        """The first ``count`` digits.

        Raises:
            InputError: If ``count`` is not positive.
            GuardRailError: If ``count`` exceeds the configured maximum.
        """
        if count < 1:
            raise InputError("digit count must be at least 1")
        if count > self.max_digits:
            raise GuardRailError(
                f"{count} digits requested, guard rail is {self.max_digits}"
            )
        check_memory_headroom(2 * count)
        return self.stream.prefix(count)

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Closed interval of width at most ``2^-bits`` containing the value.

        The default reads it off the certified digits: the first ``k`` digits
        ``D`` put the value in ``[D/b^k, (D+1)/b^k]``.
        """
        exact = self.exact_value
        if exact is not None:
            return exact, exact
        k = max(1, -(-bits // (self.base.bit_length() - 1)))
        scale = self.base**k
        prefix = digits_to_int(self.digits(k).symbols, self.base)
        return Fraction(prefix, scale), Fraction(prefix + 1, scale)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec_string()!r})"
