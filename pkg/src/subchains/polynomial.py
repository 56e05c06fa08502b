"""Dense polynomials in one indeterminate with exact integer coefficients.

Every count in this package is a polynomial in the group's base p, so the
symbolic results are carried as IntPolynomial values. Coefficients are plain
Python ints (unbounded); there is no floating point anywhere. Degrees stay
small (at most n(n-1)/2 for rank n), so the representation is a dense
ascending coefficient tuple and multiplication is schoolbook.
"""

from __future__ import annotations

from collections.abc import Iterable


class IntPolynomial:
    """An integer polynomial stored as ascending coefficients.

    The representation is canonical: trailing zero coefficients are stripped
    and the zero polynomial is the empty tuple. Equality and hashing are
    structural, so two IntPolynomial values compare equal exactly when they
    are the same polynomial. Instances are immutable; all arithmetic returns
    new values, which makes them safe to share across threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        """The single-term polynomial coeff * X^power."""
        if power < 0:
            raise ValueError(f"power must be >= 0, got {power}")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coefficient_strings(self) -> list[str]:
        """Ascending coefficients as decimal strings; ["0"] for zero."""
        if not self.coeffs:
            return ["0"]
        return [str(c) for c in self.coeffs]

    def to_text(self, var: str = "p") -> str:
        """Human form, descending powers: e.g. '2p^3 + 8p^2 + 8p + 8'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if power == 1 else f"{head}{var}^{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    @staticmethod
    def _coerce(value) -> IntPolynomial | None:
        if isinstance(value, IntPolynomial):
            return value
        if isinstance(value, int):
            return IntPolynomial((value,))
        return None

    def __add__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.to_text()


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
