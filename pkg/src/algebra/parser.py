"""
Expression Parser Module
Reads Laurent polynomials written as x1^2*x2^-1 - 3/4*x3 + 1
"""

from fractions import Fraction
from typing import List, Optional, Tuple

from .laurent import LaurentError, LaurentPolynomial


class ParseError(LaurentError):
    """Malformed expression; position is the 0-based offset in the raw text"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position


class _Reader:
    """Character cursor that skips whitespace between tokens"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char: str) -> None:
        if not self.take(char):
            self.fail(f"expected '{char}'")

    def fail(self, message: str):
        self.skip()
        found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
        raise ParseError(f"syntax error: {message}, found '{found}'", self.pos)

    def digits(self) -> Tuple[int, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected digits")
        return int(self.text[start:self.pos]), start

    def signed_int(self) -> int:
        negative = self.take('-')
        value, _ = self.digits()
        return -value if negative else value


def parse_laurent(text: str, n: int) -> LaurentPolynomial:
    """
    Parse an expression into a Laurent polynomial in n variables

    Grammar (whitespace ignored):
        poly   := ['-'] term (('+'|'-') term)*
        term   := coeff ('*' factor)* | factor ('*' factor)*
        factor := 'x' INDEX ('^' SIGNED_INT)?
        coeff  := SIGNED_INT ('/' POSITIVE_INT)?

    Args:
        text: Expression
        n: Ambient variable count

    Returns:
        Polynomial with like terms combined

    Raises:
        ParseError: syntax error, variable index out of range or zero denominator
    """
    if n < 1:
        raise LaurentError(f"variable count must be positive, got {n}")
    reader = _Reader(text)
    terms: List[Tuple[Tuple[int, ...], Fraction]] = []

    sign = -1 if reader.take('-') else 1
    terms.append(_parse_term(reader, n, sign))
    while True:
        char = reader.peek()
        if char is None:
            break
        if char not in '+-':
            reader.fail("expected '+' or '-'")
        reader.pos += 1
        terms.append(_parse_term(reader, n, 1 if char == '+' else -1))

    return LaurentPolynomial.from_terms(n, terms)


def _parse_term(reader: _Reader, n: int, sign: int) -> Tuple[Tuple[int, ...], Fraction]:
    exponent = [0] * n
    coeff = Fraction(sign)
    char = reader.peek()
    if char is not None and (char.isdigit() or char == '-'):
        coeff *= _parse_coeff(reader)
        if not reader.take('*'):
            return tuple(exponent), coeff
    elif char != 'x':
        reader.fail("expected a coefficient or a variable")
    _parse_factor(reader, n, exponent)
    while reader.take('*'):
        _parse_factor(reader, n, exponent)
    return tuple(exponent), coeff


def _parse_coeff(reader: _Reader) -> Fraction:
    numerator = reader.signed_int()
    if reader.take('/'):
        denominator, start = reader.digits()
        if denominator == 0:
            raise ParseError("zero denominator", start)
        return Fraction(numerator, denominator)
    return Fraction(numerator)


def _parse_factor(reader: _Reader, n: int, exponent: List[int]) -> None:
    if reader.peek() != 'x':
        reader.fail("expected a variable")
    reader.pos += 1
    index, start = reader.digits()
    if not 1 <= index <= n:
        raise ParseError(f"variable index {index} out of range 1..{n}", start)
    power = reader.signed_int() if reader.take('^') else 1
    exponent[index - 1] += power
