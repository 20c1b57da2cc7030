"""Literal grammar for scalars and polynomials.

Accepts ``+ - * / ^ **``, parentheses, integers, identifiers with trailing primes
and an optional ``@slot`` suffix, the imaginary unit ``I`` and the Unicode minus.
"""

import logging
from typing import Any, Callable

import pyparsing as pp

from .scalars import GrassmannScalar


logger = logging.getLogger(__name__)

UNICODE_MINUS = chr(0x2212)


class LiteralParser:
    """Parser whose identifiers are turned into values by a resolver callback."""

    def __init__(self, resolve: Callable[[str], Any]):
        self._resolve = resolve
        self._grammar = self._build()

    def _build(self) -> pp.ParserElement:
        minus = pp.Literal("-") | pp.Literal(UNICODE_MINUS)
        add_op = pp.Literal("+") | minus
        mul_op = pp.Literal("*") | pp.Literal("/")
        power_op = pp.Suppress(pp.Literal("**") | pp.Literal("^"))

        integer = pp.Word(pp.nums).set_parse_action(lambda t: [GrassmannScalar.number(int(t[0]))])
        name = pp.Regex(r"[A-Za-z][A-Za-z0-9_]*'*(@[0-9]+)?").set_parse_action(
            lambda t: [self._lookup(t[0])]
        )
        exponent = pp.Regex(r"[-" + UNICODE_MINUS + r"]?[0-9]+")

        expr = pp.Forward()
        atom = integer | name | (pp.Suppress("(") + expr + pp.Suppress(")"))
        factor = (atom + pp.Opt(power_op + exponent)).set_parse_action(self._power)
        term = (factor + pp.ZeroOrMore(mul_op + factor)).set_parse_action(self._product)
        expr <<= (pp.Opt(add_op) + term + pp.ZeroOrMore(add_op + term)).set_parse_action(self._sum)
        return expr

    def _lookup(self, name: str):
        try:
            return self._resolve(name)
        except KeyError as e:
            raise pp.ParseFatalException(f"Unknown symbol '{name}'") from e

    @staticmethod
    def _power(tokens):
        base = tokens[0]
        if len(tokens) == 1:
            return [base]
        exponent = int(tokens[1].replace(UNICODE_MINUS, "-"))
        return [base ** exponent]

    @staticmethod
    def _product(tokens):
        value = tokens[0]
        for i in range(1, len(tokens), 2):
            op, operand = tokens[i], tokens[i + 1]
            value = value * operand if op == "*" else value / operand
        return [value]

    @staticmethod
    def _sum(tokens):
        items = list(tokens)
        sign = 1
        if isinstance(items[0], str):
            sign = -1 if items[0] != "+" else 1
            items = items[1:]
        value = items[0] if sign > 0 else -items[0]
        for i in range(1, len(items), 2):
            op, operand = items[i], items[i + 1]
            value = value + operand if op == "+" else value - operand
        return [value]

    def parse(self, text: str):
        """Parse a literal into a value.

        Args:
            text: Literal to parse

        Returns:
            The resolved value

        Raises:
            ValueError: If the text is not a valid literal
        """
        try:
            return self._grammar.parse_string(text, parse_all=True)[0]
        except (pp.ParseException, pp.ParseFatalException) as e:
            raise ValueError(f"Cannot parse '{text}': {e}") from e


def _scalar_symbol(name: str) -> GrassmannScalar:
    return GrassmannScalar.symbol(name)


_SCALAR_PARSER = LiteralParser(_scalar_symbol)


def parse_scalar(text: str) -> GrassmannScalar:
    """Parse a coefficient literal such as ``(h + q*hconj)/(q - 1)``."""
    value = _SCALAR_PARSER.parse(text)
    return GrassmannScalar.coerce(value)
