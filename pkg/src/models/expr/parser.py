"""
Recursive-descent parser for single-variable arithmetic expressions

Grammar (lowest to highest binding):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := primary ('^' unary)?
    primary := number | 'x' | name '(' expr ')' | '(' expr ')'

'^' binds tighter than unary minus and is right-associative, so
-x^2 is -(x^2) and 2^3^2 is 2^(3^2).
"""
import logging
import re
from dataclasses import dataclass
from typing import List, Optional

from ...core.errors import ExpressionSyntaxError, UnknownFunctionError, UnknownIdentifierError
from .nodes import Binary, BinaryOp, Call, Constant, Expr, FunctionName, Negate, Variable

logger = logging.getLogger(__name__)

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

_FUNCTION_NAMES = {fn.value: fn for fn in FunctionName}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split expression text into tokens, ending with an 'end' token"""
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"unexpected character {text[position]!r}", position, text)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    """
    Parses one expression string into an Expr tree
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, text: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.text == text:
            return self._advance()
        return None

    def _expect(self, text: str) -> Token:
        token = self._accept(text)
        if token is None:
            raise self._error(f"expected {text!r}")
        return token

    def _error(self, message: str) -> ExpressionSyntaxError:
        found = self.current.text or "end of input"
        return ExpressionSyntaxError(f"{message}, found {found!r}", self.current.position, self.text)

    def parse(self) -> Expr:
        if self.current.kind == "end":
            raise ExpressionSyntaxError("empty expression", 0, self.text)
        tree = self._expr()
        if self.current.kind != "end":
            raise self._error("unexpected token")
        return tree

    def _expr(self) -> Expr:
        node = self._term()
        while True:
            if self._accept("+"):
                node = Binary(BinaryOp.ADD, node, self._term())
            elif self._accept("-"):
                node = Binary(BinaryOp.SUB, node, self._term())
            else:
                return node

    def _term(self) -> Expr:
        node = self._unary()
        while True:
            if self._accept("*"):
                node = Binary(BinaryOp.MUL, node, self._unary())
            elif self._accept("/"):
                node = Binary(BinaryOp.DIV, node, self._unary())
            else:
                return node

    def _unary(self) -> Expr:
        if self._accept("-"):
            return Negate(self._unary())
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> Expr:
        base = self._primary()
        if self._accept("^"):
            return Binary(BinaryOp.POW, base, self._unary())
        return base

    def _primary(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Constant(float(token.text))
        if token.kind == "name":
            self._advance()
            if self.current.kind == "op" and self.current.text == "(":
                fn = _FUNCTION_NAMES.get(token.text)
                if fn is None:
                    raise UnknownFunctionError(f"unknown function {token.text!r}", token.position, self.text)
                self._advance()
                arg = self._expr()
                self._expect(")")
                return Call(fn, arg)
            if token.text == "x":
                return Variable()
            raise UnknownIdentifierError(f"unknown identifier {token.text!r}", token.position, self.text)
        if self._accept("("):
            inner = self._expr()
            self._expect(")")
            return inner
        raise self._error("expected a number, x, a function call or '('")


def parse(text: str) -> Expr:
    """Parse expression text into an Expr tree"""
    if text is None or not text.strip():
        raise ExpressionSyntaxError("empty expression", 0, text or "")
    tree = ExpressionParser(text).parse()
    logger.debug(f"Parsed {text!r} as {tree.render()}")
    return tree
