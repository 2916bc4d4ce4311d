"""
Expression tree over the single variable x

Nodes are immutable; evaluation reports domain problems as DomainError
carrying the rendered sub-expression that failed.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict

from ...core.errors import DomainError


class BinaryOp(str, Enum):
    """Binary operators, valued by their infix symbol"""
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    POW = "^"


class FunctionName(str, Enum):
    """Supported one-argument functions"""
    SQRT = "sqrt"
    EXP = "exp"
    LN = "ln"
    SIN = "sin"
    COS = "cos"
    ABS = "abs"


# Binding strength used when rendering; atoms bind tightest
PRECEDENCE: Dict[str, int] = {
    "+": 1,
    "-": 1,
    "*": 2,
    "/": 2,
    "neg": 3,
    "^": 4,
    "atom": 5,
}


class Expr:
    """Base class for expression nodes"""

    def evaluate(self, x: float) -> float:
        raise NotImplementedError

    def contains_variable(self) -> bool:
        raise NotImplementedError

    @property
    def precedence(self) -> int:
        return PRECEDENCE["atom"]

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Constant(Expr):
    value: float

    def evaluate(self, x: float) -> float:
        return float(self.value)

    def contains_variable(self) -> bool:
        return False

    @property
    def precedence(self) -> int:
        return PRECEDENCE["neg"] if self.value < 0 or _is_negative_zero(self.value) else PRECEDENCE["atom"]

    def render(self) -> str:
        return format_number(self.value)


@dataclass(frozen=True)
class Variable(Expr):
    def evaluate(self, x: float) -> float:
        return float(x)

    def contains_variable(self) -> bool:
        return True

    def render(self) -> str:
        return "x"


@dataclass(frozen=True)
class Negate(Expr):
    child: Expr

    def evaluate(self, x: float) -> float:
        return -self.child.evaluate(x)

    def contains_variable(self) -> bool:
        return self.child.contains_variable()

    @property
    def precedence(self) -> int:
        return PRECEDENCE["neg"]

    def render(self) -> str:
        inner = self.child.render()
        if self.child.precedence < PRECEDENCE["neg"]:
            inner = f"({inner})"
        return f"-{inner}"


@dataclass(frozen=True)
class Binary(Expr):
    op: BinaryOp
    left: Expr
    right: Expr

    def evaluate(self, x: float) -> float:
        a = self.left.evaluate(x)
        b = self.right.evaluate(x)
        try:
            if self.op == BinaryOp.ADD:
                return a + b
            if self.op == BinaryOp.SUB:
                return a - b
            if self.op == BinaryOp.MUL:
                return a * b
            if self.op == BinaryOp.DIV:
                if b == 0:
                    raise DomainError("division by zero", self.render(), x)
                return a / b
            return _power(a, b, self, x)
        except OverflowError:
            raise DomainError("overflow", self.render(), x) from None

    def contains_variable(self) -> bool:
        return self.left.contains_variable() or self.right.contains_variable()

    @property
    def precedence(self) -> int:
        return PRECEDENCE[self.op.value]

    def render(self) -> str:
        left = self.left.render()
        right = self.right.render()
        if self.op == BinaryOp.POW:
            # right-associative; the exponent may carry a unary minus
            if self.left.precedence <= PRECEDENCE["^"]:
                left = f"({left})"
            if self.right.precedence < PRECEDENCE["neg"]:
                right = f"({right})"
            return f"{left}^{right}"
        if self.left.precedence < self.precedence:
            left = f"({left})"
        # keep the tree shape exactly: floating point addition is not associative
        if self.right.precedence <= self.precedence:
            right = f"({right})"
        if self.op in (BinaryOp.ADD, BinaryOp.SUB):
            return f"{left} {self.op.value} {right}"
        return f"{left}{self.op.value}{right}"


@dataclass(frozen=True)
class Call(Expr):
    fn: FunctionName
    arg: Expr

    def evaluate(self, x: float) -> float:
        u = self.arg.evaluate(x)
        if self.fn == FunctionName.SQRT and u < 0:
            raise DomainError("square root of a negative number", self.render(), x)
        if self.fn == FunctionName.LN and u <= 0:
            raise DomainError("logarithm of a non-positive number", self.render(), x)
        try:
            return _FUNCTIONS[self.fn](u)
        except OverflowError:
            raise DomainError("overflow", self.render(), x) from None
        except ValueError as e:
            raise DomainError(str(e), self.render(), x) from None

    def contains_variable(self) -> bool:
        return self.arg.contains_variable()

    def render(self) -> str:
        return f"{self.fn.value}({self.arg.render()})"


_FUNCTIONS: Dict[FunctionName, Callable[[float], float]] = {
    FunctionName.SQRT: math.sqrt,
    FunctionName.EXP: math.exp,
    FunctionName.LN: math.log,
    FunctionName.SIN: math.sin,
    FunctionName.COS: math.cos,
    FunctionName.ABS: abs,
}


def _power(a: float, b: float, node: Expr, x: float) -> float:
    if a == 0 and b < 0:
        raise DomainError("zero raised to a negative power", node.render(), x)
    if a < 0 and not float(b).is_integer():
        raise DomainError("negative base with a non-integer exponent", node.render(), x)
    if float(b).is_integer() and abs(b) <= 64:
        # integer exponents stay exact for small powers
        return float(a) ** int(b)
    return math.pow(a, b)


def _is_negative_zero(value: float) -> bool:
    return value == 0 and math.copysign(1.0, value) < 0


def format_number(value: float) -> str:
    """Shortest text that reads back as exactly the same float"""
    value = float(value)
    if math.isfinite(value) and value.is_integer() and abs(value) < 1e16:
        text = str(int(value))
        return "-0" if _is_negative_zero(value) else text
    return repr(value)


def evaluate(e: Expr, x: float) -> float:
    """Value of e at x; raises DomainError outside the domain"""
    value = e.evaluate(x)
    if math.isnan(value):
        raise DomainError("undefined result", e.render(), x)
    return value


def render(e: Expr) -> str:
    """Infix text for e that parse() reads back to an equivalent tree"""
    return e.render()
