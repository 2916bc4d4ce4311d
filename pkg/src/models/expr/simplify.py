"""
Algebraic clean-up of expression trees

Bottom-up rewrite: constant folding, identity and absorbing elements,
and sign normalisation so derivatives read the way they are written by
hand (42 - 16800/x^2 rather than 42 + (0 - 16800*1)/x^2).

x*0 -> 0 and 0/x -> 0 widen the domain of the input tree; the rewritten
tree agrees with the original wherever the original is defined.
"""
import math

from ...core.errors import DomainError
from .nodes import Binary, BinaryOp, Call, Constant, Expr, Negate, Variable


def _is_constant(e: Expr, value: float) -> bool:
    return isinstance(e, Constant) and e.value == value


def _fold(e: Expr) -> Expr:
    """Replace a variable-free node by its value when that value is defined"""
    try:
        value = e.evaluate(0.0)
    except DomainError:
        return e
    if not math.isfinite(value):
        return e
    return Constant(value)


def _simplify_negate(child: Expr) -> Expr:
    if isinstance(child, Constant):
        return Constant(-child.value)
    if isinstance(child, Negate):
        return child.child
    return Negate(child)


def _simplify_add(left: Expr, right: Expr) -> Expr:
    if _is_constant(left, 0):
        return right
    if _is_constant(right, 0):
        return left
    if isinstance(right, Negate):
        return Binary(BinaryOp.SUB, left, right.child)
    if isinstance(right, Constant) and right.value < 0:
        return Binary(BinaryOp.SUB, left, Constant(-right.value))
    if isinstance(left, Negate):
        return Binary(BinaryOp.SUB, right, left.child)
    return Binary(BinaryOp.ADD, left, right)


def _simplify_sub(left: Expr, right: Expr) -> Expr:
    if _is_constant(right, 0):
        return left
    if _is_constant(left, 0):
        return _simplify_negate(right)
    if isinstance(right, Negate):
        return Binary(BinaryOp.ADD, left, right.child)
    if isinstance(right, Constant) and right.value < 0:
        return Binary(BinaryOp.ADD, left, Constant(-right.value))
    return Binary(BinaryOp.SUB, left, right)


def _simplify_mul(left: Expr, right: Expr) -> Expr:
    if _is_constant(left, 0) or _is_constant(right, 0):
        return Constant(0.0)
    if _is_constant(left, 1):
        return right
    if _is_constant(right, 1):
        return left
    if _is_constant(left, -1):
        return _simplify_negate(right)
    if _is_constant(right, -1):
        return _simplify_negate(left)
    if isinstance(left, Negate):
        return _simplify_negate(_simplify_mul(left.child, right))
    if isinstance(right, Negate):
        return _simplify_negate(_simplify_mul(left, right.child))
    if isinstance(left, Constant) and left.value < 0:
        return Negate(_simplify_mul(Constant(-left.value), right))
    # constants lead: x*2 -> 2*x
    if isinstance(right, Constant) and not isinstance(left, Constant):
        return Binary(BinaryOp.MUL, right, left)
    return Binary(BinaryOp.MUL, left, right)


def _simplify_div(left: Expr, right: Expr) -> Expr:
    if _is_constant(right, 1):
        return left
    if _is_constant(left, 0) and not _is_constant(right, 0):
        return Constant(0.0)
    if isinstance(left, Negate):
        return _simplify_negate(_simplify_div(left.child, right))
    if isinstance(left, Constant) and left.value < 0:
        return Negate(Binary(BinaryOp.DIV, Constant(-left.value), right))
    return Binary(BinaryOp.DIV, left, right)


def _simplify_pow(left: Expr, right: Expr) -> Expr:
    if _is_constant(right, 1):
        return left
    if _is_constant(right, 0):
        # u^0 -> 1, dropping the u = 0 caveat
        return Constant(1.0)
    if _is_constant(left, 1):
        return Constant(1.0)
    return Binary(BinaryOp.POW, left, right)


_BINARY_RULES = {
    BinaryOp.ADD: _simplify_add,
    BinaryOp.SUB: _simplify_sub,
    BinaryOp.MUL: _simplify_mul,
    BinaryOp.DIV: _simplify_div,
    BinaryOp.POW: _simplify_pow,
}


def simplify(e: Expr) -> Expr:
    """Return an equivalent, smaller tree"""
    if isinstance(e, (Constant, Variable)):
        return e
    if isinstance(e, Negate):
        return _simplify_negate(simplify(e.child))
    if isinstance(e, Call):
        node = Call(e.fn, simplify(e.arg))
        return _fold(node) if not node.contains_variable() else node
    if isinstance(e, Binary):
        left = simplify(e.left)
        right = simplify(e.right)
        if isinstance(left, Constant) and isinstance(right, Constant):
            folded = _fold(Binary(e.op, left, right))
            if isinstance(folded, Constant):
                return folded
        return _BINARY_RULES[e.op](left, right)
    raise TypeError(f"Unsupported expression node: {type(e).__name__}")
