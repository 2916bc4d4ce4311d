"""
Symbolic differentiation with respect to x
"""
from .nodes import Binary, BinaryOp, Call, Constant, Expr, FunctionName, Negate, Variable
from .simplify import simplify

ZERO = Constant(0.0)
ONE = Constant(1.0)
TWO = Constant(2.0)


def _d(e: Expr) -> Expr:
    if isinstance(e, Constant):
        return ZERO
    if isinstance(e, Variable):
        return ONE
    if isinstance(e, Negate):
        return Negate(_d(e.child))
    if isinstance(e, Binary):
        return _d_binary(e)
    if isinstance(e, Call):
        return _d_call(e)
    raise TypeError(f"Unsupported expression node: {type(e).__name__}")


def _d_binary(e: Binary) -> Expr:
    u, v = e.left, e.right
    if e.op == BinaryOp.ADD:
        return Binary(BinaryOp.ADD, _d(u), _d(v))
    if e.op == BinaryOp.SUB:
        return Binary(BinaryOp.SUB, _d(u), _d(v))
    if e.op == BinaryOp.MUL:
        return Binary(
            BinaryOp.ADD,
            Binary(BinaryOp.MUL, _d(u), v),
            Binary(BinaryOp.MUL, u, _d(v)),
        )
    if e.op == BinaryOp.DIV:
        numerator = Binary(
            BinaryOp.SUB,
            Binary(BinaryOp.MUL, _d(u), v),
            Binary(BinaryOp.MUL, u, _d(v)),
        )
        return Binary(BinaryOp.DIV, numerator, Binary(BinaryOp.POW, v, TWO))
    # power
    if not v.contains_variable():
        # d(u^c) = c * u^(c-1) * u'
        return Binary(
            BinaryOp.MUL,
            Binary(BinaryOp.MUL, v, Binary(BinaryOp.POW, u, Binary(BinaryOp.SUB, v, ONE))),
            _d(u),
        )
    # d(u^v) = u^v * (v' ln u + v u'/u), from u^v = exp(v ln u)
    return Binary(
        BinaryOp.MUL,
        e,
        Binary(
            BinaryOp.ADD,
            Binary(BinaryOp.MUL, _d(v), Call(FunctionName.LN, u)),
            Binary(BinaryOp.DIV, Binary(BinaryOp.MUL, v, _d(u)), u),
        ),
    )


def _d_call(e: Call) -> Expr:
    u = e.arg
    du = _d(u)
    if e.fn == FunctionName.SQRT:
        outer: Expr = Binary(BinaryOp.DIV, ONE, Binary(BinaryOp.MUL, TWO, e))
    elif e.fn == FunctionName.EXP:
        outer = e
    elif e.fn == FunctionName.LN:
        outer = Binary(BinaryOp.DIV, ONE, u)
    elif e.fn == FunctionName.SIN:
        outer = Call(FunctionName.COS, u)
    elif e.fn == FunctionName.COS:
        outer = Negate(Call(FunctionName.SIN, u))
    elif e.fn == FunctionName.ABS:
        # sign(u), undefined at u = 0
        outer = Binary(BinaryOp.DIV, u, e)
    else:
        raise TypeError(f"Unsupported function: {e.fn}")
    return Binary(BinaryOp.MUL, outer, du)


def derivative(e: Expr, simplified: bool = True) -> Expr:
    """
    Symbolic derivative of e with respect to x

    Args:
        e: Expression tree
        simplified: Run simplify() on the result

    Returns:
        Expression whose value is de/dx wherever e is differentiable
    """
    d = _d(e)
    return simplify(d) if simplified else d
