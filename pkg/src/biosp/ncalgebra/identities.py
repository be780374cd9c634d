"""Identity verification and the built-in osp(1,2) / Bannai-Ito suite."""

from ..reports import Report, Suite
from .expr import NCExpr
from .parser import parse
from .rewrite import normal_order_counted, substitute_generators

# (name, lhs, rhs)
BUILTIN_IDENTITIES = (
    ("osp: [A0, A+] = A+", "[A0, A+]", "A+"),
    ("osp: [A0, A-] = -A-", "[A0, A-]", "-A-"),
    ("osp: {A+, A-} = 2 A0", "{A+, A-}", "2*A0"),
    ("grade: [A0, P] = 0", "[A0, P]", "0"),
    ("grade: {A+, P} = 0", "{A+, P}", "0"),
    ("grade: {A-, P} = 0", "{A-, P}", "0"),
    ("grade: P^2 = 1", "P^2", "1"),
    ("center: [Q, A0] = 0", "[Q, A0]", "0"),
    ("center: [Q, A+] = 0", "[Q, A+]", "0"),
    ("center: [Q, A-] = 0", "[Q, A-]", "0"),
    ("center: [Q, P] = 0", "[Q, P]", "0"),
    ("casimir forms agree: Q = 1/2([A-, A+] - 1)P", "Q", "1/2*([A-, A+] - 1)*P"),
    ("BI: {K1, K2} = K3 + W3", "{K1, K2}", "K3 + W3"),
    ("BI: {K2, K3} = K1 + W1", "{K2, K3}", "K1 + W1"),
    ("BI: {K3, K1} = K2 + W2", "{K3, K1}", "K2 + W2"),
    ("BI Casimir: C = Q^2 + m2^2 + m3^2 + m4^2 - 1/4", "C", "Q^2 + m2^2 + m3^2 + m4^2 - 1/4"),
)


def _as_expr(x):
    return parse(x) if isinstance(x, str) else x


def verify_identity(lhs, rhs, name=None):
    """Check ``lhs == rhs`` in U(osp(1,2)) by reducing their difference.

    Both sides may be strings in the expression grammar or :class:`NCExpr`.
    """
    if name is None:
        name = f"{lhs} = {rhs}" if isinstance(lhs, str) and isinstance(rhs, str) else "identity"
    diff = substitute_generators(_as_expr(lhs) - _as_expr(rhs))
    residual, rules = normal_order_counted(diff)
    return Report(
        identity=name,
        passed=residual.is_zero(),
        residual=str(residual),
        rule_applications=rules,
    )


def builtin_suite():
    reports = tuple(verify_identity(lhs, rhs, name) for name, lhs, rhs in BUILTIN_IDENTITIES)
    return Suite("algebra", reports, {"parameters": "symbolic m2, m3, m4"})


def expanded(name_or_text):
    """Normal form of a named element or expression, e.g. ``expanded("K3")``."""
    from .rewrite import normal_order

    return normal_order(substitute_generators(_as_expr(name_or_text)))


__all__ = ["BUILTIN_IDENTITIES", "verify_identity", "builtin_suite", "expanded", "NCExpr"]
