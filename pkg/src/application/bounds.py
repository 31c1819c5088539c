"""Model size and derivation length bounds.

mu(n) bounds the size of a smallest model of a satisfiable concept of length n;
step_bound(n, k, M) bounds the number of rule applications in a branch when
blocking is eager. Both are exact integers; values wider than ARITHMETIC_WIDTH
bits are refused.
"""
from src.domain.exceptions import BoundOverflow
from src.domain.value_objects.calculus_options import CalculusOptions

# Bits. Decimal output stays below the interpreter's int-to-str digit limit.
ARITHMETIC_WIDTH = 1 << 13


def _checked(name: str, value: int) -> int:
    if value.bit_length() > ARITHMETIC_WIDTH:
        raise BoundOverflow(name, ARITHMETIC_WIDTH)
    return value


def mu(n: int) -> int:
    """
    Model bounding function 3 * (n * floor(log2(n + 1))) * 2**n.

    Raises:
        ValueError: If n < 1
        BoundOverflow: If the value is wider than ARITHMETIC_WIDTH bits
    """
    if n < 1:
        raise ValueError("mu is defined for n >= 1")
    if n >= ARITHMETIC_WIDTH:
        raise BoundOverflow("mu", ARITHMETIC_WIDTH)
    log = (n + 1).bit_length() - 1
    return _checked("mu", 3 * (n * log) * (1 << n))


def step_bound(n: int, k: int, m: int) -> int:
    """
    Bound on derivation steps in one branch: (n(k + M mu(n)) + 2n(k + M mu(n))^2)^2.

    Args:
        n: Length of the input concept
        k: Number of individuals, root included
        m: Bound on the number of individuals introduced by (∃) per blocking class

    Raises:
        ValueError: If n < 1 or k < 1
        BoundOverflow: If the value is wider than ARITHMETIC_WIDTH bits
    """
    if n < 1 or k < 1:
        raise ValueError("step_bound requires n >= 1 and k >= 1")
    if m < 0:
        raise ValueError("step_bound requires m >= 0")
    labels = k + (m * mu(n) if m else 0)
    return _checked("step_bound", (n * labels + 2 * n * labels * labels) ** 2)


def default_branch_cap(
    n: int, k: int, existentials: int, options: CalculusOptions | None = None
) -> int | None:
    """
    Step cap used by the avoid-huge-branch strategy when the user gives none.

    With eager blocking M is the number of distinct existential subconcepts;
    a blocking delay d adds the individuals that may appear before blocking
    starts. Returns None when the bound is wider than ARITHMETIC_WIDTH bits or
    when blocking is switched off (no bound holds then).
    """
    options = options or CalculusOptions()
    if not options.blocking:
        return None
    m = existentials
    if options.blocking_delay:
        m += k + options.blocking_delay
    try:
        return step_bound(n, k, m)
    except BoundOverflow:
        return None
