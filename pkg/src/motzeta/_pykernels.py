"""Pure-Python hot kernels; the reference the compiled twin must match."""


def expand_product(factors, D):
    """Coefficients of ``prod L^a T^b / (1 - L^a T^b)`` up to ``T^D``.

    Returns a list of length ``D + 1``; entry ``d`` maps an ``L``-exponent
    to its (nonnegative) integer coefficient in front of ``T^d``.
    """
    cur = [dict() for _ in range(D + 1)]
    cur[0][0] = 1
    for a, b in factors:
        nxt = [dict() for _ in range(D + 1)]
        for d in range(D + 1):
            row = cur[d]
            if not row:
                continue
            for e, c in row.items():
                k = 1
                while d + b * k <= D:
                    tgt = nxt[d + b * k]
                    ee = e + a * k
                    tgt[ee] = tgt.get(ee, 0) + c
                    k += 1
        cur = nxt
    return cur


def representable(parts, target):
    """True iff ``target`` is a nonnegative integer combination of ``parts``."""
    if target < 0:
        return False
    reach = [False] * (target + 1)
    reach[0] = True
    for p in set(parts):
        if p <= 0:
            continue
        for v in range(p, target + 1):
            if reach[v - p]:
                reach[v] = True
    return reach[target]
