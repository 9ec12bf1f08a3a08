"""Pure-Python sparse product kernel.

Polynomials are dicts from packed exponent keys to integer coefficients.
Packing is biased, so the key of a product term is ``ka + kb - bias``.
"""


def mul(a, b, bias, limit=None):
    """Product of two packed dicts, dropping keys >= ``limit`` when given."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    if limit is None:
        for kb, cb in b.items():
            off = kb - bias
            for ka, ca in a.items():
                k = ka + off
                out[k] = get(k, 0) + ca * cb
    else:
        items = sorted(a.items())
        for kb, cb in b.items():
            off = kb - bias
            stop = limit - off
            for ka, ca in items:
                if ka >= stop:
                    break
                k = ka + off
                out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}
