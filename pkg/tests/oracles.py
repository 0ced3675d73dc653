"""Independent reference implementations used as test oracles.

Everything here is deliberately written the slow, obvious way (string
slicing, Fractions, stepwise loops) and imports nothing from the package,
so it provides a second route to every value the tests assert.
"""

from __future__ import annotations

from fractions import Fraction

_BIASES = {
    "sr": lambda n, h, vm: -(vm + 1) // 2,
    "lr": lambda n, h, vm: (vm - 1) // 2,
    "si": lambda n, h, vm: n - h - 1,
    "li": lambda n, h, vm: n - h - (1 << h) + vm - 1,
}


def ref_f2p_decode(bits: int, n: int, h: int, flavor: str) -> Fraction:
    """Decode an unsigned n-bit F2P magnitude pattern, exactly."""
    s = format(bits, f"0{n}b")
    ell = int(s[:h], 2)
    exp, mant = s[h : h + ell], s[h + ell :]
    v = (1 << ell) - 1 + (int(exp, 2) if exp else 0)
    vm = (1 << (1 << h)) - 1
    sign = 1 if flavor in ("sr", "si") else -1
    e = sign * v
    e_min = 0 if sign > 0 else -(vm - 1)
    b = _BIASES[flavor](n, h, vm)
    m = Fraction(int(mant, 2), 1 << len(mant))
    if e == e_min:
        return Fraction(2) ** (e + b + 1) * m
    return Fraction(2) ** (e + b) * (1 + m)


def ref_minifloat_decode(bits: int, mant_bits: int, exp_bits: int) -> Fraction:
    """Textbook decode of an unsigned xMyE pattern with bias -2**(e-1)."""
    mant = bits & ((1 << mant_bits) - 1)
    exp = bits >> mant_bits
    b = -(1 << (exp_bits - 1))
    m = Fraction(mant, 1 << mant_bits)
    if exp == 0:
        return Fraction(2) ** (b + 1) * m
    return Fraction(2) ** (exp + b) * (1 + m)


def nearest_linear(values, x: float) -> int:
    """Brute-force nearest index with the even-index tie rule."""
    x = min(max(x, values[0]), values[-1])
    best, best_dist = 0, abs(x - values[0])
    for i, v in enumerate(values):
        dist = abs(x - v)
        if dist < best_dist or (dist == best_dist and i % 2 == 0 and best % 2 == 1):
            best, best_dist = i, dist
    return best


def stepwise_mse(values, s: int, rng) -> float:
    """One on-arrival trial, simulated increment by increment."""
    k = len(values)
    idx = 0
    err_sum = 0.0
    for t in range(1, s + 1):
        if idx < k - 1:
            gap = values[idx + 1] - values[idx]
            if gap <= 1.0 or rng.random() < 1.0 / gap:
                idx += 1
        err_sum += (values[idx] - t) ** 2
    return err_sum / s
