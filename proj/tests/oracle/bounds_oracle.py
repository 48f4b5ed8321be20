#!/usr/bin/env python3
"""Independent evaluator for the bound formulas, used to freeze golden values.

Written directly from the displayed formulas with Python integers; shares no
code with the C++ evaluator. Run it to regenerate tests/golden/bounds.json.
"""
import json
import math
import sys
from pathlib import Path


def geom(t, k):
    """sum_{i=0}^{k-1} t^i"""
    return sum(t**i for i in range(k))


def lemma1(p, q, s, t):
    return geom(t, p) * (s + t * (2 * t + 9)) + t**p * q


def thm8(d, p, t):
    if d == 1:
        return t - 1
    g = thm8(d - 1, p, t)
    return geom(t, p + 1) * (g + 1 + t * (2 * t + 9)) + t ** (p + 1) * (d * t + 2)


def thm10(d, p, t):
    if d == 1:
        return t - 1
    g = thm10(d - 1, p, t)
    return geom(t, p) * (g + 1 + t * (2 * t + 9)) + t**p * (g + 1)


def cascade(s, d, t, f0=lambda x: x):
    w = s**4 * t**s + s
    f8 = 3 * s * d ** (3 * s + 2) * w ** (2 * s - 1) * t ** (3 * s) * (
        f0(t) + 2 * s ** (2 * d + 2) * t ** (d * s + s * s + s))
    f5 = 120 * s * d ** (5 * s + 1) * w * t ** (5 * s) * f8
    f3 = 2 * d ** (s + 1) * w * t**s * f5
    f2 = 2 * s * d * w * f3
    k = s * s + s + 1
    f1 = f0((s * k * t) ** (120 * k) * w) + 2 * t * f2
    return dict(w=w, f8=f8, f5=f5, f3=f3, f2=f2, f1=f1)


def thm9(d, p, t, s=3, f0=lambda x: x):
    if d == 1:
        return t - 1
    g = thm9(d - 1, p, t, s, f0)
    f1 = cascade(s, d, t, f0)["f1"]
    return geom(t, p + 1) * (g + 1 + t * (2 * t + 9)) + t ** (p + 1) * (f1 + 1)


def beta(s, p, t):
    size = sum(s**i for i in range(p + 1))
    base = sum(s ** (i + 1) for i in range(p + 1)) * t
    return base ** (math.factorial(p + 3) * size) + 1


def thm11(d, s, p, t):
    if d == 1:
        return t - 1
    g = lambda x: thm11(d - 1, s, p, x)
    return geom(t, p) * (g(t) + 1 + t * (2 * t + 9)) + t**p * (g(beta(s, p, t)) + 1)


def main():
    golden = {}
    for name, (s, d, t) in {
        "cascade_s1_d1_t1": (1, 1, 1),
        "cascade_s3_d2_t1": (3, 2, 1),
        "cascade_s2_d2_t2": (2, 2, 2),
    }.items():
        golden[name] = {k: str(v) for k, v in cascade(s, d, t).items()}
    golden["thm9_d2_p4_t1"] = str(thm9(2, 4, 1))
    golden["thm9_d3_p4_t1"] = str(thm9(3, 4, 1))
    golden["thm10_d3_p4_t2"] = str(thm10(3, 4, 2))
    # K_{1,3}: spread 3, height 1
    golden["thm11_d2_star3_t1"] = str(thm11(2, 3, 1, 1))
    golden["thm11_d2_star3_t2"] = str(thm11(2, 3, 1, 2))
    # P_3: spread 2, height 1
    golden["thm11_d3_path3_t1"] = str(thm11(3, 2, 1, 1))
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "golden" / "bounds.json"
    out.write_text(json.dumps(golden, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    sys.set_int_max_str_digits(0) if hasattr(sys, "set_int_max_str_digits") else None
    main()
