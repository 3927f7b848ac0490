#!/usr/bin/env python3
"""Independent oracles for the frozen test constants.

Runs without the C++ library: dense simplex grids in integer arithmetic for
the Horn matrix, and a closed-form 3x3 copositivity test scanned over a
rational grid of x for the linear copositive fixtures. Writes
tests/support/frozen_values.hpp.
"""
import itertools
import math
import pathlib
from fractions import Fraction

HORN = [[1, -1, 1, 1, -1], [-1, 1, -1, 1, 1], [1, -1, 1, -1, 1], [1, 1, -1, 1, -1], [-1, 1, 1, -1, 1]]


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for a in range(total + 1):
        for rest in compositions(total - a, parts - 1):
            yield (a,) + rest


def quad_int(m, k):
    return sum(m[i][j] * k[i] * k[j] for i in range(len(k)) for j in range(len(k)))


def horn_oracle(step=64):
    best = None
    zeros = []
    for k in compositions(step, 5):
        v = quad_int(HORN, k)
        if best is None or v < best:
            best = v
        if v == 0:
            zeros.append(k)
    supports = {frozenset(i for i, x in enumerate(k) if x) for k in zeros}
    minimal = [s for s in supports if not any(o < s for o in supports)]
    out = []
    for s in sorted(minimal, key=lambda s: (len(s), sorted(s))):
        pts = [k for k in zeros if frozenset(i for i, x in enumerate(k) if x) == s]
        # a minimal support carries a single zero
        assert len(pts) == 1, (s, pts)
        tau = [Fraction(x, step) for x in pts[0]]
        row = [sum(HORN[r][c] * tau[c] for c in range(5)) for r in range(5)]
        m_set = [r + 1 for r in range(5) if row[r] == 0]
        out.append((tau, m_set))
    return Fraction(best, step * step), out, len(supports)


def cop3(a):
    """Closed-form copositivity of a symmetric 3x3 (or smaller) matrix."""
    n = len(a)
    eps = 1e-12
    d = [float(a[i][i]) for i in range(n)]
    if any(x < -eps for x in d):
        return False
    r = [math.sqrt(max(x, 0.0)) for x in d]
    for i, j in itertools.combinations(range(n), 2):
        if float(a[i][j]) < -r[i] * r[j] - eps:
            return False
    if n < 3:
        return True
    a12, a13, a23 = float(a[0][1]), float(a[0][2]), float(a[1][2])
    s = r[0] * r[1] * r[2] + a12 * r[2] + a13 * r[1] + a23 * r[0]
    prod = 2 * (a12 + r[0] * r[1]) * (a13 + r[0] * r[2]) * (a23 + r[1] * r[2])
    return s + math.sqrt(max(prod, 0.0)) >= -eps


def evaluate(maps, x):
    p = len(maps[0])
    return [[maps[0][i][j] + sum(x[k] * maps[k + 1][i][j] for k in range(len(x))) for j in range(p)] for i in range(p)]


def lincop_optimum(c, maps, lo=-2, hi=2, den=4):
    pts = [Fraction(v, den) for v in range(lo * den, hi * den + 1)]
    best = None
    for x in itertools.product(pts, repeat=len(c)):
        if cop3(evaluate(maps, x)):
            v = sum(ci * xi for ci, xi in zip(c, x))
            if best is None or v < best:
                best = v
    return best


LINCOP = {
    "slater": ([1], [[[0, -1], [-1, 1]], [[1, 0], [0, 0]]]),
    "moving_zero": ([1], [[[1, -1], [-1, 1]], [[0, 0], [0, 1]]]),
    "pinned": ([1], [[[1, -1, 0], [-1, 1, 0], [0, 0, 0]], [[1, 1, 0], [1, 1, 0], [0, 0, -1]]]),
    "corner": ([1, 1], [[[0, -1, 0], [-1, 1, 0], [0, 0, 0]], [[1, 0, 0], [0, 0, 0], [0, 0, 0]], [[0, 0, 1], [0, 0, 1], [1, 1, 0]]]),
    "hollow": ([1, 2, 3], [[[0, 0, 0], [0, 0, 0], [0, 0, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 0]], [[0, 0, 1], [0, 0, 0], [1, 0, 0]], [[0, 0, 0], [0, 0, 1], [0, 1, 0]]]),
}


def frac_literal(f):
    return f'"{f.numerator}/{f.denominator}"'


def main():
    hmin, hzeros, hsupports = horn_oracle()
    lines = [
        "#pragma once",
        "",
        "// Generated by tests/oracles/derive_frozen.py; do not edit by hand.",
        "",
        "#include <array>",
        "",
        "namespace copfaces::frozen {",
        "",
        f"inline constexpr const char* kHornGridMin = {frac_literal(hmin)};",
        f"inline constexpr int kHornZeroSupportsOnGrid = {hsupports};",
        f"inline constexpr int kHornMinimalZeroCount = {len(hzeros)};",
        "inline constexpr std::array<std::array<const char*, 5>, 5> kHornMinimalZeros = {{",
    ]
    for tau, _ in hzeros:
        lines.append("    {" + ", ".join(frac_literal(x) for x in tau) + "},")
    lines.append("}};")
    lines.append("// 1-based row indices annihilated at each minimal zero, aligned with kHornMinimalZeros.")
    lines.append("inline constexpr std::array<std::array<int, 4>, 5> kHornMSets = {{")
    for _, m in hzeros:
        assert len(m) == 4
        lines.append("    {" + ", ".join(str(k) for k in m) + "},")
    lines.append("}};")
    lines.append("")
    for name, (c, maps) in LINCOP.items():
        opt = lincop_optimum(c, maps)
        ident = "".join(part.capitalize() for part in name.split("_"))
        lines.append(f"inline constexpr const char* kLinCop{ident}Optimum = {frac_literal(opt)};")
    lines += ["", "}  // namespace copfaces::frozen", ""]
    target = pathlib.Path(__file__).resolve().parent.parent / "support" / "frozen_values.hpp"
    target.write_text("\n".join(lines))


if __name__ == "__main__":
    main()
