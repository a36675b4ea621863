"""Arbitrary-precision reference values, frozen into frozen_values.hpp.

Run once with mpmath; the header is committed and the build does not need
Python.
"""
import mpmath as mp

mp.mp.dps = 40

LGAMMA_POINTS = ["0.5", "0.1", "0.75", "1.5", "3.7", "10", "33.25", "123.4", "1000.5", "9999"]
WEIGHTS = [(0, "0.5"), (3, "0.5"), (1, "0.7"), (10, "-0.3"), (250, "0.3"), (1000, "0.5"), (7, "-0.9")]


def fmt(x):
    return mp.nstr(x, 20, min_fixed=-1, max_fixed=-1)


lines = ["#pragma once", "", "// Generated by gen_frozen.py (mpmath, 40 digits). Do not edit.", "",
         "namespace oracle {", "", "struct Pair { double x; double value; };",
         "struct Weight { int n; double s; double value; };", ""]
lines.append("inline constexpr Pair kLogGamma[] = {")
for p in LGAMMA_POINTS:
    lines.append(f"    {{{p}, {fmt(mp.loggamma(mp.mpf(p)))}}},")
lines.append("};")
lines.append("")
lines.append("// Gamma(|n| + (1 + s)/2) / Gamma(|n| + (1 - s)/2)")
lines.append("inline constexpr Weight kWeights[] = {")
for n, s in WEIGHTS:
    s_ = mp.mpf(s)
    v = mp.gamma(n + (1 + s_) / 2) / mp.gamma(n + (1 - s_) / 2)
    lines.append(f"    {{{n}, {s}, {fmt(v)}}},")
lines.append("};")
lines.append("")
# Integral over the torus of |1 - e^{i(a-b)}|^{-s} da db / (2 pi)^2 = Gamma(1-s)/Gamma(1-s/2)^2.
lines.append("// Mean of |1 - e^{it}|^{-s} over the circle.")
for s in ["0.5"]:
    s_ = mp.mpf(s)
    v = mp.gamma(1 - s_) / mp.gamma(1 - s_ / 2) ** 2
    lines.append(f"inline constexpr double kCircleMeanS05 = {fmt(v)};")
lines.append("")
lines.append("}  // namespace oracle")
open(__file__.replace("gen_frozen.py", "frozen_values.hpp"), "w").write("\n".join(lines) + "\n")
