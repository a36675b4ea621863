#pragma once

// Generated by gen_frozen.py (mpmath, 40 digits). Do not edit.

namespace oracle {

struct Pair { double x; double value; };
struct Weight { int n; double s; double value; };

inline constexpr Pair kLogGamma[] = {
    {0.5, 5.7236494292470008707e-1},
    {0.1, 2.2527126517342059599},
    {0.75, 2.0328095143129537148e-1},
    {1.5, -1.2078223763524522235e-1},
    {3.7, 1.4280723266653879219},
    {10, 1.2801827480081469611e+1},
    {33.25, 8.2429238345909042294e+1},
    {123.4, 4.6933609744219055844e+2},
    {1000.5, 5.9086741758486774887e+3},
    {9999, 8.2090507256075401423e+4},
};

// Gamma(|n| + (1 + s)/2) / Gamma(|n| + (1 - s)/2)
inline constexpr Weight kWeights[] = {
    {0, 0.5, 3.379891200336423645e-1},
    {3, 0.5, 1.7350108161726974711},
    {1, 0.7, 1.0134723406869122522},
    {10, -0.3, 5.0113032223666900006e-1},
    {250, 0.3, 5.2406129011336828449},
    {1000, 0.5, 3.1622777095789604377e+1},
    {7, -0.9, 1.7351968869552917012e-1},
};

// Mean of |1 - e^{it}|^{-s} over the circle.
inline constexpr double kCircleMeanS05 = 1.180340599016096226;

}  // namespace oracle
