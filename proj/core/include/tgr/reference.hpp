#pragma once

// Published formulas the verifier compares its own derivations against,
// transcribed verbatim (including their typographical signs).

#include <array>
#include <string_view>

namespace tgr::reference {

/// The six wedge cubics v12, v13, v14, v23, v24, v34 in X, Y, Z.
inline constexpr std::array<std::string_view, 6> kWedgeCubics{
    "X*Y*Z",         "X*(Z^2 - X*Y)", "X*(X*Z - Y^2)",
    "Y*(X^2 - Y*Z)", "Y*(Y*X - Z^2)", "3*X*Y*Z - (X^3 + Y^3 + Z^3)"};

/// Points of the slice Z0 = Z5 = 0, three families indexed by i = 1..3 in
/// w^i. Each entry is written with the symbol `u` standing for w^i.
inline constexpr std::array<std::string_view, 3> kSliceFamilies{
    "0, -u, 1, 0, 0, 0", "0, 0, 0, -u, 1, 0", "0, u, 1, u, 1, 0"};

/// Exceptional fibers and their common images.
inline constexpr std::array<std::string_view, 3> kCollapsedToLast{"1, 0, 0", "0, 1, 0",
                                                                  "0, 0, 1"};
inline constexpr std::string_view kLastImage = "0, 0, 0, 0, 0, 1";
inline constexpr std::array<std::string_view, 3> kCollapsedToFirst{"1, 1, 1", "w, w^2, 1",
                                                                   "w^2, w, 1"};
inline constexpr std::string_view kFirstImage = "1, 0, 0, 0, 0, 0";

/// Affine form of the map on the chart Z = 1, coordinates Z1..Z5 over Z0.
inline constexpr std::array<std::string_view, 5> kAffineMap{
    "1/y - x", "x/y - y", "x - y/x", "y - 1/x", "3 - x^2/y - y^2/x - 1/(x*y)"};

/// Jacobian of the affine map: rows d/dx and d/dy, columns Z1/Z0..Z5/Z0.
inline constexpr std::array<std::array<std::string_view, 5>, 2> kAffineJacobian{{
    {"-1", "1/y", "1 + y/x^2", "1/x^2", "-2*x/y + y^2/x^2 + 1/(x^2*y)"},
    {"-1/y^2", "-x/y^2 - 1", "-1/x", "1", "x^2/y^2 - 2*y/x + 1/(x*y^2)"},
}};

/// Images of the coordinate lines: vanishing linear forms and the cubic.
struct LineImageDisplay {
  std::string_view line;
  std::array<std::string_view, 3> linear;
  std::string_view cubic;
};

inline constexpr std::array<LineImageDisplay, 3> kLineImages{{
    {"X", {"Z0", "Z1", "Z2"}, "Z3^3 + Z4^3 - Z3*Z4*Z5"},
    {"Y", {"Z0", "Z3", "Z4"}, "Z1^3 + Z2^3 + Z1*Z2*Z5"},
    {"Z", {"Z0", "Z1 - Z4", "Z2 + Z3"}, "Z1^3 + Z2^3 - Z1*Z2*Z5"},
}};

}  // namespace tgr::reference
