#pragma once

// Reference matrices, transcribed by hand.

#include <cstdint>
#include <vector>

#include "machhop/machseq.hpp"

namespace golden {

using Grid = std::vector<std::vector<std::uint32_t>>;

inline Grid to_grid(const machhop::ChMatrix& m) {
  Grid g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) g[i].assign(m.row(i).begin(), m.row(i).end());
  return g;
}

// Semi-MACH matrix for p = 7 and the MACH matrix for L = 2.
inline const Grid kSemiMach7{
    {1, 2, 4, 0, 4, 2, 1}, {2, 3, 5, 1, 5, 3, 2}, {3, 4, 6, 2, 6, 4, 3},
    {4, 5, 0, 3, 0, 5, 4}, {5, 6, 1, 4, 1, 6, 5}, {6, 0, 2, 5, 2, 0, 6},
    {0, 1, 3, 6, 3, 1, 0}};

inline const Grid kMach47{
    {0, 0, 1, 3, 1, 0, 2}, {0, 1, 2, 3, 2, 1, 0}, {0, 1, 3, 0, 3, 1, 2},
    {1, 2, 2, 3, 0, 2, 1}, {2, 3, 2, 1, 0, 3, 2}, {3, 1, 0, 2, 0, 1, 3},
    {0, 1, 2, 3, 0, 1, 2}};

// Ortho family for p = 5, members r = 1..4.
inline const std::vector<Grid> kFamily5{
    {{0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {{0, 1, 2, 3, 4}, {2, 3, 4, 0, 1}, {4, 0, 1, 2, 3}, {1, 2, 3, 4, 0}, {3, 4, 0, 1, 2}},
    {{0, 1, 2, 3, 4}, {3, 4, 0, 1, 2}, {1, 2, 3, 4, 0}, {4, 0, 1, 2, 3}, {2, 3, 4, 0, 1}},
    {{0, 1, 2, 3, 4}, {4, 0, 1, 2, 3}, {3, 4, 0, 1, 2}, {2, 3, 4, 0, 1}, {1, 2, 3, 4, 0}}};

inline const Grid kExtended5r3{{3, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4},
                        {3, 3, 4, 0, 1, 2, 3, 4, 0, 1, 2},
                        {3, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0},
                        {3, 4, 0, 1, 2, 3, 4, 0, 1, 2, 3},
                        {3, 2, 3, 4, 0, 1, 2, 3, 4, 0, 1}};


}  // namespace golden
