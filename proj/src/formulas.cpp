#include "formulas.hpp"

namespace cuboidcurves::formulas {

Poly2::Poly2(std::initializer_list<Term> terms) {
  int max_b = 0;
  for (const Term& t : terms) {
    if (t.b_exp > max_b) max_b = t.b_exp;
  }
  rows_.resize(static_cast<std::size_t>(max_b) + 1);
  for (const Term& t : terms) {
    auto& row = rows_[static_cast<std::size_t>(t.b_exp)];
    if (row.size() <= static_cast<std::size_t>(t.c_exp)) {
      row.resize(static_cast<std::size_t>(t.c_exp) + 1, 0);
    }
    row[static_cast<std::size_t>(t.c_exp)] += t.coef;
  }
}

Rat Poly2::operator()(const Rat& b, const Rat& c) const {
  Rat acc(0);
  for (auto row = rows_.rbegin(); row != rows_.rend(); ++row) {
    Rat row_value(0);
    for (auto coef = row->rbegin(); coef != row->rend(); ++coef) {
      row_value *= c;
      row_value += Rat(static_cast<long>(*coef));
    }
    acc *= b;
    acc += row_value;
  }
  return acc;
}

// Term lists below keep the printed order of the source expressions so a
// reviewer can check them line against line.

const Poly2 e_denominator{
    {1, 2, 2}, {2, 2, 0}, {-3, 2, 1}, {1, 0, 1}, {-1, 1, 2}, {2, 1, 0}};

const Poly2 e11_numerator{{1, 0, 2}, {2, 0, 0}, {-4, 0, 1}};

const Poly2 e10_numerator{{1, 2, 2}, {2, 2, 0}, {-3, 2, 1}, {-1, 0, 1}};

const Poly2 e01_numerator{{1, 0, 2}, {2, 0, 0}, {-2, 0, 1}};

const Poly2 e12_numerator{
    {16, 6, 0},   {32, 5, 0},   {-6, 2, 5},   {2, 1, 5},    {-62, 5, 6},
    {62, 6, 6},   {16, 4, 0},   {-180, 6, 5}, {-1, 3, 7},   {18, 5, 7},
    {-12, 6, 7},  {-2, 5, 8},   {1, 6, 8},    {248, 5, 2},  {248, 6, 2},
    {-96, 6, 1},  {321, 6, 4},  {-180, 5, 3}, {-144, 5, 1}, {-360, 6, 3},
    {1, 4, 8},    {8, 4, 6},    {-6, 4, 7},   {18, 4, 5},   {7, 3, 6},
    {90, 5, 5},   {-14, 3, 5},  {17, 2, 4},   {32, 4, 2},   {28, 3, 3},
    {-28, 3, 2},  {-4, 1, 3},   {8, 3, 1},    {-57, 4, 4},  {36, 4, 3},
    {-12, 2, 3},  {-48, 4, 1},  {-1, 0, 4}};

const Poly2 e21_numerator{
    {5, 1, 6},    {-2, 2, 6},   {52, 2, 5},   {-16, 1, 5},  {-2, 2, 7},
    {2, 4, 8},    {-26, 4, 7},  {-426, 4, 5}, {-61, 3, 6},  {100, 3, 5},
    {14, 3, 7},   {-1, 3, 8},   {-20, 1, 2},  {-8, 2, 2},   {-16, 2, 1},
    {-128, 2, 4}, {-200, 3, 3}, {244, 3, 2},  {32, 1, 3},   {768, 4, 4},
    {-852, 4, 3}, {568, 4, 2},  {104, 2, 3},  {-208, 4, 1}, {8, 0, 4},
    {16, 3, 0},   {-112, 3, 1}, {142, 4, 6},  {32, 4, 0},   {-2, 0, 5}};

const Poly2 e03_factor_a{{1, 2, 4}, {-5, 2, 3}, {10, 2, 2}, {-10, 2, 1},
                         {4, 2, 0}, {2, 1, 1},  {2, 0, 2},  {-1, 1, 3}};

const Poly2 e03_factor_b{{2, 2, 4}, {-12, 2, 3}, {26, 2, 2}, {-24, 2, 1},
                         {8, 2, 0}, {-1, 1, 4},  {3, 1, 3},  {-6, 1, 1},
                         {4, 1, 0}, {1, 0, 3},   {-2, 0, 2}, {2, 0, 1}};

const Poly2 e30_factor_a{{1, 1, 2}, {-4, 1, 1}, {2, 0, 0}, {4, 1, 0}};

const Poly2 e30_factor_b{{2, 1, 2}, {-1, 0, 2}, {-4, 1, 1}, {2, 1, 0}};

const Poly2 e02_numerator{
    {28, 2, 2},  {-16, 2, 1}, {-2, 0, 2},  {-4, 2, 0},  {-1, 2, 4},
    {4, 3, 4},   {-12, 3, 3}, {4, 1, 3},   {24, 3, 1},  {-8, 1, 1},
    {-2, 4, 4},  {12, 4, 3},  {-26, 4, 2}, {-8, 2, 3},  {24, 4, 1},
    {-16, 3, 0}, {-8, 4, 0}};

const Poly2 e20_factor_a{{1, 1, 2}, {-2, 0, 1}, {-2, 1, 0}};

const Poly2 e20_factor_b{
    {2, 1, 2}, {-1, 0, 2}, {-6, 1, 1}, {2, 0, 0}, {4, 1, 0}};

const Poly2 quartic{{1, 2, 4}, {-6, 2, 3}, {13, 2, 2},
                    {-12, 2, 1}, {4, 2, 0}, {1, 0, 2}};

const Poly2 quartic_variant{{1, 2, 4},   {-6, 2, 3}, {13, 2, 2}, {-12, 2, 1},
                            {-4, 0, 3},  {4, 2, 0},  {1, 0, 2}};

const Poly2 linear_1{{1, 1, 1}, {-1, 0, 0}, {-1, 1, 0}};

const Poly2 linear_2{{1, 1, 1}, {-1, 0, 1}, {-2, 1, 0}};

const Poly2 q1_inner{
    {2, 0, 2},  {2, 4, 4},   {-12, 4, 3}, {26, 4, 2}, {-24, 4, 1},
    {8, 4, 0},  {-6, 3, 4},  {18, 3, 3},  {-36, 3, 1}, {24, 3, 0},
    {3, 2, 4},  {8, 2, 3},   {-36, 2, 2}, {16, 2, 1}, {12, 2, 0},
    {-6, 1, 3}, {12, 1, 1}};

const Poly2 q2_inner{
    {6, 4, 4},   {-36, 4, 3}, {78, 4, 2},  {-72, 4, 1}, {24, 4, 0},
    {-12, 3, 4}, {36, 3, 3},  {-72, 3, 1}, {48, 3, 0},  {5, 2, 4},
    {16, 2, 3},  {-68, 2, 2}, {32, 2, 1},  {20, 2, 0},  {-12, 1, 3},
    {24, 1, 1},  {6, 0, 2}};

const Poly2 p1_big{
    {7812, 4, 4},   {-216, 2, 4},   {-52, 2, 3},    {1764, 3, 4},
    {-1200, 4, 3},  {-1848, 4, 2},  {720, 4, 1},    {-36, 1, 4},
    {-1512, 3, 3},  {-36, 3, 8},    {288, 3, 2},    {-108, 2, 6},
    {380, 2, 5},    {378, 3, 7},    {-231, 4, 8},   {-300, 4, 7},
    {3906, 4, 6},   {-13, 2, 7},    {-8904, 4, 5},  {-882, 3, 6},
    {18, 1, 6},     {-1319, 6, 8},  {20952, 5, 3},  {-11952, 5, 2},
    {2592, 5, 1},   {-48372, 6, 4}, {31620, 6, 3},  {-10552, 6, 2},
    {816, 6, 1},    {1494, 5, 8},   {-5238, 5, 7},  {-4, 0, 5},
    {7905, 6, 7},   {-24186, 6, 6}, {288, 6, 0},    {43740, 6, 5},
    {7686, 5, 6},   {576, 7, 0},    {128, 8, 0},    {-15372, 5, 4},
    {-1080, 7, 8},  {-3546, 7, 6},  {51, 6, 9},     {400, 8, 8},
    {-162, 5, 9},   {8640, 7, 2},   {-3456, 7, 1},  {2808, 7, 7},
    {-1560, 8, 7},  {3940, 8, 6},   {216, 7, 9},    {-960, 8, 1},
    {-6240, 8, 3},  {9, 6, 10},     {7880, 8, 4},   {4, 8, 10},
    {-6732, 8, 5},  {45, 4, 9},     {3200, 8, 2},   {-11232, 7, 3},
    {7092, 7, 4},   {-18, 7, 10},   {-60, 8, 9}};

const Poly2 p2_big{
    {832, 2, 2},    {-1440, 2, 4},  {-840, 2, 3},   {4788, 3, 4},
    {396, 1, 3},    {720, 3, 1},    {808, 4, 4},    {3032, 4, 3},
    {-2576, 4, 2},  {-96, 4, 1},    {448, 4, 0},    {-504, 1, 4},
    {-4176, 3, 3},  {-9, 3, 8},     {72, 3, 2},     {-720, 2, 6},
    {2288, 2, 5},   {1044, 3, 7},   {-322, 4, 8},   {758, 4, 7},
    {404, 4, 6},    {-210, 2, 7},   {-2464, 4, 5},  {-2394, 3, 6},
    {72, 0, 4},     {252, 1, 6},    {3168, 6, 8},   {441, 5, 9},
    {-7056, 5, 1},  {57960, 6, 4},  {-47232, 6, 3}, {25344, 6, 2},
    {-8064, 6, 1},  {-1809, 5, 8},  {14472, 5, 2},  {3951, 5, 7},
    {-72, 0, 5},    {36, 0, 6},     {-11808, 6, 7}, {1440, 5, 0},
    {28980, 6, 6},  {-49032, 6, 5}, {-4410, 5, 6},  {8820, 5, 4},
    {-15804, 5, 3}, {1152, 6, 0},   {-504, 6, 9},   {-45, 3, 9},
    {-6, 4, 9},     {104, 2, 8},    {36, 6, 10},    {14, 4, 10},
    {-45, 5, 10},   {-99, 1, 7}};

}  // namespace cuboidcurves::formulas
