#pragma once

// Values derived independently by tests/freeze/derive.py (plain Python integers) and frozen here.

#include <array>
#include <cstdint>

namespace frozen {

inline constexpr unsigned long kPow16_85_mod_17_3 = 1444;
inline constexpr unsigned long kInv2_mod_25 = 13;
inline constexpr unsigned long kGenerator7 = 3, kGenerator17 = 3;
inline constexpr long kLattice_50_99_101_best = 2;  // min over e of max |centered e*a_i mod 100|

// roots (valuation, unit mod p^12) of 1 + x + 5 x^2 over Q_5
inline constexpr std::array<std::pair<long, unsigned long>, 2> kRoots_1_x_5x2 = {{{-1, 207890904}, {0, 153734319}}};

inline constexpr unsigned kCount_x10_11x2_m12_p2 = 6;
inline constexpr unsigned kCount_x20_m10x2_738_p3 = 8;
inline constexpr unsigned kCount_x10_m10x_738_p3 = 4;
inline constexpr unsigned kCount_1_x2_p3 = 0;
inline constexpr unsigned kCount_1_mx340_p17 = 4;
inline constexpr unsigned kCount_1_mx397_p17 = 1;
inline constexpr unsigned long kLift_4_2_17_mod_17_8 = 3596107669;
inline constexpr std::array<unsigned long, 3> kCubeRoots1_mod7 = {1, 2, 4};

// 3^6 x^4 - x^2 + 18 x - 81: the two roots of valuation 2 (units mod 3^20) and ord of their difference
inline constexpr std::array<unsigned long, 2> kTetra334Units = {71862877, 3415157722};
inline constexpr long kTetra334Order = 7;

inline constexpr double kMahler_4_16 = -15.01093062833874;
inline constexpr double kDegenerateGap_d3_r1_H10_p3 = 9.953666055721683;

struct TriRow {
    long c1, c2, c3;
    unsigned a2, a3;
    unsigned p;
    unsigned count;
};

inline constexpr std::array<TriRow, 40> kTrinomialRows = {{
    {-50, -37, -44, 1, 2, 2, 2}, {16, -35, -46, 1, 2, 7, 2},  {-33, -17, -3, 5, 6, 5, 0},  {-5, 30, 19, 3, 5, 5, 0},
    {-43, -26, 39, 1, 2, 5, 2},  {-9, 21, -7, 6, 12, 3, 0},   {24, 43, -43, 4, 7, 13, 0},  {37, 6, -48, 1, 2, 7, 0},
    {43, -8, 14, 1, 2, 11, 0},   {38, -7, -34, 1, 4, 11, 2},  {-8, -39, -23, 2, 5, 2, 1},  {46, -28, 31, 4, 6, 13, 2},
    {20, -41, -1, 2, 3, 11, 3},  {16, -37, 11, 3, 7, 2, 0},   {15, 27, 44, 3, 4, 2, 2},    {45, -8, -25, 8, 9, 7, 0},
    {15, -11, -37, 2, 3, 7, 0},  {47, -6, 24, 1, 2, 5, 2},    {40, 5, -23, 4, 7, 3, 0},    {16, -40, 23, 7, 12, 3, 0},
    {48, -21, -12, 2, 3, 5, 1},  {45, -14, -48, 4, 10, 3, 0}, {48, 1, 12, 4, 8, 5, 0},     {3, -2, 42, 1, 8, 5, 0},
    {37, -45, -29, 1, 2, 11, 2}, {-5, 24, -2, 5, 11, 2, 0},   {-44, -17, -16, 3, 11, 7, 1}, {-42, -19, 19, 1, 2, 3, 2},
    {43, 45, 30, 3, 7, 5, 0},    {-42, -26, 44, 4, 11, 2, 1}, {-45, -46, 33, 2, 12, 2, 0}, {-28, 18, -20, 1, 8, 11, 2},
    {25, -26, -39, 3, 7, 5, 4},  {-24, 22, 46, 3, 8, 2, 1},   {40, 38, 13, 1, 2, 7, 2},    {27, -25, -37, 6, 10, 7, 2},
    {-37, 13, 37, 4, 6, 11, 0},  {-49, 15, 4, 6, 9, 3, 0},    {-39, -6, 41, 2, 3, 3, 0},   {-33, -5, 32, 1, 2, 7, 0},
}};

}  // namespace frozen
