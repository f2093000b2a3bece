#pragma once

#include <array>
#include <utility>
#include <vector>

#include "gib/cycle.hpp"

// Published reference tables for the verification suite and golden tests:
// explicit cycles, complete systems, seed-independent cycle lengths and the
// 300-prime Tribonacci survey statistics.
namespace gib::reference {

using residue_list = std::vector<i64>;
using system_listing = std::vector<residue_list>;

// ---------------------------------------------------------------------------
// Order-2 cycles, as first traversed from their seeds.

inline const residue_list lucas_cycle_mod4{1, 3, 0, 3, 3, 2};

inline const residue_list lucas_cycle_mod5{1, 3, 4, 2};

// First 15 Lucas residues mod 6 as commonly listed; they already cover all
// six residues. The full cycle has 24 terms and is a rotation of
// fibonacci_cycle_mod6 below.
inline const residue_list lucas_mod6_leading_terms{1, 3, 4, 1, 5, 0, 5, 5,
                                                   4, 3, 1, 4, 5, 3, 2};

inline const residue_list lucas_cycle_mod14{
    1, 3,  4,  7, 11, 4,  1,  5,  6, 11, 3,  0, 3,  3, 6,  9,
    1, 10, 11, 7, 4,  11, 1,  12, 13, 11, 10, 7, 3,  10, 13, 9,
    8, 3,  11, 0, 11, 11, 8,  5,  13, 4,  3,  7, 10, 3,  13, 2};

inline const residue_list fibonacci_cycle_mod4{1, 1, 2, 3, 1, 0};

inline const residue_list fibonacci_cycle_mod5{1, 1, 2, 3, 0, 3, 3, 1, 4, 0,
                                               4, 4, 3, 2, 0, 2, 2, 4, 1, 0};

inline const residue_list fibonacci_cycle_mod6{1, 1, 2, 3, 5, 2, 1, 3,
                                               4, 1, 5, 0, 5, 5, 4, 3,
                                               1, 4, 5, 3, 2, 5, 1, 0};

inline const residue_list fibonacci_cycle_mod14{
    1,  1,  2,  3,  5, 8, 13, 7, 6, 13, 5, 4,  9, 13, 8, 7,
    1,  8,  9,  3,  12, 1, 13, 0, 13, 13, 12, 11, 9, 6,  1, 7,
    8,  1,  9,  10, 5, 1, 6,  7, 13, 6,  5, 11, 2, 13, 1, 0};

// ---------------------------------------------------------------------------
// Order-3 cycles.

inline const residue_list tribonacci_a_cycle_mod2{1};

inline const residue_list tribonacci_b_cycle_mod2{1, 1, 0, 0};

inline const residue_list tribonacci_a_cycle_mod9{
    1, 1, 1, 3, 5, 0, 8, 4, 3, 6, 4, 4, 5, 4, 4, 4, 3, 2, 0, 5,
    7, 3, 6, 7, 7, 2, 7, 7, 7, 3, 8, 0, 2, 1, 3, 6, 1, 1, 8};

inline const residue_list tribonacci_b_cycle_mod9{
    1, 1, 2, 4, 7, 4, 6, 8, 0, 5, 4, 0, 0, 4, 4, 8, 7, 1, 7, 6,
    5, 0, 2, 7, 0, 0, 7, 7, 5, 1, 4, 1, 6, 2, 0, 8, 1, 0, 0};

// ---------------------------------------------------------------------------
// Complete systems, one residue list per inequivalent cycle.

inline const system_listing gibonacci_system_mod2{{1, 1, 0}, {0}};

inline const system_listing gibonacci_system_mod3{{0, 1, 1, 2, 0, 2, 2, 1},
                                                  {0}};

inline const system_listing gibonacci_system_mod4{
    {1, 1, 2, 3, 1, 0}, {3, 3, 2, 1, 3, 0}, {2, 2, 0}, {0}};

inline const system_listing gibonacci_system_mod5{fibonacci_cycle_mod5,
                                                  lucas_cycle_mod5,
                                                  {0}};

inline const system_listing gibonacci_system_mod6{
    fibonacci_cycle_mod6, {2, 2, 4, 0, 4, 4, 2, 0}, {3, 3, 0}, {0}};

// The Fibonacci cycle mod 14, its entrywise 3x and 5x scalings (48 terms
// each, 144 in total), and 52 further terms in five cycles.
inline const system_listing gibonacci_system_mod14 = [] {
  system_listing listing;
  listing.push_back(fibonacci_cycle_mod14);
  listing.push_back(scale_residues(fibonacci_cycle_mod14, 3, 14));
  listing.push_back(scale_residues(fibonacci_cycle_mod14, 5, 14));
  listing.push_back({2, 2, 4, 6, 10, 2, 12, 0, 12, 12, 10, 8, 4, 12, 2, 0});
  listing.push_back({4, 4, 8, 12, 6, 4, 10, 0, 10, 10, 6, 2, 8, 10, 4, 0});
  listing.push_back({6, 6, 12, 4, 2, 6, 8, 0, 8, 8, 2, 10, 12, 8, 6, 0});
  listing.push_back({7, 7, 0});
  listing.push_back({0});
  return listing;
}();

inline const system_listing tribonacci_system_mod2{
    {0}, {1}, {1, 1, 0, 0}, {1, 0}};

// ---------------------------------------------------------------------------
// Cycle lengths mod selected m, the same for every coprime order-2 seed.
// Mod 3^j the shared length is 8 * 3^(j-1).

inline constexpr std::array<std::pair<i64, i64>, 5> uniform_cycle_lengths{
    {{2, 3}, {4, 6}, {6, 24}, {7, 16}, {14, 48}}};

// ---------------------------------------------------------------------------
// 300-prime completeness survey of the Tribonacci sequences seeded
// (1, 1, 1) and (1, 1, 2): complete counts per 20 primes, per 100 primes,
// cumulative percentages after each 100, and totals.

struct survey_reference {
  std::array<int, 15> complete_by_20;
  std::array<int, 3> complete_by_100;
  std::array<double, 3> cumulative_percent;
  int total_complete;
};

inline constexpr survey_reference tribonacci_a_survey{
    {12, 11, 11, 14, 14, 12, 12, 11, 16, 8, 10, 14, 9, 15, 15},
    {62, 59, 63},
    {62.0, 60.5, 61.3},
    184};

inline constexpr survey_reference tribonacci_b_survey{
    {16, 12, 12, 12, 12, 12, 11, 12, 14, 10, 11, 12, 12, 12, 14},
    {64, 59, 61},
    {64.0, 61.5, 61.3},
    184};

// First and last prime of each bucket of 20.
inline constexpr std::array<std::pair<i64, i64>, 15> prime_bucket20_ranges{
    {{2, 71},     {73, 173},    {179, 281},   {283, 409},   {419, 541},
     {547, 659},  {661, 809},   {811, 941},   {947, 1069},  {1087, 1223},
     {1229, 1373}, {1381, 1511}, {1523, 1657}, {1663, 1811}, {1823, 1987}}};

}  // namespace gib::reference
