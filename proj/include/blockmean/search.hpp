#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "blockmean/canon.hpp"
#include "blockmean/lemmas.hpp"
#include "blockmean/polynomial.hpp"

namespace blockmean {

enum class Family { Block, Connected };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);  // "block" | "connected"

struct SearchResult {
  Family family = Family::Block;
  int n = 0;
  std::size_t count = 0;
  Rational min_mean, max_mean;
  std::vector<CanonicalCert> argmin, argmax;  // sorted, every attaining class
  std::chrono::duration<double> elapsed{};
};

// Exact minimum and maximum mean CIS order over every class of the family.
SearchResult extremal_scan(Family family, int n, int workers = 1);

// Unique minimizer is P_n with minimum (n+2)/3.
Verdict check_min_theorem(const SearchResult& result);
Verdict check_min_theorem(int n, int workers = 1);

// n in {3,4}: the unique maximizer is K_n. n >= 5: every maximizer is a caterpillar.
Verdict check_max_conjecture(const SearchResult& result);
Verdict check_max_conjecture(int n, int workers = 1);

}  // namespace blockmean
