#pragma once

#include <cstddef>
#include <vector>

#include "padcat/repdigits.hpp"
#include "padcat/sequences.hpp"

namespace padcat {

struct SolutionRecord {
  std::size_t n = 0;
  RepdigitConcat concat{1, 0, 1, 1};
  BigInt value;

  bool operator==(const SolutionRecord& other) const = default;
};

// Scans P_0..P_{n_max} for two-block distinct-repdigit concatenations.
// Records are returned in ascending n; repeated Padovan values at distinct
// indices are reported per index.
std::vector<SolutionRecord> brute_force(std::size_t n_max, int threads = 1);

// padovan(n) == value(rc)?
bool verify_solution(std::size_t n, const RepdigitConcat& rc);

struct ClosureCertificate {
  BigInt n_reduced;
  std::size_t n_search = 0;
  bool closed = false;
};

// The theorem closes when the reduced bound falls strictly inside the
// searched range.
ClosureCertificate closure_check(const BigInt& n_reduced, std::size_t n_search);

}  // namespace padcat
