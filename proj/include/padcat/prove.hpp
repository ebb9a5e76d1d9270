#pragma once

#include "padcat/certificate.hpp"

namespace padcat {

struct ProveOptions {
  Mode mode = Mode::Paper;
  long precision_digits = kDefaultDigits;
  long search_n_max = 500;
  int threads = 1;
  bool with_timestamp = true;
};

// Full pipeline: brute-force search, initial bounds, both reduction rounds,
// closure check. Every bound in the returned certificate is certified;
// failures leave closed = false.
ProofCertificate run_prove(const ProveOptions& options);

}  // namespace padcat
