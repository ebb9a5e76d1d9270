#include "padcat/search.hpp"

#include <algorithm>
#include <thread>

namespace padcat {

std::vector<SolutionRecord> brute_force(std::size_t n_max, int threads) {
  padovan(n_max);  // pre-fill the shared cache

  auto scan = [](std::size_t begin, std::size_t end, std::vector<SolutionRecord>& out) {
    for (std::size_t n = begin; n < end; ++n) {
      BigInt value = padovan(n);
      if (auto rc = parse_concat(value))
        out.push_back({n, *rc, std::move(value)});
    }
  };

  int nthreads = std::max(1, threads);
  std::vector<SolutionRecord> records;
  if (nthreads == 1) {
    scan(0, n_max + 1, records);
  } else {
    std::vector<std::vector<SolutionRecord>> parts(nthreads);
    std::vector<std::thread> pool;
    std::size_t total = n_max + 1;
    std::size_t chunk = (total + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
      std::size_t b = std::min(total, w * chunk);
      std::size_t e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(scan, b, e, std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts)
      records.insert(records.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
    std::sort(records.begin(), records.end(),
              [](const SolutionRecord& x, const SolutionRecord& y) { return x.n < y.n; });
  }
  return records;
}

bool verify_solution(std::size_t n, const RepdigitConcat& rc) {
  return padovan(n) == rc.value();
}

ClosureCertificate closure_check(const BigInt& n_reduced, std::size_t n_search) {
  ClosureCertificate cert;
  cert.n_reduced = n_reduced;
  cert.n_search = n_search;
  cert.closed = n_reduced < static_cast<long>(n_search);
  return cert;
}

}  // namespace padcat
