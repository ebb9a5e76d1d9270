#include "padcat/prove.hpp"

#include <chrono>
#include <ctime>

namespace padcat {

namespace {

std::string utc_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ProofCertificate run_prove(const ProveOptions& options) {
  const Prec prec = digits_to_bits(options.precision_digits);

  ProofCertificate cert;
  cert.mode = mode_name(options.mode);
  cert.precision_digits = options.precision_digits;
  if (options.with_timestamp) cert.generated_at = utc_now();

  // 1. Desk-scale search.
  cert.search_n_max = options.search_n_max;
  auto records = brute_force(static_cast<std::size_t>(options.search_n_max), options.threads);
  for (const auto& r : records)
    cert.solutions.push_back({static_cast<long>(r.n), r.concat.d1(), r.concat.d2(),
                              r.concat.l1(), r.concat.l2(), r.value.get_str()});

  // 2. Lemma-4 initial bounds.
  InitialBounds init = initial_bounds(options.mode, prec);
  cert.initial.n_max = ball_repr(init.n_max);
  cert.initial.l_total_max = ball_repr(init.l_total_max);
  cert.initial.step1_coefficient = ball_repr(init.step1_coefficient);
  cert.initial.step2_coefficient = ball_repr(init.step2_coefficient);
  cert.initial.computed_n_max = ball_repr(init.computed_n_max);
  cert.initial.computed_l_total = ball_repr(init.computed_l_total);

  // 3. Reduction rounds.
  TauContext ctx = make_tau_context(prec);
  cert.reduction_m = ctx.M.get_str();

  Round1Result r1 = reduction_round1(ctx);
  cert.round1.q_used = r1.q_used.get_str();
  for (const auto& d : r1.per_d1)
    cert.round1.per_d1.push_back({d.d1, d.outcome.q_used.get_str(),
                                  ball_repr(d.outcome.epsilon),
                                  static_cast<long>(d.outcome.w_bound.get_si()),
                                  static_cast<long>(d.outcome.convergent_index) + 1});
  cert.round1.min_epsilon = ball_repr(r1.min_epsilon);
  cert.round1.l1_bound = r1.l1_bound;

  Round2Result r2 = reduction_round2(ctx, r1.l1_bound, options.threads);
  cert.round2.instance_count = static_cast<long>(r2.instance_count);
  cert.round2.min_epsilon = ball_repr(r2.min_epsilon);
  cert.round2.min_first_epsilon = ball_repr(r2.min_first_epsilon);
  cert.round2.n_bound = r2.n_bound;
  cert.round2.failures = static_cast<long>(r2.failures.size());

  // 4. Closure.
  ClosureCertificate closure =
      closure_check(BigInt(r2.n_bound), static_cast<std::size_t>(options.search_n_max));
  cert.closed = r2.failures.empty() && closure.closed;
  return cert;
}

}  // namespace padcat
