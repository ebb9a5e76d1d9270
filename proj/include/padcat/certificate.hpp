#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "padcat/bounds.hpp"
#include "padcat/reduction.hpp"
#include "padcat/search.hpp"

namespace padcat {

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Lossless, language-neutral rendering of a ball.
struct BallRepr {
  std::string midpoint;
  std::string radius;
  long digits = 0;

  bool operator==(const BallRepr&) const = default;
};

BallRepr ball_repr(const RealBall& b, long digits = 30);

struct CertSolution {
  long n = 0;
  int d1 = 0, d2 = 0;
  long l1 = 0, l2 = 0;
  std::string value;

  bool operator==(const CertSolution&) const = default;
};

struct CertRound1Digit {
  int d1 = 0;
  std::string q;
  BallRepr epsilon;
  long w_bound = 0;
  long convergent = 0;  // 1-based convergent number

  bool operator==(const CertRound1Digit&) const = default;
};

// Machine-readable record of every intermediate bound of the proof pipeline.
struct ProofCertificate {
  int schema_version = kCertificateSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string generated_at;  // ignored by equality; may be empty
  std::string mode;
  long precision_digits = 0;

  long search_n_max = 0;
  std::vector<CertSolution> solutions;

  struct Initial {
    BallRepr n_max;
    BallRepr l_total_max;
    BallRepr step1_coefficient;
    BallRepr step2_coefficient;
    BallRepr computed_n_max;
    BallRepr computed_l_total;

    bool operator==(const Initial&) const = default;
  } initial;

  std::string reduction_m;

  struct Round1 {
    std::string q_used;
    std::vector<CertRound1Digit> per_d1;
    BallRepr min_epsilon;
    long l1_bound = 0;

    bool operator==(const Round1&) const = default;
  } round1;

  struct Round2 {
    long instance_count = 0;
    BallRepr min_epsilon;
    BallRepr min_first_epsilon;
    long n_bound = 0;
    long failures = 0;

    bool operator==(const Round2&) const = default;
  } round2;

  bool closed = false;

  bool operator==(const ProofCertificate& other) const;
};

void to_json(nlohmann::json& j, const ProofCertificate& c);
void from_json(const nlohmann::json& j, ProofCertificate& c);

std::string render_text(const ProofCertificate& c);

}  // namespace padcat
