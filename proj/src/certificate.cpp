#include "padcat/certificate.hpp"

#include <sstream>

namespace padcat {

using nlohmann::json;

BallRepr ball_repr(const RealBall& b, long digits) {
  return {b.midpoint_string(digits), b.radius_string(), digits};
}

bool ProofCertificate::operator==(const ProofCertificate& other) const {
  return schema_version == other.schema_version && tool_version == other.tool_version &&
         mode == other.mode && precision_digits == other.precision_digits &&
         search_n_max == other.search_n_max && solutions == other.solutions &&
         initial == other.initial && reduction_m == other.reduction_m &&
         round1 == other.round1 && round2 == other.round2 && closed == other.closed;
}

namespace {

json to_json(const BallRepr& b) {
  return json{{"midpoint", b.midpoint}, {"radius", b.radius}, {"digits", b.digits}};
}

BallRepr ball_from(const json& j) {
  BallRepr b;
  j.at("midpoint").get_to(b.midpoint);
  j.at("radius").get_to(b.radius);
  j.at("digits").get_to(b.digits);
  return b;
}

}  // namespace

void to_json(json& j, const ProofCertificate& c) {
  json sols = json::array();
  for (const auto& s : c.solutions)
    sols.push_back(json{{"n", s.n},
                        {"d1", s.d1},
                        {"d2", s.d2},
                        {"l1", s.l1},
                        {"l2", s.l2},
                        {"value", s.value}});
  json per_d1 = json::array();
  for (const auto& d : c.round1.per_d1)
    per_d1.push_back(json{{"d1", d.d1},
                          {"q", d.q},
                          {"epsilon", to_json(d.epsilon)},
                          {"w_bound", d.w_bound},
                          {"convergent", d.convergent}});
  j = json{
      {"schema_version", c.schema_version},
      {"tool_version", c.tool_version},
      {"generated_at", c.generated_at},
      {"mode", c.mode},
      {"precision_digits", c.precision_digits},
      {"search", json{{"n_max", c.search_n_max}, {"solutions", sols}}},
      {"initial_bounds",
       json{{"n_max", to_json(c.initial.n_max)},
            {"l_total_max", to_json(c.initial.l_total_max)},
            {"step1_coefficient", to_json(c.initial.step1_coefficient)},
            {"step2_coefficient", to_json(c.initial.step2_coefficient)},
            {"computed_n_max", to_json(c.initial.computed_n_max)},
            {"computed_l_total", to_json(c.initial.computed_l_total)}}},
      {"reduction_m", c.reduction_m},
      {"round1",
       json{{"q_used", c.round1.q_used},
            {"per_d1", per_d1},
            {"min_epsilon", to_json(c.round1.min_epsilon)},
            {"l1_bound", c.round1.l1_bound}}},
      {"round2",
       json{{"instance_count", c.round2.instance_count},
            {"min_epsilon", to_json(c.round2.min_epsilon)},
            {"min_first_epsilon", to_json(c.round2.min_first_epsilon)},
            {"n_bound", c.round2.n_bound},
            {"failures", c.round2.failures}}},
      {"closed", c.closed},
  };
}

void from_json(const json& j, ProofCertificate& c) {
  j.at("schema_version").get_to(c.schema_version);
  j.at("tool_version").get_to(c.tool_version);
  j.at("generated_at").get_to(c.generated_at);
  j.at("mode").get_to(c.mode);
  j.at("precision_digits").get_to(c.precision_digits);
  const json& search = j.at("search");
  search.at("n_max").get_to(c.search_n_max);
  c.solutions.clear();
  for (const auto& s : search.at("solutions")) {
    CertSolution sol;
    s.at("n").get_to(sol.n);
    s.at("d1").get_to(sol.d1);
    s.at("d2").get_to(sol.d2);
    s.at("l1").get_to(sol.l1);
    s.at("l2").get_to(sol.l2);
    s.at("value").get_to(sol.value);
    c.solutions.push_back(std::move(sol));
  }
  const json& init = j.at("initial_bounds");
  c.initial.n_max = ball_from(init.at("n_max"));
  c.initial.l_total_max = ball_from(init.at("l_total_max"));
  c.initial.step1_coefficient = ball_from(init.at("step1_coefficient"));
  c.initial.step2_coefficient = ball_from(init.at("step2_coefficient"));
  c.initial.computed_n_max = ball_from(init.at("computed_n_max"));
  c.initial.computed_l_total = ball_from(init.at("computed_l_total"));
  j.at("reduction_m").get_to(c.reduction_m);
  const json& r1 = j.at("round1");
  r1.at("q_used").get_to(c.round1.q_used);
  c.round1.per_d1.clear();
  for (const auto& d : r1.at("per_d1")) {
    CertRound1Digit row;
    d.at("d1").get_to(row.d1);
    d.at("q").get_to(row.q);
    row.epsilon = ball_from(d.at("epsilon"));
    d.at("w_bound").get_to(row.w_bound);
    d.at("convergent").get_to(row.convergent);
    c.round1.per_d1.push_back(std::move(row));
  }
  c.round1.min_epsilon = ball_from(r1.at("min_epsilon"));
  r1.at("l1_bound").get_to(c.round1.l1_bound);
  const json& r2 = j.at("round2");
  r2.at("instance_count").get_to(c.round2.instance_count);
  c.round2.min_epsilon = ball_from(r2.at("min_epsilon"));
  c.round2.min_first_epsilon = ball_from(r2.at("min_first_epsilon"));
  r2.at("n_bound").get_to(c.round2.n_bound);
  r2.at("failures").get_to(c.round2.failures);
  j.at("closed").get_to(c.closed);
}

std::string render_text(const ProofCertificate& c) {
  std::ostringstream os;
  os << "padcat proof certificate (schema " << c.schema_version << ", tool "
     << c.tool_version << ")\n";
  os << "mode: " << c.mode << "   precision: " << c.precision_digits << " digits\n\n";
  os << "search n <= " << c.search_n_max << ": " << c.solutions.size()
     << " solutions\n";
  for (const auto& s : c.solutions)
    os << "  P_" << s.n << " = " << s.value << "  (d1=" << s.d1 << ", d2=" << s.d2
       << ", l1=" << s.l1 << ", l2=" << s.l2 << ")\n";
  os << "\ninitial bounds: n < " << c.initial.n_max.midpoint << ",  l1+l2 < "
     << c.initial.l_total_max.midpoint << "\n";
  os << "reduction M = " << c.reduction_m << "\n\n";
  os << "round 1 (q = " << c.round1.q_used << "):\n";
  for (const auto& d : c.round1.per_d1)
    os << "  d1=" << d.d1 << "  eps=" << d.epsilon.midpoint << "  w<=" << d.w_bound
       << "\n";
  os << "  min eps = " << c.round1.min_epsilon.midpoint
     << "   l1 <= " << c.round1.l1_bound << "\n\n";
  os << "round 2 (" << c.round2.instance_count << " instances):\n";
  os << "  min eps = " << c.round2.min_epsilon.midpoint
     << "   n <= " << c.round2.n_bound << "   failures: " << c.round2.failures
     << "\n\n";
  os << "closed: " << (c.closed ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace padcat
