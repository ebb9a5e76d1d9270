// padcat: CLI for the Padovan two-repdigit-concatenation proof pipeline.
//
// Exit codes: 0 success (prove: certificate closed), 2 certificate not
// closed, 3 precision/certification failure, 4 bad input.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "padcat/prove.hpp"

using namespace padcat;
using nlohmann::json;

namespace {

struct OutputTarget {
  std::string format = "text";
  std::string path;

  void emit(const std::string& text, const json& j) const {
    std::string payload = format == "json" ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream os(path);
      if (!os) throw std::runtime_error("cannot open output file: " + path);
      os << payload;
    }
  }
};

void add_output_flags(CLI::App* cmd, OutputTarget& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", out.path, "Write output to a file instead of stdout");
}

json ball_json(const RealBall& b, long digits = 30) {
  BallRepr r = ball_repr(b, digits);
  return json{{"midpoint", r.midpoint}, {"radius", r.radius}, {"digits", r.digits}};
}

int cmd_search(long n_max, int threads, const OutputTarget& out) {
  auto records = brute_force(static_cast<std::size_t>(n_max), threads);
  std::string text = "n      value            d1 d2 l1 l2\n";
  json arr = json::array();
  for (const auto& r : records) {
    char line[160];
    std::snprintf(line, sizeof line, "%-6zu %-16s %d  %d  %ld  %ld\n", r.n,
                  r.value.get_str().c_str(), r.concat.d1(), r.concat.d2(),
                  r.concat.l1(), r.concat.l2());
    text += line;
    arr.push_back(json{{"n", r.n},
                       {"d1", r.concat.d1()},
                       {"d2", r.concat.d2()},
                       {"l1", r.concat.l1()},
                       {"l2", r.concat.l2()},
                       {"value", r.value.get_str()}});
  }
  text += "total: " + std::to_string(records.size()) + "\n";
  out.emit(text, arr);
  return 0;
}

int cmd_prove(const ProveOptions& options, const OutputTarget& out, const std::string& json_path) {
  ProofCertificate cert = run_prove(options);
  json j = cert;
  if (!json_path.empty()) {
    std::ofstream os(json_path);
    if (!os) throw std::runtime_error("cannot open output file: " + json_path);
    os << j.dump(2) << "\n";
  }
  out.emit(render_text(cert), j);
  return cert.closed ? 0 : 2;
}

int cmd_cf(const std::string& selector, std::optional<long> terms, std::optional<long> index,
           long digits, const OutputTarget& out) {
  const Prec prec = digits_to_bits(digits);
  ContinuedFraction cf;
  if (selector == "tau") {
    ConstantFn tau_fn = [](Prec p) {
      CubicData c = compute_cubic(p);
      return log_int(10, p) / log(c.alpha);
    };
    std::size_t want_terms = terms ? static_cast<std::size_t>(*terms) : 31;
    if (index) want_terms = std::max(want_terms, static_cast<std::size_t>(*index));
    cf = continued_fraction(tau_fn, want_terms, BigInt(0), prec);
  } else if (selector.rfind("rational:", 0) == 0) {
    std::string body = selector.substr(9);
    auto slash = body.find('/');
    BigInt num(slash == std::string::npos ? body : body.substr(0, slash), 10);
    BigInt den(slash == std::string::npos ? std::string("1") : body.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("rational selector: zero denominator");
    BigRat x(num, den);
    x.canonicalize();
    cf = ContinuedFraction::of_rational(x);
  } else {
    throw std::invalid_argument("unknown constant selector: " + selector +
                                " (expected 'tau' or 'rational:<p>/<q>')");
  }

  std::size_t shown = cf.size();
  if (terms) shown = std::min<std::size_t>(shown, static_cast<std::size_t>(*terms));
  std::string text = "quotients:";
  json jq = json::array();
  for (std::size_t i = 0; i < shown; ++i) {
    text += " " + cf.quotients()[i].get_str();
    jq.push_back(cf.quotients()[i].get_str());
  }
  text += "\n";
  json jconv = json::array();
  if (index) {
    // 1-based convergent number: convergent k uses quotients a_0..a_{k-1}.
    if (*index < 1 || static_cast<std::size_t>(*index) > cf.size())
      throw std::invalid_argument("convergent index out of range (have " +
                                  std::to_string(cf.size()) + " quotients)");
    std::size_t k = static_cast<std::size_t>(*index) - 1;
    text += "p_" + std::to_string(*index) + " = " + cf.p(k).get_str() + "\n";
    text += "q_" + std::to_string(*index) + " = " + cf.q(k).get_str() + "\n";
    jconv.push_back(json{{"index", *index}, {"p", cf.p(k).get_str()}, {"q", cf.q(k).get_str()}});
  }
  out.emit(text, json{{"selector", selector}, {"quotients", jq}, {"convergents", jconv}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"padcat: certified search and proof pipeline for Padovan numbers "
               "that are concatenations of two distinct repdigits"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a config file");

  // search
  auto* search = app.add_subcommand("search", "Brute-force scan of P_0..P_n_max");
  long search_n_max = 500;
  int search_threads = 1;
  OutputTarget search_out;
  search->add_option("--n-max", search_n_max, "Scan cutoff")->capture_default_str();
  search->add_option("--threads", search_threads, "Worker threads")->capture_default_str();
  add_output_flags(search, search_out);

  // prove
  auto* prove = app.add_subcommand("prove", "Run the full proof pipeline and emit a certificate");
  ProveOptions popt;
  std::string prove_mode = "paper";
  std::string prove_json_path;
  OutputTarget prove_out;
  prove->add_option("--mode", prove_mode, "certified | paper")
      ->check(CLI::IsMember({"certified", "paper"}))
      ->capture_default_str();
  prove->add_option("--precision", popt.precision_digits, "Working precision in decimal digits")
      ->capture_default_str();
  prove->add_option("--n-max", popt.search_n_max, "Search cutoff")->capture_default_str();
  prove->add_option("--threads", popt.threads, "Worker threads")->capture_default_str();
  prove->add_option("--json-output", prove_json_path, "Also write the JSON certificate here");
  prove->add_flag("!--no-timestamp", popt.with_timestamp, "Omit the generated_at field");
  add_output_flags(prove, prove_out);

  // cf
  auto* cfcmd = app.add_subcommand("cf", "Certified continued fraction of a constant");
  std::string selector = "tau";
  std::optional<long> cf_terms, cf_index;
  long cf_digits = kDefaultDigits;
  OutputTarget cf_out;
  cfcmd->add_option("selector", selector, "tau | rational:<p>/<q>")->capture_default_str();
  cfcmd->add_option("--terms", cf_terms, "Number of partial quotients to print");
  cfcmd->add_option("--index", cf_index, "Print the k-th convergent (1-based)");
  cfcmd->add_option("--precision", cf_digits, "Working precision in decimal digits")
      ->capture_default_str();
  add_output_flags(cfcmd, cf_out);

  // bound
  auto* bound = app.add_subcommand("bound", "Ad-hoc bound queries");
  bound->require_subcommand(1);
  auto* matveev = bound->add_subcommand("matveev", "Matveev/BMS lower-bound product");
  long mt = 3, mD = 3;
  std::string mB = "1";
  std::vector<std::string> mA;
  long m_digits = kDefaultDigits;
  OutputTarget m_out;
  matveev->add_option("--t", mt, "Number of logarithms")->capture_default_str();
  matveev->add_option("--D", mD, "Field degree")->capture_default_str();
  matveev->add_option("--B", mB, "Exponent bound")->capture_default_str();
  matveev->add_option("--A", mA, "A_i values (repeat t times)")->required();
  matveev->add_option("--precision", m_digits)->capture_default_str();
  add_output_flags(matveev, m_out);

  auto* gl = bound->add_subcommand("guzman-luca", "2^r H (log H)^r collapse bound");
  long gr = 2;
  std::string gH;
  long g_digits = kDefaultDigits;
  OutputTarget g_out;
  gl->add_option("--r", gr)->capture_default_str();
  gl->add_option("--H", gH)->required();
  gl->add_option("--precision", g_digits)->capture_default_str();
  add_output_flags(gl, g_out);

  auto* initial = bound->add_subcommand("initial", "Full initial-bound chain (Lemma 4)");
  std::string i_mode = "paper";
  long i_digits = kDefaultDigits;
  OutputTarget i_out;
  initial->add_option("--mode", i_mode)->check(CLI::IsMember({"certified", "paper"}))
      ->capture_default_str();
  initial->add_option("--precision", i_digits)->capture_default_str();
  add_output_flags(initial, i_out);

  auto* szrel = bound->add_subcommand("size-relation", "Certified n-interval for a digit count");
  long sz_l = 2;
  long sz_digits = kDefaultDigits;
  OutputTarget sz_out;
  szrel->add_option("--l-total", sz_l, "l1 + l2")->required();
  szrel->add_option("--precision", sz_digits)->capture_default_str();
  add_output_flags(szrel, sz_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (*search) return cmd_search(search_n_max, search_threads, search_out);
    if (*prove) {
      popt.mode = mode_from_name(prove_mode);
      return cmd_prove(popt, prove_out, prove_json_path);
    }
    if (*cfcmd) return cmd_cf(selector, cf_terms, cf_index, cf_digits, cf_out);
    if (*matveev) {
      const Prec prec = digits_to_bits(m_digits);
      MatveevInput in;
      in.t = mt;
      in.D = mD;
      in.B = RealBall::of_decimal(mB, prec);
      for (const auto& s : mA) in.A.push_back(RealBall::of_decimal(s, prec));
      RealBall v = matveev_bound(in);
      m_out.emit("V = " + v.to_string(20) + "   (log|Lambda| > -V)\n",
                 json{{"value", ball_json(v)}});
      return 0;
    }
    if (*gl) {
      const Prec prec = digits_to_bits(g_digits);
      RealBall v = guzman_luca(gr, RealBall::of_decimal(gH, prec));
      g_out.emit("L_max = " + v.to_string(20) + "\n", json{{"value", ball_json(v)}});
      return 0;
    }
    if (*initial) {
      InitialBounds ib = initial_bounds(mode_from_name(i_mode), digits_to_bits(i_digits));
      std::string text = "n_max      = " + ib.n_max.to_string(15) + "\n" +
                         "l_total    = " + ib.l_total_max.to_string(15) + "\n" +
                         "computed n = " + ib.computed_n_max.to_string(15) + "\n" +
                         "computed l = " + ib.computed_l_total.to_string(15) + "\n";
      i_out.emit(text, json{{"mode", i_mode},
                            {"n_max", ball_json(ib.n_max)},
                            {"l_total_max", ball_json(ib.l_total_max)},
                            {"computed_n_max", ball_json(ib.computed_n_max)},
                            {"computed_l_total", ball_json(ib.computed_l_total)}});
      return 0;
    }
    if (*szrel) {
      IntInterval iv = size_relation(BigInt(sz_l), digits_to_bits(sz_digits));
      sz_out.emit("n in [" + iv.lo.get_str() + ", " + iv.hi.get_str() + "]\n",
                  json{{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}});
      return 0;
    }
  } catch (const PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return 3;
  } catch (const ReductionError& e) {
    std::cerr << "reduction failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
