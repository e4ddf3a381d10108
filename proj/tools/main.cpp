// biquad: command-line front end for the embedding criteria, the census and
// the constant/table checks.

#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "biquad/asymptotics.hpp"
#include "biquad/census.hpp"
#include "biquad/embed.hpp"
#include "biquad/fields.hpp"
#include "biquad/weights.hpp"
#include "json.hpp"
#include "output.hpp"
#include "verify.hpp"

using namespace biquad;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string rational_string(Rational r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double rational_value(Rational r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

json euler_json(const EulerProduct& e) { return {{"value", e.value}, {"tail_bound", e.tail_bound}}; }

std::array<int, 6> parse_six(const std::string& text, const char* what) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::array<int, 6> out{};
  std::istringstream is(s);
  int n = 0;
  if (s.find(' ') == std::string::npos && s.size() == 6) {
    for (int i = 0; i < 6; ++i) out[i] = s[i] - '0';
    n = 6;
  } else {
    while (n < 6 && is >> out[n]) ++n;
    std::string rest;
    if (n != 6 || (is >> rest)) throw InvalidInput(std::string(what) + " needs six entries");
  }
  return out;
}

cli::Row parse_row(const std::string& text) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream is(s);
  cli::Row r{};
  for (int& v : r) {
    if (!(is >> v)) throw InvalidInput("a table row needs four integers");
  }
  std::string rest;
  if (is >> rest) throw InvalidInput("a table row needs four integers");
  return r;
}

int run_classify(i64 d1, i64 d2, const std::string& format) {
  const AdmissibleTriple t = AdmissibleTriple::from_pair(d1, d2);
  const AdmissibleTriple c = canonicalize(d1, d2);
  const D4Verdict d4 = admits_d4(d1, d2);
  const bool q8 = admits_q8(d1, d2);
  const std::array<bool, 3> c4{admits_c4(t.d1()), admits_c4(t.d2()), admits_c4(t.d3())};
  const std::string disc = t.discriminant_decimal();
  if (format == "csv") {
    std::cout << "d1,d2,d3,canonical,type,discriminant,signature,q8,d4,d4_cyclic_m1,d4_cyclic_m2,d4_cyclic_m3,"
                 "c4_d1,c4_d2,c4_d3\r\n";
    std::cout << t.d1() << ',' << t.d2() << ',' << t.d3() << ",\"" << c.d1() << ' ' << c.d2() << ' ' << c.d3()
              << "\"," << t.type() << ',' << disc << ',' << to_string(t.signature()) << ',' << q8 << ','
              << d4.overall << ',' << d4.cyclic_over[0] << ',' << d4.cyclic_over[1] << ',' << d4.cyclic_over[2]
              << ',' << c4[0] << ',' << c4[1] << ',' << c4[2] << "\r\n";
    return kExitOk;
  }
  json j;
  j["schema_version"] = cli::kSchemaVersion;
  j["command"] = "classify";
  j["d1"] = t.d1();
  j["d2"] = t.d2();
  j["d3"] = t.d3();
  j["canonical"] = c.values();
  j["type"] = t.type();
  j["discriminant"] = disc.size() < 20 ? json(std::stoull(disc)) : json(disc);
  j["signature"] = to_string(t.signature());
  j["q8"] = q8;
  j["d4"] = {{"overall", d4.overall}, {"cyclic_over", d4.cyclic_over}};
  j["c4"] = json::array();
  for (int i = 0; i < 3; ++i) j["c4"].push_back({{"d", t.values()[i]}, {"admits", c4[i]}});
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_census(u64 x, const std::string& group, const std::string& format, int threads, u64 prime_bound) {
  if (x < 1 || x > kMaxCensusX) throw InvalidInput("--x must be in [1, 10^12]");
  if (threads < 1) throw InvalidInput("--threads must be >= 1");
  if (prime_bound < 100) throw InvalidInput("--prime-bound must be >= 100");
  const Group g = parse_group(group);
  std::cerr << "census: X=" << x << " group=" << to_string(g) << " threads=" << threads << '\n';
  const CensusReport r = census_exact(x, g, threads, prime_bound);
  std::cerr << "census: done in " << r.seconds << " s\n";
  const cli::CensusOutput out = cli::to_output(r);
  if (format == "json") {
    std::cout << json(out).dump(2) << '\n';
  } else {
    cli::write_csv(std::cout, out);
  }
  return kExitOk;
}

int run_constants(u64 prime_bound) {
  if (prime_bound < 100) throw InvalidInput("--prime-bound must be >= 100");
  const Constants c = compute_constants(prime_bound);
  json j;
  j["schema_version"] = cli::kSchemaVersion;
  j["command"] = "constants";
  j["prime_bound"] = prime_bound;
  j["kappa_kernel"] = euler_json(c.kappa_kernel);
  j["lambda_kernel"] = euler_json(c.lambda_kernel);
  j["lambda_odd_kernel"] = euler_json(c.lambda_odd_kernel);
  j["kappa0"] = c.kappa0;
  j["lambda0"] = c.lambda0;
  j["lambda0_odd_form"] = c.lambda0_odd_form;
  j["lambda0_two_path_residual"] = std::abs(c.lambda0 - c.lambda0_odd_form);

  const double root2pi = std::sqrt(2 * std::numbers::pi);
  j["K"] = json::array();
  for (Group g : {Group::Q8, Group::D4}) {
    for (SignPair sigma : kAllSignPairs) {
      const Rational r = k_coefficient(g, sigma);
      j["K"].push_back({{"group", to_string(g)},
                        {"sigma", to_string(sigma)},
                        {"coefficient_of_kappa0_over_sqrt2", rational_string(r)},
                        {"value", k_constant(g, sigma, c)}});
    }
  }
  j["c"] = json::array();
  for (Group g : {Group::Q8, Group::D4}) {
    for (Signature s : {Signature::TotallyReal, Signature::TotallyComplex}) {
      double k_sum = 0;
      for (SignPair sigma : sign_pairs_of(s)) k_sum += k_constant(g, sigma, c);
      const double residual = std::abs(k_sum * root2pi / c.kappa_kernel.value - rational_value(c_closed_form(g, s)));
      const std::string key = std::string("c_") + (s == Signature::TotallyReal ? "plus_" : "minus_") + to_string(g);
      j["c"].push_back({{"group", to_string(g)},
                        {"signature", to_string(s)},
                        {"closed_form", rational_string(c_closed_form(g, s))},
                        {"assembled", rational_string(c_assembled(g, s))},
                        {"residual", residual}});
      j[key + "_check"] = residual;
    }
  }
  j["biquadratic"] = json::array();
  for (SignPair sigma : kAllSignPairs) {
    j["biquadratic"].push_back({{"sigma", to_string(sigma)}, {"coefficient_of_lambda0", rational_string(b_coefficient(sigma))}});
  }
  j["c_biquadratic"] = {{"real", rational_string(c_biquad(Signature::TotallyReal))},
                        {"complex", rational_string(c_biquad(Signature::TotallyComplex))}};
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

cli::TableExpectations expectations(const std::string& q8_row) {
  cli::TableExpectations e;
  if (!q8_row.empty()) e.q8 = parse_row(q8_row);
  return e;
}

int run_tables(const std::string& q8_row) {
  bool ok = true;
  for (const cli::TableRow& r : cli::compute_tables(expectations(q8_row))) {
    std::cout << r.label << ':';
    for (int v : r.computed) std::cout << ' ' << v;
    std::cout << ' ' << (r.pass() ? "PASS" : "FAIL");
    if (!r.pass()) {
      std::cout << " (expected";
      for (int v : r.expected) std::cout << ' ' << v;
      std::cout << ')';
    }
    std::cout << '\n';
    ok = ok && r.pass();
  }
  return ok ? kExitOk : kExitFail;
}

int run_verify(i64 bound, const std::string& q8_row) {
  if (bound < 2 || bound > 1000) throw InvalidInput("--bound must be in [2, 1000]");
  const auto expect = expectations(q8_row);
  std::cerr << "verify: bound " << bound << '\n';
  bool ok = true;
  for (const cli::Check& c : cli::run_verify(bound, expect)) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.pass) std::cout << ": " << c.counterexample;
    std::cout << '\n';
    ok = ok && c.pass;
  }
  return ok ? kExitOk : kExitFail;
}

int run_charsum(u64 x, const std::string& w_text, const std::string& delta_text) {
  if (x < 1) throw InvalidInput("--x must be >= 1");
  const ResidueTuple w(parse_six(w_text, "--w"));
  const DeltaMask delta(parse_six(delta_text, "--delta"));
  const Dyadic v = g_w_direct(x, w, delta);
  json j;
  j["schema_version"] = cli::kSchemaVersion;
  j["command"] = "charsum";
  j["x"] = x;
  j["w"] = w.values();
  j["delta"] = delta.values();
  j["value"] = v.to_string();
  j["numerator"] = v.numerator();
  j["exponent"] = v.exponent();
  j["approx"] = v.to_double();
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q8 and D4 embeddings of biquadratic fields"};
  app.require_subcommand(1);

  i64 d1 = 0, d2 = 0;
  std::string classify_format = "json";
  auto* classify = app.add_subcommand("classify", "Classify the field Q(sqrt d1, sqrt d2)");
  classify->add_option("d1", d1)->required();
  classify->add_option("d2", d2)->required();
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"json", "csv"}));

  u64 census_x = 0;
  std::string group = "none", census_format = "csv";
  int threads = std::max(1u, std::thread::hardware_concurrency());
  u64 census_prime_bound = kDefaultPrimeBound;
  auto* census = app.add_subcommand("census", "Exact field counts against the predicted main terms");
  census->add_option("--x", census_x, "Discriminant bound")->required();
  census->add_option("--group", group)->check(CLI::IsMember({"q8", "d4", "none"}, CLI::ignore_case));
  census->add_option("--format", census_format)->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--threads", threads);
  census->add_option("--prime-bound", census_prime_bound);

  u64 prime_bound = kDefaultPrimeBound;
  auto* constants = app.add_subcommand("constants", "Euler products and leading constants");
  constants->add_option("--prime-bound", prime_bound);

  std::string q8_row;
  auto* tables = app.add_subcommand("tables", "Reproduce the S-tables");
  tables->add_option("--expect-q8-row", q8_row, "Override the expected Q8 row, e.g. \"32 32 0 32\"");

  i64 bound = 300;
  auto* verify = app.add_subcommand("verify", "Run the oracle-equivalence suites");
  verify->add_option("--bound", bound);
  verify->add_option("--expect-q8-row", q8_row);

  u64 charsum_x = 0;
  std::string w_text = "1,1,1,1,1,1", delta_text = "0,0,0,0,0,0";
  auto* charsum = app.add_subcommand("charsum", "Exact character sum G_w(x; Psi)");
  charsum->add_option("--x", charsum_x)->required();
  charsum->add_option("--w", w_text);
  charsum->add_option("--delta", delta_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*classify) return run_classify(d1, d2, classify_format);
    if (*census) return run_census(census_x, group, census_format, threads, census_prime_bound);
    if (*constants) return run_constants(prime_bound);
    if (*tables) return run_tables(q8_row);
    if (*verify) return run_verify(bound, q8_row);
    if (*charsum) return run_charsum(charsum_x, w_text, delta_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInvalid;
}
