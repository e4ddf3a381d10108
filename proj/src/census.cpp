#include "biquad/census.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "biquad/embed.hpp"

namespace biquad {

namespace {

using Counts = std::array<std::array<std::array<u64, 2>, 2>, 5>;  // [h][s][fields, admitting]

int sig_index(Signature s) { return s == Signature::TotallyReal ? 0 : 1; }

constexpr std::array<Signature, 2> kSignatures{Signature::TotallyReal, Signature::TotallyComplex};

void finish(CensusCell& c) {
  c.ratio = c.predicted > 0 ? static_cast<double>(c.admitting) / c.predicted
                            : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string to_string(Group g) {
  switch (g) {
    case Group::Q8:
      return "q8";
    case Group::D4:
      return "d4";
    case Group::None:
      return "none";
  }
  return "?";
}

Group parse_group(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "q8") return Group::Q8;
  if (t == "d4") return Group::D4;
  if (t == "none") return Group::None;
  throw std::invalid_argument("unknown group: " + s);
}

bool admits(Group g, const AdmissibleTriple& t) {
  switch (g) {
    case Group::Q8:
      return admits_q8(t.d1(), t.d2());
    case Group::D4:
      return admits_d4(t.d1(), t.d2()).overall;
    case Group::None:
      return true;
  }
  return false;
}

CensusReport census_exact(u64 X, Group g, int threads, u64 prime_bound) {
  return census_exact(X, g, threads, compute_constants(prime_bound));
}

CensusReport census_exact(u64 X, Group g, int threads, const Constants& constants) {
  if (X < 1 || X > kMaxCensusX) throw std::invalid_argument("census: X must be in [1, 10^12]");
  if (threads < 1) throw std::invalid_argument("census: threads must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<Counts> partial(threads);
  for (auto& c : partial) c = Counts{};
  auto work = [&](int i) {
    Counts& c = partial[i];
    for_each_field(
        X,
        [&](const AdmissibleTriple& t) {
          auto& cell = c[t.type()][sig_index(t.signature())];
          ++cell[0];
          if (admits(g, t)) ++cell[1];
        },
        Partition{i, threads});
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }

  CensusReport r;
  r.X = X;
  r.group = g;
  r.prime_bound = constants.kappa_kernel.prime_bound;
  r.threads = threads;
  const double x = static_cast<double>(X);
  const bool predict = X >= 3;
  for (int h = 1; h <= 4; ++h) {
    for (Signature s : kSignatures) {
      CensusCell& cell = r.cells[h][sig_index(s)];
      for (const Counts& c : partial) {
        cell.fields += c[h][sig_index(s)][0];
        cell.admitting += c[h][sig_index(s)][1];
      }
      if (predict) {
        cell.predicted = g == Group::None ? predict_B_h(x, s, h, constants) : predict_BG_h(x, g, s, h, constants);
      }
      finish(cell);
      CensusCell& tot = r.by_signature[sig_index(s)];
      tot.fields += cell.fields;
      tot.admitting += cell.admitting;
    }
  }
  for (Signature s : kSignatures) {
    CensusCell& tot = r.by_signature[sig_index(s)];
    if (predict) tot.predicted = g == Group::None ? predict_B(x, s, constants) : predict_BG(x, g, s, constants);
    finish(tot);
    r.total.fields += tot.fields;
    r.total.admitting += tot.admitting;
    r.total.predicted += tot.predicted;
  }
  finish(r.total);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

OrderedCensus ordered_census(u64 X) {
  if (X < 1 || X > kMaxCensusX) throw std::invalid_argument("census: X must be in [1, 10^12]");
  OrderedCensus out;
  out.X = X;
  for (int h = 1; h <= 4; ++h) {
    for (SignPair sigma : kAllSignPairs) {
      for_each_ordered(X, h, sigma, [&](const AdmissibleTriple&) { ++out.ordered[h][index_of(sigma)]; });
    }
  }
  for_each_field(X, [&](const AdmissibleTriple& t) { ++out.fields[t.type()][sig_index(t.signature())]; });
  return out;
}

}  // namespace biquad
