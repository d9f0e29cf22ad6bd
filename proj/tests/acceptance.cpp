// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ginv/classical.hpp"
#include "ginv/eqsolve.hpp"
#include "ginv/fuzz.hpp"
#include "ginv/oracle.hpp"
#include "ginv/shiftlab.hpp"
#include "ginv/wgi.hpp"

using namespace ginv;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 200;
constexpr double kTolEq = 1e-8;
constexpr unsigned kOrders[] = {1, 2, 3};

const TolerancePolicy kTol{};

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Tally of failing checks: name -> count, plus the worst residual seen.
struct Tally {
  std::size_t runs = 0, failed_runs = 0;
  double worst = 0.0;
  std::map<std::string, std::size_t> failures;

  void take(const VerificationReport& r, const std::string& prefix = "") {
    ++runs;
    if (!r.overall) ++failed_runs;
    for (const auto& [name, c] : r.checks) {
      worst = std::max(worst, c.residual);
      if (!c.pass) ++failures[prefix + name];
    }
  }
  std::string summary() const {
    std::ostringstream os;
    os << failed_runs << "/" << runs << " runs failing";
    for (const auto& [name, n] : failures) os << ", " << name << " x" << n;
    return os.str();
  }
};

Outcome shift_example() {
  const auto t0 = Clock::now();
  Outcome out;
  std::ostringstream os;
  for (unsigned m : kOrders) {
    const auto rep = shift::verify_shift_identities(m, 8);
    const auto z = shift::mwgi_shift(m);
    const auto a = shift::ShiftWord::l(1), x = shift::ShiftWord::s(1);
    const bool word_ok = shift::normalize(x.power(m + 1) * a * x * a.power(m)) == z &&
                         z == shift::ShiftWord::s(m + 1) * shift::ShiftWord::l(m);
    bool zeros = true;
    for (const auto& [name, c] : rep.checks) {
      if (c.residual != 0.0) {
        zeros = false;
        os << " m=" << m << ":" << name << "=" << c.residual;
      }
    }
    out.pass = out.pass && word_ok && zeros && rep.overall;
  }
  const double secs = seconds_since(t0);
  out.pass = out.pass && secs < 1.0;
  os << " (" << secs << " s)";
  out.detail = out.pass ? "Z = S(m+1)L(m), all residuals zero" + os.str() : "nonzero residuals:" + os.str();
  return out;
}

Outcome route_agreement_suite(const std::vector<fuzz::FuzzCase>& corpus) {
  const auto t0 = Clock::now();
  Tally t;
  // for failing runs: the route farthest from the canonical form
  std::map<std::string, std::size_t> outliers;
  for (const auto& c : corpus)
    for (unsigned m : kOrders) {
      const auto rep = route_agreement(c.a, m, kTol);
      t.take(rep);
      if (rep.overall) continue;
      const auto z = mwgi(c.a, m, kTol).z;
      std::string far;
      double gap = -1.0;
      for (const auto& [name, _] : rep.checks) {
        const auto r = parse_route(name);
        const double g = r == Route::RegularLift && m < 2
                             ? relative_residual(mwgi_regular_lift(c.a, m, kTol), mwgi(c.a, m + 1, kTol).z)
                             : relative_residual(mwgi_by_route(c.a, m, r, kTol), z);
        if (g > gap) {
          gap = g;
          far = name;
        }
      }
      ++outliers[far];
    }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << t.failed_runs << "/" << t.runs << " runs failing, worst pairwise gap " << t.worst;
  for (const auto& [name, n] : outliers) os << ", outlier " << name << " x" << n;
  os << " (" << secs << " s)";
  return {t.failed_runs == 0 && secs < 60.0, os.str()};
}

Outcome definition_suite(const std::vector<fuzz::FuzzCase>& corpus) {
  Tally t;
  for (const auto& c : corpus)
    for (unsigned m : kOrders) t.take(verify_definition(c.a, mwgi(c.a, m, kTol).z, m, kTol));
  std::ostringstream os;
  os << t.summary() << ", worst residual " << t.worst;
  return {t.failed_runs == 0, os.str()};
}

Outcome characterization_suite(const std::vector<fuzz::FuzzCase>& corpus) {
  Tally t;
  for (const auto& c : corpus)
    for (unsigned m : kOrders) {
      t.take(decomposition_report(c.a, m, group_decomposition(c.a, m, kTol), kTol), "decomp:");
      t.take(polar_report(c.a, m, polar_idempotent(c.a, m, kTol), kTol), "polar:");
      t.take(b_characterization(c.a, m, kTol), "b:");
      t.take(bc_inverse_check(c.a, m, kTol), "bc:");
      t.take(outer_inverse_subspaces(c.a, m, kTol), "outer:");
    }
  return {t.failed_runs == 0, t.summary()};
}

Outcome equation_suite(const std::vector<fuzz::FuzzCase>& corpus) {
  fuzz::Rng rng(kCorpusSeed + 1);
  std::size_t bad_general = 0, bad_unique = 0, runs = 0;
  double worst = 0.0;
  for (const auto& c : corpus)
    for (unsigned m : kOrders) {
      ++runs;
      const auto cols = static_cast<std::size_t>(rng.integer(1, 3));
      const auto b = fuzz::random_matrix(rng, c.n, cols);
      const auto y = fuzz::random_matrix(rng, c.n, cols);
      const double r = residual(c.a, b, m, solve_general(c.a, b, m, y, kTol).x, kTol);
      worst = std::max(worst, r);
      if (r > kTolEq) ++bad_general;
      // a second solution supported on col(Z) must coincide with Z B
      const auto z = mwgi(c.a, m, kTol).z;
      const auto other = solve_general(c.a, b, m, z * fuzz::random_matrix(rng, c.n, cols), kTol).x;
      const auto same = same_range_solution(c.a, b, m, other, kTol);
      if (!same || !*same) ++bad_unique;
    }
  std::ostringstream os;
  os << runs << " runs, general residual failures " << bad_general << " (worst " << worst
     << "), uniqueness failures " << bad_unique;
  return {bad_general == 0 && bad_unique == 0, os.str()};
}

Outcome additivity_suite() {
  fuzz::Rng rng(kCorpusSeed + 2);
  std::size_t bad = 0, runs = 0;
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto p = fuzz::orthogonal_pair(rng);
    for (unsigned m : kOrders) {
      ++runs;
      const double r = relative_residual(mwgi(p.a + p.b, m, kTol).z, additive_mwgi(p.a, p.b, m, kTol));
      worst = std::max(worst, r);
      if (r > kTolEq) ++bad;
    }
  }
  std::ostringstream os;
  os << "50 pairs x m in {1,2,3}: " << bad << "/" << runs << " above 1e-8, worst " << worst;
  return {bad == 0, os.str()};
}

Outcome oracle_gate() {
  const auto t0 = Clock::now();
  fuzz::Rng rng(kCorpusSeed + 3);
  Tally t;
  std::size_t float_bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min<std::size_t>(3, n))));
    const auto c = fuzz::make_rational_case(rng, n, k, 10);
    for (unsigned m : kOrders) {
      t.take(exact::certify(c.a, m));
      const double r = relative_residual(mwgi(c.a.to_complex(), m, kTol).z, exact::exact_mwgi(c.a, m).to_complex());
      worst = std::max(worst, r);
      if (r > kTolEq) ++float_bad;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << "certify: " << t.summary() << "; float vs exact: " << float_bad << " above 1e-8, worst " << worst << " ("
     << secs << " s)";
  return {t.failed_runs == 0 && t.worst == 0.0 && float_bad == 0 && secs < 120.0, os.str()};
}

Outcome index_one_collapse() {
  fuzz::Rng rng(kCorpusSeed + 4);
  std::size_t bad_z = 0, bad_y = 0;
  double worst_z = 0.0, worst_y = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto k = static_cast<std::size_t>(rng.integer(0, 1));
    const auto a = fuzz::make_case(rng, n, k).a;
    const auto g = group_inverse(a, kTol);
    for (unsigned m : kOrders) {
      const double r = relative_residual(mwgi(a, m, kTol).z, g);
      worst_z = std::max(worst_z, r);
      if (r > kTolEq) ++bad_z;
      const double y = group_decomposition(a, m, kTol).y.frobenius();
      worst_y = std::max(worst_y, y);
      if (y > 1e-10) ++bad_y;
    }
  }
  std::ostringstream os;
  os << "mwgi vs group inverse: " << bad_z << " above 1e-8 (worst " << worst_z << "); ||Y||: " << bad_y
     << " above 1e-10 (worst " << worst_y << ")";
  return {bad_z == 0 && bad_y == 0, os.str()};
}

}  // namespace

int main() {
  const auto corpus = fuzz::corpus(kCorpusSeed, kCorpusSize);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "shift example, exact", shift_example},
      {2, "cross-route agreement", [&] { return route_agreement_suite(corpus); }},
      {3, "definition suite", [&] { return definition_suite(corpus); }},
      {4, "characterization suite", [&] { return characterization_suite(corpus); }},
      {5, "equation suite", [&] { return equation_suite(corpus); }},
      {6, "additivity", additivity_suite},
      {7, "oracle gate", oracle_gate},
      {8, "index-1 collapse", index_one_collapse},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
