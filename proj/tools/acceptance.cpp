// Acceptance run: one PASS/FAIL line per criterion with the worst residual against its pinned tolerance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "qtt/intertwiners.hpp"
#include "qtt/kmatrix.hpp"
#include "qtt/suites.hpp"

using namespace qtt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  double worst = 0.0;     // largest residual that had to stay below its tolerance
  double control = 1e300;  // smallest negative-control residual
  std::size_t cases = 0;
  std::string note;
};

// Folds the cases of a report whose id satisfies keep; any failing case fails the outcome.
Outcome fold(const Report& r, const std::function<bool(const std::string&)>& keep = nullptr) {
  Outcome o;
  for (const auto& c : r.cases()) {
    if (keep && !keep(c.id)) continue;
    if (c.expect == Expect::Info) continue;
    ++o.cases;
    if (!c.pass) o.pass = false;
    if (c.expect == Expect::Below) o.worst = std::max(o.worst, c.residual);
    if (c.expect == Expect::Above) o.control = std::min(o.control, c.residual);
  }
  if (o.cases == 0) o.pass = false;
  return o;
}

Outcome combine(Outcome a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.worst = std::max(a.worst, b.worst);
  a.control = std::min(a.control, b.control);
  a.cases += b.cases;
  return a;
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool has(const std::string& s, const std::string& p) { return s.find(p) != std::string::npos; }

void line(int k, const std::string& name, const Outcome& o, double tol) {
  std::printf("[%s] %2d %-34s worst %.2e (tol %.0e)", o.pass ? "PASS" : "FAIL", k, name.c_str(), o.worst, tol);
  if (o.control < 1e300) std::printf(" control %.2e (> %.0e)", o.control, kControlThreshold);
  std::printf(" cases %zu%s%s\n", o.cases, o.note.empty() ? "" : " ", o.note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const auto t_all = Clock::now();
  SuiteOptions base;
  base.max_two_j = 3;
  const cplx q = default_q();

  std::map<std::string, Report> reports;
  std::map<std::string, double> runtime;
  auto run = [&](const std::string& name) -> const Report& {
    auto it = reports.find(name);
    if (it != reports.end()) return it->second;
    const auto t0 = Clock::now();
    Report r = run_suite(name, base);
    runtime[name] = seconds_since(t0);
    return reports.emplace(name, std::move(r)).first->second;
  };
  int failed = 0;
  auto report = [&](int k, const std::string& name, Outcome o, double tol) {
    if (!o.pass) ++failed;
    line(k, name, o, tol);
  };

  {  // 1
    constexpr double kTol = 1e-9, kSeconds = 60.0;
    Outcome o = fold(run("ybe"), [](const std::string& id) { return starts(id, "ybe ") || starts(id, "control"); });
    if (runtime["ybe"] >= kSeconds) o.pass = false;
    o.note = "runtime " + std::to_string(runtime["ybe"]) + " s";
    report(1, "Yang-Baxter j <= 3/2", o, kTol);
  }
  {  // 2
    constexpr double kTol = 1e-10;
    report(2, "printed matrices", fold(run("regressions")), kTol);
  }
  {  // 3
    constexpr double kTol = 1e-10;
    Outcome o;
    o.cases = 0;
    for (int tj = 1; tj <= 4; ++tj)
      for (const auto& r : fusion_relations(tj, q)) {
        ++o.cases;
        o.worst = std::max(o.worst, r.residual);
      }
    o.pass = o.cases > 0 && o.worst < kTol;
    report(3, "fusion-map relations j <= 2", o, kTol);
  }
  {  // 4
    constexpr double kTol = 1e-9;
    auto keep = [](const std::string& id) { return has(id, "reflection") || starts(id, "control"); };
    report(4, "(dual) reflection j <= 3/2", combine(fold(run("re"), keep), fold(run("dual-re"), keep)), kTol);
  }
  {  // 5
    constexpr double kTol = 1e-10;
    report(5, "intertwining j <= 3/2",
           fold(run("fusion-maps"), [](const std::string& id) { return has(id, "intertwining"); }), kTol);
  }
  {  // 6
    constexpr double kTol = 1e-10;
    report(6, "normalization exactness", fold(run("normalization")), kTol);
  }
  {  // 7
    constexpr double kTol = 1e-9;
    report(7, "quantum determinant factorization", fold(run("qdet")), kTol);
  }
  {  // 8
    constexpr double kTol = 1e-8, kSeconds = 600.0;
    Outcome o = fold(run("tt"));
    if (runtime["tt"] >= kSeconds) o.pass = false;
    o.note = "runtime " + std::to_string(runtime["tt"]) + " s";
    report(8, "TT-relations j in {1,3/2,2}", o, kTol);
  }
  {  // 9
    constexpr double kTol = 1e-7;
    report(9, "T-system and Y-system", fold(run("tsys")), kTol);
  }
  {  // 10
    constexpr double kTol = 1e-9;
    report(10, "alternating-algebra relations", fold(run("aq-relations")), kTol);
  }
  {  // 11
    constexpr double kTol = 1e-8;
    report(11, "Hamiltonians", fold(run("hamiltonian-i")), kTol);
  }
  {  // 12
    constexpr double kTol = 1e-8;
    report(12, "delta series and q-Onsager", fold(run("qonsager")), kTol);
  }
  {  // 13
    constexpr double kTol = 1e-8;
    report(13, "boundary symmetries", fold(run("symmetry")), kTol);
  }
  {  // 14
    constexpr double kTol = 1e-10;
    report(14, "XXX limit", fold(run("xxx")), kTol);
  }
  {  // 15
    constexpr double kTol = 1e-9;
    report(15, "blob densities N=3", fold(run("blob")), kTol);
  }
  {  // 16
    constexpr double kSeconds = 1200.0;
    Outcome o;
    o.cases = 0;
    const auto t0 = Clock::now();
    for (const auto& name : suite_names()) {
      const std::string first = run(name).to_json().dump();
      const std::string second = run_suite(name, base).to_json().dump();
      ++o.cases;
      if (first != second) {
        o.pass = false;
        o.note += " differs:" + name;
      }
    }
    const double total = seconds_since(t_all);
    if (total >= kSeconds) o.pass = false;
    o.note = "rerun " + std::to_string(seconds_since(t0)) + " s, total " + std::to_string(total) + " s" + o.note;
    report(16, "determinism and runtime", o, 0.0);
  }
  std::printf("%d of 16 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
