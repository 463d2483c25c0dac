// Compares the serial reference implementation of the exhaustive
// verification kernels against the OpenMP path on the largest instances the
// constructions produce, and checks that both emit identical reports.
//
//   morita-bench [semigroup-size-cap]

#include <chrono>
#include <cstdio>
#include <string>

#include "morita/bimodule.hpp"
#include "morita/constructions.hpp"
#include "morita/enlargement.hpp"
#include "morita/isg.hpp"

using namespace morita;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_of(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_of(t0, Clock::now()));
  }
  return best;
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (size_t i = 0; i < a.checks.size(); ++i)
    if (a.checks[i].id != b.checks[i].id || a.checks[i].pass != b.checks[i].pass ||
        a.checks[i].witness != b.checks[i].witness)
      return false;
  return true;
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-28s %10.4fs %10.4fs %8.2fx   %s\n", name, serial, parallel,
              serial / parallel, agree ? "reports agree" : "REPORTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int cap = argc > 1 ? std::stoi(argv[1]) : 150;
  construction_size_limit = cap + 1;

  // Largest Brandt semigroup under the cap: B_k(Z2) with 2k^2 + 1 <= cap.
  int k = 1;
  while (2 * (k + 1) * (k + 1) + 1 <= cap) ++k;
  auto S = build_brandt(build_from_expression("Z2"), k);
  std::printf("instance: brandt(Z2,%d), n = %d, identity context m = %d\n", k,
              S.n, S.n);

  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

  {
    auto table = S.mult;
    int n = S.n;
    double ts = time_best_of(3, [&] {
      validate_inverse_semigroup(n, table, {}, Exec::serial);
    });
    double tp = time_best_of(3, [&] {
      validate_inverse_semigroup(n, table, {}, Exec::parallel);
    });
    row("validate (associativity)", ts, tp, true);
  }

  auto ctx = identity_context(S);
  VerificationReport vs, vp;
  {
    double ts = time_best_of(3, [&] { vs = verify_context(ctx, Exec::serial); });
    double tp = time_best_of(3, [&] { vp = verify_context(ctx, Exec::parallel); });
    row("verify_context (Def 2.1)", ts, tp, reports_equal(vs, vp));
  }
  {
    double ts = time_best_of(1, [&] { vs = derived_identities(ctx, Exec::serial); });
    double tp = time_best_of(1, [&] { vp = derived_identities(ctx, Exec::parallel); });
    row("derived_identities (2.3)", ts, tp, reports_equal(vs, vp));
  }

  // Corrupted context: least witnesses must also match.
  {
    auto bad = ctx;
    bad.ip_S[bad.ip_S.size() / 2] = (bad.ip_S[bad.ip_S.size() / 2] + 1) % S.n;
    double ts = time_best_of(3, [&] { vs = verify_context(bad, Exec::serial); });
    double tp = time_best_of(3, [&] { vp = verify_context(bad, Exec::parallel); });
    row("verify_context (corrupted)", ts, tp, reports_equal(vs, vp));
    if (vs.all_pass()) std::printf("unexpected: corrupted context verified\n");
  }
  return 0;
}
