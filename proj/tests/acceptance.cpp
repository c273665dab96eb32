// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <pkcong/pkcong.hpp>

using namespace pkcong;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, double secs, double limit = 0.0) {
  bool timed_out = limit > 0.0 && secs > limit;
  bool pass = ok && !timed_out;
  std::printf("[%s] criterion %2d: %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", idx, what.c_str(), secs,
              limit > 0.0 ? (" / limit " + std::to_string(static_cast<int>(limit)) + "s").c_str()
                          : "");
  if (!pass) ++failures;
  std::fflush(stdout);
}

void run(int idx, const std::string& what, double limit, const std::function<bool()>& body) {
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("       criterion %d threw: %s\n", idx, e.what());
    ok = false;
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  report(idx, what, ok, secs, limit);
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
  std::string cmd = std::string(PKCONG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

struct Family {
  u64 ell;
  unsigned m;
  long long k;
  u64 a;
  auto key() const { return std::make_tuple(ell, m, k, a); }
};

// Theorem table, m = 1: the ten families.
const std::vector<Family> kTableM1 = {
    {5, 1, 2, 3},  {5, 1, 1, 4},  {7, 1, 1, 5},  {7, 1, 4, 6},  {11, 1, 8, 4},
    {11, 1, 1, 6}, {11, 1, 3, 7}, {11, 1, 5, 8}, {11, 1, 7, 9}, {13, 1, 10, 8},
};

// Theorem table, m = 2: three mod-25 and six mod-121 families.
const std::vector<Family> kTableM2 = {
    {5, 2, 11, 14},  {5, 2, 6, 19},   {5, 2, 1, 24},  {11, 2, 95, 9},   {11, 2, 84, 64},
    {11, 2, 7, 86},  {11, 2, 29, 97}, {11, 2, 51, 108}, {11, 2, 73, 119},
};

bool same_family_set(const std::vector<Family>& expected, const std::vector<Family>& got) {
  std::set<std::tuple<u64, unsigned, long long, u64>> want, have;
  for (const auto& f : expected) want.insert(f.key());
  for (const auto& f : got) have.insert(f.key());
  return want == have;
}

}  // namespace

int main() {
  run(1, "search --ell-max 13 --m-max 1 --k-max 12 emits exactly the ten m=1 families", 5.0, [] {
    int code = 0;
    std::string out = run_cli_capture("search --ell-max 13 --m-max 1 --k-max 12", code);
    if (code != 0) return false;
    std::istringstream is(out);
    std::string line;
    std::vector<Family> got;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      Family f;
      std::istringstream ls(line);
      if (!(ls >> f.ell >> f.m >> f.k >> f.a)) return false;
      got.push_back(f);
    }
    return got.size() == 10 && same_family_set(kTableM1, got);
  });

  run(2, "m=2 grid search certifies exactly the nine mod-25/mod-121 families", 60.0, [] {
    std::vector<Family> got;
    for (const auto& e : search(5, 2, 25, 0))
      if (e.cert.claim.m == 2)
        got.push_back({e.cert.claim.ell, e.cert.claim.m, e.cert.claim.k, e.cert.claim.a});
    for (const auto& e : search(11, 2, 121, 0))
      if (e.cert.claim.m == 2 && e.cert.claim.ell == 11)
        got.push_back({e.cert.claim.ell, e.cert.claim.m, e.cert.claim.k, e.cert.claim.a});
    return got.size() == 9 && same_family_set(kTableM2, got);
  });

  run(3, "classical congruences p(5n+4), p(7n+5), p(11n+6) hold for n <= 1000", 10.0, [] {
    return verify_empirical(CongruenceClaim{5, 1, 1, 4}, 1000).ok &&
           verify_empirical(CongruenceClaim{7, 1, 1, 5}, 1000).ok &&
           verify_empirical(CongruenceClaim{11, 1, 1, 6}, 1000).ok;
  });

  run(4, "all 19 searched certificates pass exact-path verification to n_max = 200", 0.0, [] {
    std::vector<Family> all = kTableM1;
    all.insert(all.end(), kTableM2.begin(), kTableM2.end());
    std::vector<CongruenceClaim> claims;
    for (const auto& f : all) claims.push_back(CongruenceClaim{f.ell, f.m, f.k, f.a});
    // re-derive the claims from fresh certifications, then verify exactly
    for (const auto& c : claims) {
      auto res = certify_chain(c.k, c.ell, c.m);
      if (!res.certified() || !(res.certificate->claim == c)) return false;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> all_ok{true};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= claims.size()) break;
        if (!verify_empirical(claims[i], 200, /*exact_path=*/true).ok) all_ok = false;
      }
    };
    std::thread t1(worker);
    worker();
    t1.join();
    return all_ok.load();
  });

  run(5, "exact series equals tuple enumeration for k <= 6, n <= 20 (126 values)", 0.0, [] {
    IntDomain Z;
    for (long long k = 1; k <= 6; ++k) {
      auto p = pk_series(k, Z, 20);
      for (long n = 0; n <= 20; ++n)
        if (p.series.at(n) != pk_enumerate(k, n)) return false;
    }
    return true;
  });

  run(6, "power-decomposition divisibility law on 100 random series, zero failures", 0.0, [] {
    auto suite = selftest_ladic(100);
    return suite.ok();
  });

  run(7, "constant-term identity vanishes on the exhaustive small sweep", 30.0, [] {
    return selftest_cko(2, 24, 48).ok();
  });

  run(8, "E_4, E_6, E_10, E_12, E_20 Eisenstein congruences to order 300", 0.0, [] {
    return selftest_eisenstein(300).ok();
  });

  run(9, "tau(5n) == 0 (mod 5) to 250 with tau(5) = 4830; convolution identities to order 100",
      0.0, [] { return selftest_tau(100).ok(); });

  run(10, "lifted families p_6, p_11, p_16 (mod 5) and p_26 (mod 25) verify empirically", 0.0, [] {
    auto base = certify_chain(1, 5, 1);
    if (!base.certified()) return false;
    for (long long s : {1, 2, 3}) {
      auto claims = lift(*base.certificate, s);
      if (claims.size() != 1) return false;
      if (!(claims[0] == CongruenceClaim{5, 1, 1 + 5 * s, 4})) return false;
      if (!verify_empirical(claims[0], 200).ok) return false;
    }
    auto chain = certify_chain(1, 5, 2);
    if (!chain.certified()) return false;
    auto claims = lift(*chain.certificate, 1);
    if (claims.size() != 2) return false;
    if (!(claims[1] == CongruenceClaim{5, 2, 26, 24})) return false;
    return verify_empirical(claims[1], 100).ok;
  });

  run(11, "proof scaffolding: divisibility, positivity, weight identity on 20 admissible n", 0.0,
      [] { return selftest_scaffold(20).ok(); });

  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures;
}
