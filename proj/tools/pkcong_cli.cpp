// pkcong: multipartition congruences modulo prime powers.
//
// Subcommands: pk (coefficient dump), certify (finite-criterion
// certification), verify (brute-force claim check), search (grid
// certification table), selftest (property sweeps). Exit codes: 0 success /
// certified, 1 refuted / counterexample / failed suite, 2 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <pkcong/pkcong.hpp>

namespace {

using namespace pkcong;

Modulus parse_modulus(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    u64 base = std::stoull(text.substr(0, caret));
    unsigned exp = static_cast<unsigned>(std::stoul(text.substr(caret + 1)));
    return Modulus(base, exp);
  }
  return factor_prime_power(std::stoull(text));
}

int cmd_pk(long long k, const std::string& modulus_text, bool exact, long long limit,
           const std::string& format) {
  bool records = format == "records";
  if (exact) {
    auto p = pk_series(k, IntDomain{}, static_cast<long>(limit));
    for (long n = 0; n <= limit; ++n) {
      if (records)
        std::cout << "{\"type\":\"pk\",\"k\":" << k << ",\"n\":" << n << ",\"domain\":\"exact\",\"value\":\""
                  << p.series.at(n).get_str() << "\"}\n";
      else
        std::cout << n << " " << p.series.at(n).get_str() << "\n";
    }
  } else {
    Modulus M = parse_modulus(modulus_text);
    auto p = pk_series(k, ModDomain(M), static_cast<long>(limit));
    for (long n = 0; n <= limit; ++n) {
      if (records)
        std::cout << "{\"type\":\"pk\",\"k\":" << k << ",\"n\":" << n << ",\"domain\":\"mod " << M.str()
                  << "\",\"value\":\"" << p.series.at(n) << "\"}\n";
      else
        std::cout << n << " " << p.series.at(n) << "\n";
    }
  }
  return 0;
}

void print_certificate_human(const Certificate& cert) {
  std::cout << "CERTIFIED " << family_string(cert.claim) << " for all n, r >= 0\n";
  std::cout << "  method: " << method_name(cert.method) << "; hypothesis: " << cert.hypothesis
            << "\n";
  for (const auto& lv : cert.levels) {
    std::cout << "  level r=" << lv.r << " modulus=" << lv.modulus << " a=" << lv.a
              << " bound=" << lv.bound << " nontrivial-checks=" << lv.checked.size();
    for (const auto& [n, v] : lv.checked) std::cout << " (n=" << n << ", value=" << v << ")";
    std::cout << "\n";
  }
}

int cmd_certify(u64 ell, unsigned m, long long k, bool json) {
  try {
    auto res = certify_chain(k, ell, m);
    if (res.certified()) {
      if (json)
        std::cout << to_record(*res.certificate) << "\n";
      else
        print_certificate_human(*res.certificate);
      return 0;
    }
    if (json)
      std::cout << to_record(*res.refutation) << "\n";
    else {
      const auto& r = *res.refutation;
      std::cout << "REFUTED: finite check fails at level r=" << r.r << ", n=" << r.n
                << ", p_" << r.k << " value " << r.value << " (mod " << checked_pow_u64(r.ell, r.r)
                << "); hypotheses of the criterion not established\n";
    }
    return 1;
  } catch (const hypothesis_violated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(u64 ell, unsigned m, long long k, u64 a, long long nmax, bool exact) {
  auto rep = verify_empirical(CongruenceClaim{ell, m, k, a}, nmax, exact);
  if (rep.ok) {
    std::cout << "OK " << family_string(CongruenceClaim{ell, m, k, a}) << " holds for 0 <= n <= "
              << nmax << "\n";
    return 0;
  }
  u64 modm = checked_pow_u64(ell, m);
  std::cout << "COUNTEREXAMPLE p_" << k << "(" << modm << "*" << rep.first_n << "+" << a
            << ") == " << rep.value << " (mod " << modm << ")\n";
  return 1;
}

int cmd_search(u64 ell_max, unsigned m_max, long long k_max, bool json, unsigned threads) {
  auto entries = search(ell_max, m_max, k_max, threads);
  for (const auto& e : entries) {
    if (json)
      std::cout << to_record(e.cert) << "\n";
    else
      std::cout << e.cert.claim.ell << " " << e.cert.claim.m << " " << e.cert.claim.k << " "
                << e.cert.claim.a << " " << e.family << "\n";
  }
  return 0;
}

int cmd_selftest(const std::string& suite_name) {
  auto suite = run_selftest(suite_name);
  for (const auto& [what, good] : suite.checks)
    std::cout << (good ? "[ok]   " : "[FAIL] ") << what << "\n";
  std::cout << (suite.ok() ? "PASS" : "FAIL") << " suite " << suite.name << " ("
            << suite.checks.size() << " checks)\n";
  return suite.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multipartition congruences modulo prime powers"};
  app.require_subcommand(1);

  auto* pk = app.add_subcommand("pk", "print p_k(0..N) in a coefficient domain");
  long long pk_k = 1;
  std::string pk_modulus;
  bool pk_exact = false;
  long long pk_limit = 0;
  std::string pk_format = "human";
  pk->add_option("--k", pk_k, "component count k >= 1")->required()->check(CLI::PositiveNumber);
  auto* mod_opt = pk->add_option("--modulus", pk_modulus, "prime power ell^m, e.g. 5 or 5^2 or 25");
  auto* exact_opt = pk->add_flag("--exact", pk_exact, "exact integer coefficients");
  pk->add_option("--limit", pk_limit, "largest n")->required()->check(CLI::NonNegativeNumber);
  pk->add_option("--format", pk_format, "human | records")
      ->check(CLI::IsMember({"human", "records"}));
  mod_opt->excludes(exact_opt);

  auto* certify = app.add_subcommand("certify", "certify p_k(ell^m n - delta) family by the finite criterion");
  u64 c_ell = 5;
  unsigned c_m = 1;
  long long c_k = 1;
  bool c_json = false;
  certify->add_option("--ell", c_ell, "prime ell >= 5")->required();
  certify->add_option("--m", c_m, "power m >= 1")->required()->check(CLI::PositiveNumber);
  certify->add_option("--k", c_k, "component count k >= 1")->required()->check(CLI::PositiveNumber);
  certify->add_flag("--json", c_json, "line-delimited structured records");

  auto* verify = app.add_subcommand("verify", "brute-force check of p_k(ell^m n + a) == 0 (mod ell^m)");
  u64 v_ell = 5;
  unsigned v_m = 1;
  long long v_k = 1, v_nmax = 0;
  u64 v_a = 0;
  bool v_exact = false;
  verify->add_option("--ell", v_ell, "prime ell >= 5")->required();
  verify->add_option("--m", v_m, "power m >= 1")->required()->check(CLI::PositiveNumber);
  verify->add_option("--k", v_k, "component count k >= 1")->required()->check(CLI::PositiveNumber);
  verify->add_option("--a", v_a, "residue 0 <= a < ell^m")->required();
  verify->add_option("--nmax", v_nmax, "largest n checked")->required()->check(CLI::NonNegativeNumber);
  verify->add_flag("--exact", v_exact, "recompute over Z and reduce");

  auto* search_cmd = app.add_subcommand("search", "certify the whole (ell, m, k) grid and print the family table");
  u64 s_ellmax = 13;
  unsigned s_mmax = 1;
  long long s_kmax = 12;
  bool s_json = false;
  unsigned s_threads = 0;
  search_cmd->add_option("--ell-max", s_ellmax, "largest prime ell")->required();
  search_cmd->add_option("--m-max", s_mmax, "largest power m")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--k-max", s_kmax, "largest component count k")->required()->check(CLI::PositiveNumber);
  search_cmd->add_flag("--json", s_json, "line-delimited structured records");
  search_cmd->add_option("--threads", s_threads, "worker threads (0 = hardware)");

  auto* selftest = app.add_subcommand("selftest", "run a property suite");
  std::string t_suite;
  selftest->add_option("--suite", t_suite, "ladic | eisenstein | cko | tau | scaffold")
      ->required()
      ->check(CLI::IsMember({"ladic", "eisenstein", "cko", "tau", "scaffold"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (pk->parsed()) {
      if (!pk_exact && pk_modulus.empty()) {
        std::cerr << "pk: need one of --modulus or --exact\n";
        return 2;
      }
      return cmd_pk(pk_k, pk_modulus, pk_exact, pk_limit, pk_format);
    }
    if (certify->parsed()) {
      require_congruence_prime(c_ell);
      return cmd_certify(c_ell, c_m, c_k, c_json);
    }
    if (verify->parsed()) {
      require_congruence_prime(v_ell);
      if (v_a >= checked_pow_u64(v_ell, v_m)) {
        std::cerr << "verify: --a must be a canonical residue below ell^m\n";
        return 2;
      }
      return cmd_verify(v_ell, v_m, v_k, v_a, v_nmax, v_exact);
    }
    if (search_cmd->parsed()) return cmd_search(s_ellmax, s_mmax, s_kmax, s_json, s_threads);
    if (selftest->parsed()) return cmd_selftest(t_suite);
  } catch (const invalid_prime& e) {
    std::cerr << "invalid flags: " << e.what() << "\n";
    return 2;
  } catch (const invalid_modulus& e) {
    std::cerr << "invalid flags: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
