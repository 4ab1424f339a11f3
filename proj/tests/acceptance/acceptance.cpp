// Acceptance suite: one criterion per check, one PASS/FAIL line each, exit
// code 0 only when everything (including the stated time budgets) holds.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "talc/algebra/gamma.hpp"
#include "talc/algebra/sequences.hpp"
#include "talc/algebra/sturm.hpp"
#include "talc/combinat/eulerian_polynomials.hpp"
#include "talc/combinat/lambda_bijection.hpp"
#include "talc/combinat/lr_families.hpp"
#include "talc/combinat/stirling_eulerian.hpp"
#include "talc/conditions/checkers.hpp"
#include "talc/io/bfile.hpp"
#include "talc/paths/injection.hpp"
#include "talc/recurrence/array.hpp"
#include "talc/recurrence/catalog.hpp"

#ifndef TALC_DATA_DIR
#define TALC_DATA_DIR "data"
#endif

using namespace talc;

namespace {

int failures = 0;

struct Checker {
    std::ostringstream log;
    bool ok = true;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "      failed: " << what << "\n";
        }
    }
};

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<void(Checker&)>& body) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(checker);
    } catch (const std::exception& e) {
        checker.ok = false;
        checker.log << "      exception: " << e.what() << "\n";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < budget_seconds;
    const bool pass = checker.ok && in_budget;
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << title << "  ("
              << seconds << "s, budget " << budget_seconds << "s)\n";
    if (!checker.ok) std::cout << checker.log.str();
    if (!in_budget) std::cout << "      over time budget\n";
}

std::vector<Int> ints(std::initializer_list<long> vs) {
    std::vector<Int> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

bool integral_gammas_equal(const GammaVector& g, const std::vector<Int>& expect) {
    if (g.gammas.size() != expect.size()) return false;
    for (std::size_t i = 0; i < expect.size(); ++i)
        if (g.gammas[i] != Rat(expect[i])) return false;
    return true;
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n";

    criterion(1, "power-3 table reproduction: rows and gamma vectors for n = 3..6", 1.0,
              [](Checker& c) {
                  const std::vector<std::vector<Int>> rows{
                      ints({1, 16, 1}),
                      ints({1, 155, 155, 1}),
                      ints({1, 1304, 8370, 1304, 1}),
                      ints({1, 10557, 309446, 309446, 10557, 1})};
                  const std::vector<std::vector<Int>> gammas{
                      ints({1, 14}), ints({1, 152}), ints({1, 1300, 5764}),
                      ints({1, 10552, 277780})};
                  for (int n = 3; n <= 6; ++n) {
                      const auto row = eulerian_power_row(n, 3);
                      c.require(row == rows[static_cast<std::size_t>(n - 3)],
                                "row n=" + std::to_string(n));
                      const auto g = gamma_expand(eulerian_power_polynomial(n, 3), n - 1);
                      c.require(g.has_value() &&
                                    integral_gammas_equal(*g, gammas[static_cast<std::size_t>(n - 3)]),
                                "gamma n=" + std::to_string(n));
                  }
              });

    criterion(2, "insertion bijection: fixture plus exhaustive round-trip, n <= 7", 30.0,
              [](Checker& c) {
                  c.require(lambda_map(SubexceedantFunction::parse("12121547")) ==
                                Permutation::parse("28741365"),
                            "forward fixture");
                  c.require(lambda_inverse(Permutation::parse("28741365")) ==
                                SubexceedantFunction::parse("12121547"),
                            "inverse fixture");
                  for (int n = 1; n <= 7; ++n) {
                      bool ok = true;
                      std::set<std::vector<int>> images;
                      for_each_subexceedant(n, [&](const SubexceedantFunction& f) {
                          const Permutation pi = lambda_map(f);
                          images.insert(pi.one_line());
                          ok = ok && lambda_inverse(pi) == f;
                          ok = ok && f.leader_values() == pi.block_leaders();
                      });
                      c.require(ok, "round-trip and leader preservation, n=" + std::to_string(n));
                      c.require(Int(images.size()) == factorial(static_cast<unsigned>(n)),
                                "bijectivity, n=" + std::to_string(n));
                  }
              });

    criterion(3, "suffix-swap injection: fixture plus exhaustive sweep, n <= 9", 60.0,
              [](Checker& c) {
                  const auto fixture = inject(PathWord(Cell{1, 1}, "NCCCNN"),
                                              PathWord(Cell{1, 1}, "NNCNNN"));
                  c.require(fixture.p_prime.steps() == "NCCNNN" &&
                                fixture.q_prime.steps() == "NNCCNN" && fixture.split_index == 3,
                            "worked fixture");
                  for (long n = 3; n <= 9; ++n)
                      for (long k = 2; k <= n - 1; ++k) {
                          const auto sweep = injection_sweep(n, k, Cell{1, 1});
                          const std::string at = " at (n,k)=(" + std::to_string(n) + "," +
                                                 std::to_string(k) + ")";
                          c.require(sweep.injective(), "injectivity" + at);
                          c.require(sweep.endpoints_ok, "endpoints" + at);
                          c.require(sweep.shift_ok, "shift property" + at);
                      }
              });

    criterion(4, "path-sum interpretation: array entries equal weighted path sums, dn <= 10",
              60.0, [](Checker& c) {
                  for (const auto& spec : catalog_sweep_specs(3, 3)) {
                      const long top = spec.anchor_n + 10;
                      const auto array = build_array(spec, top);
                      const Cell anchor{spec.anchor_k, spec.anchor_n};
                      bool ok = true;
                      for (long n = spec.anchor_n; n <= top && ok; ++n)
                          for (long k = spec.anchor_k; k <= spec.anchor_k + (n - spec.anchor_n);
                               ++k)
                              if (array.at(n, k) != path_sum(Cell{k, n}, spec.weights, anchor)) {
                                  ok = false;
                                  break;
                              }
                      c.require(ok, spec.name);
                  }
              });

    criterion(5, "log-concave rows for every catalog spec (l <= 3, r <= 3), n <= 12", 30.0,
              [](Checker& c) {
                  for (const auto& spec : catalog_sweep_specs(3, 3)) {
                      const auto report = scan_log_concavity(spec, 12);
                      c.require(report.holds(), spec.name);
                  }
              });

    criterion(6, "sufficient-condition soundness: abc implies main and the row scan", 120.0,
              [](Checker& c) {
                  int abc_passing = 0;
                  for (const auto& spec : catalog_sweep_specs(3, 3)) {
                      const auto params = affine_params(spec);
                      if (!params || !check_abc(*params).holds()) continue;
                      ++abc_passing;
                      c.require(check_main(spec, 6).holds(), spec.name + ": main");
                      c.require(scan_log_concavity(spec, 12).holds(), spec.name + ": rows");
                  }
                  c.require(abc_passing > 20, "enough abc-passing specs");
                  const auto squared = power_lift(catalog_lookup("stirling-subset"), 2);
                  const auto kurtz = check_kurtz(squared, 8);
                  c.require(!kurtz.holds() && !kurtz.witnesses.empty(),
                            "k^2 weights fail the concavity condition with a witness");
              });

    criterion(7, "ordered-partition identity and its inversion, brute force, n <= 7, r <= 3",
              60.0, [](Checker& c) {
                  for (int n = 1; n <= 7; ++n)
                      for (unsigned r = 1; r <= 3 && static_cast<int>(r) <= n; ++r) {
                          const auto report = verify_stirling_eulerian_identity(n, r);
                          const std::string at =
                              " at n=" + std::to_string(n) + ", r=" + std::to_string(r);
                          c.require(report.identity_holds, "identity" + at);
                          c.require(report.inversion_holds, "inversion" + at);
                          if (r == 1)
                              c.require(report.literal_readings_match,
                                        "classical specialization" + at);
                      }
              });

    criterion(8, "recurrence arrays match tuple-census brute force", 120.0, [](Checker& c) {
        for (unsigned r = 1; r <= 3; ++r) {
            for (unsigned l = 1; l <= 3; ++l) {
                for (int n = static_cast<int>(r); n <= 7; ++n) {
                    const auto eul =
                        build_array(catalog_lookup("lr-eulerian", {.l = l, .r = r}), n);
                    const auto s2 =
                        build_array(catalog_lookup("lr-stirling2", {.l = l, .r = r}), n);
                    const auto lah = build_array(catalog_lookup("lr-lah", {.l = l, .r = r}), n);
                    for (int k = 0; k <= n; ++k) {
                        const std::string at = "(n,k,l,r)=(" + std::to_string(n) + "," +
                                               std::to_string(k) + "," + std::to_string(l) + "," +
                                               std::to_string(r) + ")";
                        c.require(eul.at(n, k) == Rat(lr_eulerian_bruteforce(n, k, l, r)),
                                  "eulerian " + at);
                        c.require(s2.at(n, k) == Rat(lr_stirling2_bruteforce(n, k, l, r)),
                                  "stirling-2 " + at);
                        c.require(lah.at(n, k) == Rat(lr_lah_bruteforce(n, k, l, r)),
                                  "lah " + at);
                    }
                }
                if (l <= 2) {
                    const auto s1 =
                        build_array(catalog_lookup("lr-stirling1", {.l = l, .r = r}), 8);
                    for (int n = static_cast<int>(r); n <= 8; ++n)
                        for (int k = 0; k <= n; ++k)
                            c.require(s1.at(n, k) == Rat(lr_stirling1_bruteforce(n, k, l, r)),
                                      "stirling-1 (n,k,l,r)=(" + std::to_string(n) + "," +
                                          std::to_string(k) + "," + std::to_string(l) + "," +
                                          std::to_string(r) + ")");
                }
            }
        }
    });

    criterion(9, "palindromic rows, symmetric bivariate forms, expanded l = 2 recurrence",
              30.0, [](Checker& c) {
                  for (int n = 1; n <= 10; ++n)
                      for (unsigned l = 1; l <= 4; ++l) {
                          const std::string at =
                              " at n=" + std::to_string(n) + ", l=" + std::to_string(l);
                          c.require(is_palindromic(eulerian_power_polynomial(n, l), n - 1),
                                    "palindromic" + at);
                          c.require(eulerian_bivariate(n, l).symmetric(), "symmetric" + at);
                      }
                  c.require(l2_expanded_step_matches(8), "expanded l=2 recurrence, 8 steps");
              });

    criterion(10, "real-rootedness scan: classical rows asserted, powers reported", 30.0,
              [](Checker& c) {
                  for (int n = 1; n <= 10; ++n)
                      c.require(is_real_rooted(eulerian_power_polynomial(n, 1)),
                                "classical row n=" + std::to_string(n));
                  for (unsigned l : {2u, 3u}) {
                      std::cout << "      l=" << l << " real-rooted (reported, not asserted):";
                      for (int n = 2; n <= 8; ++n)
                          std::cout << " n" << n << "="
                                    << (is_real_rooted(eulerian_power_polynomial(n, l)) ? "yes"
                                                                                        : "no");
                      std::cout << "\n";
                  }
              });

    criterion(11, "offline golden comparison: three committed prefixes, >= 50 terms", 5.0,
              [](Checker& c) {
                  for (const char* key : {"binomial", "stirling-subset", "stirling-cycle"}) {
                      const auto mapping = oeis_mapping_for(key);
                      c.require(mapping.has_value(), std::string(key) + ": mapping");
                      if (!mapping) continue;
                      const std::string path = std::string(TALC_DATA_DIR) + "/oeis/b" +
                                               mapping->oeis_id.substr(1) + ".txt";
                      std::ifstream in(path);
                      c.require(in.good(), path + " readable");
                      const auto reference = parse_bfile(in);
                      const auto ours = catalog_terms(*mapping, reference.size());
                      const auto result = compare_terms(ours, reference, reference.size());
                      c.require(result.compared >= 50,
                                std::string(key) + ": enough terms compared");
                      c.require(result.matched(), std::string(key) + ": prefix match");
                  }
              });

    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
