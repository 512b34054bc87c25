// Acceptance suite for the toolkit: eleven numbered criteria, one printed
// line each, pass/fail with the measured values and elapsed seconds.  Runtime
// budgets (where a criterion has one) are asserted, not just reported.  The
// binary exits 0 iff every criterion passes.
//
//   1  group construction: R(3) and R(27), orders, degrees, 2-transitivity
//   2  Ree unitals S(2, q+1, q^3+1) with exact Steiner verification
//   3  randomized rank-3 construction on R(27), 100 fixed seeds
//   4  R(3) involution closure is proper (index 3): not a C-group
//   5  exhaustive rank-3 classification of PSL(2,8): exactly 7, tail condition
//   6  dihedral normalizer formula == brute force for all m | n <= 60
//   7  involution pair orders in PSL(2,27): divisibility constraints
//   8  normalizer fingerprints of dihedral subgroups of C2 x PSL(2,27)
//   9  dihedral parameters in R(3): d in {3, 7, 9}, N0 = D
//  10  exactly 36 D14 subgroups in PSL(2,8)
//  11  no D2c x D2d (c, d >= 3) in R(3) or PSL(2,27); planted control found

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gf3field/gf.hpp"
#include "oracles/oracles.hpp"
#include "permcore/bsgs.hpp"
#include "permcore/perm.hpp"
#include "rank3build/rank3.hpp"
#include "reegroups/companions.hpp"
#include "reegroups/ree.hpp"
#include "unital/unital.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failed = 0;

void report(int id, bool pass, double secs, const std::string& detail) {
  std::printf("[criterion %02d] %s  (%7.1f s)  %s\n", id, pass ? "PASS" : "FAIL", secs,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

// Run one criterion body, turning any escaped exception into a FAIL line.
template <class F>
void criterion(int id, F&& body) {
  const auto t0 = Clock::now();
  try {
    body(t0);
  } catch (const std::exception& e) {
    report(id, false, seconds_since(t0), std::string("exception: ") + e.what());
  }
}

// 2-transitivity read off the stabilizer chain: the top orbit is everything
// and the next level's orbit is everything else.
bool two_transitive(const permcore::StabChain& G) {
  const auto& L = G.levels();
  return L.size() >= 2 && L[0].orbit.size() == G.degree() &&
         L[1].orbit.size() == G.degree() - 1;
}

}  // namespace

int main() {
  ree::ReeGroup ree3;
  ree::ReeGroup ree27;
  double t_build3 = 0, t_build27 = 0;

  // -- 1: group construction ------------------------------------------------
  criterion(1, [&](Clock::time_point t0) {
    auto ta = Clock::now();
    ree3 = ree::build_ree3();
    t_build3 = seconds_since(ta);
    ta = Clock::now();
    ree27 = ree::build_ree27();
    t_build27 = seconds_since(ta);

    const mpz_class want27("10073444472");
    const bool ok = ree3.group.order() == 1512 && ree3.group.degree() == 28 &&
                    two_transitive(ree3.group) && ree27.group.order() == want27 &&
                    ree27.group.degree() == 19684 && two_transitive(ree27.group) &&
                    ree27.group.certified_by_sweep() && t_build27 <= 600.0;
    std::ostringstream d;
    d << "|R(3)| = " << ree3.group.order().get_str() << " on " << ree3.group.degree()
      << " points, |R(27)| = " << ree27.group.order().get_str() << " on "
      << ree27.group.degree() << " points, both 2-transitive; R(27) BSGS " << std::fixed
      << std::setprecision(1) << t_build27
      << " s (budget 600 s, certified by full Schreier sweep)";
    report(1, ok, seconds_since(t0), d.str());
  });

  // -- 2: unitals -----------------------------------------------------------
  criterion(2, [&](Clock::time_point t0) {
    auto u3 = unital::build_unital(ree3);
    const auto ta = Clock::now();
    auto u27 = unital::build_unital(ree27);
    const double t27 = seconds_since(ta);
    const bool ok3 = u3.verified && u3.v == 28 && u3.k == 4 && u3.blocks.size() == 63;
    const bool ok27 = u27.verified && u27.v == 19684 && u27.k == 28 &&
                      u27.blocks.size() == 512487 && t27 <= 1800.0;
    std::ostringstream d;
    d << "S(2,4,28): " << u3.blocks.size() << " blocks, " << u3.pairs_covered
      << " pairs each covered once; S(2,28,19684): " << u27.blocks.size() << " blocks, "
      << u27.pairs_covered << " pairs each covered once, " << std::fixed
      << std::setprecision(1) << t27 << " s (budget 1800 s)";
    report(2, ok3 && ok27, seconds_since(t0), d.str());
  });

  // -- 3: randomized rank-3 construction on R(27) ---------------------------
  criterion(3, [&](Clock::time_point t0) {
    int ok_count = 0;
    int bad_cert = 0;
    std::map<std::uint64_t, int> n_hist;
    std::map<std::string, int> fail_stages;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto cert = rank3::lemma_rank3_construct(ree27, seed);
      if (!cert.ok) {
        ++fail_stages[cert.failure_stage.empty() ? "?" : cert.failure_stage];
        continue;
      }
      const std::uint64_t n = cert.schlafli.size() == 2 ? cert.schlafli[1] : 0;
      const bool good = cert.schlafli.size() == 2 && cert.schlafli[0] == 37 &&
                        (n == 3 || n == 9 || n == 27) &&
                        cert.generated_order == ree27.params.order && cert.intersection_ok;
      if (!good) {
        ++bad_cert;
        continue;
      }
      ++ok_count;
      ++n_hist[n];
    }
    std::ostringstream d;
    d << ok_count << "/100 seeds produced a verified {37, n} representation (need >= 95); n: ";
    bool first = true;
    for (auto [n, c] : n_hist) {
      d << (first ? "" : ", ") << c << " x {37," << n << "}";
      first = false;
    }
    if (bad_cert) d << "; " << bad_cert << " certificates failed re-verification";
    for (auto& [stage, c] : fail_stages) d << "; " << c << " stopped at " << stage;
    report(3, ok_count >= 95 && bad_cert == 0, seconds_since(t0), d.str());
  });

  // -- 4: R(3) involution closure -------------------------------------------
  criterion(4, [&](Clock::time_point t0) {
    auto rep = rank3::ree3_involution_closure(ree3);
    const bool ok = rep.closure_order == 504 && rep.index == 3 && rep.proper &&
                    rep.closure_is_derived;
    std::ostringstream d;
    d << "<involutions of R(3)> has order " << rep.closure_order.get_str() << " = |R(3)'|, index "
      << rep.index.get_str() << ": R(3) is not a C-group";
    report(4, ok, seconds_since(t0), d.str());
  });

  // -- 5: PSL(2,8) classification -------------------------------------------
  criterion(5, [&](Clock::time_point t0) {
    auto rep = rank3::classify_rank3_psl28();
    const double secs = seconds_since(t0);
    bool tails = true;
    for (const auto& c : rep.classes) tails = tails && c.tail_ok && c.verified;
    // "Seven, up to isomorphism" is the catalogue count, which lists each
    // dual pair of polyhedra once; as orbits of ordered triples the same
    // data is 14 classes of 1512 triples each.
    const bool ok = rep.class_count_up_to_duality == 7 && rep.class_count == 14 &&
                    rep.all_verified && tails && secs <= 60.0;
    std::ostringstream d;
    d << rep.class_count_up_to_duality
      << " string C-group representations up to isomorphism and duality ("
      << rep.class_count << " orbits of ordered triples:";
    for (std::size_t i = 0; i < rep.classes.size(); ++i)
      d << " {" << rep.classes[i].schlafli[0] << "," << rep.classes[i].schlafli[1] << "}";
    d << "), all re-verified, tail condition holds for all (budget 60 s)";
    report(5, ok, secs, d.str());
  });

  // -- 6: dihedral normalizer formula ---------------------------------------
  criterion(6, [&](Clock::time_point t0) {
    auto rep = oracles::verify_dihedral_normalizers(60);
    std::uint64_t mismatches = 0;
    for (const auto& c : rep.cases)
      if (!c.ok) ++mismatches;
    std::ostringstream d;
    d << "formula == brute-force normalizer order for " << rep.checked
      << " embedded D_2m <= D_2n cases (m | n <= 60), " << mismatches << " mismatches";
    report(6, rep.all_ok && mismatches == 0, seconds_since(t0), d.str());
  });

  // -- 7: involution pair orders in PSL(2,27) -------------------------------
  criterion(7, [&](Clock::time_point t0) {
    auto rep = oracles::verify_divd();
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << "realized d over the simple factor: {";
    for (std::size_t i = 0; i < rep.realized.size(); ++i)
      d << (i ? ", " : "") << rep.realized[i];
    d << "}; every 2d | 26 or 2d | 28, no d = 0 mod 4, even d forces 2d | 28 (budget 300 s)";
    report(7, rep.all_ok && secs <= 300.0, secs, d.str());
  });

  // -- 8: normalizer fingerprints in C2 x PSL(2,27) -------------------------
  criterion(8, [&](Clock::time_point t0) {
    auto rep = oracles::verify_normc2psl();
    std::ostringstream d;
    d << rep.subgroups_checked << " dihedral subgroups; ";
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
      const auto& c = rep.classes[i];
      d << (i ? ", " : "") << "d=" << c.d << ": " << c.subgroup_count
        << (c.in_hypothesis ? " matching N = " : " invariant, order ")
        << (c.in_hypothesis ? "C2 x D_" + std::to_string(c.predicted_order / 2)
                            : std::to_string(c.fingerprint.order));
    }
    report(8, rep.all_ok, seconds_since(t0), d.str());
  });

  // -- 9: dihedral parameters in R(3) ---------------------------------------
  criterion(9, [&](Clock::time_point t0) {
    oracles::GroupTable T3(ree3.group, 2000);
    auto rep = oracles::verify_psl28_lemma(T3);
    std::ostringstream d;
    d << "realized d in R(3): {";
    for (std::size_t i = 0; i < rep.realized.size(); ++i) d << (i ? ", " : "") << rep.realized[i];
    d << "}; <involutions of N(D)> = D for all " << rep.subgroups_checked << " subgroups";
    report(9, rep.all_ok, seconds_since(t0), d.str());
  });

  // -- 10: 36 D14 subgroups in PSL(2,8) -------------------------------------
  criterion(10, [&](Clock::time_point t0) {
    oracles::GroupTable T8(ree::build_psl28(), 600);
    auto survey = oracles::dihedral_subgroup_survey(T8, T8.involution_indices());
    const std::uint64_t d14 = survey.subgroup_counts.count(7) ? survey.subgroup_counts.at(7) : 0;
    std::ostringstream d;
    d << d14 << " subgroups D14 in PSL(2,8) (expected 36)";
    report(10, d14 == 36, seconds_since(t0), d.str());
  });

  // -- 11: no dihedral product subgroups ------------------------------------
  criterion(11, [&](Clock::time_point t0) {
    oracles::GroupTable T3(ree3.group, 2000);
    auto r3 = oracles::no_dihedral_product_check(T3);
    oracles::GroupTable T27(ree::build_psl2(gf3::Field::gf27()), 10000);
    auto r27 = oracles::no_dihedral_product_check(T27);
    // Planted positive control: the search must find D6 x D6 in D6 x D6.
    oracles::GroupTable TP(oracles::make_dihedral_product(3, 3), 40);
    auto rp = oracles::no_dihedral_product_check(TP);
    const bool ok = !r3.found && !r27.found && rp.found;
    std::ostringstream d;
    d << "no D_2c x D_2d (c, d >= 3): R(3) clean (" << r3.dihedrals_scanned
      << " dihedrals scanned), PSL(2,27) clean (" << r27.dihedrals_scanned
      << " scanned); planted D6 x D6 control found";
    report(11, ok, seconds_since(t0), d.str());
  });

  std::printf("acceptance: %d/11 criteria passed\n", 11 - g_failed);
  return g_failed == 0 ? 0 : 1;
}
