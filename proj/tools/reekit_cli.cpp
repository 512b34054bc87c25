// reekit — command line front end.
//
// Subcommands build the two small Ree groups, extract their unitals, verify
// string C-group tuples, re-run the desk-check lemmas, and drive the rank-3
// constructions.  All reports are JSON with deterministic key order.
//
// Exit codes: 0 success, 2 usage error, 3 construction impossible or budget
// exhausted, 4 verification failure, 5 I/O failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgroupkit/cgroup.hpp"
#include "gf3field/gf.hpp"
#include "oracles/oracles.hpp"
#include "permcore/bsgs.hpp"
#include "permcore/perm.hpp"
#include "permcore/smallgroup.hpp"
#include "rank3build/rank3.hpp"
#include "reegroups/companions.hpp"
#include "reegroups/params.hpp"
#include "reegroups/ree.hpp"
#include "unital/unital.hpp"

using json = nlohmann::ordered_json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json perm_to_json(const permcore::Perm& p) {
  json a = json::array();
  for (permcore::Pt x : p.img) a.push_back(x);
  return a;
}

permcore::Perm perm_from_json(const json& a) {
  if (!a.is_array()) throw std::runtime_error("permutation must be an array of images");
  permcore::Perm p;
  p.img.reserve(a.size());
  for (const auto& v : a) p.img.push_back(v.get<permcore::Pt>());
  if (!permcore::is_valid_image_vector(p.img)) {
    throw std::runtime_error("permutation image vector is not a bijection");
  }
  return p;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw IoError("cannot parse " + path + ": " + ex.what());
  }
  return j;
}

void write_report(const json& j, const std::string& out) {
  if (out.empty()) {
    std::printf("%s\n", j.dump(2).c_str());
    return;
  }
  std::ofstream f(out);
  if (!f) throw IoError("cannot open " + out + " for writing");
  f << j.dump(2) << "\n";
  if (!f) throw IoError("write to " + out + " failed");
}

json group_report(const ree::ReeGroup& R) {
  json j;
  j["e"] = R.params.e;
  j["q"] = R.params.q;
  j["degree"] = R.params.degree.get_str();
  j["order"] = R.group.order().get_str();
  j["block_size"] = R.params.block_size;
  j["involution_count"] = R.params.involution_count.get_str();
  j["centralizer_order"] = R.params.centralizer_order.get_str();
  j["certified_by_sweep"] = R.group.certified_by_sweep();
  json base = json::array();
  for (permcore::Pt b : R.group.base()) base.push_back(b);
  j["base"] = base;
  json gens = json::array();
  for (const auto& g : R.group.generators()) gens.push_back(perm_to_json(g));
  j["generators"] = gens;
  j["involution"] = perm_to_json(R.involution);
  return j;
}

ree::ReeGroup build_for(int e) {
  if (e == 0) return ree::build_ree3();
  if (e == 1) return ree::build_ree27();
  throw std::runtime_error("only e = 0 and e = 1 are constructible here");
}

int cmd_ree_build(int e, const std::string& out) {
  ree::ReeGroup R = build_for(e);
  json j;
  j["command"] = "ree build";
  j.update(group_report(R));
  write_report(j, out);
  return 0;
}

int cmd_unital(int e, bool emit_blocks, const std::string& out) {
  ree::ReeGroup R = build_for(e);
  unital::SteinerSystem S = unital::build_unital(R);
  json j;
  j["command"] = "unital";
  j["e"] = e;
  j["v"] = S.v;
  j["k"] = S.k;
  j["lambda"] = 1;
  j["block_count"] = S.blocks.size();
  j["pairs_covered"] = S.pairs_covered;
  j["verified"] = S.verified;
  if (emit_blocks) {
    json blocks = json::array();
    for (const auto& b : S.blocks) {
      json bl = json::array();
      for (permcore::Pt x : b) bl.push_back(x);
      blocks.push_back(std::move(bl));
    }
    j["blocks"] = std::move(blocks);
  }
  write_report(j, out);
  return S.verified ? 0 : 4;
}

int cmd_cgroup_verify(const std::string& group_path, const std::string& tuple_path,
                      const std::string& out) {
  const json gj = load_json(group_path);
  const json tj = load_json(tuple_path);
  if (!gj.contains("generators")) throw std::runtime_error("group file lacks \"generators\"");
  if (!tj.contains("generators")) throw std::runtime_error("tuple file lacks \"generators\"");
  std::vector<permcore::Perm> ggens, tgens;
  for (const auto& a : gj["generators"]) ggens.push_back(perm_from_json(a));
  for (const auto& a : tj["generators"]) tgens.push_back(perm_from_json(a));
  if (ggens.empty() || tgens.empty()) throw std::runtime_error("empty generator list");

  permcore::StabChain G = permcore::build_bsgs(ggens);
  if (gj.contains("order") && G.order().get_str() != gj["order"].get<std::string>()) {
    throw std::runtime_error("group file order does not match the generated group");
  }

  json j;
  j["command"] = "cgroup verify";
  j["group_order"] = G.order().get_str();
  bool membership = true;
  for (const auto& t : tgens) membership = membership && G.contains(t);
  j["membership_ok"] = membership;

  auto scheck = cgk::check_string(tgens);
  json sj;
  sj["involutions_ok"] = scheck.involutions_ok;
  sj["string_ok"] = scheck.string_ok;
  sj["degenerate"] = scheck.degenerate;
  sj["schlafli"] = scheck.schlafli;
  j["string"] = sj;

  bool ok = membership && scheck.ok() && !scheck.degenerate;
  if (scheck.ok()) {
    permcore::StabChain H = permcore::build_bsgs(tgens);
    j["tuple_group_order"] = H.order().get_str();
    j["generates_input_group"] = (H.order() == G.order());
    auto icheck = cgk::check_intersection(tgens);
    json ij;
    ij["ok"] = icheck.ok;
    ij["refused"] = icheck.refused;
    if (!icheck.detail.empty()) ij["detail"] = icheck.detail;
    j["intersection"] = ij;
    ok = ok && icheck.ok && (H.order() == G.order());

    if (icheck.ok) {
      auto geo = cgk::build_coset_geometry(tgens, H);
      json gj2;
      json fc = json::array();
      for (const auto& c : geo.face_counts) fc.push_back(c.get_str());
      gj2["face_counts"] = fc;
      gj2["flag_count"] = geo.flag_count.get_str();
      gj2["thin"] = geo.thin;
      gj2["thin_checked"] = geo.thin_checked;
      gj2["materialized"] = geo.materialized;
      if (geo.materialized) {
        json inc;
        for (const auto& [key, cnt] : geo.incidences) {
          inc[std::to_string(key.first) + "-" + std::to_string(key.second)] = cnt;
        }
        gj2["incidences"] = inc;
      }
      j["geometry"] = gj2;
    }
  }
  j["ok"] = ok;
  write_report(j, out);
  return ok ? 0 : 4;
}

json fingerprint_json(const oracles::NormalizerFingerprint& f) {
  json j;
  j["order"] = f.order;
  j["involutions"] = f.involutions;
  j["center_order"] = f.center_order;
  j["derived_order"] = f.derived_order;
  j["generated_by_involutions"] = f.generated_by_involutions;
  return j;
}

int cmd_lemmas(const std::string& checks_csv, const std::string& out) {
  std::vector<std::string> checks;
  std::string cur;
  for (char c : checks_csv + ",") {
    if (c == ',') {
      if (!cur.empty()) checks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (checks.empty()) throw std::runtime_error("no checks requested");

  json j;
  j["command"] = "lemmas";
  bool all_ok = true;
  for (const std::string& name : checks) {
    json cj;
    bool ok = false;
    if (name == "norma") {
      auto rep = oracles::verify_dihedral_normalizers(60);
      cj["cases_checked"] = rep.checked;
      ok = rep.all_ok;
    } else if (name == "divd") {
      auto rep = oracles::verify_divd();
      cj["realized"] = rep.realized;
      json pc;
      for (const auto& [d, n] : rep.pair_counts) pc[std::to_string(d)] = n;
      cj["pair_counts"] = pc;
      cj["set_ok"] = rep.set_ok;
      cj["divisibility_ok"] = rep.divisibility_ok;
      ok = rep.all_ok;
    } else if (name == "normc2psl") {
      auto rep = oracles::verify_normc2psl();
      json classes = json::array();
      for (const auto& cls : rep.classes) {
        json c;
        c["d"] = cls.d;
        c["subgroups"] = cls.subgroup_count;
        c["in_hypothesis"] = cls.in_hypothesis;
        c["fingerprint"] = fingerprint_json(cls.fingerprint);
        c["invariant"] = cls.invariant;
        if (cls.in_hypothesis) {
          c["predicted_order"] = cls.predicted_order;
          c["predicted_match"] = cls.predicted_match;
        }
        classes.push_back(std::move(c));
      }
      cj["classes"] = classes;
      cj["subgroups_checked"] = rep.subgroups_checked;
      ok = rep.all_ok;
    } else if (name == "psl28") {
      ree::ReeGroup R3 = ree::build_ree3();
      oracles::GroupTable table(R3.group, 2000);
      auto rep = oracles::verify_psl28_lemma(table);
      cj["realized"] = rep.realized;
      cj["subgroups_checked"] = rep.subgroups_checked;
      cj["closure_ok"] = rep.closure_ok;
      ok = rep.all_ok;
    } else if (name == "fig1") {
      permcore::StabChain P = ree::build_psl28();
      oracles::GroupTable table(P, 600);
      auto invols = table.involution_indices();
      auto survey = oracles::dihedral_subgroup_survey(table, invols);
      cj["involutions"] = invols.size();
      const std::uint64_t d14 =
          survey.subgroup_counts.count(7) ? survey.subgroup_counts.at(7) : 0;
      cj["dihedral_14_count"] = d14;
      ok = (invols.size() == 63 && d14 == 36);
    } else if (name == "semidirect") {
      ree::ReeGroup R3 = ree::build_ree3();
      permcore::StabChain derived = permcore::derived_subgroup(R3.group);
      cj["index"] = mpz_class(R3.group.order() / derived.order()).get_str();
      ok = oracles::semidirect_involution_check(R3.group, derived);
      cj["involutions_in_derived"] = ok;
    } else if (name == "noproduct") {
      ree::ReeGroup R3 = ree::build_ree3();
      oracles::GroupTable t3(R3.group, 2000);
      auto rep3 = oracles::no_dihedral_product_check(t3);
      cj["ree3_found"] = rep3.found;
      cj["ree3_dihedrals_scanned"] = rep3.dihedrals_scanned;
      permcore::StabChain P27 = ree::build_psl2(gf3::Field::gf27());
      oracles::GroupTable t27(P27, 10000);
      auto rep27 = oracles::no_dihedral_product_check(t27);
      cj["psl227_found"] = rep27.found;
      cj["psl227_dihedrals_scanned"] = rep27.dihedrals_scanned;
      permcore::StabChain ctrl = oracles::make_dihedral_product(3, 3);
      oracles::GroupTable tc(ctrl, 100);
      auto repc = oracles::no_dihedral_product_check(tc);
      cj["control_detects"] = repc.found;
      ok = !rep3.found && !rep27.found && repc.found;
    } else {
      throw std::runtime_error("unknown lemma check: " + name);
    }
    cj["ok"] = ok;
    j[name] = std::move(cj);
    all_ok = all_ok && ok;
  }
  j["ok"] = all_ok;
  write_report(j, out);
  return all_ok ? 0 : 4;
}

int cmd_rank3_construct(int e, std::uint64_t seed, bool emit_generators,
                        const std::string& out) {
  json j;
  j["command"] = "rank3 construct";
  j["e"] = e;
  if (e == 0) {
    // R(3) has no rank-3 representation at all: its involutions only generate
    // the derived subgroup.  Report the certificate and signal unconstructible.
    ree::ReeGroup R3 = ree::build_ree3();
    auto rep = rank3::ree3_involution_closure(R3);
    j["constructible"] = false;
    j["involution_closure_order"] = rep.closure_order.get_str();
    j["closure_index"] = rep.index.get_str();
    j["closure_is_derived"] = rep.closure_is_derived;
    write_report(j, out);
    return 3;
  }
  ree::ReeGroup R = build_for(e);
  auto cert = rank3::lemma_rank3_construct(R, seed);
  j["seed"] = cert.seed;
  j["ok"] = cert.ok;
  j["draws"] = cert.draws;
  if (!cert.ok) {
    j["failure_stage"] = cert.failure_stage;
    write_report(j, out);
    return 3;
  }
  j["schlafli"] = cert.schlafli;
  j["generated_order"] = cert.generated_order.get_str();
  j["b0_b2_meet"] = cert.b0_b2_meet;
  j["b1_b2_meet"] = cert.b1_b2_meet;
  j["intersection_ok"] = cert.intersection_ok;
  j["tail_condition_ok"] = cert.tail_condition_ok;
  if (emit_generators) {
    j["rho0"] = perm_to_json(cert.rho0);
    j["rho1"] = perm_to_json(cert.rho1);
    j["rho2"] = perm_to_json(cert.rho2);
  }
  write_report(j, out);
  return 0;
}

int cmd_rank3_classify(const std::string& group, const std::string& out) {
  if (group != "psl28") throw std::runtime_error("only --group psl28 is supported");
  auto rep = rank3::classify_rank3_psl28();
  json j;
  j["command"] = "rank3 classify";
  j["group"] = group;
  j["involutions"] = rep.involutions;
  j["string_triples"] = rep.string_triples;
  j["generating_triples"] = rep.generating_triples;
  j["cgroup_triples"] = rep.cgroup_triples;
  json classes = json::array();
  for (const auto& cls : rep.classes) {
    json c;
    c["schlafli"] = cls.schlafli;
    c["orbit_size"] = cls.orbit_size;
    c["representative"] = cls.rep;
    c["dual_is_distinct"] = cls.dual_is_distinct;
    c["verified"] = cls.verified;
    c["tail_condition"] = cls.tail_ok;
    classes.push_back(std::move(c));
  }
  j["classes"] = classes;
  j["class_count"] = rep.class_count;
  j["class_count_up_to_duality"] = rep.class_count_up_to_duality;
  j["all_verified"] = rep.all_verified;
  write_report(j, out);
  return rep.all_verified ? 0 : 4;
}

int cmd_all(int e, std::uint64_t seed, const std::string& out) {
  json j;
  j["command"] = "all";
  j["e"] = e;
  ree::ReeGroup R = build_for(e);
  j["group"] = group_report(R);
  unital::SteinerSystem S = unital::build_unital(R);
  json uj;
  uj["v"] = S.v;
  uj["k"] = S.k;
  uj["block_count"] = S.blocks.size();
  uj["verified"] = S.verified;
  j["unital"] = uj;
  int rc = S.verified ? 0 : 4;
  if (e == 0) {
    auto rep = rank3::classify_rank3_psl28();
    json cj;
    cj["class_count"] = rep.class_count;
    cj["all_verified"] = rep.all_verified;
    j["classify"] = cj;
    if (!rep.all_verified) rc = rc == 0 ? 4 : rc;
  } else {
    auto cert = rank3::lemma_rank3_construct(R, seed);
    json cj;
    cj["ok"] = cert.ok;
    if (cert.ok) {
      cj["schlafli"] = cert.schlafli;
    } else {
      cj["failure_stage"] = cert.failure_stage;
    }
    j["construct"] = cj;
    if (!cert.ok && rc == 0) rc = 3;
  }
  write_report(j, out);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reekit: small Ree groups, their unitals, and rank-3 string C-groups"};
  app.fallthrough();
  app.require_subcommand(1);

  std::uint64_t seed = 12345;
  int jobs = 1;
  std::string out;
  app.add_option("--seed", seed, "random seed for the randomized constructions");
  app.add_option("--jobs", jobs,
                 "accepted for interface compatibility; everything runs single-threaded");
  app.add_option("--out", out, "write the JSON report here instead of stdout");

  int e_build = 0, e_unital = 0, e_all = 0, e_construct = 1;
  bool emit_blocks = false, emit_generators = false;
  std::string group_path, tuple_path, checks, classify_group = "psl28";

  CLI::App* ree_cmd = app.add_subcommand("ree", "Ree group constructions");
  ree_cmd->fallthrough();
  ree_cmd->require_subcommand(1);
  CLI::App* ree_build = ree_cmd->add_subcommand("build", "construct R(3^(2e+1)) and certify it");
  ree_build->fallthrough();
  ree_build->add_option("--e", e_build, "0 for R(3), 1 for R(27)")->check(CLI::Range(0, 1));

  CLI::App* unital_cmd = app.add_subcommand("unital", "extract and verify the Ree unital");
  unital_cmd->fallthrough();
  unital_cmd->add_option("--e", e_unital, "0 for q=3, 1 for q=27")->check(CLI::Range(0, 1));
  unital_cmd->add_flag("--emit-blocks", emit_blocks, "include the full block list");

  CLI::App* cg_cmd = app.add_subcommand("cgroup", "string C-group verification");
  cg_cmd->fallthrough();
  cg_cmd->require_subcommand(1);
  CLI::App* cg_verify = cg_cmd->add_subcommand("verify", "verify an involution tuple");
  cg_verify->fallthrough();
  cg_verify->add_option("--group", group_path, "JSON file with the ambient group's generators")
      ->required();
  cg_verify->add_option("--tuple", tuple_path, "JSON file with the ordered involution tuple")
      ->required();

  CLI::App* lemmas_cmd = app.add_subcommand("lemmas", "re-run the desk-check lemmas");
  lemmas_cmd->fallthrough();
  lemmas_cmd
      ->add_option("--check", checks,
                   "comma list: norma,divd,normc2psl,psl28,fig1,semidirect,noproduct")
      ->required();

  CLI::App* rank3_cmd = app.add_subcommand("rank3", "rank-3 string C-group representations");
  rank3_cmd->fallthrough();
  rank3_cmd->require_subcommand(1);
  CLI::App* r3_construct =
      rank3_cmd->add_subcommand("construct", "randomized construction for R(27)");
  r3_construct->fallthrough();
  r3_construct->add_option("--e", e_construct, "0 reports R(3) unconstructible; 1 builds")
      ->check(CLI::Range(0, 1));
  r3_construct->add_flag("--emit-generators", emit_generators,
                         "include the three involutions in the report");
  CLI::App* r3_classify =
      rank3_cmd->add_subcommand("classify", "exhaustive classification over PSL(2,8)");
  r3_classify->fallthrough();
  r3_classify->add_option("--group", classify_group, "only psl28 is supported");

  CLI::App* all_cmd = app.add_subcommand("all", "group + unital + rank-3 pipeline");
  all_cmd->fallthrough();
  all_cmd->add_option("--e", e_all, "0 for R(3), 1 for R(27)")->check(CLI::Range(0, 1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ree_build->parsed()) return cmd_ree_build(e_build, out);
    if (unital_cmd->parsed()) return cmd_unital(e_unital, emit_blocks, out);
    if (cg_verify->parsed()) return cmd_cgroup_verify(group_path, tuple_path, out);
    if (lemmas_cmd->parsed()) return cmd_lemmas(checks, out);
    if (r3_construct->parsed()) return cmd_rank3_construct(e_construct, seed, emit_generators, out);
    if (r3_classify->parsed()) return cmd_rank3_classify(classify_group, out);
    if (all_cmd->parsed()) return cmd_all(e_all, seed, out);
    std::fprintf(stderr, "no subcommand selected\n");
    return 2;
  } catch (const IoError& ex) {
    std::fprintf(stderr, "I/O error: %s\n", ex.what());
    return 5;
  } catch (const ree::ReeConstructionError& ex) {
    std::fprintf(stderr, "construction failed: %s\n", ex.what());
    return 3;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "verification failure: %s\n", ex.what());
    return 4;
  }
}
