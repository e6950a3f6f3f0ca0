// Command-line front end: exact character-table and tensor-decomposition
// computations for GL2 / GU2 over Z/p^l, with JSON caching and the
// verification suites.
//
// Exit codes: 0 success, 1 invalid configuration, 2 budget exceeded,
// 3 verification failure (details printed).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rloc/json_io.hpp"
#include "rloc/tensor.hpp"

using namespace rloc;

namespace {

struct Job {
  std::string group = "gl2";
  int64_t p = 3;
  int ell = 1;
  std::string out = "text";
  std::string cache;
  int threads = 1;
  int64_t budget = 400000;
  uint64_t seed = 0xC0FFEE;
  bool check_cache = false;
};

GroupSpec spec_of(const Job& job) {
  return GroupSpec{job.group == "gu2" ? Kind::GU : Kind::GL, job.p, job.ell,
                   -1};
}

// compute-or-load with optional byte-level revalidation
std::string cached_doc(const Job& job, const std::string& suffix,
                       const std::function<std::string()>& compute) {
  if (job.cache.empty()) return compute();
  std::string path =
      job.cache + "/" + cache_stem(spec_of(job)) + "." + suffix + ".json";
  std::string prior = read_file(path);
  if (!prior.empty() && !job.check_cache) return prior;
  std::string doc = compute();
  if (!prior.empty() && prior != doc)
    throw std::runtime_error("cache mismatch for " + path);
  std::string tmp = path + ".tmp";
  write_file(tmp, doc);
  check(std::rename(tmp.c_str(), path.c_str()) == 0,
        "io: rename failed for " + path);
  return doc;
}

struct Ctx {
  Group G;
  std::unique_ptr<MatrixGroupView> view;
  ClassTable ct;
};

std::unique_ptr<Ctx> make_ctx(const GroupSpec& spec, int64_t budget) {
  auto c = std::make_unique<Ctx>();
  c->G = Group::enumerate(spec, budget);
  c->view = std::make_unique<MatrixGroupView>(c->G);
  std::vector<uint32_t> gens(c->G.gens.begin(), c->G.gens.end());
  c->ct = ClassTable::build(*c->view, gens);
  return c;
}

void emit_manifest(const Job& job, const std::string& command, double secs) {
  nlohmann::ordered_json m{{"command", command},
                           {"group", job.group},
                           {"p", job.p},
                           {"ell", job.ell},
                           {"out", job.out},
                           {"threads", job.threads},
                           {"budget_elems", job.budget},
                           {"seed", job.seed},
                           {"seconds", secs}};
  std::cerr << m.dump() << std::endl;
}

int finish(const CheckResult& r) {
  std::cout << r.detail;
  if (!r.ok) {
    std::cout << "VERIFICATION FAILED" << std::endl;
    return 3;
  }
  std::cout << "ok" << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Job job;
  std::string tensor_lhs, tensor_rhs, verify_what;

  CLI::App app{"exact character computations for GL2/GU2 over Z/p^l"};
  app.add_option("--group", job.group, "gl2 or gu2")
      ->check(CLI::IsMember({"gl2", "gu2"}));
  app.add_option("--p", job.p, "odd prime p");
  app.add_option("--ell", job.ell, "level l >= 1");
  app.add_option("--out", job.out, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache", job.cache, "cache directory for JSON documents");
  app.add_option("--threads", job.threads, "worker threads");
  app.add_option("--budget-elems", job.budget, "largest group enumerated");
  app.add_option("--sample-seed", job.seed, "sampling seed");
  app.add_flag("--check-cache", job.check_cache,
               "recompute cached documents and compare bytes");
  app.require_subcommand(1);

  auto* sub_order = app.add_subcommand("order", "print the group order");
  auto* sub_classes = app.add_subcommand("classes", "conjugacy class data");
  auto* sub_irr = app.add_subcommand("irr", "irreducible character table");
  auto* sub_regular = app.add_subcommand("regular", "regular characters");
  auto* sub_tensor =
      app.add_subcommand("tensor", "decompose a tensor product");
  sub_tensor->add_option("--lhs", tensor_lhs, "row index of the left factor")
      ->required();
  sub_tensor->add_option("--rhs", tensor_rhs, "row index of the right factor")
      ->required();
  auto* sub_verify = app.add_subcommand("verify", "run a verification suite");
  sub_verify
      ->add_option("suite", verify_what,
                   "prop33 | thm-main | section6 | section8 | section9 | "
                   "w-pair | table2")
      ->required()
      ->check(CLI::IsMember({"prop33", "thm-main", "section6", "section8",
                             "section9", "w-pair", "table2"}));
  auto* sub_conj =
      app.add_subcommand("conjecture", "constituent census report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (job.p < 3 || job.p % 2 == 0 || job.ell < 1) {
    std::cerr << "invalid configuration: need odd p >= 3 and ell >= 1"
              << std::endl;
    return 1;
  }
  GroupSpec spec = spec_of(job);
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  };

  int rc = 0;
  std::string command;
  try {
    if (sub_order->parsed()) {
      command = "order";
      std::cout << spec.expected_order() << std::endl;
    } else if (sub_classes->parsed() || sub_irr->parsed() ||
               sub_regular->parsed() || sub_tensor->parsed()) {
      if (spec.expected_order() > job.budget) {
        std::cerr << "budget exceeded: |G| = " << spec.expected_order()
                  << " > " << job.budget << std::endl;
        return 2;
      }
      auto cx = make_ctx(spec, job.budget);
      if (sub_classes->parsed()) {
        command = "classes";
        std::string doc = cached_doc(job, "classes", [&] {
          return classes_json(cx->G, cx->ct);
        });
        if (job.out == "json")
          std::cout << doc;
        else if (job.out == "csv") {
          std::cout << "class,size,rep_order\n";
          for (int32_t c = 0; c < cx->ct.num_classes(); ++c)
            std::cout << c << "," << cx->ct.sizes[(size_t)c] << ","
                      << cx->ct.rep_order[(size_t)c] << "\n";
        } else
          std::cout << spec.name() << ": " << cx->G.order() << " elements, "
                    << cx->ct.num_classes() << " classes" << std::endl;
      } else if (sub_irr->parsed()) {
        command = "irr";
        CharTable tab = character_table(cx->ct);
        std::string doc =
            cached_doc(job, "irr", [&] { return irr_json(cx->G, cx->ct, tab); });
        if (job.out == "json")
          std::cout << doc;
        else if (job.out == "csv") {
          std::cout << "row,degree\n";
          for (size_t r = 0; r < tab.rows.size(); ++r)
            std::cout << r << "," << tab.degree(r) << "\n";
        } else {
          std::cout << spec.name() << ": " << tab.rows.size()
                    << " irreducibles, degrees:";
          for (size_t r = 0; r < tab.rows.size(); ++r)
            std::cout << " " << tab.degree(r);
          std::cout << std::endl;
        }
      } else if (sub_regular->parsed()) {
        command = "regular";
        RegularSet rs = regular_characters(cx->G, cx->ct);
        std::string doc = cached_doc(job, "regular", [&] {
          return regular_json(cx->G, cx->ct, rs);
        });
        if (job.out == "json")
          std::cout << doc;
        else if (job.out == "csv") {
          std::cout << "index,type,degree\n";
          for (size_t r = 0; r < rs.chars.size(); ++r)
            std::cout << r << "," << mat_type_name(rs.chars[r].type) << ","
                      << rs.chars[r].cf.degree() << "\n";
        } else {
          int64_t nss = 0, nsns = 0, ncus = 0;
          for (const auto& reg : rs.chars) {
            nss += reg.type == MatType::SS;
            nsns += reg.type == MatType::SNS;
            ncus += reg.type == MatType::CUS;
          }
          std::cout << spec.name() << ": " << rs.chars.size()
                    << " regular characters (split " << nss
                    << ", non-semisimple " << nsns << ", anisotropic " << ncus
                    << ")" << std::endl;
        }
      } else {
        command = "tensor";
        CharTable tab = character_table(cx->ct);
        size_t li = (size_t)std::stoul(tensor_lhs);
        size_t ri = (size_t)std::stoul(tensor_rhs);
        if (li >= tab.rows.size() || ri >= tab.rows.size()) {
          std::cerr << "invalid configuration: row index out of range"
                    << std::endl;
          return 1;
        }
        ClassFunction a = cf_make(cx->ct, cx->G, tab.rows[li], "lhs");
        ClassFunction b = cf_make(cx->ct, cx->G, tab.rows[ri], "rhs");
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        if (job.out == "csv") std::cout << "row,degree,multiplicity\n";
        for (size_t m = 0; m < tab.rows.size(); ++m) {
          int64_t v = multiplicity(
              a, b, cf_make(cx->ct, cx->G, tab.rows[m], ""));
          if (!v) continue;
          if (job.out == "json")
            rows.push_back(nlohmann::ordered_json{
                {"row", m}, {"degree", tab.degree(m)}, {"mult", v}});
          else if (job.out == "csv")
            std::cout << m << "," << tab.degree(m) << "," << v << "\n";
          else
            std::cout << "row " << m << " (degree " << tab.degree(m) << "): "
                      << v << std::endl;
        }
        if (job.out == "json")
          std::cout << nlohmann::ordered_json{{"lhs", li},
                                              {"rhs", ri},
                                              {"constituents", rows}}
                           .dump(1)
                    << std::endl;
      }
    } else if (sub_verify->parsed() || sub_conj->parsed()) {
      command = sub_conj->parsed() ? "conjecture" : "verify " + verify_what;
      if (sub_conj->parsed()) verify_what = "table2";
      if (spec.expected_order() > job.budget) {
        std::cerr << "budget exceeded: |G| = " << spec.expected_order()
                  << " > " << job.budget << std::endl;
        return 2;
      }
      CheckResult r;
      if (verify_what == "prop33") {
        if (spec.kind != Kind::GU || spec.ell != 1) {
          std::cerr << "invalid configuration: this suite needs --group gu2 "
                       "--ell 1"
                    << std::endl;
          return 1;
        }
        r = check_unitary_level_one(spec);
      } else if (verify_what == "thm-main") {
        r = check_regular_triple_bounds(spec);
      } else if (verify_what == "section6") {
        r = check_coset_census(spec, 200);
      } else if (verify_what == "section8") {
        r = check_borel_predictions(spec);
      } else if (verify_what == "section9") {
        r = check_nilpotent_coset_counts(job.p, job.ell);
        if (job.ell % 2 == 0) {
          CheckResult w = check_triple_product_witness(spec, job.p - 2);
          r.ok = r.ok && w.ok;
          r.detail += w.detail;
        }
      } else if (verify_what == "w-pair") {
        r = check_depth_three(spec, job.budget, 10000);
      } else {  // table2
        r = constituent_census(spec);
      }
      rc = finish(r);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    rc = 3;
  }
  emit_manifest(job, command, elapsed());
  return rc;
}
