// Acceptance harness: runs one numbered criterion per invocation and prints
// a single PASS/FAIL line for it (details indented above the verdict).
//
//   acceptance --criterion N [--budget-elems M]

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "rloc/json_io.hpp"
#include "rloc/tensor.hpp"

using namespace rloc;

namespace {

GroupSpec gl(int64_t p, int ell) { return GroupSpec{Kind::GL, p, ell, -1}; }
GroupSpec gu(int64_t p, int ell) { return GroupSpec{Kind::GU, p, ell, -1}; }

void absorb(CheckResult& into, const std::string& tag, const CheckResult& r) {
  std::istringstream ss(r.detail);
  std::string line;
  while (std::getline(ss, line)) into.note("[" + tag + "] " + line);
  if (!r.ok) into.ok = false;
}

CheckResult criterion(int n, int64_t budget) {
  CheckResult r;
  switch (n) {
    case 1:
      absorb(r, "gu q=3", check_unitary_level_one(gu(3, 1)));
      absorb(r, "gu q=5", check_unitary_level_one(gu(5, 1)));
      break;
    case 2:
      absorb(r, "gu q=3", check_pair_multiplicity_bound(gu(3, 1)));
      absorb(r, "gu q=5", check_pair_multiplicity_bound(gu(5, 1)));
      absorb(r, "gl q=3", check_pair_multiplicity_bound(gl(3, 1)));
      break;
    case 3:
      absorb(r, "gl", check_regular_exhaustive(gl(3, 2)));
      absorb(r, "gu", check_regular_exhaustive(gu(3, 2)));
      break;
    case 4:
    case 5:
      // criterion 5 (multiplicity freeness of the anisotropic products) is
      // contained in the exhaustive triple scan of criterion 4
      absorb(r, "gl", check_regular_triple_bounds(gl(3, 2)));
      absorb(r, "gu", check_regular_triple_bounds(gu(3, 2)));
      break;
    case 6:
      absorb(r, "q=3", check_triple_product_witness(gl(3, 2), 1));
      absorb(r, "q=5", check_triple_product_witness(gl(5, 2), 3));
      break;
    case 7:
      absorb(r, "gl", check_coset_census(gl(3, 2), 200));
      absorb(r, "gu", check_coset_census(gu(3, 2), 200));
      break;
    case 8:
      absorb(r, "gl", check_borel_predictions(gl(3, 2)));
      break;
    case 9:
      absorb(r, "p=3 l=2", check_nilpotent_coset_counts(3, 2));
      absorb(r, "p=3 l=3", check_nilpotent_coset_counts(3, 3));
      absorb(r, "p=3 l=4", check_nilpotent_coset_counts(3, 4));
      absorb(r, "p=5 l=2", check_nilpotent_coset_counts(5, 2));
      break;
    case 10:
      absorb(r, "gl l=3", check_depth_three(gl(3, 3), budget, 10000));
      break;
    case 11:
      absorb(r, "gl q=3", constituent_census(gl(3, 2)));
      absorb(r, "gu q=3", constituent_census(gu(3, 2)));
      absorb(r, "gl q=5", constituent_census(gl(5, 2)));
      absorb(r, "gu q=5", constituent_census(gu(5, 2)));
      break;
    case 12: {
      absorb(r, "gl q=3 l=1", check_table_integrity(gl(3, 1)));
      absorb(r, "gu q=3 l=1", check_table_integrity(gu(3, 1)));
      absorb(r, "gl q=3 l=2", check_table_integrity(gl(3, 2)));
      absorb(r, "gu q=3 l=2", check_table_integrity(gu(3, 2)));
      // deterministic serialization: two independent computations must
      // produce byte-identical documents
      auto snapshot = [&](const GroupSpec& spec) {
        Group G = Group::enumerate(spec);
        MatrixGroupView view(G);
        std::vector<uint32_t> gens(G.gens.begin(), G.gens.end());
        ClassTable ct = ClassTable::build(view, gens);
        CharTable tab = character_table(ct);
        RegularSet rs = regular_characters(G, ct);
        return classes_json(G, ct) + irr_json(G, ct, tab) +
               regular_json(G, ct, rs);
      };
      for (GroupSpec spec : {gl(3, 2), gu(3, 1)}) {
        std::string a = snapshot(spec), b = snapshot(spec);
        r.expect(!a.empty() && a == b,
                 "serialized documents for " + spec.name() +
                     " are byte-identical across independent runs (" +
                     std::to_string(a.size()) + " bytes)");
      }
      break;
    }
    default:
      r.fail("unknown criterion " + std::to_string(n));
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  int crit = -1;
  int64_t budget = 400000;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      crit = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--budget-elems") == 0 && i + 1 < argc)
      budget = std::atoll(argv[++i]);
  }
  if (crit < 1 || crit > 12) {
    std::cerr << "usage: acceptance --criterion N (1..12) [--budget-elems M]"
              << std::endl;
    return 2;
  }
  CheckResult r;
  try {
    r = criterion(crit, budget);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  std::istringstream ss(r.detail);
  std::string line;
  while (std::getline(ss, line)) std::cout << "    " << line << "\n";
  std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << crit << std::endl;
  return r.ok ? 0 : 1;
}
