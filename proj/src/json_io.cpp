#include "rloc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rloc {

namespace {

using ojson = nlohmann::ordered_json;

ojson scalar_json(const Scalar& s) { return ojson::array({s.a, s.b}); }

ojson mat_json(const Mat2& m) {
  return ojson::array(
      {scalar_json(m.a), scalar_json(m.b), scalar_json(m.c), scalar_json(m.d)});
}

ojson cyclo_json(const Cyclotomic& v) {
  ojson terms = ojson::array();
  for (const auto& [k, c] : v.terms()) terms.push_back(ojson::array({k, c}));
  return ojson{{"e", v.order()}, {"c", std::move(terms)}};
}

ojson row_json(const std::vector<Cyclotomic>& row) {
  ojson r = ojson::array();
  for (const auto& v : row) r.push_back(cyclo_json(v));
  return r;
}

ojson header_json(const Group& G, const ClassTable& ct) {
  return ojson{{"group", G.spec.name()},
               {"kind", G.spec.kind == Kind::GL ? "gl" : "gu"},
               {"p", G.spec.p},
               {"ell", G.spec.ell},
               {"order", G.order()},
               {"classes", ct.num_classes()},
               {"exponent", ct.exponent}};
}

}  // namespace

std::string cache_stem(const GroupSpec& spec) {
  return std::string(spec.kind == Kind::GL ? "gl" : "gu") + "_" +
         std::to_string(spec.p) + "_" + std::to_string(spec.ell);
}

std::string classes_json(const Group& G, const ClassTable& ct) {
  ojson doc = header_json(G, ct);
  ojson cl = ojson::array();
  for (int32_t c = 0; c < ct.num_classes(); ++c) {
    cl.push_back(ojson{{"rep", mat_json(G.mat(ct.reps[(size_t)c]))},
                       {"size", ct.sizes[(size_t)c]},
                       {"order", ct.rep_order[(size_t)c]},
                       {"inverse", ct.inverse_class(c)}});
  }
  doc["class_list"] = std::move(cl);
  return doc.dump(1) + "\n";
}

std::string irr_json(const Group& G, const ClassTable& ct,
                     const CharTable& tab) {
  ojson doc = header_json(G, ct);
  ojson rows = ojson::array();
  for (size_t r = 0; r < tab.rows.size(); ++r) {
    rows.push_back(
        ojson{{"degree", tab.degree(r)}, {"values", row_json(tab.rows[r])}});
  }
  doc["irreducibles"] = std::move(rows);
  return doc.dump(1) + "\n";
}

std::string regular_json(const Group& G, const ClassTable& ct,
                         const RegularSet& rs) {
  ojson doc = header_json(G, ct);
  ojson rows = ojson::array();
  for (const auto& rc : rs.chars) {
    rows.push_back(ojson{{"type", mat_type_name(rc.type)},
                         {"orbit", rc.orbit},
                         {"degree", rc.cf.degree()},
                         {"values", row_json(rc.cf.v)}});
  }
  doc["regular"] = std::move(rows);
  return doc.dump(1) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  check(f.good(), "io: cannot open " + path + " for writing");
  f << text;
  f.close();
  check(f.good(), "io: write failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f.good()) return "";
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace rloc
