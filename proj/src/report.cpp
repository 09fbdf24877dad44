#include "lieindex/report.hpp"

#include <sstream>

namespace lieindex {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (text, json, csv)");
}

namespace {

Json nodes_json(const NodeSet& s) {
  Json a = Json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

Json cascade_list(const Cascade& c, const std::vector<int>& ks) {
  Json a = Json::array();
  for (int k : ks) a.push_back({{"k", k + 1}, {"epsilon", format_root(c[k].epsilon)}});
  return a;
}

}  // namespace

Json cascade_json(SimpleType t) {
  RootSystem rs(t);
  Cascade c = kostant_cascade(rs);
  Json j;
  j["type"] = t.name();
  j["rank"] = t.rank;
  j["k_g"] = c.size();
  Json els = Json::array();
  for (size_t k = 0; k < c.size(); ++k) {
    const auto& e = c[k];
    Json row;
    row["k"] = k + 1;
    row["subset"] = nodes_json(e.subset);
    row["epsilon"] = format_root(e.epsilon);
    row["parent"] = e.parent ? Json(*e.parent + 1) : Json(nullptr);
    row["gamma"] = e.gamma.size();
    row["gamma0"] = e.gamma0.size();
    els.push_back(row);
  }
  j["cascade"] = els;
  return j;
}

Json analysis_json(const RealForm& rf) {
  Json j;
  j["name"] = rf.name();
  j["type"] = rf.roots().type_name();
  j["black"] = nodes_json(rf.black());
  if (rf.is_compact()) {
    j["b_is_zero"] = true;
    j["report"] = "b is zero";
    return j;
  }
  CascadeAnalysis an = analyze(rf);
  const Cascade& c = rf.cascade();
  j["b_is_zero"] = false;
  j["kpp"] = cascade_list(c, an.kpp);
  j["kp"] = cascade_list(c, an.kp);
  j["kreel"] = cascade_list(c, an.kreel);
  Json pairs = Json::array();
  for (auto [a, b] : an.kcomp_pairs)
    pairs.push_back({{"plus", format_root(c[a].epsilon)}, {"partner", format_root(c[b].epsilon)}});
  j["kcomp_pairs"] = pairs;
  j["property_P"] = an.property_P;
  j["star"] = an.star;
  j["dim_a"] = an.dim_a;
  j["rg_g"] = an.rg_g;
  j["rg_k"] = an.rg_k;
  j["k_g"] = an.k_g;
  j["k_m"] = an.k_m;
  if (an.star) {
    KcompReport kr = kcomp_count(an);
    j["kcomp_formula"] = kr.formula;
    j["kcomp_counted"] = kr.counted;
  } else {
    j["kcomp_formula"] = nullptr;
    j["kcomp_counted"] = an.kcomp_size();
  }
  CalculKReport ck = verify_calcul_k(an);
  j["dim_a_minus_kreel"] = ck.lhs;
  j["properties"] = {{"A", an.flags.A}, {"B", an.flags.B}, {"Bprime", an.flags.Bprime}, {"C", an.flags.C},
                     {"strongest", an.flags.strongest}};
  const std::string& declared = rf.record().declared.strongest;
  j["declared_strongest"] = declared;
  j["table_match"] = declared == an.flags.strongest;
  if (!rf.record().declared.note.empty()) j["note"] = rf.record().declared.note;
  return j;
}

Json index_json(const IndexReport& r, const std::string& subalgebra) {
  Json j;
  j["name"] = r.name;
  j["subalgebra"] = subalgebra;
  j["dim"] = r.dim_b;
  j["index"] = r.index_b;
  j["rg_diff"] = r.rg_diff;
  j["star"] = r.star;
  if (subalgebra == "b") {
    j["stab_u_dim"] = r.stab_u_dim;
    j["formula_dim"] = r.formula_dim;
  }
  j["stable"] = r.stable;
  j["reductive"] = r.reductive;
  Json v = Json::array();
  for (auto& x : r.verdicts) v.push_back({{"check", x.check}, {"pass", x.pass}, {"detail", x.detail}});
  j["verdicts"] = v;
  return j;
}

Json table4_json(const Table4Row& row) {
  Json j;
  j["type"] = row.type.name();
  Json nodes = Json::array();
  for (size_t i = 0; i < row.verdict.size(); ++i)
    nodes.push_back({{"node", i + 1}, {"quasi_reductive", static_cast<bool>(row.verdict[i])}});
  j["nodes"] = nodes;
  j["d3prime_nodes"] = nodes_json(row.d3prime_nodes);
  return j;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void text_into(std::ostringstream& os, const Json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      bool flat = v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
                                         return x.is_primitive();
                                       }));
      if (flat) {
        os << pad << it.key() << ": ";
        if (v.is_array()) {
          os << "[";
          for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
          os << "]";
        } else {
          os << scalar(v);
        }
        os << "\n";
      } else {
        os << pad << it.key() << ":\n";
        text_into(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_object()) {
        // one line per record
        os << pad << "-";
        for (auto it = v.begin(); it != v.end(); ++it)
          os << " " << it.key() << "=" << (it.value().is_primitive() ? scalar(it.value()) : it.value().dump());
        os << "\n";
      } else {
        os << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_primitive() ? scalar(v) : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string render(const Json& j, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      os << j.dump() << "\n";
      break;
    case Format::Text:
      text_into(os, j, 0);
      break;
    case Format::Csv:
      if (j.is_array() && !j.empty() && j[0].is_object()) {
        bool first = true;
        for (auto it = j[0].begin(); it != j[0].end(); ++it) os << (first ? "" : ",") << it.key(), first = false;
        os << "\n";
        for (const Json& row : j) {
          first = true;
          for (auto it = row.begin(); it != row.end(); ++it) os << (first ? "" : ",") << csv_cell(it.value()), first = false;
          os << "\n";
        }
      } else if (j.is_object()) {
        os << "key,value\n";
        for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << "," << csv_cell(it.value()) << "\n";
      } else {
        os << csv_cell(j) << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace lieindex
