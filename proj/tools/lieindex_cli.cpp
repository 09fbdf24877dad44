// Command-line front end: cascades, real forms, indices, parabolic table and
// the verification suite.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lieindex/indexcalc.hpp"
#include "lieindex/paraquasi.hpp"
#include "lieindex/realform.hpp"
#include "lieindex/report.hpp"
#include "lieindex/verify.hpp"

using namespace lieindex;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<RealForm> lookup_or_usage(const std::string& name) {
  auto rf = registry_lookup(name);
  if (rf) return rf;
  std::string msg = "unknown real form '" + name + "'. Available names:";
  for (auto& n : registry_names()) msg += "\n  " + n;
  throw UsageError(msg);
}

int cmd_cascade(const std::string& type, int rank, Format fmt) {
  if (type.size() != 1) throw UsageError("type must be a single letter A-G");
  SimpleType t;
  try {
    t = SimpleType::make(type[0], rank);
  } catch (const TypeError& e) {
    throw UsageError(e.what());
  }
  Json j = cascade_json(t);
  std::cout << render(fmt == Format::Csv ? j["cascade"] : j, fmt);
  return kOk;
}

int cmd_realform(const std::string& name, Format fmt) {
  auto rf = lookup_or_usage(name);
  std::cout << render(analysis_json(*rf), fmt);
  return kOk;
}

int cmd_index(const std::string& name, const std::string& which, Format fmt) {
  auto rf = lookup_or_usage(name);
  IndexReport rep;
  if (which == "b") {
    if (rf->is_compact()) throw UsageError("'" + name + "' is compact: b is zero");
    rep = verify_formule_indice(*rf, analyze(*rf));
  } else {
    Subalgebra q = which == "borel" ? borel(*rf) : minimal_parabolic(*rf);
    IndexResult ir = compute_index(q);
    rep.name = rf->name();
    rep.dim_b = q.dim();
    rep.index_b = ir.index;
    if (!rf->is_compact()) {
      CascadeAnalysis an = analyze(*rf);
      rep.rg_diff = an.rg_g - an.rg_k;
      rep.star = an.star;
    } else {
      rep.star = true;
    }
    rep.stable = is_stable(q, ir.regular);
    rep.reductive = is_reductive_form(q, ir.regular, ir.index);
  }
  std::cout << render(index_json(rep, which), fmt);
  return rep.all_pass() ? kOk : kFail;
}

int cmd_table4(int max_rank, Format fmt) {
  Json rows = Json::array();
  for (SimpleType t : table4_types(max_rank)) {
    Table4Row row = table4_row(t);
    if (fmt == Format::Csv) {
      for (size_t i = 0; i < row.verdict.size(); ++i)
        rows.push_back({{"type", t.name()}, {"node", i + 1}, {"quasi_reductive", static_cast<bool>(row.verdict[i])}});
    } else {
      rows.push_back(table4_json(row));
    }
  }
  if (fmt == Format::Text) {
    for (const Json& r : rows) {
      std::string line = r["type"].get<std::string>() + ":";
      for (const Json& n : r["nodes"]) line += n["quasi_reductive"].get<bool>() ? " ●" : " ○";
      std::cout << line << "\n";
    }
    return kOk;
  }
  if (fmt == Format::Json) {
    for (const Json& r : rows) std::cout << r.dump() << "\n";
    return kOk;
  }
  std::cout << render(rows, fmt);
  return kOk;
}

Json check_json(const CheckResult& c) {
  return {{"id", c.id},         {"name", c.name},         {"scope", c.scope},       {"pass", c.passed},
          {"detail", c.detail}, {"failures", c.failures}, {"warnings", c.warnings}, {"seconds", c.seconds}};
}

int cmd_verify(const std::string& scope, Format fmt) {
  if (!valid_scope(scope)) throw UsageError("unknown scope '" + scope + "'");
  if (fmt == Format::Text && scope == "parabolic") {
    std::cout << "quasi-reductive parabolics p_{beta_i} (● yes, ○ no):\n";
    cmd_table4(8, Format::Text);
  }
  bool all = true;
  Json rows = Json::array();
  for (int id : criteria_in_scope(scope)) {
    CheckResult c = run_criterion(id);
    all = all && c.passed;
    if (fmt == Format::Json) {
      std::cout << check_json(c).dump() << std::endl;
    } else if (fmt == Format::Csv) {
      rows.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.passed}, {"detail", c.detail},
                      {"warnings", c.warnings.size()}});
    } else {
      std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << c.detail << std::endl;
      for (auto& f : c.failures) std::cout << "      failure: " << f << "\n";
      for (auto& w : c.warnings) std::cout << "      warning: " << w << "\n";
    }
  }
  if (fmt == Format::Csv) std::cout << render(rows, fmt);
  return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostant cascades, real forms and indices of Borel subalgebras"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* cascade = app.add_subcommand("cascade", "Kostant cascade of a simple type");
  std::string type;
  int rank = 0;
  cascade->add_option("--type", type, "Family letter A-G")->required();
  cascade->add_option("--rank", rank, "Rank")->required();

  auto* realform = app.add_subcommand("realform", "Cascade analysis of a real form");
  std::string name;
  realform->add_option("--name", name, "Registry name, e.g. 'su(2,1)'")->required();

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string scope = "all";
  verify->add_option("--scope", scope, "all, cascade, chevalley, realform, parabolic or index");

  auto* idx = app.add_subcommand("index", "Index of b, the Borel or the minimal parabolic");
  std::string which = "b";
  idx->add_option("--name", name, "Registry name")->required();
  idx->add_option("--subalgebra", which, "b, borel or minimal-parabolic")
      ->check(CLI::IsMember({"b", "borel", "minimal-parabolic"}));

  auto* table4 = app.add_subcommand("table4", "Quasi-reductivity of parabolics of one simple root");
  int max_rank = 8;
  table4->add_option("--max-rank", max_rank, "Largest rank listed")->check(CLI::Range(1, 8));

  auto* list = app.add_subcommand("list", "List registry names");

  // --format is accepted after the subcommand as well
  for (auto* sub : {cascade, realform, verify, idx, table4, list})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Format fmt = parse_format(format);
    if (*cascade) return cmd_cascade(type, rank, fmt);
    if (*realform) return cmd_realform(name, fmt);
    if (*verify) return cmd_verify(scope, fmt);
    if (*idx) return cmd_index(name, which, fmt);
    if (*table4) return cmd_table4(max_rank, fmt);
    if (*list) {
      for (auto& n : registry_names()) std::cout << n << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
