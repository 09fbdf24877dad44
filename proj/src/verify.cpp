#include "lieindex/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "lieindex/indexcalc.hpp"
#include "lieindex/paraquasi.hpp"
#include "lieindex/realform.hpp"

namespace lieindex {

namespace {

constexpr size_t kMaxListed = 12;

struct Collector {
  CheckResult& r;
  int total = 0;
  int bad = 0;
  void expect(bool ok, const std::string& what) {
    ++total;
    if (ok) return;
    ++bad;
    if (r.failures.size() < kMaxListed) r.failures.push_back(what);
  }
  void finish(const std::string& unit) {
    r.passed = bad == 0;
    r.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " " + unit + " agree";
  }
};

template <class F>
void parallel_for(size_t n, F&& f) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  size_t workers = std::min<size_t>(hw, n);
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::mutex err_mu;
  std::exception_ptr err;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// ---- reference data --------------------------------------------------------

int reference_k_g(SimpleType t) {
  int l = t.rank;
  switch (t.family) {
    case Family::A: return (l + 1) / 2;
    case Family::B:
    case Family::C: return l;
    case Family::D: return 2 * (l / 2);
    case Family::E: return l == 6 ? 4 : l == 7 ? 7 : 8;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return -1;
}

Root range_root(int l, std::initializer_list<std::pair<int, int>> spans) {
  // spans of (node, coefficient), 1-based
  Root r(l, 0);
  for (auto [i, c] : spans) r[i - 1] = c;
  return r;
}

std::vector<Root> reference_classical(SimpleType t) {
  const int l = t.rank;
  std::vector<Root> out;
  auto fill = [&](int from, int to, int c, Root& r) {
    for (int j = from; j <= to; ++j) r[j - 1] = c;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= (l + 1) / 2; ++i) {
        Root r(l, 0);
        fill(i, i + (l - 2 * i + 1), 1, r);
        out.push_back(r);
      }
      break;
    case Family::B:
      for (int i = 1; i <= l - 1; i += 2) {
        Root r(l, 0);
        r[i - 1] = 1;
        fill(i + 1, l, 2, r);
        out.push_back(r);
      }
      for (int i = 1; i <= l; i += 2) out.push_back(range_root(l, {{i, 1}}));
      break;
    case Family::C:
      for (int i = 1; i <= l - 1; ++i) {
        Root r(l, 0);
        fill(i, l - 1, 2, r);
        r[l - 1] = 1;
        out.push_back(r);
      }
      out.push_back(range_root(l, {{l, 1}}));
      break;
    case Family::D:
      for (int i = 1; i <= l - 3; i += 2) {
        Root r(l, 0);
        r[i - 1] = 1;
        fill(i + 1, l - 2, 2, r);
        r[l - 2] = r[l - 1] = 1;
        out.push_back(r);
      }
      if (l % 2 == 0) {
        for (int i = 1; i <= l; i += 2) out.push_back(range_root(l, {{i, 1}}));
        out.push_back(range_root(l, {{l, 1}}));
      } else {
        for (int i = 1; i <= l - 2; i += 2) out.push_back(range_root(l, {{i, 1}}));
        out.push_back(range_root(l, {{l - 2, 1}, {l - 1, 1}, {l, 1}}));
      }
      break;
    default:
      break;
  }
  return out;
}

// E-type vectors are written as the top row b1 b3 b4 ... then "/" and b2.
Root parse_display(SimpleType t, const std::string& s) {
  std::string top = s, bottom;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    top = s.substr(0, slash);
    bottom = s.substr(slash + 1);
  }
  std::vector<int> a, b;
  std::istringstream ta(top), tb(bottom);
  for (int x; ta >> x;) a.push_back(x);
  for (int x; tb >> x;) b.push_back(x);
  if (t.family != Family::E) return a;
  Root r(t.rank, 0);
  r[0] = a.at(0);
  r[1] = b.at(0);
  for (size_t k = 1; k < a.size(); ++k) r[k + 1] = a[k];
  return r;
}

const std::map<std::string, std::vector<std::string>>& reference_exceptional() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"E6", {"1 2 3 2 1/2", "1 1 1 1 1/0", "0 1 1 1 0/0", "0 0 1 0 0/0"}},
      {"E7",
       {"2 3 4 3 2 1/2", "0 1 2 2 2 1/1", "0 1 2 1 0 0/1", "0 0 0 0 0 1/0", "0 0 0 0 0 0/1", "0 1 0 0 0 0/0",
        "0 0 0 1 0 0/0"}},
      {"E8",
       {"2 4 6 5 4 3 2/3", "2 3 4 3 2 1 0/2", "0 1 2 2 2 1 0/1", "0 1 2 1 0 0 0/1", "0 0 0 0 0 1 0/0",
        "0 0 0 0 0 0 0/1", "0 1 0 0 0 0 0/0", "0 0 0 1 0 0 0/0"}},
      {"F4", {"2 3 4 2", "0 1 2 2", "0 1 2 0", "0 1 0 0"}},
      {"G2", {"2 3", "1 2"}},
  };
  return m;
}

// Nodes (1-based) where the parabolic of one simple root is quasi-reductive.
std::optional<std::set<int>> reference_table4(SimpleType t) {
  std::set<int> all;
  for (int i = 1; i <= t.rank; ++i) all.insert(i);
  switch (t.family) {
    case Family::A:
    case Family::C: return all;
    case Family::E:
      if (t.rank == 6) {
        all.erase(2);
        return all;
      }
      return std::set<int>{2, 3, 5, 7};
    case Family::F: return std::set<int>{2, 3, 4};
    case Family::G: return std::set<int>{2};
    default: return std::nullopt;
  }
}

std::vector<SimpleType> table1_types() {
  std::vector<SimpleType> v;
  for (int l = 1; l <= 12; ++l) v.push_back(SimpleType::make('A', l));
  for (int l = 2; l <= 12; ++l) v.push_back(SimpleType::make('B', l));
  for (int l = 3; l <= 12; ++l) v.push_back(SimpleType::make('C', l));
  for (int l = 4; l <= 12; ++l) v.push_back(SimpleType::make('D', l));
  for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) v.push_back(SimpleType::parse(s));
  return v;
}

std::string nodes_str(const std::set<int>& s) {
  std::string o = "{";
  for (int i : s) o += (o.size() > 1 ? "," : "") + std::to_string(i);
  return o + "}";
}

// ---- criteria --------------------------------------------------------------

void c1(CheckResult& r) {
  Collector col{r};
  for (SimpleType t : table1_types()) {
    int got = k_g(t), want = reference_k_g(t);
    col.expect(got == want, t.name() + ": k_g = " + std::to_string(got) + ", expected " + std::to_string(want));
  }
  col.finish("types");
}

void c2(CheckResult& r) {
  Collector col{r};
  std::vector<std::string> names = {"A5", "B5", "B6", "C5", "D6", "D7", "E6", "E7", "E8", "F4", "G2"};
  for (const std::string& n : names) {
    SimpleType t = SimpleType::parse(n);
    RootSystem rs(t);
    std::vector<Root> got = kostant_cascade(rs).epsilons();
    std::vector<Root> want;
    auto ex = reference_exceptional().find(n);
    if (ex != reference_exceptional().end())
      for (auto& s : ex->second) want.push_back(parse_display(t, s));
    else
      want = reference_classical(t);
    std::set<Root> g(got.begin(), got.end()), w(want.begin(), want.end());
    if (g == w) {
      col.expect(true, n);
      continue;
    }
    // accept a mismatch only when every differing reference vector cannot be a cascade root at all
    std::vector<Root> only_w, only_g;
    std::set_difference(w.begin(), w.end(), g.begin(), g.end(), std::back_inserter(only_w));
    std::set_difference(g.begin(), g.end(), w.begin(), w.end(), std::back_inserter(only_g));
    std::set<Root> highest;
    const int l = rs.rank();
    for (int mask = 1; mask < (1 << l); ++mask) {
      NodeSet s;
      for (int i = 0; i < l; ++i)
        if (mask >> i & 1) s.push_back(i);
      if (rs.connected(s)) highest.insert(rs.highest_root(s));
    }
    bool erratum = only_w.size() == only_g.size();
    for (const Root& x : only_w) erratum = erratum && !highest.count(x);
    std::string diff = n + ": reference lists";
    for (auto& x : only_w) diff += " " + format_root(x);
    diff += ", recursion gives";
    for (auto& x : only_g) diff += " " + format_root(x);
    if (erratum)
      r.warnings.push_back(diff + " (reference vector is not the highest root of any connected subset: erratum)");
    col.expect(erratum, diff);
  }
  col.finish("cascades");
}

void c3(CheckResult& r) {
  Collector col{r};
  std::vector<SimpleType> types = table4_types(8);
  std::vector<std::pair<int64_t, int64_t>> res(types.size());
  // the big ones parallelize internally
  for (size_t i = 0; i < types.size(); ++i) {
    auto sc = structure_constants_for(RootSystem(types[i]));
    res[i] = {sc->jacobi_violations(), sc->string_violations()};
  }
  for (size_t i = 0; i < types.size(); ++i)
    col.expect(res[i].first == 0 && res[i].second == 0,
               types[i].name() + ": " + std::to_string(res[i].first) + " Jacobi and " +
                   std::to_string(res[i].second) + " string violations");
  col.finish("types (Jacobi identity and |N| = p+1)");
}

void c4(CheckResult& r) {
  Collector col{r};
  for (SimpleType t : table4_types(8)) {
    RootSystem rs(t);
    Cascade c = kostant_cascade(rs);
    Table4Row row = table4_row(t);
    std::set<int> got;
    for (size_t i = 0; i < row.verdict.size(); ++i)
      if (row.verdict[i]) got.insert(static_cast<int>(i) + 1);
    if (auto want = reference_table4(t))
      col.expect(got == *want, t.name() + ": quasi-reductive nodes " + nodes_str(got) + ", expected " +
                                   nodes_str(*want));
    CondRootReport cr = check_cond_root(rs, c);
    for (auto& f : cr.failures) col.expect(false, f);
    if (cr.ok()) col.expect(true, t.name());
    // simple roots of the half-difference form occur only for F4, C_l and B_l
    bool expected_family = t.family == Family::F || t.family == Family::C || t.family == Family::B;
    col.expect(row.d3prime_nodes.empty() || expected_family,
               t.name() + ": unexpected simple root of half-difference form");
    if (t.family == Family::F && row.d3prime_nodes != std::vector<int>{2})
      r.warnings.push_back("F4: simple roots of half-difference form are " + nodes_str([&] {
                             std::set<int> s;
                             for (int i : row.d3prime_nodes) s.insert(i + 1);
                             return s;
                           }()) + " (the reference statement lists beta_3 only)");
    if (t.family == Family::B && !row.d3prime_nodes.empty() && t.rank % 2 == 0)
      r.warnings.push_back(t.name() + ": beta_" + std::to_string(row.d3prime_nodes[0] + 1) +
                           " has the half-difference form with l even (the reference statement says l odd)");
  }
  col.finish("one-root parabolic rows and root-condition checks");
}

void c5(CheckResult& r) {
  Collector col{r};
  for (const char* n : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    SimpleType t = SimpleType::parse(n);
    RootSystem rs(t);
    Cascade c = kostant_cascade(rs);
    auto sc = structure_constants_for(rs);
    for (int i = 0; i < rs.rank(); ++i) {
      bool crit = parabolic_quasi_reductive(rs, c, i);
      bool direct = direct_parabolic_check(rs, sc, i);
      col.expect(crit == direct, std::string(n) + " beta_" + std::to_string(i + 1) + ": criterion " +
                                     (crit ? "true" : "false") + ", direct " + (direct ? "true" : "false"));
    }
  }
  col.finish("simple roots");
}

void c6(CheckResult& r) {
  Collector col{r};
  for (auto& rf : registry()) {
    const auto& d = rf->record().declared;
    const RootSystem& rs = rf->roots();
    std::string dprime = subsystem_type(rs, rf->black());
    std::string want = canonical_type_string(d.m0_type);
    int km = static_cast<int>(kostant_cascade(rs, rf->black()).size());
    int kg = static_cast<int>(rf->cascade().size());
    int rgg = rs.rank(), rgk = rf->rank_k();
    bool ok = dprime == want && rf->dim_a() == d.dim_a && km == d.k_m && kg == d.k_g && rgg == d.rg_g &&
              rgk == d.rg_k;
    auto tuple = [](const std::string& t, int a, int m, int g, int rg, int rk) {
      return "(" + t + ", " + std::to_string(a) + ", " + std::to_string(m) + ", " + std::to_string(g) + ", " +
             std::to_string(rg) + ", " + std::to_string(rk) + ")";
    };
    col.expect(ok, rf->name() + ": derived " + tuple(dprime, rf->dim_a(), km, kg, rgg, rgk) + " declared " +
                       tuple(want, d.dim_a, d.k_m, d.k_g, d.rg_g, d.rg_k));
  }
  col.finish("registry entries (Delta' type, dim a, k_m, k_g, rg g, rg k)");
}

struct EntryReport {
  std::shared_ptr<RealForm> rf;
  CascadeAnalysis an;
  IndexReport rep;
};

const std::vector<EntryReport>& index_reports() {
  static std::once_flag once;
  static std::vector<EntryReport> out;
  std::call_once(once, [] {
    std::vector<std::shared_ptr<RealForm>> forms;
    for (auto& rf : registry())
      if (!rf->is_compact()) forms.push_back(rf);
    out.resize(forms.size());
    // largest first so the pool stays busy
    std::vector<size_t> order(forms.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return forms[a]->roots().num_positive() > forms[b]->roots().num_positive();
    });
    parallel_for(order.size(), [&](size_t k) {
      size_t i = order[k];
      EntryReport e;
      e.rf = forms[i];
      e.an = analyze(*e.rf);
      e.rep = verify_formule_indice(*e.rf, e.an);
      out[i] = std::move(e);
    });
  });
  return out;
}

const Verdict* find_verdict(const IndexReport& r, const std::string& check) {
  for (auto& v : r.verdicts)
    if (v.check == check) return &v;
  return nullptr;
}

void c7(CheckResult& r) {
  Collector col{r};
  for (auto& e : index_reports())
    for (const char* check : {"index_lower_bound", "index_equality_iff_star", "phi_u_regular", "stab_u_formula",
                              "equivalence"})
      if (auto v = find_verdict(e.rep, check)) col.expect(v->pass, e.rf->name() + " " + check + ": " + v->detail);
  col.finish("index checks over the non-compact registry");
}

void c8(CheckResult& r) {
  Collector col{r};
  std::vector<std::string> gamma1_entries;
  for (auto& e : index_reports()) {
    for (const char* check : {"stable_iff_kcomp_empty", "reductive_iff_kcomp_empty", "commutator_intersection"})
      if (auto v = find_verdict(e.rep, check)) col.expect(v->pass, e.rf->name() + " " + check + ": " + v->detail);
    int g1 = 0;
    for (int K : e.an.kcomp_plus) g1 += e.an.gamma1_sizes[K];
    if (g1 > 0) gamma1_entries.push_back(e.rf->name());
    bool classB = e.an.flags.B;
    col.expect(e.rep.stable == classB, e.rf->name() + ": stable = " + (e.rep.stable ? "true" : "false") +
                                           ", property (B) = " + (classB ? "true" : "false"));
  }
  if (!gamma1_entries.empty()) {
    std::string w = "[b, b_phi_u] cap b_phi_u also contains X_alpha for alpha in Gamma_1 (the reference equality "
                    "lists only X_eps_K - X_eps_thetaK) on " + std::to_string(gamma1_entries.size()) + " entries:";
    for (auto& n : gamma1_entries) w += " " + n;
    r.warnings.push_back(w);
  }
  col.finish("stability checks");
}

void c9(CheckResult& r) {
  Collector col{r};
  for (auto& rf : registry()) {
    if (rf->is_compact()) continue;
    CascadeAnalysis an = analyze(*rf);
    if (an.star) {
      KcompReport k = kcomp_count(an);
      col.expect(k.match, rf->name() + ": formula " + std::to_string(k.formula) + ", counted " +
                              std::to_string(k.counted));
    }
    const std::string& n = rf->name();
    if (rf->is_complex_double()) {
      int want = 2 * k_g(rf->record().type);
      col.expect(an.kcomp_size() == want,
                 n + ": |K_comp| = " + std::to_string(an.kcomp_size()) + ", expected 2k_s = " + std::to_string(want));
    }
    int p, q;
    if (std::sscanf(n.c_str(), "so(%d,%d)", &p, &q) == 2 && p % 2 == 1 && q % 2 == 1) {
      if (q == p) col.expect(an.kcomp_size() == 0, n + ": |K_comp| = " + std::to_string(an.kcomp_size()) + ", expected 0");
      if (q == p + 2)
        col.expect(an.kcomp_size() == 2, n + ": |K_comp| = " + std::to_string(an.kcomp_size()) + ", expected 2");
    }
  }
  col.finish("K_comp counts");
}

void c10(CheckResult& r) {
  Collector col{r};
  int one_way = 0, one_way_total = 0;
  for (auto& rf : registry()) {
    if (rf->is_compact()) continue;
    CascadeAnalysis an = analyze(*rf);
    CalculKReport ck = verify_calcul_k(an);
    const std::string& n = rf->name();
    col.expect(ck.inequality, n + ": dim a - #K_reel = " + std::to_string(ck.lhs) + " < rg g - rg k = " +
                                  std::to_string(ck.rhs));
    col.expect(ck.equality_matches_star(), n + ": equality " + (ck.equality ? "holds" : "fails") + " but star is " +
                                               (ck.star ? "true" : "false"));
    if (ck.star) {
      ++one_way_total;
      if (ck.equality) ++one_way;
    }
    CayleyState s = cayley_state(an);
    int invariant = s.dim_a - static_cast<int>(s.kreel.size());
    int steps = 0;
    while (!s.kreel.empty() && steps <= 64) {
      s = cayley_reduce(s, s.kreel.front());
      ++steps;
      col.expect(s.dim_a - static_cast<int>(s.kreel.size()) == invariant, n + ": Cayley step changed the invariant");
    }
    col.expect(steps == static_cast<int>(an.kreel.size()),
               n + ": Cayley reduction took " + std::to_string(steps) + " steps");
  }
  col.finish("rank-difference checks");
  r.detail += "; star implies equality on " + std::to_string(one_way) + "/" + std::to_string(one_way_total) +
              " star entries";
}

void c11(CheckResult& r) {
  Collector col{r};
  for (const char* n : {"su(2,1)", "so(2,3)", "sp(1,1)", "sl(3,R)", "su(1,3)", "sl(2,H)"}) {
    auto rf = registry_lookup(n);
    if (!rf) {
      col.expect(false, std::string(n) + ": not in registry");
      continue;
    }
    Subalgebra m = minimal_parabolic(*rf);
    IndexResult ir = compute_index(m);
    bool red = is_reductive_form(m, ir.regular, ir.index);
    col.expect(red, std::string(n) + ": minimal parabolic (dim " + std::to_string(m.dim()) + ", index " +
                        std::to_string(ir.index) + ") has no reductive form at the sampled regular functional");
  }
  col.finish("minimal parabolics");
}

void c12(CheckResult& r) {
  Collector col{r};
  for (auto& rf : registry()) {
    if (rf->is_compact()) continue;
    CascadeAnalysis an = analyze(*rf);
    const auto& d = rf->record().declared;
    std::string got = an.flags.strongest;
    col.expect(got == d.strongest, rf->name() + ": computed " + got + ", declared " + d.strongest);
    if (d.note == "intro-counterexample")
      r.warnings.push_back(rf->name() + ": read as the introduction's sl(2p,1) example; computed " + got +
                           ", declared " + d.strongest);
  }
  col.finish("strongest-property entries");
}

struct Criterion {
  int id;
  const char* name;
  const char* scope;
  void (*run)(CheckResult&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> v = {
      {1, "k_g values", "cascade", c1},
      {2, "cascade root sets", "cascade", c2},
      {3, "Chevalley basis soundness", "chevalley", c3},
      {4, "quasi-reductive parabolics of one simple root", "parabolic", c4},
      {5, "parabolic criterion against direct computation", "parabolic", c5},
      {6, "registry self-validation", "realform", c6},
      {7, "index of b and the stabilizer of phi_u", "index", c7},
      {8, "stability and quasi-reductivity of b", "index", c8},
      {9, "K_comp count formula", "realform", c9},
      {10, "dim a - #K_reel against rg g - rg k", "realform", c10},
      {11, "minimal parabolics are quasi-reductive", "index", c11},
      {12, "strongest property per entry", "realform", c12},
  };
  return v;
}

}  // namespace

bool valid_scope(const std::string& scope) {
  for (const char* s : {"all", "cascade", "chevalley", "realform", "parabolic", "index"})
    if (scope == s) return true;
  return false;
}

std::vector<int> criteria_in_scope(const std::string& scope) {
  std::vector<int> ids;
  for (auto& c : criteria())
    if (scope == "all" || scope == c.scope) ids.push_back(c.id);
  return ids;
}

CheckResult run_criterion(int id) {
  for (auto& c : criteria()) {
    if (c.id != id) continue;
    CheckResult r;
    r.id = c.id;
    r.name = c.name;
    r.scope = c.scope;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw std::invalid_argument("no criterion " + std::to_string(id));
}

std::vector<CheckResult> run_scope(const std::string& scope) {
  if (!valid_scope(scope)) throw std::invalid_argument("unknown scope '" + scope + "'");
  std::vector<CheckResult> out;
  for (int id : criteria_in_scope(scope)) out.push_back(run_criterion(id));
  return out;
}

}  // namespace lieindex
