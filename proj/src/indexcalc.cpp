#include "lieindex/indexcalc.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

namespace lieindex {

namespace {

constexpr uint64_t kPrimes[3] = {1073741789ULL, 1073741783ULL, 1073741741ULL};
constexpr int kSamples = 5;
constexpr int kCoeffMax = 1 << 16;

QVec h_of_weight(const RootSystem& rs, const QVec& lambda) {
  // identify lambda in h* with the H satisfying mu(H) = (lambda, mu)
  QVec h(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) h[i] = lambda[i] * rs.symmetrizer(static_cast<int>(i));
  return h;
}

QVec weight_of_h(const RootSystem& rs, const QVec& h) {
  QVec w(h.size());
  for (size_t i = 0; i < h.size(); ++i) w[i] = h[i] / rs.symmetrizer(static_cast<int>(i));
  return w;
}

Q root_on(const StructureConstants& sc, int r, const QVec& h) {
  Q s = 0;
  for (int i = 0; i < sc.rank(); ++i)
    if (sgn(h[i]) != 0) s += h[i] * sc.root_value(r, i);
  return s;
}

}  // namespace

Subalgebra::Subalgebra(std::shared_ptr<const StructureConstants> sc, std::vector<QVec> torus, std::vector<int> roots)
    : sc_(std::move(sc)), torus_(std::move(torus)), roots_(std::move(roots)) {
  const auto& S = *sc_;
  const int l = S.rank();
  const int nroots = 2 * S.root_system().num_positive();
  pos_.assign(nroots, -1);
  for (size_t k = 0; k < roots_.size(); ++k) pos_[roots_[k]] = static_cast<int>(torus_.size() + k);

  // left inverse of the torus basis
  const int m = static_cast<int>(torus_.size());
  QMat aug(l, QVec(m + l, 0));
  for (int i = 0; i < l; ++i) {
    for (int a = 0; a < m; ++a) aug[i][a] = torus_[a][i];
    aug[i][m + i] = 1;
  }
  std::vector<int> piv = rref(aug);
  int tp = 0;
  for (int c : piv)
    if (c < m) ++tp;
  if (tp != m) throw std::invalid_argument("torus vectors are linearly dependent");
  torus_inv_.assign(m, QVec(l, 0));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < l; ++i) torus_inv_[a][i] = aug[a][m + i];

  // bracket table in subalgebra coordinates
  const int n = dim();
  table_.assign(n, std::vector<std::vector<std::pair<int, Q>>>(n));
  std::vector<std::pair<int, int>> buf;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& out = table_[i][j];
      bool ti = i < m, tj = j < m;
      if (ti && tj) continue;
      if (ti || tj) {
        int t = ti ? i : j;
        int r = roots_[(ti ? j : i) - m];
        Q v = root_on(S, r, torus_[t]);
        if (sgn(v) == 0) continue;
        out.push_back({ti ? j : i, ti ? v : Q(-v)});
        continue;
      }
      int ri = roots_[i - m], rj = roots_[j - m];
      int sum = S.sum_index(ri, rj);
      if (sum == -1) continue;
      if (sum >= 0) {
        if (pos_[sum] < 0)
          throw std::invalid_argument("subalgebra not closed: " + format_root(S.root_system().roots()[sum]));
        out.push_back({pos_[sum], Q(S.N(ri, rj))});
        continue;
      }
      QVec h(S.coroot(ri).begin(), S.coroot(ri).end());
      Elem e = S.zero();
      for (int k = 0; k < l; ++k) e[k] = h[k];
      QVec c = coords(e);
      for (int k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) out.push_back({k, c[k]});
    }
}

int Subalgebra::position_of_root(int root_idx) const { return pos_[root_idx]; }

Elem Subalgebra::element(const QVec& c) const {
  const auto& S = *sc_;
  Elem e = S.zero();
  const int m = torus_dim();
  for (int a = 0; a < m; ++a)
    if (sgn(c[a]) != 0)
      for (int i = 0; i < S.rank(); ++i) e[i] += c[a] * torus_[a][i];
  for (size_t k = 0; k < roots_.size(); ++k) e[S.basis_of_root(roots_[k])] += c[m + k];
  return e;
}

QVec Subalgebra::coords(const Elem& x) const {
  const auto& S = *sc_;
  const int l = S.rank(), m = torus_dim();
  QVec c(dim(), 0);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < l; ++i)
      if (sgn(x[i]) != 0) c[a] += torus_inv_[a][i] * x[i];
  for (int i = 0; i < l; ++i) {
    Q back = 0;
    for (int a = 0; a < m; ++a) back += c[a] * torus_[a][i];
    if (back != x[i]) throw std::invalid_argument("element has a Cartan component outside the torus");
  }
  for (int b = l; b < S.dim(); ++b) {
    if (sgn(x[b]) == 0) continue;
    int p = pos_[S.root_of_basis(b)];
    if (p < 0) throw std::invalid_argument("element has a root component outside the subalgebra");
    c[p] = x[b];
  }
  return c;
}

QVec Subalgebra::bracket(const QVec& u, const QVec& v) const {
  const int n = dim();
  QVec w(n, 0);
  for (int i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0) continue;
      for (auto& [k, c] : table_[i][j]) w[k] += u[i] * v[j] * c;
    }
  }
  return w;
}

QMat Subalgebra::skew_matrix(const QVec& phi) const {
  const int n = dim();
  QMat M(n, QVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [k, c] : table_[i][j])
        if (sgn(phi[k]) != 0) M[i][j] += c * phi[k];
  return M;
}

uint64_t default_seed() {
  if (const char* s = std::getenv("LIEINDEX_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("LIEINDEX_SEED must be a non-negative integer");
    }
  }
  return 20240611ULL;
}

IndexResult compute_index(const Subalgebra& q, std::optional<uint64_t> seed) {
  IndexResult res;
  const int n = q.dim();
  if (n == 0) return res;
  std::mt19937_64 rng(seed.value_or(default_seed()));
  std::uniform_int_distribution<int> coeff(1, kCoeffMax);
  int best = -1;
  ZMat best_m;
  for (int s = 0; s < kSamples; ++s) {
    Functional phi(n);
    for (auto& x : phi) x = coeff(rng);
    ZMat zm = integer_rows(q.skew_matrix(phi));
    int r = modular_rank(zm, kPrimes[0]);
    res.sample_ranks.push_back(r);
    if (r > best) {
      best = r;
      best_m = std::move(zm);
      res.regular = phi;
    }
  }
  res.rank = bareiss_rank(best_m);
  for (uint64_t p : kPrimes) res.modular_ranks.push_back(modular_rank(best_m, p));
  for (int r : res.modular_ranks)
    if (r != res.rank) throw std::logic_error("rank disagreement between exact and modular elimination");
  if (res.rank % 2 != 0) throw std::logic_error("skew matrix with odd rank");
  res.index = n - res.rank;
  return res;
}

int index(const Subalgebra& q) { return compute_index(q).index; }

std::vector<QVec> stabilizer(const Subalgebra& q, const Functional& phi) {
  return nullspace(q.skew_matrix(phi), q.dim());
}

bool is_stable(const Subalgebra& q, const Functional& phi) {
  std::vector<QVec> st = stabilizer(q, phi);
  if (st.empty()) return true;
  Span span(q.dim());
  for (int i = 0; i < q.dim(); ++i) {
    QVec e(q.dim(), 0);
    e[i] = 1;
    for (const QVec& s : st) span.insert(q.bracket(e, s));
  }
  return intersection_dim(span.basis(), st, q.dim()) == 0;
}

bool is_reductive_form(const Subalgebra& q, const Functional& phi, std::optional<int> known_index) {
  std::vector<QVec> st = stabilizer(q, phi);
  int idx = known_index ? *known_index : index(q);
  if (static_cast<int>(st.size()) != idx) throw std::invalid_argument("reductivity test requires regular φ");
  for (size_t a = 0; a < st.size(); ++a)
    for (size_t b = a + 1; b < st.size(); ++b)
      if (!is_zero(q.bracket(st[a], st[b]))) return false;
  for (const QVec& s : st)
    if (!q.ambient().ad_semisimple(q.element(s))) return false;
  return true;
}

std::shared_ptr<const StructureConstants> structure_constants_for(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const StructureConstants>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rs.type_name()];
  if (!slot) slot = std::make_shared<const StructureConstants>(rs);
  return slot;
}

Subalgebra build_b(const RealForm& rf) {
  if (rf.is_compact()) throw std::invalid_argument("b is zero");
  const RootSystem& rs = rf.roots();
  std::vector<QVec> torus;
  for (const QVec& a : rf.a_hat()) torus.push_back(h_of_weight(rs, a));
  std::vector<int> roots;
  for (const Root& r : rf.b_roots()) roots.push_back(rs.index_of(r));
  return Subalgebra(structure_constants_for(rs), torus, roots);
}

static std::vector<QVec> full_torus(int l) {
  std::vector<QVec> t(l, QVec(l, 0));
  for (int i = 0; i < l; ++i) t[i][i] = 1;
  return t;
}

Subalgebra borel(const RealForm& rf) {
  const RootSystem& rs = rf.roots();
  std::vector<int> roots;
  for (int r = 0; r < rs.num_positive(); ++r) roots.push_back(r);
  return Subalgebra(structure_constants_for(rs), full_torus(rs.rank()), roots);
}

Subalgebra minimal_parabolic(const RealForm& rf) {
  const RootSystem& rs = rf.roots();
  std::vector<int> roots;
  for (const Root& r : rf.imaginary_positive()) roots.push_back(rs.index_of(r));
  for (const Root& r : rf.b_roots()) roots.push_back(rs.index_of(r));
  for (const Root& r : rf.imaginary_positive()) roots.push_back(rs.index_of(negate(r)));
  return Subalgebra(structure_constants_for(rs), full_torus(rs.rank()), roots);
}

Subalgebra standard_parabolic(std::shared_ptr<const StructureConstants> sc, const NodeSet& S) {
  const RootSystem& rs = sc->root_system();
  std::vector<int> roots;
  for (int r = 0; r < rs.num_positive(); ++r) roots.push_back(r);
  for (const Root& r : rs.subsystem_positive_roots(S)) roots.push_back(rs.index_of(negate(r)));
  return Subalgebra(sc, full_torus(rs.rank()), roots);
}

Functional phi_u(const RealForm& rf, const CascadeAnalysis& an, const Subalgebra& b) {
  const auto& S = b.ambient();
  Elem u = S.zero();
  for (int k : an.kpp) u[S.basis_of_root(negate(rf.cascade()[k].epsilon))] += 1;
  Functional f(b.dim(), 0);
  for (int k = 0; k < b.dim(); ++k) {
    QVec e(b.dim(), 0);
    e[k] = 1;
    f[k] = S.kappa(u, b.element(e));
  }
  return f;
}

bool IndexReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

// The line of `space` inside span(X_eps_K, X_eps_L), when it is a line with
// both coordinates nonzero.
std::optional<QVec> pair_vector(const std::vector<QVec>& space, const Subalgebra& b, const RealForm& rf, int K, int L) {
  const RootSystem& rs = rf.roots();
  const int n = b.dim();
  int pk = b.position_of_root(rs.index_of(rf.cascade()[K].epsilon));
  int pl = b.position_of_root(rs.index_of(rf.cascade()[L].epsilon));
  if (pk < 0 || pl < 0) return std::nullopt;
  QVec ek(n, 0), el(n, 0);
  ek[pk] = 1;
  el[pl] = 1;
  std::vector<QVec> plane{ek, el};
  if (intersection_dim(space, plane, n) != 1) return std::nullopt;
  Span sp(n);
  for (const QVec& v : space) sp.insert(v);
  QVec v(n, 0);
  v[pk] = 1;
  for (int t : {1, -1}) {
    // the line is spanned by e_K + c e_L; find c by testing both signs, then by solving
    v[pl] = t;
    if (sp.contains(v)) return v;
  }
  // general c: solve in the plane
  for (const QVec& w : space) {
    if (sgn(w[pk]) != 0 && sgn(w[pl]) != 0) {
      v[pl] = w[pl] / w[pk];
      if (sp.contains(v)) return v;
    }
  }
  return std::nullopt;
}

// {x in b : [x,u] in n + m} against its explicit description.
Verdict equivalence_check(const RealForm& rf, const CascadeAnalysis& an, const Subalgebra& b) {
  const auto& S = b.ambient();
  const RootSystem& rs = rf.roots();
  const int l = rs.rank(), n = b.dim(), m = b.torus_dim();
  Elem u = S.zero();
  for (int k : an.kpp) u[S.basis_of_root(negate(rf.cascade()[k].epsilon))] += 1;
  std::set<int> forbidden;  // basis indices of X_gamma, gamma in Delta''_-
  for (const Root& r : rf.b_roots()) forbidden.insert(S.basis_of_root(negate(r)));
  std::vector<int> fb(forbidden.begin(), forbidden.end());
  // rows: forbidden root components, then the a-hat part of the Cartan component
  QMat map(fb.size() + l, QVec(n, 0));
  for (int k = 0; k < n; ++k) {
    QVec e(n, 0);
    e[k] = 1;
    Elem y = S.bracket(b.element(e), u);
    for (size_t r = 0; r < fb.size(); ++r) map[r][k] = y[fb[r]];
    QVec h(y.begin(), y.begin() + l);
    QVec w = weight_of_h(rs, h);
    QVec tw = rf.theta(w);
    for (int i = 0; i < l; ++i) map[fb.size() + i][k] = w[i] - tw[i];
  }
  std::vector<QVec> lhs = nullspace(map, n);

  std::vector<QVec> rhs;
  // torus part: common kernel of the eps_K, K in K''
  QMat eps(an.kpp.size(), QVec(m, 0));
  for (size_t r = 0; r < an.kpp.size(); ++r) {
    const Root& e = rf.cascade()[an.kpp[r]].epsilon;
    for (int a = 0; a < m; ++a) {
      Q s = 0;
      for (int i = 0; i < l; ++i) s += b.torus()[a][i] * rs.pairing_simple(e, i);
      eps[r][a] = s;
    }
  }
  for (const QVec& c : nullspace(eps, m)) {
    QVec v(n, 0);
    for (int a = 0; a < m; ++a) v[a] = c[a];
    rhs.push_back(v);
  }
  bool pairs_ok = true;
  for (auto [K, L] : an.kcomp_pairs) {
    auto v = pair_vector(lhs, b, rf, K, L);
    if (!v) {
      pairs_ok = false;
      continue;
    }
    rhs.push_back(*v);
  }
  for (int K : an.kpp)
    for (const Root& a : gamma1_of(rf, K)) {
      QVec v(n, 0);
      v[b.position_of_root(rs.index_of(a))] = 1;
      rhs.push_back(v);
    }
  Span sl(n), sr(n);
  for (auto& v : lhs) sl.insert(v);
  for (auto& v : rhs) sr.insert(v);
  bool ok = pairs_ok && sl.dim() == sr.dim();
  for (auto& v : rhs) ok = ok && sl.contains(v);
  return {"equivalence", ok,
          "dim {x : [x,u] in n+m} = " + std::to_string(sl.dim()) + ", explicit = " + std::to_string(sr.dim())};
}

}  // namespace

IndexReport verify_formule_indice(const RealForm& rf, const CascadeAnalysis& an, ReportOptions opt) {
  IndexReport rep;
  rep.name = rf.name();
  rep.star = an.star;
  rep.rg_diff = an.rg_g - an.rg_k;
  if (rf.is_compact()) {
    rep.empty = true;
    rep.verdicts.push_back({"empty", true, "b is zero"});
    return rep;
  }
  Subalgebra b = build_b(rf);
  const RootSystem& rs = rf.roots();
  rep.dim_b = b.dim();
  IndexResult ir = compute_index(b, opt.seed);
  rep.index_b = ir.index;

  Functional phi = phi_u(rf, an, b);
  std::vector<QVec> st = stabilizer(b, phi);
  rep.stab_u_dim = static_cast<int>(st.size());
  rep.formula_dim = an.dim_a - static_cast<int>(an.kreel.size());
  for (int K : an.kcomp_plus) rep.formula_dim += an.gamma1_sizes[K];

  // [b, b_phi] and its intersection with b_phi
  Span br(b.dim());
  for (int i = 0; i < b.dim(); ++i) {
    QVec e(b.dim(), 0);
    e[i] = 1;
    for (const QVec& s : st) br.insert(b.bracket(e, s));
  }
  int inter = intersection_dim(br.basis(), st, b.dim());
  rep.stable = inter == 0;
  bool commuting = true;
  for (size_t a = 0; a < st.size() && commuting; ++a)
    for (size_t c = a + 1; c < st.size(); ++c)
      if (!is_zero(b.bracket(st[a], st[c]))) { commuting = false; break; }
  rep.reductive = commuting && rep.stab_u_dim == rep.index_b;
  if (rep.reductive)
    for (const QVec& s : st)
      if (!b.ambient().ad_semisimple(b.element(s))) { rep.reductive = false; break; }

  auto add = [&](const std::string& check, bool pass, const std::string& detail) {
    rep.verdicts.push_back({check, pass, detail});
  };
  std::string idx = "ind b = " + std::to_string(rep.index_b) + ", rg g - rg k = " + std::to_string(rep.rg_diff);
  add("index_lower_bound", rep.index_b >= rep.rg_diff, idx);
  add("index_equality_iff_star", (rep.index_b == rep.rg_diff) == an.star,
      idx + ", star = " + (an.star ? "true" : "false"));
  add("phi_u_regular", rep.stab_u_dim == rep.index_b,
      "dim b_phi_u = " + std::to_string(rep.stab_u_dim) + ", ind b = " + std::to_string(rep.index_b));
  add("stab_u_formula", rep.stab_u_dim == rep.formula_dim,
      "dim b_phi_u = " + std::to_string(rep.stab_u_dim) + ", formula = " + std::to_string(rep.formula_dim));
  bool kcomp_empty = an.kcomp_pairs.empty();
  add("stable_iff_kcomp_empty", rep.stable == kcomp_empty,
      std::string("stable = ") + (rep.stable ? "true" : "false") + ", #K_comp = " + std::to_string(an.kcomp_size()));
  add("reductive_iff_kcomp_empty", rep.reductive == kcomp_empty,
      std::string("reductive = ") + (rep.reductive ? "true" : "false"));

  // [b, b_phi_u] cap b_phi_u: the X_eps_K - X_eps_thetaK lie in it, and so do
  // the X_alpha with alpha in Gamma_1^K since alpha restricts to eps_K on a.
  {
    Span stsp(b.dim());
    for (auto& s : st) stsp.insert(s);
    int g1 = 0;
    for (int K : an.kcomp_plus) g1 += an.gamma1_sizes[K];
    bool ok = inter == static_cast<int>(an.kcomp_pairs.size()) + g1;
    for (auto [K, L] : an.kcomp_pairs) {
      auto v = pair_vector(st, b, rf, K, L);
      ok = ok && v && br.contains(*v) && stsp.contains(*v);
      for (const Root& a : gamma1_of(rf, K)) {
        QVec e(b.dim(), 0);
        e[b.position_of_root(rs.index_of(a))] = 1;
        ok = ok && br.contains(e) && stsp.contains(e);
      }
    }
    add("commutator_intersection", ok,
        "dim = " + std::to_string(inter) + ", #pairs = " + std::to_string(an.kcomp_pairs.size()) +
            ", #Gamma_1 = " + std::to_string(g1));
  }
  if (opt.equivalence && rs.rank() <= 6) rep.verdicts.push_back(equivalence_check(rf, an, b));
  return rep;
}

}  // namespace lieindex
