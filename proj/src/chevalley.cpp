#include "lieindex/chevalley.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace lieindex {

StructureConstants::StructureConstants(const RootSystem& rs)
    : rs_(rs), l_(rs.rank()), npos_(rs.num_positive()), nroots_(2 * rs.num_positive()) {
  const auto& roots = rs_.roots();
  sum_.assign(static_cast<size_t>(nroots_) * nroots_, -1);
  for (int r = 0; r < nroots_; ++r)
    for (int s = 0; s < nroots_; ++s) {
      if (s == rs_.negative_index(r)) {
        sum_[r * nroots_ + s] = -2;
        continue;
      }
      sum_[r * nroots_ + s] = rs_.index_of(add(roots[r], roots[s]));
    }

  value_.assign(static_cast<size_t>(nroots_) * l_, 0);
  for (int r = 0; r < nroots_; ++r)
    for (int i = 0; i < l_; ++i) value_[r * l_ + i] = rs_.pairing_simple(roots[r], i);

  coroot_.assign(nroots_, std::vector<int>(l_, 0));
  for (int r = 0; r < nroots_; ++r) {
    int64_t dr = rs_.inner(roots[r], roots[r]) / 2;
    for (int i = 0; i < l_; ++i) {
      int64_t num = static_cast<int64_t>(roots[r][i]) * rs_.symmetrizer(i);
      if (num % dr != 0) throw std::logic_error("non-integral coroot");
      coroot_[r][i] = static_cast<int>(num / dr);
    }
  }

  // extraspecial pairs: for each non-simple positive xi, the smallest alpha
  // (in root order) with xi - alpha positive and alpha before xi - alpha
  extra_.assign(npos_, -1);
  for (int xi = 0; xi < npos_; ++xi) {
    if (height(roots[xi]) == 1) continue;
    for (int a = 0; a < xi; ++a) {
      int b = rs_.index_of(sub(roots[xi], roots[a]));
      if (b >= 0 && b < npos_ && a < b) {
        extra_[xi] = a;
        break;
      }
    }
  }

  n_.assign(static_cast<size_t>(nroots_) * nroots_, 0);
  n_done_.assign(static_cast<size_t>(nroots_) * nroots_, 0);
  for (int r = 0; r < nroots_; ++r)
    for (int s = 0; s < nroots_; ++s)
      if (sum_[r * nroots_ + s] >= 0) n_[r * nroots_ + s] = compute_n(r, s);
  n_done_.clear();
  n_done_.shrink_to_fit();

  kappa_h_.assign(static_cast<size_t>(l_) * l_, 0);
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j) {
      int64_t s = 0;
      for (int r = 0; r < nroots_; ++r) s += static_cast<int64_t>(value_[r * l_ + i]) * value_[r * l_ + j];
      kappa_h_[i * l_ + j] = s;
    }
  kappa_x_.assign(nroots_, 0);
  for (int r = 0; r < nroots_; ++r) {
    int64_t s = 0;
    for (int i = 0; i < l_; ++i)
      for (int j = 0; j < l_; ++j) s += static_cast<int64_t>(coroot_[r][i]) * coroot_[r][j] * kappa_h_[i * l_ + j];
    kappa_x_[r] = s / 2;
  }
}

int StructureConstants::basis_of_root(const Root& r) const {
  int idx = rs_.index_of(r);
  if (idx < 0) throw std::invalid_argument(format_root(r) + " is not a root");
  return l_ + idx;
}

int StructureConstants::N(const Root& a, const Root& b) const {
  int ra = rs_.index_of(a), rb = rs_.index_of(b);
  if (ra < 0 || rb < 0) throw std::invalid_argument("N: arguments must be roots");
  return N(ra, rb);
}

int StructureConstants::compute_pos(int r, int s) {
  const auto& roots = rs_.roots();
  int xi = sum_[r * nroots_ + s];
  int a = extra_[xi];
  int b = sum_[xi * nroots_ + rs_.negative_index(a)];
  auto string_p = [&](int x, int y) {
    // largest p with y - p x a root
    int p = 0;
    Root v = roots[y];
    while (true) {
      v = sub(v, roots[x]);
      if (rs_.index_of(v) < 0) break;
      ++p;
    }
    return p;
  };
  if (r == a) return string_p(a, b) + 1;
  if (s == a) return -(string_p(a, b) + 1);
  // r + s + (-a) + (-b) = 0:
  // N_{r,s} N_{a,b} / (xi,xi) = N_{s,-a} N_{r,-b} / |s-a|^2 + N_{-a,r} N_{s,-b} / |r-a|^2
  auto len = [&](int idx) { return rs_.inner(roots[idx], roots[idx]); };
  int na = rs_.negative_index(a), nb = rs_.negative_index(b);
  Q t = 0;
  int s_ma = sum_[s * nroots_ + na];
  if (s_ma >= 0) t += Q(compute_n(s, na) * compute_n(r, nb)) / len(s_ma);
  int r_ma = sum_[r * nroots_ + na];
  if (r_ma >= 0) t += Q(compute_n(na, r) * compute_n(s, nb)) / len(r_ma);
  Q v = t * len(xi) / compute_n(a, b);
  if (v.get_den() != 1) throw std::logic_error("non-integral structure constant N(" + format_root(roots[r]) + ", " + format_root(roots[s]) + ") = " + v.get_str());
  return static_cast<int>(v.get_num().get_si());
}

int StructureConstants::compute_n(int r, int s) {
  size_t key = static_cast<size_t>(r) * nroots_ + s;
  if (n_done_[key]) return n_[key];
  int rs_sum = sum_[key];
  int val = 0;
  if (rs_sum >= 0) {
    const auto& roots = rs_.roots();
    bool rp = r < npos_, sp = s < npos_;
    auto len = [&](int idx) { return rs_.inner(roots[idx], roots[idx]); };
    if (rp && sp) {
      val = compute_pos(r, s);
    } else if (!rp && !sp) {
      val = -compute_n(rs_.negative_index(r), rs_.negative_index(s));
    } else {
      // r + s + t = 0: N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)
      int t = rs_.negative_index(rs_sum);
      bool tp = t < npos_;
      int64_t num;
      int64_t den;
      int other;
      if (rp == tp) {  // r and t share a sign: use N_{t,r}
        other = compute_n(t, r);
        num = len(t);
        den = len(s);
      } else {  // s and t share a sign: use N_{s,t}
        other = compute_n(s, t);
        num = len(t);
        den = len(r);
      }
      Q v = Q(other * num) / den;
      if (v.get_den() != 1) throw std::logic_error("non-integral structure constant N(" + format_root(roots[r]) + ", " + format_root(roots[s]) + ") = " + v.get_str());
      val = static_cast<int>(v.get_num().get_si());
    }
  }
  n_[key] = val;
  n_done_[key] = 1;
  return val;
}

Elem StructureConstants::basis(int b) const {
  Elem e = zero();
  e[b] = 1;
  return e;
}

void StructureConstants::bracket_basis(int a, int b, std::vector<std::pair<int, int>>& out) const {
  out.clear();
  bool ha = a < l_, hb = b < l_;
  if (ha && hb) return;
  if (ha) {
    int r = b - l_;
    int v = value_[r * l_ + a];
    if (v) out.push_back({b, v});
    return;
  }
  if (hb) {
    int r = a - l_;
    int v = value_[r * l_ + b];
    if (v) out.push_back({a, -v});
    return;
  }
  int r = a - l_, s = b - l_;
  int sum = sum_[r * nroots_ + s];
  if (sum == -2) {
    for (int i = 0; i < l_; ++i)
      if (coroot_[r][i]) out.push_back({i, coroot_[r][i]});
  } else if (sum >= 0) {
    out.push_back({l_ + sum, n_[r * nroots_ + s]});
  }
}

Elem StructureConstants::bracket(const Elem& x, const Elem& y) const {
  Elem z = zero();
  std::vector<int> nx, ny;
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[i]) != 0) nx.push_back(i);
    if (sgn(y[i]) != 0) ny.push_back(i);
  }
  std::vector<std::pair<int, int>> buf;
  Q c;
  for (int a : nx)
    for (int b : ny) {
      bracket_basis(a, b, buf);
      if (buf.empty()) continue;
      c = x[a] * y[b];
      for (auto [k, v] : buf) z[k] += c * v;
    }
  return z;
}

int64_t StructureConstants::kappa_basis(int a, int b) const {
  if (a < l_ && b < l_) return kappa_h_[a * l_ + b];
  if (a < l_ || b < l_) return 0;
  int r = a - l_, s = b - l_;
  return s == rs_.negative_index(r) ? kappa_x_[r] : 0;
}

Q StructureConstants::kappa(const Elem& x, const Elem& y) const {
  Q s = 0;
  for (int a = 0; a < dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    if (a < l_) {
      for (int b = 0; b < l_; ++b)
        if (sgn(y[b]) != 0) s += x[a] * y[b] * kappa_h_[a * l_ + b];
    } else {
      int b = l_ + rs_.negative_index(a - l_);
      if (sgn(y[b]) != 0) s += x[a] * y[b] * kappa_x_[a - l_];
    }
  }
  return s;
}

QMat StructureConstants::ad_matrix(const Elem& x) const {
  const int n = dim();
  QMat m(n, QVec(n, 0));
  std::vector<std::pair<int, int>> buf;
  for (int a = 0; a < n; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < n; ++b) {
      bracket_basis(a, b, buf);
      for (auto [k, v] : buf) m[k][b] += x[a] * v;
    }
  }
  return m;
}

bool StructureConstants::ad_semisimple_general(const Elem& x) const {
  return squarefree(minimal_polynomial(ad_matrix(x)));
}

bool StructureConstants::semisimple_borel(const Elem& x) const {
  // Conjugate x = H + N by unipotent elements, height by height, removing
  // every root component on which H does not vanish.  x is semisimple iff
  // nothing survives.
  const auto& roots = rs_.roots();
  std::vector<Q> val(npos_, 0);
  for (int r = 0; r < npos_; ++r)
    for (int i = 0; i < l_; ++i) val[r] += x[i] * value_[r * l_ + i];
  int maxh = 0;
  for (int r = 0; r < npos_; ++r) maxh = std::max(maxh, height(roots[r]));
  Elem cur = x;
  for (int k = 1; k <= maxh; ++k) {
    Elem y = zero();
    bool any = false;
    for (int r = 0; r < npos_; ++r) {
      if (height(roots[r]) != k) continue;
      const Q& c = cur[l_ + r];
      if (sgn(c) != 0 && sgn(val[r]) != 0) {
        y[l_ + r] = c / val[r];
        any = true;
      }
    }
    if (!any) continue;
    Elem term = cur;
    for (int j = 1;; ++j) {
      term = bracket(y, term);
      if (is_zero(term)) break;
      for (auto& t : term) t /= j;
      for (int i = 0; i < dim(); ++i) cur[i] += term[i];
    }
  }
  for (int r = 0; r < npos_; ++r)
    if (sgn(cur[l_ + r]) != 0) return false;
  return true;
}

bool StructureConstants::ad_semisimple(const Elem& x) const {
  bool has_neg = false;
  for (int r = npos_; r < nroots_; ++r)
    if (sgn(x[l_ + r]) != 0) has_neg = true;
  if (!has_neg) return semisimple_borel(x);
  return ad_semisimple_general(x);
}

int64_t StructureConstants::jacobi_violations() const {
  const int n = dim();
  // precompute basis brackets
  std::vector<std::vector<std::pair<int, int>>> tab(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) bracket_basis(a, b, tab[static_cast<size_t>(a) * n + b]);
  unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<int64_t> bad(nthreads, 0);
  auto work = [&](unsigned t) {
    std::vector<int64_t> acc(n, 0);
    std::vector<int> touched;
    auto add_term = [&](int x, const std::vector<std::pair<int, int>>& yz) {
      for (auto [k, c] : yz)
        for (auto [m, d] : tab[static_cast<size_t>(x) * n + k]) {
          if (acc[m] == 0) touched.push_back(m);
          acc[m] += static_cast<int64_t>(c) * d;
        }
    };
    for (int a = static_cast<int>(t); a < n; a += static_cast<int>(nthreads))
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          touched.clear();
          add_term(a, tab[static_cast<size_t>(b) * n + c]);
          add_term(b, tab[static_cast<size_t>(c) * n + a]);
          add_term(c, tab[static_cast<size_t>(a) * n + b]);
          bool ok = true;
          for (int m : touched) {
            if (acc[m] != 0) ok = false;
            acc[m] = 0;
          }
          if (!ok) ++bad[t];
        }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();
  int64_t total = 0;
  for (auto b : bad) total += b;
  return total;
}

int64_t StructureConstants::string_violations() const {
  const auto& roots = rs_.roots();
  int64_t bad = 0;
  for (int r = 0; r < nroots_; ++r)
    for (int s = 0; s < nroots_; ++s) {
      int sum = sum_[r * nroots_ + s];
      if (sum < 0) continue;
      int p = 0;
      Root v = roots[s];
      while (true) {
        v = sub(v, roots[r]);
        if (rs_.index_of(v) < 0) break;
        ++p;
      }
      int nv = n_[r * nroots_ + s];
      if (std::abs(nv) != p + 1) ++bad;
      if (n_[s * nroots_ + r] != -nv) ++bad;
      if (n_[rs_.negative_index(r) * nroots_ + rs_.negative_index(s)] != -nv) ++bad;
    }
  return bad;
}

}  // namespace lieindex
