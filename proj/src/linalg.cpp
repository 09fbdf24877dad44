#include "lieindex/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieindex {

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return sgn(x) == 0; });
}

std::vector<int> rref(QMat& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Q inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Q f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(const QMat& m) {
  if (m.empty()) return 0;
  return bareiss_rank(integer_rows(m));
}

std::vector<QVec> nullspace(const QMat& m, int cols) {
  QMat a = m;
  std::vector<int> piv = rref(a);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<QVec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

ZMat integer_rows(const QMat& m) {
  ZMat out;
  out.reserve(m.size());
  for (const QVec& row : m) {
    mpz_class l = 1;
    for (const Q& x : row)
      if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    ZVec z(row.size());
    for (size_t j = 0; j < row.size(); ++j)
      if (sgn(row[j]) != 0) z[j] = row[j].get_num() * (l / row[j].get_den());
    out.push_back(std::move(z));
  }
  return out;
}

int bareiss_rank(ZMat m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int r = 0;
  mpz_class t;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        // m[i][j] = (m[r][c]*m[i][j] - m[i][c]*m[r][j]) / prev
        t = m[r][c] * m[i][j];
        t -= m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int modular_rank(const ZMat& m, uint64_t p) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols));
  mpz_class pz = static_cast<unsigned long>(p), t;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      mpz_fdiv_r(t.get_mpz_t(), m[i][j].get_mpz_t(), pz.get_mpz_t());
      a[i][j] = t.get_ui();
    }
  auto inv = [p](uint64_t x) {
    uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<unsigned __int128>(r) * x % p;
      x = static_cast<unsigned __int128>(x) * x % p;
      e >>= 1;
    }
    return r;
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    uint64_t iv = inv(a[r][c]);
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * iv % p;
    for (int i = r + 1; i < rows; ++i) {
      uint64_t f = a[i][c];
      if (!f) continue;
      for (int j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

void Span::reduce(QVec& v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Q& c = v[pivots_[k]];
    if (sgn(c) == 0) continue;
    Q f = c;
    const QVec& row = rows_[k];
    for (int j = 0; j < dim_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
}

bool Span::insert(QVec v) {
  reduce(v);
  int p = -1;
  for (int j = 0; j < dim_; ++j)
    if (sgn(v[j]) != 0) { p = j; break; }
  if (p < 0) return false;
  Q inv = 1 / v[p];
  for (int j = 0; j < dim_; ++j) v[j] *= inv;
  // keep rows fully reduced at pivots so reduce() is a single pass
  for (size_t k = 0; k < rows_.size(); ++k) {
    Q f = rows_[k][p];
    if (sgn(f) == 0) continue;
    for (int j = 0; j < dim_; ++j)
      if (sgn(v[j]) != 0) rows_[k][j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool Span::contains(QVec v) const {
  reduce(v);
  return is_zero(v);
}

int intersection_dim(const std::vector<QVec>& a, const std::vector<QVec>& b, int dim) {
  Span sa(dim), sb(dim), sab(dim);
  for (auto& v : a) { sa.insert(v); sab.insert(v); }
  for (auto& v : b) { sb.insert(v); sab.insert(v); }
  return sa.dim() + sb.dim() - sab.dim();
}

void poly_trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int poly_degree(const Poly& p) {
  Poly q = p;
  poly_trim(q);
  return static_cast<int>(q.size()) - 1;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  poly_trim(d);
  return d;
}

static void divmod(Poly a, const Poly& b0, Poly& quot, Poly& rem) {
  Poly b = b0;
  poly_trim(a);
  poly_trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Q f = a.back() / b.back();
    quot[shift] = f;
    for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    poly_trim(a);
  }
  rem = a;
}

Poly poly_mod(Poly a, const Poly& b) {
  Poly q, r;
  divmod(std::move(a), b, q, r);
  return r;
}

Poly poly_div(Poly a, const Poly& b) {
  Poly q, r;
  divmod(std::move(a), b, q, r);
  poly_trim(q);
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Q lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  Poly g = poly_gcd(a, b);
  Poly l = poly_div(poly_mul(a, b), g);
  Q lead = l.back();
  for (auto& c : l) c /= lead;
  return l;
}

Poly minimal_polynomial(const QMat& a) {
  const int n = static_cast<int>(a.size());
  auto apply = [&](const QVec& v) {
    QVec w(n, 0);
    for (int j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0) continue;
      for (int i = 0; i < n; ++i)
        if (sgn(a[i][j]) != 0) w[i] += a[i][j] * v[j];
    }
    return w;
  };
  Poly result{1};
  for (int k = 0; k < n; ++k) {
    // Krylov sequence of e_k, tracking each reduced vector as a polynomial in A
    std::vector<QVec> rows;
    std::vector<Poly> polys;
    std::vector<int> piv;
    QVec v(n, 0);
    v[k] = 1;
    QVec power = v;
    for (int m = 0; m <= n; ++m) {
      QVec w = power;
      Poly t(m + 1, 0);
      t[m] = 1;
      for (size_t r = 0; r < rows.size(); ++r) {
        Q c = w[piv[r]];
        if (sgn(c) == 0) continue;
        for (int j = 0; j < n; ++j)
          if (sgn(rows[r][j]) != 0) w[j] -= c * rows[r][j];
        for (size_t d = 0; d < polys[r].size(); ++d) t[d] -= c * polys[r][d];
      }
      int p = -1;
      for (int j = 0; j < n; ++j)
        if (sgn(w[j]) != 0) { p = j; break; }
      if (p < 0) {
        poly_trim(t);
        result = poly_lcm(result, t);
        break;
      }
      Q inv = 1 / w[p];
      for (auto& x : w) x *= inv;
      for (auto& x : t) x *= inv;
      rows.push_back(std::move(w));
      polys.push_back(std::move(t));
      piv.push_back(p);
      power = apply(power);
    }
  }
  return result;
}

bool squarefree(const Poly& p) {
  Poly g = poly_gcd(p, poly_derivative(p));
  return poly_degree(g) <= 0;
}

}  // namespace lieindex
