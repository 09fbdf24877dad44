#include "lieindex/realform.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace lieindex {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

RealForm::RealForm(RealFormRecord rec) : rec_(std::move(rec)) {
  auto& inv = rec_.involution;
  if (inv.complex_double) {
    rs_ = std::make_shared<RootSystem>(std::vector<SimpleType>{rec_.type, rec_.type});
    const int l = rec_.type.rank;
    inv.black.clear();
    inv.sigma.assign(2 * l, 0);
    for (int i = 0; i < l; ++i) {
      inv.sigma[i] = i + l;
      inv.sigma[i + l] = i;
    }
  } else {
    rs_ = std::make_shared<RootSystem>(rec_.type);
    if (inv.sigma.empty()) {
      inv.sigma.resize(rs_->rank());
      for (int i = 0; i < rs_->rank(); ++i) inv.sigma[i] = i;
    }
  }
  std::sort(inv.black.begin(), inv.black.end());
  cascade_ = std::make_shared<Cascade>(*rs_, rs_->full_base());
  w_black_ = longest_word(*rs_, inv.black);
  validate();

  for (const Root& a : rs_->positive_roots()) (theta(a) == a ? imag_pos_ : b_roots_).push_back(a);

  // (-1)-eigenspace of theta on h*
  const int l = rs_->rank();
  QMat m(l, QVec(l, 0));
  for (int j = 0; j < l; ++j) {
    Root t = theta(rs_->simple_root(j));
    for (int i = 0; i < l; ++i) m[i][j] = t[i];
    m[j][j] += 1;
  }
  for (QVec v : nullspace(m, l)) {
    mpz_class den = 1;
    for (auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) x *= den;
    a_hat_.push_back(v);
  }
}

bool RealForm::is_compact() const {
  return !rec_.involution.complex_double && static_cast<int>(rec_.involution.black.size()) == rs_->rank();
}

Root RealForm::sigma(const Root& a) const {
  Root out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) out[rec_.involution.sigma[i]] = a[i];
  return out;
}

Root RealForm::theta(const Root& a) const { return negate(apply_word(*rs_, w_black_, sigma(a))); }

QVec RealForm::theta(const QVec& v) const {
  QVec s(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) s[rec_.involution.sigma[i]] = v[i];
  QVec w = apply_word(*rs_, w_black_, s);
  for (auto& x : w) x = -x;
  return w;
}

void RealForm::validate() const {
  const auto& inv = rec_.involution;
  const int l = rs_->rank();
  auto fail = [&](const std::string& why) { throw RegistryError("registry entry '" + rec_.name + "': " + why); };
  if (static_cast<int>(inv.sigma.size()) != l) fail("sigma has wrong length");
  for (int i = 0; i < l; ++i) {
    if (inv.sigma[i] < 0 || inv.sigma[i] >= l || inv.sigma[inv.sigma[i]] != i) fail("sigma is not an involution");
    for (int j = 0; j < l; ++j)
      if (rs_->cartan(inv.sigma[i], inv.sigma[j]) != rs_->cartan(i, j)) fail("sigma does not preserve the Cartan matrix");
  }
  std::set<int> bl(inv.black.begin(), inv.black.end());
  for (int b : inv.black) {
    if (b < 0 || b >= l) fail("black node out of range");
    if (!bl.count(inv.sigma[b])) fail("sigma does not fix the black set");
  }
  for (const Root& a : rs_->roots()) {
    Root t = theta(a);
    if (!rs_->is_root(t)) fail("theta does not preserve the roots");
    if (theta(t) != a) fail("theta is not an involution");
    bool in_black = rs_->supported_in(a, inv.black);
    if (in_black && t != a) fail("theta does not fix the black subsystem");
    if (!in_black && t == a) fail("theta fixes a root outside the black subsystem");
    if (!in_black && is_positive(a) && is_positive(t)) fail("theta maps a positive non-imaginary root to a positive root");
  }
}

int RealForm::rank_k() const {
  // theta = -w_black sigma = (w0 w') (iota sigma) with iota the opposition involution
  const RootSystem& rs = *rs_;
  int cycles = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    Root s = sigma(rs.simple_root(i));
    Root d = negate(longest_element_action(rs, rs.full_base(), s));
    int j = std::find(d.begin(), d.end(), 1) - d.begin();
    if (j > i) ++cycles;
  }
  return rs.rank() - cycles;
}

std::vector<Root> gamma1_of(const RealForm& rf, int k) {
  return gamma1(rf.roots(), rf.cascade()[k], rf.imaginary_positive());
}

CascadeAnalysis analyze(const RealForm& rf) {
  CascadeAnalysis an;
  const RootSystem& rs = rf.roots();
  const Cascade& c = rf.cascade();
  an.name = rf.name();
  an.empty_b = rf.is_compact();
  an.k_g = static_cast<int>(c.size());
  an.k_m = static_cast<int>(kostant_cascade(rs, rf.black()).size());
  an.rg_g = rs.rank();
  an.rg_k = rf.rank_k();
  an.dim_a = rf.dim_a();
  an.gamma1_sizes.assign(c.size(), 0);

  std::vector<int> partner(c.size(), -1);
  for (size_t k = 0; k < c.size(); ++k) {
    const Root& e = c[k].epsilon;
    Root t = rf.theta(e);
    if (t == e) {
      an.kp.push_back(static_cast<int>(k));
      continue;
    }
    an.kpp.push_back(static_cast<int>(k));
    int L = c.find_epsilon(negate(t));
    if (L < 0 || rf.theta(c[L].epsilon) == c[L].epsilon) {
      an.property_P = false;
      continue;
    }
    if (L == static_cast<int>(k))
      an.kreel.push_back(L);
    else
      partner[k] = L;
  }
  for (size_t k = 0; k < c.size(); ++k) {
    int L = partner[k];
    if (L < 0) continue;
    if (partner[L] != static_cast<int>(k)) an.property_P = false;
    // the member listed first in cascade order encloses its partner when nested
    if (static_cast<int>(k) < L) {
      an.kcomp_pairs.push_back({static_cast<int>(k), L});
      an.kcomp_plus.push_back(static_cast<int>(k));
    }
  }
  if (!an.property_P) throw RegistryError("registry entry '" + rf.name() + "': property (P) fails");

  std::set<Root> sub, imag;
  for (const Root& e : kostant_cascade(rs, rf.black()).epsilons()) sub.insert(e);
  for (int k : an.kp) imag.insert(c[k].epsilon);
  an.star = sub == imag;

  for (int k : an.kpp) an.gamma1_sizes[k] = static_cast<int>(gamma1_of(rf, k).size());
  an.flags = classify_properties(an);
  return an;
}

PropertyFlags classify_properties(const CascadeAnalysis& an) {
  PropertyFlags f;
  f.A = an.star;
  f.B = f.Bprime = an.kcomp_pairs.empty();
  f.C = an.star && an.rg_g == an.rg_k;
  f.strongest = f.C ? "(C)" : f.B ? "(B)" : f.A ? "(A)" : "rien";
  return f;
}

KcompReport kcomp_count(const CascadeAnalysis& an) {
  if (!an.star) throw std::logic_error("formula requires condition (*)");
  KcompReport r;
  r.formula = an.k_g - an.k_m + an.rg_g - an.rg_k - an.dim_a;
  r.counted = an.kcomp_size();
  r.match = r.formula == r.counted;
  return r;
}

CalculKReport verify_calcul_k(const CascadeAnalysis& an) {
  CalculKReport r;
  r.lhs = an.dim_a - static_cast<int>(an.kreel.size());
  r.rhs = an.rg_g - an.rg_k;
  r.inequality = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  r.star = an.star;
  return r;
}

CayleyState cayley_state(const CascadeAnalysis& an) {
  CayleyState s;
  s.dim_a = an.dim_a;
  s.kpp = an.kpp;
  s.kp = an.kp;
  s.kreel = an.kreel;
  s.property_P = an.property_P;
  s.star = an.star;
  return s;
}

CayleyState cayley_reduce(const CayleyState& s, int k) {
  auto it = std::find(s.kreel.begin(), s.kreel.end(), k);
  if (it == s.kreel.end()) throw std::invalid_argument("cayley_reduce: element " + std::to_string(k) + " is not real");
  CayleyState t = s;
  t.dim_a -= 1;
  t.kreel.erase(t.kreel.begin() + (it - s.kreel.begin()));
  t.kpp.erase(std::find(t.kpp.begin(), t.kpp.end(), k));
  t.kp.push_back(k);
  std::sort(t.kp.begin(), t.kp.end());
  return t;
}

std::vector<RealFormRecord> parse_registry(const std::string& text) {
  std::vector<RealFormRecord> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 14) throw RegistryError("registry line " + std::to_string(lineno) + ": expected 14 fields");
    RealFormRecord r;
    r.name = f[0];
    r.type = SimpleType::parse(f[1]);
    if (f[2] != "-")
      for (auto& s : split(f[2], ',')) r.involution.black.push_back(std::stoi(s) - 1);
    r.involution.complex_double = f[4] == "1";
    if (!r.involution.complex_double) {
      r.involution.sigma.resize(r.type.rank);
      for (int i = 0; i < r.type.rank; ++i) r.involution.sigma[i] = i;
      if (f[3] != "-")
        for (auto& pr : split(f[3], ',')) {
          auto ab = split(pr, ':');
          int a = std::stoi(ab.at(0)) - 1, b = std::stoi(ab.at(1)) - 1;
          r.involution.sigma.at(a) = b;
          r.involution.sigma.at(b) = a;
        }
    }
    auto& d = r.declared;
    d.rg_g = std::stoi(f[5]);
    d.rg_k = std::stoi(f[6]);
    d.dim_a = std::stoi(f[7]);
    d.k_g = std::stoi(f[8]);
    d.m0_name = f[9];
    d.m0_type = f[10];
    d.k_m = std::stoi(f[11]);
    d.strongest = f[12] == "-" ? "" : f[12];
    d.note = f[13] == "-" ? "" : f[13];
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<std::shared_ptr<RealForm>>& registry() {
  static const std::vector<std::shared_ptr<RealForm>> reg = [] {
    std::vector<std::shared_ptr<RealForm>> v;
    std::set<std::string> names;
    for (auto& rec : parse_registry(registry_text())) {
      if (!names.insert(rec.name).second) throw RegistryError("duplicate registry entry '" + rec.name + "'");
      v.push_back(std::make_shared<RealForm>(std::move(rec)));
    }
    return v;
  }();
  return reg;
}

std::shared_ptr<RealForm> registry_lookup(const std::string& name) {
  const auto& reg = registry();
  auto find = [&](const std::string& n) -> std::shared_ptr<RealForm> {
    for (auto& rf : reg)
      if (rf->name() == n) return rf;
    return nullptr;
  };
  if (auto rf = find(name)) return rf;
  auto open = name.find('('), comma = name.find(','), close = name.find(')');
  if (open != std::string::npos && comma != std::string::npos && close != std::string::npos && open < comma &&
      comma < close) {
    std::string swapped = name.substr(0, open + 1) + name.substr(comma + 1, close - comma - 1) + "," +
                          name.substr(open + 1, comma - open - 1) + name.substr(close);
    if (auto rf = find(swapped)) return rf;
  }
  return nullptr;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (auto& rf : registry()) out.push_back(rf->name());
  return out;
}

}  // namespace lieindex
