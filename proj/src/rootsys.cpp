#include "lieindex/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lieindex {

namespace {

struct Diagram {
  std::vector<int> d;                       // half squared lengths
  std::vector<std::pair<int, int>> edges;  // 0-based
};

Diagram diagram(SimpleType t) {
  const int l = t.rank;
  Diagram g;
  g.d.assign(l, 1);
  auto chain = [&](int n) {
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  };
  switch (t.family) {
    case Family::A:
      chain(l);
      break;
    case Family::B:
      chain(l);
      for (int i = 0; i < l - 1; ++i) g.d[i] = 2;
      break;
    case Family::C:
      chain(l);
      g.d[l - 1] = 2;
      break;
    case Family::D:
      chain(l - 1);
      g.edges.push_back({l - 3, l - 1});
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      g.edges.push_back({0, 2});
      for (int i = 2; i + 1 < l; ++i) g.edges.push_back({i, i + 1});
      g.edges.push_back({1, 3});
      break;
    case Family::F:
      chain(4);
      g.d = {2, 2, 1, 1};
      break;
    case Family::G:
      chain(2);
      g.d = {3, 1};
      break;
  }
  return g;
}

}  // namespace

SimpleType SimpleType::make(char letter, int rank) {
  Family f;
  switch (letter) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default:
      throw TypeError(std::string("unknown family '") + letter + "' (expected one of A,B,C,D,E,F,G)");
  }
  auto bad = [&](const std::string& bound) {
    throw TypeError(std::string("rank ") + std::to_string(rank) + " out of bounds for family " + letter +
                    ": requires " + bound);
  };
  switch (f) {
    case Family::A: if (rank < 1) bad("rank >= 1"); break;
    case Family::B: if (rank < 2) bad("rank >= 2"); break;
    case Family::C: if (rank < 3) bad("rank >= 3"); break;
    case Family::D: if (rank < 4) bad("rank >= 4"); break;
    case Family::E: if (rank < 6 || rank > 8) bad("6 <= rank <= 8"); break;
    case Family::F: if (rank != 4) bad("rank == 4"); break;
    case Family::G: if (rank != 2) bad("rank == 2"); break;
  }
  return SimpleType{f, rank};
}

SimpleType SimpleType::parse(const std::string& text) {
  if (text.size() < 2) throw TypeError("cannot parse type '" + text + "'");
  int r = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw TypeError("cannot parse type '" + text + "'");
    r = r * 10 + (text[i] - '0');
    if (r > 1000) throw TypeError("rank too large in '" + text + "'");
  }
  return make(text[0], r);
}

char SimpleType::letter() const { return "ABCDEFG"[static_cast<int>(family)]; }

std::string SimpleType::name() const { return std::string(1, letter()) + std::to_string(rank); }

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

bool is_positive(const Root& r) {
  return std::any_of(r.begin(), r.end(), [](int c) { return c > 0; });
}

Root negate(const Root& r) {
  Root out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
  return out;
}

Root add(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Root sub(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::string format_root(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  Diagram g = diagram(t);
  const int l = t.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  for (auto [i, j] : g.edges) {
    int b = -std::max(g.d[i], g.d[j]);  // (beta_i, beta_j)
    c[i][j] = b / g.d[i];
    c[j][i] = b / g.d[j];
  }
  return c;
}

std::vector<int> symmetrizer(SimpleType t) { return diagram(t).d; }

int positive_root_count(SimpleType t) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootSystem::RootSystem(SimpleType t) : components_{t} { build(); }

RootSystem::RootSystem(std::vector<SimpleType> components) : components_(std::move(components)) {
  if (components_.empty()) throw TypeError("root system needs at least one component");
  build();
}

std::string RootSystem::type_name() const {
  std::string s;
  for (size_t k = 0; k < components_.size(); ++k) s += (k ? "+" : "") + components_[k].name();
  return s;
}

void RootSystem::build() {
  rank_ = 0;
  for (auto& t : components_) rank_ += t.rank;
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  sym_.assign(rank_, 1);
  int off = 0;
  for (auto& t : components_) {
    auto c = lieindex::cartan_matrix(t);
    auto d = lieindex::symmetrizer(t);
    for (int i = 0; i < t.rank; ++i) {
      sym_[off + i] = d[i];
      for (int j = 0; j < t.rank; ++j) cartan_[off + i][off + j] = c[i][j];
    }
    off += t.rank;
  }
  enumerate_positive();
}

void RootSystem::enumerate_positive() {
  std::map<Root, int> known;
  std::vector<Root> level;
  for (int i = 0; i < rank_; ++i) {
    level.push_back(simple_root(i));
    known[level.back()] = 1;
  }
  std::vector<Root> all = level;
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& a : level) {
      for (int i = 0; i < rank_; ++i) {
        Root up = a;
        up[i] += 1;
        if (known.count(up)) continue;
        // p: how far the beta_i-string extends below a
        int p = 0;
        Root down = a;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing_simple(a, i) > 0) {
          known[up] = 1;
          next.push_back(up);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Root& x, const Root& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  roots_pos_ = all;
  roots_all_ = all;
  for (const Root& r : all) roots_all_.push_back(negate(r));
  lookup_.clear();
  for (size_t k = 0; k < roots_all_.size(); ++k) lookup_[roots_all_[k]] = static_cast<int>(k);
}

int64_t RootSystem::inner(const Root& a, const Root& b) const {
  // (beta_i, beta_j) = d_i * C[i][j]
  int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    int64_t row = 0;
    for (int j = 0; j < rank_; ++j) row += static_cast<int64_t>(cartan_[i][j]) * b[j];
    s += static_cast<int64_t>(a[i]) * sym_[i] * row;
  }
  return s;
}

int RootSystem::pairing(const Root& a, const Root& b) const {
  int64_t bb = inner(b, b);
  if (bb == 0) throw std::invalid_argument("pairing with the zero vector");
  return static_cast<int>(2 * inner(a, b) / bb);
}

int RootSystem::pairing_simple(const Root& a, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * a[j];
  return s;
}

int RootSystem::index_of(const Root& r) const {
  auto it = lookup_.find(r);
  return it == lookup_.end() ? -1 : it->second;
}

Root RootSystem::simple_root(int i) const {
  Root r(rank_, 0);
  r[i] = 1;
  return r;
}

NodeSet RootSystem::full_base() const {
  NodeSet s(rank_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

std::vector<NodeSet> RootSystem::connected_components(const NodeSet& S) const {
  std::vector<NodeSet> comps;
  std::vector<char> seen(rank_, 0), in(rank_, 0);
  for (int i : S) in[i] = 1;
  for (int s : S) {
    if (seen[s]) continue;
    NodeSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < rank_; ++w)
        if (in[w] && !seen[w] && cartan_[v][w] != 0) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end(), [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
  return comps;
}

bool RootSystem::connected(const NodeSet& S) const { return !S.empty() && connected_components(S).size() == 1; }

bool RootSystem::supported_in(const Root& r, const NodeSet& S) const {
  std::vector<char> in(rank_, 0);
  for (int i : S) in[i] = 1;
  for (int i = 0; i < rank_; ++i)
    if (r[i] != 0 && !in[i]) return false;
  return true;
}

std::vector<Root> RootSystem::subsystem_positive_roots(const NodeSet& S) const {
  std::vector<Root> out;
  for (const Root& r : roots_pos_)
    if (supported_in(r, S)) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::subsystem_roots(const NodeSet& S) const {
  std::vector<Root> out;
  for (const Root& r : roots_all_)
    if (supported_in(r, S)) out.push_back(r);
  return out;
}

Root RootSystem::highest_root(const NodeSet& S) const {
  if (S.empty()) throw std::invalid_argument("highest_root: empty subset");
  if (!connected(S)) throw std::invalid_argument("highest_root: subset is disconnected; decompose into components first");
  // The highest root is the unique root of maximal height in the subsystem.
  const Root* best = nullptr;
  for (const Root& r : roots_pos_)
    if (supported_in(r, S) && (!best || height(r) > height(*best))) best = &r;
  return *best;
}

std::string classify_connected(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  if (n == 1) return "A1";
  std::vector<int> deg(n, 0);
  int triple = -1, dbl_i = -1, dbl_j = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0) continue;
      ++deg[i];
      if (c[i][j] == -3) triple = i;
      if (c[i][j] == -2) { dbl_i = i; dbl_j = j; }  // i short, j long
    }
  if (triple >= 0) return "G2";
  if (dbl_i >= 0) {
    if (n == 2) return "B2";
    if (n == 4 && deg[dbl_i] == 2 && deg[dbl_j] == 2) return "F4";
    // chain: the end of the double bond decides B (short end) or C (long end)
    if (deg[dbl_i] == 1) return "B" + std::to_string(n);
    return "C" + std::to_string(n);
  }
  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 3) branch = i;
  if (branch < 0) return "A" + std::to_string(n);
  std::vector<int> arms;
  for (int j = 0; j < n; ++j) {
    if (j == branch || c[branch][j] == 0) continue;
    int len = 1, prev = branch, cur = j;
    while (true) {
      int nxt = -1;
      for (int k = 0; k < n; ++k)
        if (k != cur && k != prev && c[cur][k] != 0) nxt = k;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return "?" + std::to_string(n);
}

namespace {

std::string join_types(std::vector<std::pair<char, int>> parts) {
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t k = 0; k < parts.size();) {
    size_t m = k;
    while (m < parts.size() && parts[m] == parts[k]) ++m;
    if (!out.empty()) out += "+";
    out += std::string(1, parts[k].first) + std::to_string(parts[k].second);
    if (m - k > 1) out += "^" + std::to_string(m - k);
    k = m;
  }
  return out;
}

void normalize_part(char f, int r, int mult, std::vector<std::pair<char, int>>& out) {
  if (r <= 0) return;
  if ((f == 'B' || f == 'C') && r == 1) f = 'A';
  if (f == 'C' && r == 2) f = 'B';
  if (f == 'D' && r == 1) return;  // abelian
  if (f == 'D' && r == 2) { f = 'A'; r = 1; mult *= 2; }
  if (f == 'D' && r == 3) { f = 'A'; }
  for (int k = 0; k < mult; ++k) out.push_back({f, r});
}

}  // namespace

std::string subsystem_type(const RootSystem& rs, const NodeSet& S) {
  std::vector<std::pair<char, int>> parts;
  for (const NodeSet& comp : rs.connected_components(S)) {
    std::vector<std::vector<int>> c(comp.size(), std::vector<int>(comp.size()));
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = 0; b < comp.size(); ++b) c[a][b] = rs.cartan(comp[a], comp[b]);
    std::string t = classify_connected(c);
    normalize_part(t[0], std::stoi(t.substr(1)), 1, parts);
  }
  return join_types(parts);
}

std::string canonical_type_string(const std::string& text) {
  std::vector<std::pair<char, int>> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    if (item.empty() || item == "0") continue;
    char f = item[0];
    size_t caret = item.find('^');
    int r = std::stoi(item.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int mult = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
    normalize_part(f, r, mult, parts);
  }
  return join_types(parts);
}

}  // namespace lieindex
