#include "nichols/lie_type.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nichols/errors.hpp"

namespace nichols {

LieCartanMatrix cartan_matrix_a(const SimpleScaledRoots& pi, const ScaledRootSystem& omega) {
  const int n = static_cast<int>(pi.size());
  std::int64_t height_bound = 0;
  for (const auto& v : omega.positive) {
    height_bound = std::max(height_bound, std::accumulate(v.begin(), v.end(), std::int64_t{0}));
  }
  LieCartanMatrix out;
  out.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        out.a[i][j] = 2;
        continue;
      }
      int best = 0;
      for (std::int64_t m = 1; m <= height_bound; ++m) {
        if (omega.contains_positive(m * pi.pi[i] + pi.pi[j])) best = static_cast<int>(m);
      }
      out.a[i][j] = -best;
    }
  }
  return out;
}

std::int64_t positive_root_count(const SimpleFactor& f) {
  const std::int64_t n = f.rank;
  switch (f.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

namespace {

bool valid_factor(const SimpleFactor& f) {
  switch (f.family) {
    case 'A':
    case 'B':
    case 'C': return f.rank >= 1;
    case 'D': return f.rank >= 2;
    case 'E': return f.rank >= 6 && f.rank <= 8;
    case 'F': return f.rank == 4;
    case 'G': return f.rank == 2;
  }
  return false;
}

void canonicalize(std::vector<SimpleFactor>& factors) {
  std::vector<SimpleFactor> out;
  for (auto f : factors) {
    if ((f.family == 'B' || f.family == 'C') && f.rank == 1) f.family = 'A';
    if (f.family == 'C' && f.rank == 2) f.family = 'B';
    if (f.family == 'D' && f.rank == 3) f.family = 'A';
    if (f.family == 'D' && f.rank == 2) {
      out.push_back({'A', 1});
      out.push_back({'A', 1});
      continue;
    }
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const SimpleFactor& x, const SimpleFactor& y) {
    if (x.rank != y.rank) return x.rank > y.rank;
    return x.family < y.family;
  });
  factors = std::move(out);
}

using Component = std::vector<int>;

std::vector<Component> components(const LieCartanMatrix& a) {
  const int n = a.size();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    Component comp{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (int t = 0; t < n; ++t) {
        if (t != comp[k] && a(comp[k], t) != 0 && label[t] == -1) {
          label[t] = label[s];
          comp.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string encode_from(const LieCartanMatrix& a, const Component& comp, int v, int parent) {
  std::vector<std::string> parts;
  for (int c : comp) {
    if (c == v || c == parent || a(v, c) == 0) continue;
    parts.push_back(std::to_string(-a(v, c)) + std::to_string(-a(c, v)) + encode_from(a, comp, c, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

// Canonical string of a labelled tree: rooted at its center (or the smaller
// encoding over two centers), children sorted by encoding, each edge
// labelled (-a_parent,child, -a_child,parent).
std::string canonical_encoding(const LieCartanMatrix& a, const Component& comp) {
  std::size_t edges = 0;
  for (int i : comp) {
    for (int j : comp) {
      if (i >= j) continue;
      const int x = a(i, j), y = a(j, i);
      if ((x == 0) != (y == 0)) {
        throw Unclassifiable("a_ij = 0 but a_ji != 0 at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      if (x == 0) continue;
      const int product = x * y;
      if (x > 0 || y > 0 || product < 1 || product > 3) {
        throw Unclassifiable("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") has entries outside finite type");
      }
      ++edges;
    }
  }
  if (edges + 1 != comp.size()) throw Unclassifiable("component contains a cycle");

  std::vector<int> degree(static_cast<std::size_t>(a.size()), 0);
  for (int i : comp) {
    for (int j : comp) {
      if (i != j && a(i, j) != 0) ++degree[i];
    }
  }
  std::vector<int> layer;
  std::vector<bool> removed(static_cast<std::size_t>(a.size()), false);
  std::size_t remaining = comp.size();
  while (remaining > 2) {
    layer.clear();
    for (int v : comp) {
      if (!removed[v] && degree[v] <= 1) layer.push_back(v);
    }
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int u : comp) {
        if (u != v && !removed[u] && a(u, v) != 0) --degree[u];
      }
    }
  }
  std::string best;
  for (int v : comp) {
    if (removed[v]) continue;
    std::string e = encode_from(a, comp, v, -1);
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

LieCartanMatrix path(int n) {
  LieCartanMatrix m;
  m.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    m.a[i][i] = 2;
    if (i + 1 < n) m.a[i][i + 1] = m.a[i + 1][i] = -1;
  }
  return m;
}

std::vector<SimpleFactor> candidates(int n) {
  std::vector<SimpleFactor> out{{'A', n}};
  if (n >= 2) out.push_back({'B', n});
  if (n >= 3) out.push_back({'C', n});
  if (n >= 4) out.push_back({'D', n});
  if (n >= 6 && n <= 8) out.push_back({'E', n});
  if (n == 4) out.push_back({'F', 4});
  if (n == 2) out.push_back({'G', 2});
  return out;
}

}  // namespace

LieCartanMatrix template_matrix(const SimpleFactor& f) {
  const int n = f.rank;
  LieCartanMatrix m = path(n);
  switch (f.family) {
    case 'A': break;
    case 'B': m.a[n - 1][n - 2] = -2; break;
    case 'C': m.a[n - 2][n - 1] = -2; break;
    case 'D':
      m.a[n - 2][n - 1] = m.a[n - 1][n - 2] = 0;
      m.a[n - 3][n - 1] = m.a[n - 1][n - 3] = -1;
      break;
    case 'E':
      m = path(n);
      for (int i = 0; i + 1 < n; ++i) m.a[i][i + 1] = m.a[i + 1][i] = 0;
      for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}}) m.a[i][j] = m.a[j][i] = -1;
      for (int i = 2; i + 1 < n; ++i) m.a[i][i + 1] = m.a[i + 1][i] = -1;
      break;
    case 'F': m.a[2][1] = -2; break;
    case 'G': m.a[0][1] = -3; break;
  }
  return m;
}

SemisimpleType SemisimpleType::zero() {
  SemisimpleType t;
  t.zero_ = true;
  return t;
}

SemisimpleType::SemisimpleType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (!valid_factor(f)) {
      throw ValidationError(std::string("no simple type ") + f.family + std::to_string(f.rank));
    }
  }
  if (factors_.empty()) throw ValidationError("a semisimple type needs at least one factor; use zero()");
  canonicalize(factors_);
}

int SemisimpleType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::int64_t SemisimpleType::positive_root_count() const {
  std::int64_t total = 0;
  for (const auto& f : factors_) total += nichols::positive_root_count(f);
  return total;
}

std::string SemisimpleType::name() const {
  if (zero_) return "ZERO";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += 'x';
    out += f.family;
    out += std::to_string(f.rank);
  }
  return out;
}

SemisimpleType SemisimpleType::parse(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "\xC3\x97") == 0) {  // U+00D7
      s += 'X';
      ++i;
      continue;
    }
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || c == '_') continue;
    s += static_cast<char>(std::toupper(c));
  }
  if (s == "ZERO" || s == "0") return zero();
  std::vector<SimpleFactor> factors;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = std::min(s.find('X', pos), s.size());
    const std::string token = s.substr(pos, next - pos);
    if (token.size() < 2 || !std::all_of(token.begin() + 1, token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ValidationError("cannot parse type '" + text + "'");
    }
    factors.push_back({token[0], std::stoi(token.substr(1))});
    pos = next + 1;
  }
  return SemisimpleType(std::move(factors));
}

SemisimpleType classify(const LieCartanMatrix& a) {
  if (a.size() == 0) return SemisimpleType::zero();
  for (int i = 0; i < a.size(); ++i) {
    if (a(i, i) != 2) throw Unclassifiable("diagonal entry " + std::to_string(i + 1) + " is not 2");
    for (int j = i + 1; j < a.size(); ++j) {
      if ((a(i, j) == 0) != (a(j, i) == 0)) {
        throw Unclassifiable("a_ij = 0 but a_ji != 0 at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  std::vector<SimpleFactor> factors;
  for (const auto& comp : components(a)) {
    const std::string code = canonical_encoding(a, comp);
    const int n = static_cast<int>(comp.size());
    bool matched = false;
    for (const auto& cand : candidates(n)) {
      const LieCartanMatrix t = template_matrix(cand);
      Component all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      if (canonical_encoding(t, all) == code) {
        factors.push_back(cand);
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::string verts;
      for (int v : comp) verts += (verts.empty() ? "" : ",") + std::to_string(v + 1);
      throw Unclassifiable("component {" + verts + "} matches no finite type");
    }
  }
  return SemisimpleType(std::move(factors));
}

SemisimpleType classify(const LieCartanMatrix& a, std::size_t omega_size) {
  SemisimpleType t = classify(a);
  const auto expected = t.is_zero() ? 0 : t.positive_root_count();
  if (expected != static_cast<std::int64_t>(omega_size)) {
    throw Unclassifiable("type " + t.name() + " has " + std::to_string(expected) + " positive roots but |Omega_+| = " +
                         std::to_string(omega_size));
  }
  return t;
}

}  // namespace nichols
