#include "nichols/braiding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nichols/errors.hpp"

namespace nichols {

bool DynkinDiagram::connected() const {
  const int n = rank();
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int components = n;
  for (const auto& [edge, label] : edges) {
    const int a = find(edge.first);
    const int b = find(edge.second);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

int cartan_entry(const UnityRoot& qii, const UnityRoot& qt) {
  // (n+1)_v = 0 iff v != 1 and v^{n+1} = 1, so the Serre branch first
  // qualifies at n = ord(q_ii) - 1 and the search is bounded by the order.
  const std::int64_t ord = qii.order();
  if (ord == 1) throw ValidationError("vertex label equal to 1");
  UnityRoot chain = qt;
  for (std::int64_t n = 0; n < ord - 1; ++n) {
    if (chain.is_one()) return static_cast<int>(-n);
    chain *= qii;
  }
  return static_cast<int>(-(ord - 1));
}

BraidingMatrix::BraidingMatrix(std::vector<std::vector<UnityRoot>> entries)
    : theta_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
  if (theta_ == 0) throw ValidationError("braiding matrix of rank 0");
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != theta_) throw ValidationError("braiding matrix is not square");
  }
  for (int i = 0; i < theta_; ++i) {
    if ((*this)(i, i).is_one()) {
      throw ValidationError("vertex " + std::to_string(i + 1) +
                            " has label 1; the Nichols algebra is infinite-dimensional");
    }
  }

  for (const auto& row : entries_) {
    for (const auto& u : row) denominator_ = checked_lcm(denominator_, u.den());
  }
  exponents_.reserve(static_cast<std::size_t>(theta_) * static_cast<std::size_t>(theta_));
  std::size_t h = static_cast<std::size_t>(theta_);
  for (const auto& row : entries_) {
    for (const auto& u : row) {
      exponents_.push_back(u.num() * (denominator_ / u.den()));
      h = h * 1000003u ^ std::hash<UnityRoot>{}(u);
    }
  }
  hash_ = h;

  diagram_.vertices.reserve(static_cast<std::size_t>(theta_));
  for (int i = 0; i < theta_; ++i) diagram_.vertices.push_back((*this)(i, i));
  cartan_.assign(static_cast<std::size_t>(theta_), std::vector<int>(static_cast<std::size_t>(theta_), 0));
  for (int i = 0; i < theta_; ++i) {
    for (int j = 0; j < theta_; ++j) {
      if (i == j) {
        cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 2;
        continue;
      }
      const UnityRoot qt = qtilde(i, j);
      cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cartan_entry((*this)(i, i), qt);
      if (i < j && !qt.is_one()) diagram_.edges.emplace(std::pair{i, j}, qt);
    }
  }
  cartan_vertex_.resize(static_cast<std::size_t>(theta_));
  for (int i = 0; i < theta_; ++i) {
    bool ok = true;
    for (int j = 0; j < theta_ && ok; ++j) {
      if (j == i) continue;
      ok = qtilde(i, j) == (*this)(i, i).pow(cartan(i, j));
    }
    cartan_vertex_[static_cast<std::size_t>(i)] = ok;
  }
}

BraidingMatrix BraidingMatrix::from_diagram(const std::vector<UnityRoot>& vertices,
                                            const std::map<std::pair<int, int>, UnityRoot>& edges) {
  const auto n = vertices.size();
  std::vector<std::vector<UnityRoot>> entries(n, std::vector<UnityRoot>(n));
  for (std::size_t i = 0; i < n; ++i) entries[i][i] = vertices[i];
  for (const auto& [key, label] : edges) {
    auto [i, j] = key;
    if (i == j || i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n) {
      throw ValidationError("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") out of range");
    }
    if (i > j) std::swap(i, j);
    entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = label;
  }
  return BraidingMatrix(std::move(entries));
}

UnityRoot bilinear_form(const BraidingMatrix& q, std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b) {
  const int n = q.rank();
  const std::int64_t d = q.common_denominator();
  __int128 acc = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t ai = a[static_cast<std::size_t>(i)] % d;
    if (ai == 0) continue;
    __int128 row = 0;
    for (int j = 0; j < n; ++j) {
      const std::int64_t bj = b[static_cast<std::size_t>(j)] % d;
      if (bj == 0) continue;
      row += static_cast<__int128>(mulmod(bj, q.exponent(i, j), d));
    }
    acc = (acc + static_cast<__int128>(ai) * (row % d)) % d;
  }
  return {static_cast<std::int64_t>(acc), d};
}

UnityRoot qtilde(const BraidingMatrix& q, int i, int j) { return q.qtilde(i, j); }

int cartan_entry(const BraidingMatrix& q, int i, int j) { return q.cartan(i, j); }

bool is_cartan_vertex(const BraidingMatrix& q, int i) { return q.is_cartan_vertex(i); }

IntMatrix reflection_matrix(const BraidingMatrix& q, int i) {
  IntMatrix s = IntMatrix::identity(q.rank());
  for (int j = 0; j < q.rank(); ++j) s(i, j) -= q.cartan(i, j);
  return s;
}

BraidingMatrix rho(const BraidingMatrix& q, int i) {
  const int n = q.rank();
  const IntMatrix s = reflection_matrix(q, i);
  std::vector<RootVector> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images.push_back(s.column(j));
  std::vector<std::vector<UnityRoot>> entries(static_cast<std::size_t>(n),
                                              std::vector<UnityRoot>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          bilinear_form(q, images[static_cast<std::size_t>(j)], images[static_cast<std::size_t>(k)]);
    }
  }
  return BraidingMatrix(std::move(entries));
}

Restriction restrict_to(const BraidingMatrix& q, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) throw ValidationError("restriction to an empty index set");
  for (int i : indices) {
    if (i < 0 || i >= q.rank()) throw ValidationError("restriction index out of range");
  }
  std::vector<std::vector<UnityRoot>> entries;
  entries.reserve(indices.size());
  for (int i : indices) {
    auto& row = entries.emplace_back();
    for (int j : indices) row.push_back(q(i, j));
  }
  return {BraidingMatrix(std::move(entries)), std::move(indices)};
}

}  // namespace nichols
