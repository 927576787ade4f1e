#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nichols/cyclotomic.hpp"
#include "nichols/lattice.hpp"

namespace nichols {

// Vertex labels q_ii and edge labels qt_ij = q_ij q_ji for qt_ij != 1.
struct DynkinDiagram {
  std::vector<UnityRoot> vertices;
  std::map<std::pair<int, int>, UnityRoot> edges;  // keys (i, j) with i < j

  int rank() const { return static_cast<int>(vertices.size()); }
  bool connected() const;
};

// Generalized Cartan matrix of a braiding: c_ii = 2, c_ij <= 0.
using CartanEntries = std::vector<std::vector<int>>;

// A braiding matrix of diagonal type whose entries are roots of unity.
//
// Construction validates q_ii != 1 and precomputes the diagram, the Cartan
// entries and the Cartan vertices, so instances are immutable and can be
// shared across threads. Entries are also stored as integer exponents over
// the common denominator of the matrix, which makes the bilinear form exact
// integer arithmetic modulo that denominator.
class BraidingMatrix {
 public:
  BraidingMatrix() = default;
  explicit BraidingMatrix(std::vector<std::vector<UnityRoot>> entries);

  // Completes q_ij := qt_ij and q_ji := 1 for i < j. Unlisted pairs are 1.
  static BraidingMatrix from_diagram(const std::vector<UnityRoot>& vertices,
                                     const std::map<std::pair<int, int>, UnityRoot>& edges);

  int rank() const noexcept { return theta_; }
  const UnityRoot& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<UnityRoot>>& entries() const noexcept { return entries_; }

  UnityRoot qtilde(int i, int j) const { return (*this)(i, j) * (*this)(j, i); }
  int cartan(int i, int j) const {
    return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const CartanEntries& cartan_entries() const noexcept { return cartan_; }
  bool is_cartan_vertex(int i) const { return cartan_vertex_[static_cast<std::size_t>(i)]; }
  const DynkinDiagram& diagram() const noexcept { return diagram_; }

  std::int64_t common_denominator() const noexcept { return denominator_; }
  // Exponent of q_ij over common_denominator().
  std::int64_t exponent(int i, int j) const {
    return exponents_[static_cast<std::size_t>(i) * static_cast<std::size_t>(theta_) +
                      static_cast<std::size_t>(j)];
  }

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const BraidingMatrix& a, const BraidingMatrix& b) {
    return a.hash_ == b.hash_ && a.entries_ == b.entries_;
  }

 private:
  int theta_ = 0;
  std::vector<std::vector<UnityRoot>> entries_;
  std::int64_t denominator_ = 1;
  std::vector<std::int64_t> exponents_;
  CartanEntries cartan_;
  std::vector<bool> cartan_vertex_;
  DynkinDiagram diagram_;
  std::size_t hash_ = 0;
};

struct BraidingHash {
  std::size_t operator()(const BraidingMatrix& q) const noexcept { return q.hash(); }
};

// q(a, b) = prod_{i,j} q_ij^{a_i b_j}.
UnityRoot bilinear_form(const BraidingMatrix& q, std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b);

UnityRoot qtilde(const BraidingMatrix& q, int i, int j);

// -min{n >= 0 : (n+1)_{q_ii} (1 - q_ii^n qt_ij) = 0}, i != j. Requires q_ii != 1.
int cartan_entry(const UnityRoot& qii, const UnityRoot& qtilde_ij);
int cartan_entry(const BraidingMatrix& q, int i, int j);

bool is_cartan_vertex(const BraidingMatrix& q, int i);

// Columns are s_i(alpha_j) = alpha_j - c_ij alpha_i.
IntMatrix reflection_matrix(const BraidingMatrix& q, int i);

// rho_i(q)_jk = q(s_i(alpha_j), s_i(alpha_k)). Throws ValidationError when the
// result has a diagonal entry equal to 1.
BraidingMatrix rho(const BraidingMatrix& q, int i);

struct Restriction {
  BraidingMatrix matrix;
  std::vector<int> index_map;  // restricted index -> original index
};

// Submatrix on the sorted index set J (0-based, nonempty).
Restriction restrict_to(const BraidingMatrix& q, std::vector<int> indices);

}  // namespace nichols

template <>
struct std::hash<nichols::BraidingMatrix> {
  std::size_t operator()(const nichols::BraidingMatrix& q) const noexcept { return q.hash(); }
};
