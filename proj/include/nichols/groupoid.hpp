#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/lattice.hpp"

namespace nichols {

using ObjectId = int;

inline constexpr std::size_t kDefaultMaxObjects = 100000;
inline constexpr std::size_t kDefaultMaxRoots = 10000;

// The objects reachable from the input by the transforms rho_i, with the
// edge p -> rho_i(p) and the reflection s_i^p per (object, i).
//
// Objects are materialized on demand: edge(p, i) computes rho_i(p) the first
// time it is asked for, so an analysis only pays for the objects its words
// pass through. explore() forces the full closure. Accessors are internally
// synchronized and references to objects stay valid as the atlas grows.
class GroupoidAtlas {
 public:
  // Throws BoundExceeded if max_objects is 0.
  explicit GroupoidAtlas(const BraidingMatrix& q, std::size_t max_objects = kDefaultMaxObjects);
  GroupoidAtlas(GroupoidAtlas&&) noexcept = default;
  GroupoidAtlas& operator=(GroupoidAtlas&&) noexcept = default;

  std::size_t size() const;
  // True once every edge of every materialized object is known, that is, the
  // materialized objects are all of X.
  bool complete() const;
  int rank() const noexcept { return theta_; }
  std::size_t max_objects() const noexcept { return max_objects_; }

  const BraidingMatrix& object(ObjectId id) const;
  // Throws BoundExceeded when a new object would exceed max_objects.
  ObjectId edge(ObjectId id, int i) const;
  const IntMatrix& reflection(ObjectId id, int i) const;
  std::optional<ObjectId> find(const BraidingMatrix& q) const;

  // Letters of a path from object 0 to id along discovery edges:
  // id = rho_{l_k} ... rho_{l_1}(object 0) for the returned (l_1, ..., l_k).
  std::vector<int> path_from_root(ObjectId id) const;

  // s_{l_1}^{p_0} s_{l_2}^{p_1} ... s_{l_k}^{p_{k-1}} for a path of letters
  // starting at `start`, with p_0 = start and p_{t} = rho_{l_t}(p_{t-1}).
  IntMatrix path_product(ObjectId start, const std::vector<int>& letters) const;
  ObjectId walk(ObjectId start, const std::vector<int>& letters) const;

 private:
  ObjectId add_locked(BraidingMatrix m, ObjectId parent, int letter) const;

  int theta_ = 0;
  std::size_t max_objects_ = 0;
  std::unique_ptr<std::mutex> mutex_;
  mutable std::deque<BraidingMatrix> objects_;
  mutable std::deque<std::vector<ObjectId>> edges_;  // -1 while unknown
  mutable std::deque<std::vector<IntMatrix>> reflections_;
  mutable std::deque<std::pair<ObjectId, int>> parent_;  // (-1, -1) for the root
  mutable std::unordered_map<BraidingMatrix, ObjectId, BraidingHash> index_;
  mutable std::size_t known_edges_ = 0;
};

// Breadth-first closure of {q} under all rho_i, deduplicated by exact matrix
// equality. Throws BoundExceeded when more than max_objects are found, and
// ValidationError if some rho_i produces a vertex label 1.
GroupoidAtlas explore(const BraidingMatrix& q, std::size_t max_objects = kDefaultMaxObjects);

struct ReducedWord {
  std::vector<int> letters;  // i_1, ..., i_M (0-based)
  ObjectId start = 0;
};

// Greedy reduced expression of the longest element ending at `start`: with
// t = s_{i_1} ... s_{i_k}, append the smallest i (or first_letter at k = 0)
// such that t(alpha_i) >= 0, until no such i exists.
ReducedWord longest_word(const GroupoidAtlas& atlas, ObjectId start,
                         std::size_t max_length = kDefaultMaxRoots,
                         std::optional<int> first_letter = std::nullopt);

struct RootWitness {
  std::size_t prefix_length = 0;  // beta_j uses letters i_1 .. i_{j-1}
  int letter = 0;                 // i_j
  ObjectId object = 0;            // rho_{i_{j-1}} ... rho_{i_1}(start)
};

struct PositiveRoots {
  ReducedWord word;
  std::vector<RootVector> roots;  // beta_1, ..., beta_M
  std::vector<RootWitness> witnesses;

  std::size_t size() const noexcept { return roots.size(); }
  std::vector<int> prefix(std::size_t j) const {
    return {word.letters.begin(), word.letters.begin() + static_cast<std::ptrdiff_t>(witnesses[j].prefix_length)};
  }
};

// beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}). Throws InternalInconsistency
// if a root is negative or repeated, or a simple root is missing.
PositiveRoots positive_roots(const GroupoidAtlas& atlas, const ReducedWord& word);

}  // namespace nichols
