#include "nichols/groupoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nichols/errors.hpp"

namespace nichols {

GroupoidAtlas::GroupoidAtlas(const BraidingMatrix& q, std::size_t max_objects)
    : theta_(q.rank()), max_objects_(max_objects), mutex_(std::make_unique<std::mutex>()) {
  if (max_objects == 0) throw BoundExceeded("groupoid exploration", max_objects);
  add_locked(q, -1, -1);
}

ObjectId GroupoidAtlas::add_locked(BraidingMatrix m, ObjectId parent, int letter) const {
  if (objects_.size() >= max_objects_) {
    throw BoundExceeded("groupoid has too many objects; the input is probably not of finite type", max_objects_);
  }
  const auto id = static_cast<ObjectId>(objects_.size());
  std::vector<IntMatrix> reflections;
  reflections.reserve(static_cast<std::size_t>(theta_));
  for (int i = 0; i < theta_; ++i) reflections.push_back(reflection_matrix(m, i));
  index_.emplace(m, id);
  objects_.push_back(std::move(m));
  edges_.emplace_back(static_cast<std::size_t>(theta_), -1);
  reflections_.push_back(std::move(reflections));
  parent_.emplace_back(parent, letter);
  return id;
}

std::size_t GroupoidAtlas::size() const {
  std::lock_guard lock(*mutex_);
  return objects_.size();
}

bool GroupoidAtlas::complete() const {
  std::lock_guard lock(*mutex_);
  return known_edges_ == objects_.size() * static_cast<std::size_t>(theta_);
}

const BraidingMatrix& GroupoidAtlas::object(ObjectId id) const {
  std::lock_guard lock(*mutex_);
  return objects_.at(static_cast<std::size_t>(id));
}

const IntMatrix& GroupoidAtlas::reflection(ObjectId id, int i) const {
  std::lock_guard lock(*mutex_);
  return reflections_.at(static_cast<std::size_t>(id)).at(static_cast<std::size_t>(i));
}

ObjectId GroupoidAtlas::edge(ObjectId id, int i) const {
  std::lock_guard lock(*mutex_);
  auto& slot = edges_.at(static_cast<std::size_t>(id)).at(static_cast<std::size_t>(i));
  if (slot >= 0) return slot;
  BraidingMatrix next = rho(objects_[static_cast<std::size_t>(id)], i);
  ObjectId target;
  if (auto it = index_.find(next); it != index_.end()) {
    target = it->second;
  } else {
    target = add_locked(std::move(next), id, i);
  }
  // rho_i is an involution, so the reverse edge is known as well.
  auto& back = edges_[static_cast<std::size_t>(target)][static_cast<std::size_t>(i)];
  slot = target;
  ++known_edges_;
  if (back < 0) {
    back = id;
    ++known_edges_;
  } else if (back != id) {
    throw InternalInconsistency("rho_" + std::to_string(i + 1) + " is not an involution on the atlas");
  }
  return target;
}

std::optional<ObjectId> GroupoidAtlas::find(const BraidingMatrix& q) const {
  std::lock_guard lock(*mutex_);
  if (auto it = index_.find(q); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<int> GroupoidAtlas::path_from_root(ObjectId id) const {
  std::lock_guard lock(*mutex_);
  std::vector<int> letters;
  while (parent_.at(static_cast<std::size_t>(id)).first >= 0) {
    const auto [p, letter] = parent_[static_cast<std::size_t>(id)];
    letters.push_back(letter);
    id = p;
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

IntMatrix GroupoidAtlas::path_product(ObjectId start, const std::vector<int>& letters) const {
  IntMatrix t = IntMatrix::identity(rank());
  ObjectId at = start;
  for (int letter : letters) {
    t = t * reflection(at, letter);
    at = edge(at, letter);
  }
  return t;
}

ObjectId GroupoidAtlas::walk(ObjectId start, const std::vector<int>& letters) const {
  for (int letter : letters) start = edge(start, letter);
  return start;
}

GroupoidAtlas explore(const BraidingMatrix& q, std::size_t max_objects) {
  GroupoidAtlas atlas(q, max_objects);
  // Ids are assigned in discovery order, so scanning them in order is BFS.
  for (std::size_t id = 0; id < atlas.size(); ++id) {
    for (int i = 0; i < atlas.rank(); ++i) atlas.edge(static_cast<ObjectId>(id), i);
  }
  return atlas;
}

ReducedWord longest_word(const GroupoidAtlas& atlas, ObjectId start, std::size_t max_length,
                         std::optional<int> first_letter) {
  const int theta = atlas.rank();
  if (first_letter && (*first_letter < 0 || *first_letter >= theta)) {
    throw ValidationError("first letter out of range");
  }
  ReducedWord word{{}, start};
  IntMatrix t = IntMatrix::identity(theta);
  ObjectId at = start;
  for (;;) {
    int next = -1;
    if (word.letters.empty() && first_letter) {
      next = *first_letter;
    } else {
      for (int i = 0; i < theta && next < 0; ++i) {
        if (is_nonnegative(t.column(i))) next = i;
      }
    }
    if (next < 0) break;
    if (word.letters.size() >= max_length) {
      throw BoundExceeded("longest word is too long; the root system is probably infinite", max_length);
    }
    word.letters.push_back(next);
    try {
      t = t * atlas.reflection(at, next);
    } catch (const std::overflow_error&) {
      throw BoundExceeded("root coordinates overflow after " + std::to_string(word.letters.size()) +
                              " letters; the root system is probably infinite",
                          max_length);
    }
    at = atlas.edge(at, next);
  }
  return word;
}

PositiveRoots positive_roots(const GroupoidAtlas& atlas, const ReducedWord& word) {
  const int theta = atlas.rank();
  PositiveRoots out;
  out.word = word;
  out.roots.reserve(word.letters.size());
  out.witnesses.reserve(word.letters.size());
  IntMatrix t = IntMatrix::identity(theta);
  ObjectId at = word.start;
  std::set<RootVector> seen;
  for (std::size_t j = 0; j < word.letters.size(); ++j) {
    const int letter = word.letters[j];
    RootVector beta = t.column(letter);
    if (!is_nonnegative(beta) || is_zero(beta)) {
      throw InternalInconsistency("word is not reduced: root " + format_vector(beta) + " at position " +
                                  std::to_string(j + 1) + " is not positive");
    }
    if (!seen.insert(beta).second) {
      throw InternalInconsistency("word is not reduced: root " + format_vector(beta) + " repeats");
    }
    out.roots.push_back(std::move(beta));
    out.witnesses.push_back({j, letter, at});
    t = t * atlas.reflection(at, letter);
    at = atlas.edge(at, letter);
  }
  for (int i = 0; i < theta; ++i) {
    if (!seen.contains(unit_vector(theta, i))) {
      throw InternalInconsistency("simple root alpha_" + std::to_string(i + 1) +
                                  " missing from the positive roots");
    }
  }
  return out;
}

}  // namespace nichols
