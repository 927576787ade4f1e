#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "nichols/errors.hpp"
#include "nichols/groupoid.hpp"
#include "support.hpp"

using nichols::GroupoidAtlas;
using nichols::RootVector;

namespace {

// Depth-first closure with letters tried from the highest index down; shares
// nothing with the atlas except rho.
std::size_t dfs_object_count(const nichols::BraidingMatrix& q) {
  std::set<std::vector<std::vector<nichols::UnityRoot>>> seen{q.entries()};
  std::vector<nichols::BraidingMatrix> stack{q};
  while (!stack.empty()) {
    const auto p = stack.back();
    stack.pop_back();
    for (int i = p.rank() - 1; i >= 0; --i) {
      auto next = rho(p, i);
      if (seen.insert(next.entries()).second) stack.push_back(std::move(next));
    }
  }
  return seen.size();
}

std::set<RootVector> root_set(const GroupoidAtlas& atlas, nichols::ObjectId start, std::optional<int> first = {}) {
  const auto roots = positive_roots(atlas, longest_word(atlas, start, nichols::kDefaultMaxRoots, first));
  return test_support::as_set(roots.roots);
}

const std::vector<std::string> kSmall = {"cartanA2_N3", "cartanB3_N6", "cartanG2_N5", "superB4_k2_N5",
                                         "superB3_k2_N6", "ufo3", "a01", "g26"};

}  // namespace

TEST_CASE("rank 1 and A2") {
  const auto rank1 = test_support::matrix_of({{"1/3"}});
  const GroupoidAtlas one(rank1);
  CHECK(root_set(one, 0) == std::set<RootVector>{{1}});

  const GroupoidAtlas a2(test_support::load("cartanA2_N3").matrix);
  const auto word = longest_word(a2, 0);
  CHECK(word.letters.size() == 3);
  const auto roots = positive_roots(a2, word);
  CHECK(roots.roots == std::vector<RootVector>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(roots.prefix(2) == std::vector<int>{0, 1});
}

TEST_CASE("symmetric Cartan type has a single object") {
  const auto q = test_support::symmetric_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {2, 2, 1}, 5);
  const auto atlas = nichols::explore(q);
  CHECK(atlas.size() == 1);
  CHECK(atlas.complete());
}

TEST_CASE("bounds") {
  const auto q = test_support::load("ufo3").matrix;
  CHECK_THROWS_AS(nichols::explore(q, 0), nichols::BoundExceeded);
  CHECK_THROWS_AS(nichols::explore(q, 5), nichols::BoundExceeded);
  const GroupoidAtlas a2(test_support::load("cartanA2_N3").matrix);
  CHECK_THROWS_AS(longest_word(a2, 0, 1), nichols::BoundExceeded);
  CHECK_THROWS_AS(longest_word(a2, 0, 2), nichols::BoundExceeded);
  CHECK(longest_word(a2, 0, 3).letters.size() == 3);
}

TEST_CASE("ufo(3) atlas and roots") {
  const auto q = test_support::load("ufo3").matrix;
  const auto atlas = nichols::explore(q);
  CHECK(atlas.object(0) == q);
  CHECK(atlas.size() == 60);
  CHECK(atlas.size() == dfs_object_count(q));
  const auto roots = root_set(atlas, 0);
  CHECK(roots.size() == 10);
  for (const RootVector& r : {RootVector{0, 0, 1}, RootVector{1, 3, 1}, RootVector{1, 3, 2}}) CHECK(roots.contains(r));
}

TEST_CASE("two traversal orders agree on the object count") {
  for (const auto& name : kSmall) {
    CAPTURE(name);
    const auto q = test_support::load(name).matrix;
    CHECK(nichols::explore(q).size() == dfs_object_count(q));
  }
}

TEST_CASE("regression values for the number of positive roots") {
  const std::map<std::string, std::size_t> expected{{"g26", 25}, {"ufo2", 63}, {"ufo3", 10},
                                                    {"a01", 3},  {"cartanB3_N5", 9}};
  for (const auto& [name, m] : expected) {
    CAPTURE(name);
    const GroupoidAtlas atlas(test_support::load(name).matrix);
    for (int first = 0; first < atlas.rank(); ++first) {
      CHECK(longest_word(atlas, 0, nichols::kDefaultMaxRoots, first).letters.size() == m);
    }
  }
}

TEST_CASE("word independence of the root set") {
  for (const auto& name : test_support::fixture_names()) {
    CAPTURE(name);
    const GroupoidAtlas atlas(test_support::load(name).matrix);
    const auto base = root_set(atlas, 0);
    for (int first = 0; first < atlas.rank(); ++first) CHECK(root_set(atlas, 0, first) == base);
  }
}

TEST_CASE("atlas edges are involutive and neighbours have equally many roots") {
  for (const auto& name : kSmall) {
    CAPTURE(name);
    const auto atlas = nichols::explore(test_support::load(name).matrix);
    const auto m = root_set(atlas, 0).size();
    for (std::size_t id = 0; id < atlas.size(); ++id) {
      const auto o = static_cast<nichols::ObjectId>(id);
      for (int i = 0; i < atlas.rank(); ++i) {
        REQUIRE(atlas.edge(atlas.edge(o, i), i) == o);
        REQUIRE(atlas.reflection(atlas.edge(o, i), i) == atlas.reflection(o, i));
      }
      REQUIRE(longest_word(atlas, o).letters.size() == m);
    }
    for (std::size_t id = 0; id < atlas.size(); id += 37) {
      const auto o = static_cast<nichols::ObjectId>(id);
      CHECK(atlas.walk(0, atlas.path_from_root(o)) == o);
    }
  }
}

TEST_CASE("lazy atlas materializes only what it visits") {
  const GroupoidAtlas atlas(test_support::load("ufo2").matrix);
  CHECK(atlas.size() == 1);
  CHECK_FALSE(atlas.complete());
  const auto roots = root_set(atlas, 0);
  CHECK(roots.size() == 63);
  CHECK(atlas.size() < 200);
  CHECK_FALSE(atlas.complete());
  const auto full = nichols::explore(test_support::load("ufo3").matrix);
  CHECK(full.complete());
}

TEST_CASE("restriction to two vertices") {
  for (const auto& name : test_support::fixture_names()) {
    CAPTURE(name);
    const auto q = test_support::load(name).matrix;
    const GroupoidAtlas atlas(q);
    const auto roots = root_set(atlas, 0);
    for (int i = 0; i < q.rank(); ++i) {
      for (int j = i + 1; j < q.rank(); ++j) {
        const auto r = restrict_to(q, {i, j});
        const GroupoidAtlas sub(r.matrix);
        std::set<RootVector> lifted;
        for (const auto& v : root_set(sub, 0)) {
          RootVector w(static_cast<std::size_t>(q.rank()), 0);
          w[i] = v[0];
          w[j] = v[1];
          lifted.insert(w);
        }
        std::set<RootVector> inside;
        for (const auto& v : roots) {
          const auto s = nichols::support(v);
          if (std::all_of(s.begin(), s.end(), [&](int k) { return k == i || k == j; })) inside.insert(v);
        }
        CHECK(lifted == inside);
      }
    }
  }
}

TEST_CASE("a non-reduced word is rejected") {
  const GroupoidAtlas a2(test_support::load("cartanA2_N3").matrix);
  CHECK_THROWS_AS(positive_roots(a2, {{0, 0}, 0}), nichols::InternalInconsistency);
  CHECK_THROWS_AS(positive_roots(a2, {{0}, 0}), nichols::InternalInconsistency);
}

TEST_CASE("coordinates that outgrow 64 bits end the word with a bound error") {
  const auto q = test_support::matrix_of({{"1/3", "3/4"}, {"1/3", "16/19"}});
  const GroupoidAtlas atlas(q);
  try {
    longest_word(atlas, 0);
    FAIL("no error");
  } catch (const nichols::BoundExceeded& e) {
    CHECK(std::string(e.what()).find("overflow") != std::string::npos);
  }
}
