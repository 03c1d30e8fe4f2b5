#include <doctest.h>

#include "hsl/poset.hpp"

using namespace hsl;

namespace {

Poset chain(size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (size_t j = i; j < n; ++j) le[i][j] = true;
  }
  return Poset(labels, le);
}

Poset antichain(size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    labels.push_back("a" + std::to_string(i));
    le[i][i] = true;
  }
  return Poset(labels, le);
}

// Boolean lattice on k atoms, subsets ordered by inclusion.
Poset boolean_lattice(size_t k, const std::string& tag) {
  size_t n = size_t{1} << k;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    labels.push_back(tag + std::to_string(i));
    for (size_t j = 0; j < n; ++j) le[i][j] = (i & j) == i;
  }
  return Poset(labels, le);
}

}  // namespace

TEST_CASE("poset construction validates order axioms") {
  std::vector<std::vector<bool>> not_reflexive{{false}};
  CHECK_THROWS_AS(Poset({"x"}, not_reflexive), std::invalid_argument);
  std::vector<std::vector<bool>> not_antisym{{true, true}, {true, true}};
  CHECK_THROWS_AS(Poset({"x", "y"}, not_antisym), std::invalid_argument);
  std::vector<std::vector<bool>> not_transitive{
      {true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS_AS(Poset({"x", "y", "z"}, not_transitive),
                  std::invalid_argument);
}

TEST_CASE("isomorphism basics") {
  CHECK(poset_isomorphic(chain(3), chain(3)));
  CHECK_FALSE(poset_isomorphic(chain(3), antichain(3)));
  CHECK_FALSE(poset_isomorphic(chain(3), chain(4)));
  CHECK(poset_isomorphic(antichain(4), antichain(4)));
}

TEST_CASE("isomorphism ignores labels") {
  CHECK(poset_isomorphic(boolean_lattice(3, "p"), boolean_lattice(3, "q")));
}

TEST_CASE("near-isomorphic posets are distinguished") {
  // Boolean lattice minus a coatom vs minus the top: same sizes.
  auto drop = [](const Poset& p, size_t victim) {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> le;
    std::vector<size_t> keep;
    for (size_t i = 0; i < p.size(); ++i)
      if (i != victim) keep.push_back(i);
    for (size_t i : keep) {
      labels.push_back(p.labels()[i]);
      std::vector<bool> row;
      for (size_t j : keep) row.push_back(p.le(i, j));
      le.push_back(row);
    }
    return Poset(labels, le);
  };
  Poset cube = boolean_lattice(3, "b");
  Poset no_top = drop(cube, 7);
  Poset no_coatom = drop(cube, 3);
  CHECK_FALSE(poset_isomorphic(no_top, no_coatom));
  CHECK(poset_isomorphic(no_coatom, drop(cube, 5)));
}

TEST_CASE("desk-scale guard") {
  IsoOptions tiny;
  tiny.max_elements = 2;
  CHECK_THROWS_AS(poset_isomorphic(chain(3), chain(3), tiny),
                  DeskScaleExceededError);
}
