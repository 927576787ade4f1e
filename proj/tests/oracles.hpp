#pragma once

#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nichols/errors.hpp"
#include "nichols/groupoid.hpp"

namespace oracles {

using nichols::RootVector;

inline std::complex<double> to_complex(const nichols::UnityRoot& u) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(u.num()) /
                             static_cast<double>(u.den()));
}

inline bool near_zero(std::complex<double> z) { return std::abs(z) < 1e-9; }

// c_ij = -min{m >= 0 : (m+1)_{q_ii} (1 - q_ii^m qt_ij) = 0}, by literal search
// over complex numbers.
inline int cartan_entry_brute_force(const nichols::BraidingMatrix& q, int i, int j) {
  if (i == j) return 2;
  const auto qii = to_complex(q(i, i));
  const auto qt = to_complex(q(i, j)) * to_complex(q(j, i));
  std::complex<double> power = 1.0, quantum = 0.0;
  for (int m = 0; m < 100000; ++m) {
    quantum += power;  // (m+1)_{q_ii}
    if (near_zero(quantum) || near_zero(1.0 - power * qt)) return -m;
    power *= qii;
  }
  return 1;
}

// Random matrices with labels != 1 and denominators up to 24.
inline std::vector<nichols::BraidingMatrix> random_matrices(std::size_t count, unsigned seed, std::int64_t max_den = 24) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  std::vector<nichols::BraidingMatrix> out;
  while (out.size() < count) {
    const int theta = 2 + static_cast<int>(out.size() % 2);
    std::vector<std::vector<nichols::UnityRoot>> e(static_cast<std::size_t>(theta));
    for (int i = 0; i < theta; ++i) {
      for (int j = 0; j < theta; ++j) {
        const auto d = den(rng);
        e[i].emplace_back(std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng), d);
      }
    }
    try {
      out.emplace_back(std::move(e));
    } catch (const nichols::ValidationError&) {
    }
  }
  return out;
}

inline const char* const kRank2Fixtures[] = {"cartanA2_N2", "cartanA2_N3", "cartanA2_N5", "cartanB2_N3",
                                             "cartanB2_N5", "cartanB2_N6", "cartanG2_N4", "cartanG2_N5",
                                             "cartanG2_N6", "a01"};

inline RootVector reflect(const nichols::BraidingMatrix& p, int i, const RootVector& v) {
  RootVector out = v;
  for (int j = 0; j < p.rank(); ++j) out[i] -= p.cartan(i, j) * v[j];
  return out;
}

inline bool cartan_vertex(const nichols::BraidingMatrix& p, int i) {
  for (int j = 0; j < p.rank(); ++j) {
    if (j != i && !(p(i, i).pow(p.cartan(i, j)) == p.qtilde(i, j))) return false;
  }
  return true;
}

// Roots and Cartan roots of every object as the smallest families with
// alpha_i in R_p (alpha_i in D_p when i is a Cartan vertex of p) that are
// closed under R_p <- s_i^p(R_{rho_i p}). Needs the whole atlas.
struct Closure {
  std::vector<std::set<RootVector>> roots;
  std::vector<std::set<RootVector>> cartan;
};

inline Closure reflection_closure(const nichols::GroupoidAtlas& atlas) {
  const int theta = atlas.rank();
  const std::size_t n = atlas.size();
  Closure c{std::vector<std::set<RootVector>>(n), std::vector<std::set<RootVector>>(n)};
  for (std::size_t p = 0; p < n; ++p) {
    const auto& q = atlas.object(static_cast<nichols::ObjectId>(p));
    for (int i = 0; i < theta; ++i) {
      RootVector a(static_cast<std::size_t>(theta), 0);
      a[i] = 1;
      c.roots[p].insert(a);
      if (cartan_vertex(q, i)) c.cartan[p].insert(a);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      const auto& q = atlas.object(static_cast<nichols::ObjectId>(p));
      for (int i = 0; i < theta; ++i) {
        const auto r = static_cast<std::size_t>(atlas.edge(static_cast<nichols::ObjectId>(p), i));
        for (auto* family : {&c.roots, &c.cartan}) {
          for (const auto& v : (*family)[r]) {
            changed |= (*family)[p].insert(reflect(q, i, v)).second;
            RootVector neg = v;
            for (auto& x : neg) x = -x;
            changed |= (*family)[p].insert(reflect(q, i, neg)).second;
          }
        }
      }
    }
  }
  return c;
}

inline std::set<RootVector> positive_part(const std::set<RootVector>& s) {
  std::set<RootVector> out;
  for (const auto& v : s) {
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; })) out.insert(v);
  }
  return out;
}

inline std::set<RootVector> scaled(const nichols::BraidingMatrix& q, const std::set<RootVector>& cartan_positive) {
  std::set<RootVector> out;
  for (const auto& b : cartan_positive) {
    const auto n = order(bilinear_form(q, b, b));
    RootVector v = b;
    for (auto& x : v) x *= n;
    out.insert(v);
  }
  return out;
}

// Type of a root system of rank at most 2 from its number of positive roots
// and the rank of its span.
inline std::string rank2_type(const std::set<RootVector>& omega_positive) {
  if (omega_positive.empty()) return "ZERO";
  bool collinear = true;
  const auto& a = *omega_positive.begin();
  for (const auto& b : omega_positive) collinear = collinear && a[0] * b[1] - a[1] * b[0] == 0;
  if (collinear) return omega_positive.size() == 1 ? "A1" : "?";
  switch (omega_positive.size()) {
    case 2: return "A1xA1";
    case 3: return "A2";
    case 4: return "B2";
    case 6: return "G2";
    default: return "?";
  }
}

}  // namespace oracles
