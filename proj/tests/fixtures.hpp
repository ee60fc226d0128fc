#pragma once

#include <random>
#include <string>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab::fixtures {

// Finite frame on a given lattice: meet multiplication, top unit, identity
// involution.
inline QPtr frame_on(LatPtr l) {
  const int n = l->size();
  std::vector<Idx> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<size_t>(a) * n + b] = l->meet(a, b);
  std::vector<Idx> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return validate_quantale(l, std::move(mult), l->top, id);
}

// x*y = y for x != bot: left-sided, semi-unital, idempotent on any lattice.
inline QPtr right_projection_on(LatPtr l) {
  const int n = l->size();
  std::vector<Idx> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mult[static_cast<size_t>(a) * n + b] = a == l->bottom ? l->bottom : b;
  return validate_quantale(l, std::move(mult));
}

// x*y = x for y != bot: the right-sided mirror.
inline QPtr left_projection_on(LatPtr l) {
  const int n = l->size();
  std::vector<Idx> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mult[static_cast<size_t>(a) * n + b] = b == l->bottom ? l->bottom : a;
  return validate_quantale(l, std::move(mult));
}

inline LatPtr diamond_lattice() {
  return validate_lattice({"bot", "u", "v", "top"},
                          {{"bot", "u"}, {"bot", "v"}, {"u", "top"}, {"v", "top"}});
}

inline QPtr diamond_frame() { return frame_on(diamond_lattice()); }

inline LatPtr chain_lattice(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> order;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) order.push_back({names[i], names[i + 1]});
  return validate_lattice(names, order);
}

inline bool is_distributive(const FiniteLattice& l) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      for (int c = 0; c < l.size(); ++c)
        if (l.meet(l.join(a, b), c) != l.join(l.meet(a, c), l.meet(b, c))) return false;
  return true;
}

// Random small lattices for generated-instance suites; retries until the
// closed relation validates.
inline LatPtr random_lattice(std::mt19937_64& rng, int max_elems) {
  for (;;) {
    int n = 2 + static_cast<int>(rng() % (max_elems - 1));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) rel[static_cast<size_t>(i) * n + j] = 1;
    for (int i = 1; i < n; ++i) rel[static_cast<size_t>(0) * n + i] = 1;
    for (int i = 0; i + 1 < n; ++i) rel[static_cast<size_t>(i) * n + n - 1] = 1;
    try {
      return validate_lattice_rel(std::move(names), std::move(rel));
    } catch (const qlab_error&) {
      continue;
    }
  }
}

}  // namespace qlab::fixtures
