#pragma once

#include <random>
#include <string>
#include <vector>

#include "curvehom/homology.hpp"

namespace testing {

inline curvehom::RingPtr qxy() {
  static const curvehom::RingPtr r = curvehom::Ring::polynomial({"x", "y"});
  return r;
}

inline curvehom::Polynomial P(const std::string& text, const curvehom::RingPtr& ring = qxy()) {
  return curvehom::Polynomial::parse(ring, text);
}

inline curvehom::FreeElement V(std::initializer_list<const char*> coords, const curvehom::RingPtr& ring = qxy()) {
  std::vector<curvehom::Polynomial> c;
  for (const char* s : coords) c.push_back(P(s, ring));
  return curvehom::FreeElement(std::move(c));
}

/// Fixed-seed generator of small polynomials in x, y.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed = 20240611u) : rng_(seed) {}

  curvehom::Polynomial poly(unsigned max_degree, unsigned max_terms, const curvehom::RingPtr& ring = qxy()) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-3, 3);
    curvehom::Polynomial p(ring);
    const unsigned n = nterms(rng_);
    for (unsigned t = 0; t < n; ++t) {
      const unsigned d = deg(rng_);
      std::uniform_int_distribution<unsigned> split(0, d);
      const unsigned a = split(rng_);
      int c = coef(rng_);
      if (c == 0) c = 1;
      p += curvehom::Polynomial::monomial(ring, curvehom::Monomial{a, d - a}, c);
    }
    return p;
  }

  unsigned pick(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
