#pragma once

#include <random>
#include <string>
#include <vector>

#include "gts/expr.hpp"
#include "gts/modgb.hpp"

namespace gts::testing {

using PF = PrimeField;
using QF = RationalField;

template <CoefficientField F>
Polynomial<F> P(const RingPtr<F>& R, const std::string& text) {
  return parse_polynomial(R, text);
}

template <CoefficientField F>
ModElement<F> V(const RingPtr<F>& R, std::initializer_list<const char*> coords) {
  std::vector<Polynomial<F>> c;
  for (const char* s : coords) c.push_back(P(R, s));
  return ModElement<F>(R, std::move(c));
}

template <CoefficientField F>
typename F::Elem random_coef(const F& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  return f.from_int(d(rng));
}

/// Random polynomial with up to `terms` terms of total degree <= max_deg.
template <CoefficientField F>
Polynomial<F> random_poly(const RingPtr<F>& R, std::mt19937& rng, int terms = 4, unsigned max_deg = 3) {
  std::uniform_int_distribution<int> nterms(0, terms);
  std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::vector<typename Polynomial<F>::Term> ts;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    unsigned d = deg(rng);
    for (unsigned j = 0; j < d; ++j) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    ts.emplace_back(m, random_coef(R->field(), rng));
  }
  return Polynomial<F>::from_terms(R, std::move(ts));
}

template <CoefficientField F>
ModElement<F> random_element(const RingPtr<F>& R, std::size_t rank, std::mt19937& rng, int terms = 3,
                             unsigned max_deg = 2) {
  ModElement<F> v(R, rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = random_poly(R, rng, terms, max_deg);
  return v;
}

}  // namespace gts::testing
