#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gts/modgb.hpp"

namespace gts {

/// (i_1..i_n) with 0-based entries; identifies e_{i_1} ⊗ ... ⊗ e_{i_n}.
using TensorIndex = std::vector<std::size_t>;
/// ν = (ν_1..ν_m).
using MultiIndex = std::vector<unsigned>;
/// perm[l] = σ(l), 0-based.
using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultGuardrail = 100000;

class GuardrailExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// m^n, refusing anything beyond `guardrail`.
std::size_t tensor_rank(std::size_t m, std::size_t n, std::size_t guardrail = kDefaultGuardrail);

/// Row-major: Σ i_k m^(n-k) with 0-based entries.
std::size_t linear_index(const TensorIndex& idx, std::size_t m);
TensorIndex tensor_index(std::size_t linear, std::size_t m, std::size_t n);

/// Adjacent transpositions (l, l+1), l = 0..n-2.
std::vector<Permutation> symmetric_generators(std::size_t n);
/// (a ∘ b)(l) = a(b(l)).
Permutation compose(const Permutation& a, const Permutation& b);
/// Index of σ(e_{i_1} ⊗ ... ⊗ e_{i_n}): the factor in slot l moves to slot σ(l).
TensorIndex permute_index(const Permutation& sigma, const TensorIndex& idx);

/// All ν with |ν| = n, lexicographically descending: (n,0,..), (n-1,1,..), ..., (..,0,n).
std::vector<MultiIndex> multi_indices(std::size_t m, std::size_t n);
/// Sorted tensor index of the orbit of ν, e.g. (2,1) -> (0,0,1).
TensorIndex sorted_index(const MultiIndex& nu);
/// Multiplicities of the entries of a tensor index.
MultiIndex content(const TensorIndex& idx, std::size_t m);
/// Every distinct arrangement of the orbit of ν, as linear indices.
std::vector<std::size_t> orbit_members(const MultiIndex& nu, std::size_t guardrail = kDefaultGuardrail);

/// Position lookup for multi_indices(m, n).
class OrbitBasis {
 public:
  OrbitBasis(std::size_t m, std::size_t n);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return indices_.size(); }
  const MultiIndex& operator[](std::size_t k) const { return indices_[k]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  std::size_t position(const MultiIndex& nu) const;

 private:
  std::size_t m_, n_;
  std::vector<MultiIndex> indices_;
  std::map<MultiIndex, std::size_t> lookup_;
};

/// `e1⊗e1⊗e2`-style name of a basis tensor, 1-based.
std::string tensor_name(const TensorIndex& idx, const std::string& prefix = "e");
/// `e(2,1)`.
std::string multi_index_name(const MultiIndex& nu);

template <CoefficientField F>
ModElement<F> sigma_action(const Permutation& sigma, const ModElement<F>& v, std::size_t m) {
  std::size_t n = sigma.size();
  if (v.rank() != tensor_rank(m, n, static_cast<std::size_t>(-1)))
    throw std::invalid_argument("sigma_action: vector rank is not m^n");
  ModElement<F> out(v.ring(), v.rank());
  for (std::size_t lin = 0; lin < v.rank(); ++lin)
    if (!v[lin].is_zero()) out[linear_index(permute_index(sigma, tensor_index(lin, m, n)), m)] = v[lin];
  return out;
}

/// a ⊗ b for a in T^k(F), b in T^l(F).
template <CoefficientField F>
ModElement<F> tensor_product(const ModElement<F>& a, const ModElement<F>& b) {
  ModElement<F> out(a.ring(), a.rank() * b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rank(); ++j)
      if (!b[j].is_zero()) out[i * b.rank() + j] = a[i] * b[j];
  }
  return out;
}

/// x^{⊗s} in T^s(F); s = 0 gives the unit of T^0(F) = A.
template <CoefficientField F>
ModElement<F> tensor_power(const ModElement<F>& x, std::size_t s, std::size_t guardrail = kDefaultGuardrail) {
  tensor_rank(x.rank(), s, guardrail);
  ModElement<F> out = ModElement<F>::unit(x.ring(), 1, 0);
  for (std::size_t k = 0; k < s; ++k) out = tensor_product(out, x);
  return out;
}

/// e_{rest_1} ⊗ .. ⊗ x ⊗ .. ⊗ e_{rest_{n-1}} with x in slot `slot` of T^n(F).
template <CoefficientField F>
ModElement<F> insert_factor(const ModElement<F>& x, std::size_t slot, const TensorIndex& rest) {
  std::size_t m = x.rank(), n = rest.size() + 1;
  if (slot >= n) throw std::out_of_range("insert_factor: slot beyond tensor degree");
  ModElement<F> out(x.ring(), tensor_rank(m, n, static_cast<std::size_t>(-1)));
  TensorIndex idx(n);
  for (std::size_t l = 0, r = 0; l < n; ++l)
    if (l != slot) idx[l] = rest[r++];
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i].is_zero()) continue;
    idx[slot] = i;
    out[linear_index(idx, m)] = x[i];
  }
  return out;
}

/// Element of TS^n(F) in orbit coordinates, ordered as multi_indices(m, n).
template <CoefficientField F>
struct OrbitTensor {
  std::size_t m = 0, n = 0;
  std::vector<Polynomial<F>> coords;

  static OrbitTensor zero(const RingPtr<F>& ring, std::size_t m, std::size_t n) {
    std::size_t size = OrbitBasis(m, n).size();
    return OrbitTensor{m, n, std::vector<Polynomial<F>>(size, Polynomial<F>(ring))};
  }
  static OrbitTensor basis_element(const RingPtr<F>& ring, const OrbitBasis& basis, std::size_t k) {
    auto z = zero(ring, basis.m(), basis.n());
    z.coords.at(k) = Polynomial<F>::constant(ring, ring->field().one());
    return z;
  }

  const RingPtr<F>& ring() const { return coords.front().ring(); }
  ModElement<F> as_element() const { return ModElement<F>(ring(), coords); }

  /// Orbit-sum embedding into T^n(F).
  ModElement<F> embed(std::size_t guardrail = kDefaultGuardrail) const {
    ModElement<F> out(ring(), tensor_rank(m, n, guardrail));
    OrbitBasis basis(m, n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (coords[k].is_zero()) continue;
      for (std::size_t lin : orbit_members(basis[k], guardrail)) out[lin] = coords[k];
    }
    return out;
  }

  OrbitTensor operator+(const OrbitTensor& o) const {
    check(o);
    OrbitTensor r = *this;
    for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
    return r;
  }
  OrbitTensor scaled(const Polynomial<F>& a) const {
    OrbitTensor r = *this;
    for (auto& c : r.coords) c = c * a;
    return r;
  }
  bool operator==(const OrbitTensor& o) const { return m == o.m && n == o.n && coords == o.coords; }

 private:
  void check(const OrbitTensor& o) const {
    if (m != o.m || n != o.n) throw std::invalid_argument("orbit tensors of different shapes");
  }
};

/// Orbit coordinates of a symmetric tensor: the coefficient at each sorted index.
template <CoefficientField F>
OrbitTensor<F> orbit_coordinates(const ModElement<F>& v, std::size_t m, std::size_t n) {
  OrbitBasis basis(m, n);
  auto z = OrbitTensor<F>::zero(v.ring(), m, n);
  for (std::size_t k = 0; k < basis.size(); ++k) z.coords[k] = v[linear_index(sorted_index(basis[k]), m)];
  return z;
}

/// e_ν × e_μ = Π_i C(ν_i + μ_i, ν_i) e_{ν+μ}, extended bilinearly.
template <CoefficientField F>
OrbitTensor<F> shuffle(const OrbitTensor<F>& a, const OrbitTensor<F>& b) {
  if (a.m != b.m) throw std::invalid_argument("shuffle of tensors over free modules of different rank");
  const RingPtr<F>& ring = a.ring();
  const F& f = ring->field();
  OrbitBasis ba(a.m, a.n), bb(b.m, b.n), bc(a.m, a.n + b.n);
  auto out = OrbitTensor<F>::zero(ring, a.m, a.n + b.n);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coords[j].is_zero()) continue;
      MultiIndex sum(a.m);
      auto c = f.one();
      for (std::size_t t = 0; t < a.m; ++t) {
        sum[t] = ba[i][t] + bb[j][t];
        c = f.mul(c, binomial_in_field(sum[t], ba[i][t], f));
      }
      if (f.is_zero(c)) continue;
      out.coords[bc.position(sum)] += (a.coords[i] * b.coords[j]).scaled(c);
    }
  }
  return out;
}

/// Σ over (k,l)-shuffles σ of σ(a ⊗ b), for a in T^k(F), b in T^l(F).
template <CoefficientField F>
ModElement<F> shuffle_by_enumeration(const ModElement<F>& a, std::size_t k, const ModElement<F>& b, std::size_t l,
                                     std::size_t m) {
  auto ab = tensor_product(a, b);
  ModElement<F> out(a.ring(), ab.rank());
  std::vector<char> choose(k + l, 0);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), 1);
  std::sort(choose.begin(), choose.end());
  do {
    // the slots marked 1 receive the factors of a in order, the rest those of b
    Permutation sigma(k + l);
    std::size_t ia = 0, ib = k;
    for (std::size_t s = 0; s < k + l; ++s) sigma[choose[s] ? ia++ : ib++] = s;
    out += sigma_action(sigma, ab, m);
  } while (std::next_permutation(choose.begin(), choose.end()));
  return out;
}

/// γ^s(Σ a_i e_i) = Σ_{|ν|=s} Π a_i^{ν_i} e_ν.
template <CoefficientField F>
OrbitTensor<F> gamma_expand(const ModElement<F>& x, std::size_t s) {
  std::size_t m = x.rank();
  OrbitBasis basis(m, s);
  auto out = OrbitTensor<F>::zero(x.ring(), m, s);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto c = Polynomial<F>::constant(x.ring(), x.ring()->field().one());
    for (std::size_t i = 0; i < m && !c.is_zero(); ++i)
      if (basis[k][i]) c = c * x[i].pow(basis[k][i]);
    out.coords[k] = c;
  }
  return out;
}

}  // namespace gts
