#include "gts/tensoralg.hpp"

#include <algorithm>

namespace gts {

std::size_t tensor_rank(std::size_t m, std::size_t n, std::size_t guardrail) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m != 0 && r > guardrail / m)
      throw GuardrailExceeded("tensor power of rank " + std::to_string(m) + " and degree " + std::to_string(n) +
                              " exceeds the size guardrail of " + std::to_string(guardrail));
    r *= m;
  }
  if (r > guardrail)
    throw GuardrailExceeded("tensor power exceeds the size guardrail of " + std::to_string(guardrail));
  return r;
}

std::size_t linear_index(const TensorIndex& idx, std::size_t m) {
  std::size_t lin = 0;
  for (std::size_t i : idx) {
    if (i >= m) throw std::out_of_range("tensor index entry beyond the rank");
    lin = lin * m + i;
  }
  return lin;
}

TensorIndex tensor_index(std::size_t linear, std::size_t m, std::size_t n) {
  TensorIndex idx(n);
  for (std::size_t k = n; k-- > 0;) {
    idx[k] = linear % m;
    linear /= m;
  }
  return idx;
}

std::vector<Permutation> symmetric_generators(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t l = 0; l + 1 < n; ++l) {
    Permutation p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = k;
    std::swap(p[l], p[l + 1]);
    gens.push_back(std::move(p));
  }
  return gens;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  Permutation c(a.size());
  for (std::size_t l = 0; l < b.size(); ++l) c[l] = a[b[l]];
  return c;
}

TensorIndex permute_index(const Permutation& sigma, const TensorIndex& idx) {
  if (sigma.size() != idx.size()) throw std::invalid_argument("permutation size does not match tensor degree");
  TensorIndex out(idx.size());
  for (std::size_t l = 0; l < idx.size(); ++l) out[sigma[l]] = idx[l];
  return out;
}

namespace {

void fill_indices(std::size_t pos, std::size_t left, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = static_cast<unsigned>(left);
    out.push_back(cur);
    return;
  }
  for (std::size_t v = left + 1; v-- > 0;) {
    cur[pos] = static_cast<unsigned>(v);
    fill_indices(pos + 1, left - v, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t m, std::size_t n) {
  if (m == 0) throw std::invalid_argument("multi-indices over a free module of rank 0");
  std::vector<MultiIndex> out;
  MultiIndex cur(m, 0);
  fill_indices(0, n, cur, out);
  return out;
}

TensorIndex sorted_index(const MultiIndex& nu) {
  TensorIndex idx;
  for (std::size_t i = 0; i < nu.size(); ++i) idx.insert(idx.end(), nu[i], i);
  return idx;
}

MultiIndex content(const TensorIndex& idx, std::size_t m) {
  MultiIndex nu(m, 0);
  for (std::size_t i : idx) ++nu.at(i);
  return nu;
}

std::vector<std::size_t> orbit_members(const MultiIndex& nu, std::size_t guardrail) {
  TensorIndex idx = sorted_index(nu);
  tensor_rank(nu.size(), idx.size(), guardrail);
  std::vector<std::size_t> out;
  do {
    out.push_back(linear_index(idx, nu.size()));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

OrbitBasis::OrbitBasis(std::size_t m, std::size_t n) : m_(m), n_(n), indices_(multi_indices(m, n)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) lookup_.emplace(indices_[k], k);
}

std::size_t OrbitBasis::position(const MultiIndex& nu) const {
  auto it = lookup_.find(nu);
  if (it == lookup_.end()) throw std::out_of_range("multi-index " + multi_index_name(nu) + " not in the basis");
  return it->second;
}

std::string tensor_name(const TensorIndex& idx, const std::string& prefix) {
  if (idx.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "⊗" : "") + prefix + std::to_string(idx[k] + 1);
  return s;
}

std::string multi_index_name(const MultiIndex& nu) {
  std::string s = "e(";
  for (std::size_t i = 0; i < nu.size(); ++i) s += (i ? "," : "") + std::to_string(nu[i]);
  return s + ")";
}

}  // namespace gts
