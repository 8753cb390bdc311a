#include "gts/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace gts {

std::string degree_to_string(const std::vector<long>& d) {
  if (d.size() == 1) return std::to_string(d[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

namespace {

using Key = std::vector<long>;

Key add(Key a, const Key& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Key sub(Key a, const Key& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

void check_grading(const Grading& g, std::size_t nvars) {
  if (g.weights.size() != nvars)
    throw std::invalid_argument("grading gives weights for " + std::to_string(g.weights.size()) + " of " +
                                std::to_string(nvars) + " variables");
  for (const auto& w : g.weights) {
    if (w.size() != g.rank()) throw std::invalid_argument("grading weights of different lengths");
    if (w.empty() || w[0] < 1) throw std::invalid_argument("the first grading coordinate must be positive on every variable");
  }
}

/// Every monomial whose first-coordinate degree is at most `bound`.
std::vector<Monomial> monomials_up_to(const Grading& g, std::size_t nvars, long bound) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t v, long left) {
    if (v == nvars) {
      out.push_back(cur);
      return;
    }
    long w = g.weights[v][0];
    for (unsigned e = 0; static_cast<long>(e) * w <= left; ++e) {
      cur.set(v, e);
      rec(v + 1, left - static_cast<long>(e) * w);
    }
    cur.set(v, 0);
  };
  if (bound >= 0) rec(0, bound);
  return out;
}

template <CoefficientField F>
Key homogeneous_degree(const Polynomial<F>& p, const Grading& g, const std::string& what) {
  auto md = multidegree(p, g);
  if (md.kind == Multidegree::Kind::Inhomogeneous) throw InhomogeneousInput(what + " " + p.to_string() + " is not homogeneous");
  return md.degree;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

/// Integer basis of the weight vectors (on variables, then generators) under which the ideal
/// generators and the relations are homogeneous.
template <CoefficientField F>
std::vector<std::vector<long>> finest_weights(const PresentedModule<F>& M) {
  std::size_t nv = M.base()->nvars(), m = M.rank, width = nv + m;
  RationalField Q;
  std::vector<std::vector<long>> diffs;
  auto exps = [&](const Monomial& a, std::size_t pos, bool with_pos) {
    std::vector<long> v(width, 0);
    for (std::size_t i = 0; i < nv; ++i) v[i] = a[i];
    if (with_pos) v[nv + pos] = 1;
    return v;
  };
  for (const auto& f : M.ring->ideal_generators()) {
    const auto& ts = f.terms();
    for (std::size_t k = 1; k < ts.size(); ++k) {
      auto a = exps(ts[k].first, 0, false), b = exps(ts[0].first, 0, false);
      for (std::size_t i = 0; i < width; ++i) a[i] -= b[i];
      diffs.push_back(a);
    }
  }
  for (const auto& p : M.relations) {
    std::optional<std::vector<long>> first;
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& t : p[i].terms()) {
        auto a = exps(t.first, i, true);
        if (!first) {
          first = a;
          continue;
        }
        for (std::size_t j = 0; j < width; ++j) a[j] -= (*first)[j];
        diffs.push_back(a);
      }
  }
  DenseMatrix<RationalField> D(Q, diffs.size(), width);
  for (std::size_t r = 0; r < diffs.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) D(r, c) = mpq_class(diffs[r][c]);
  std::vector<std::vector<long>> out;
  for (auto& v : nullspace(Q, D)) {
    long den = 1;
    for (auto& x : v) {
      x.canonicalize();
      den = lcm_long(den, x.get_den().get_si());
    }
    std::vector<long> w(width);
    long g = 0;
    for (std::size_t i = 0; i < width; ++i) {
      mpq_class s = v[i] * den;
      w[i] = s.get_num().get_si();
      g = std::gcd(g, std::labs(w[i]));
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    out.push_back(std::move(w));
  }
  return out;
}

struct TermKey {
  Monomial mono;
  std::size_t index;
  bool operator==(const TermKey& o) const { return index == o.index && mono == o.mono; }
};

struct TermKeyHash {
  std::size_t operator()(const TermKey& k) const { return k.mono.hash() * 31 + k.index; }
};

/// A homogeneous vector over R in some free module, given by its terms.
template <CoefficientField F>
struct HomGen {
  Key key;
  std::vector<std::tuple<Monomial, std::size_t, typename F::Elem>> terms;
};

/// Basis of one graded piece of a free R-module: monomial times basis vector.
struct Piece {
  std::vector<TermKey> elems;
  std::unordered_map<TermKey, std::size_t, TermKeyHash> column;

  void add(const Monomial& mono, std::size_t index) {
    TermKey k{mono, index};
    if (column.emplace(k, elems.size()).second) elems.push_back(k);
  }
  std::size_t at(const Monomial& mono, std::size_t index) const {
    auto it = column.find(TermKey{mono, index});
    if (it == column.end()) throw InternalError("graded piece is missing a term of a homogeneous element");
    return it->second;
  }
};

}  // namespace

template <CoefficientField F>
std::vector<std::vector<long>> infer_shifts(const PresentedModule<F>& M, const Grading& g) {
  M.validate();
  check_grading(g, M.base()->nvars());
  for (const auto& f : M.ring->ideal_generators()) homogeneous_degree(f, g, "ideal generator");
  std::size_t m = M.rank, r = g.rank();
  // edges i -> j with shift(j) = shift(i) + delta
  std::vector<std::vector<std::pair<std::size_t, Key>>> adj(m);
  for (const auto& p : M.relations) {
    std::optional<std::pair<std::size_t, Key>> first;
    for (std::size_t i = 0; i < m; ++i) {
      if (p[i].is_zero()) continue;
      auto d = homogeneous_degree(p[i], g, "relation entry");
      if (!first) {
        first = std::make_pair(i, d);
        continue;
      }
      // shift(i) + d = shift(first) + d_first
      Key delta = sub(first->second, d);
      adj[first->first].emplace_back(i, delta);
      Key back(r);
      for (std::size_t k = 0; k < r; ++k) back[k] = -delta[k];
      adj[i].emplace_back(first->first, back);
    }
  }
  std::vector<std::optional<Key>> shift(m);
  for (std::size_t root = 0; root < m; ++root) {
    if (shift[root]) continue;
    std::vector<std::size_t> block{root};
    shift[root] = Key(r, 0);
    for (std::size_t at = 0; at < block.size(); ++at) {
      std::size_t i = block[at];
      for (const auto& [j, delta] : adj[i]) {
        Key want = add(*shift[i], delta);
        if (!shift[j]) {
          shift[j] = want;
          block.push_back(j);
        } else if (*shift[j] != want) {
          throw InhomogeneousInput("relations are not homogeneous for any choice of generator degrees");
        }
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      long lo = (*shift[block[0]])[k];
      for (std::size_t i : block) lo = std::min(lo, (*shift[i])[k]);
      for (std::size_t i : block) (*shift[i])[k] -= lo;
    }
  }
  std::vector<std::vector<long>> out;
  for (auto& s : shift) out.push_back(*s);
  return out;
}

template <CoefficientField F>
GradedComponent<F> graded_component(const QuotientRing<F>& A, const Grading& g, const std::vector<long>& degree) {
  const auto& R = A.base();
  check_grading(g, R->nvars());
  if (degree.size() != g.rank()) throw std::invalid_argument("degree of the wrong length for this grading");
  GradedComponent<F> out{degree, {}, {}};
  for (const auto& mono : monomials_up_to(g, R->nvars(), degree[0]))
    if (g.degree_of(mono) == degree) out.monomials.push_back(mono);
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const Monomial& a, const Monomial& b) { return compare(a, b, MonomialOrder::DegRevLex) > 0; });
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (std::size_t i = 0; i < out.monomials.size(); ++i) col.emplace(out.monomials[i], i);
  const F& f = R->field();
  EchelonBasis<F> I(f, out.monomials.size());
  for (const auto& gen : A.ideal_generators()) {
    auto dg = homogeneous_degree(gen, g, "ideal generator");
    auto need = sub(degree, dg);
    if (need[0] < 0) continue;
    for (const auto& mu : monomials_up_to(g, R->nvars(), need[0])) {
      if (g.degree_of(mu) != need) continue;
      DenseVector<F> v(out.monomials.size(), f.zero());
      for (const auto& [a, c] : gen.terms()) v[col.at(mu * a)] = f.add(v[col.at(mu * a)], c);
      I.insert(std::move(v));
    }
  }
  for (std::size_t i = 0; i < out.monomials.size(); ++i)
    if (!I.is_pivot(i)) out.standard.push_back(out.monomials[i]);
  return out;
}

template <CoefficientField F>
std::optional<std::vector<long>> tensor_degree(const ModElement<F>& v, std::size_t m, std::size_t n, const Grading& g,
                                               const std::vector<std::vector<long>>& shifts) {
  std::optional<Key> d;
  for (std::size_t lin = 0; lin < v.rank(); ++lin) {
    if (v[lin].is_zero()) continue;
    auto md = multidegree(v[lin], g);
    if (md.kind != Multidegree::Kind::Homogeneous) return std::nullopt;
    Key k = md.degree;
    for (std::size_t i : tensor_index(lin, m, n)) k = add(k, shifts[i]);
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

template <CoefficientField F>
GradedVerdict graded_verdict(const PresentedModule<F>& M, std::size_t n, const OracleOptions& options) {
  const auto& R = M.base();
  const F& f = R->field();
  std::size_t nv = R->nvars(), m = M.rank;
  Grading grading = options.grading ? *options.grading : Grading::standard(nv);
  GradedVerdict out;
  out.grading = grading;
  out.d_max = options.d_max;
  out.shifts = infer_shifts(M, grading);
  auto fine = finest_weights(M);
  out.finest_rank = fine.size();
  std::size_t rank = tensor_rank(m, n, static_cast<std::size_t>(-1));
  long dmax = static_cast<long>(options.d_max);

  // keys: declared degree followed by the finest degree
  auto mono_key = [&](const Monomial& a) {
    Key k = grading.degree_of(a);
    for (const auto& w : fine) {
      long s = 0;
      for (std::size_t i = 0; i < nv; ++i) s += w[i] * static_cast<long>(a[i]);
      k.push_back(s);
    }
    return k;
  };
  auto index_key = [&](const TensorIndex& idx) {
    Key k(grading.rank(), 0);
    for (std::size_t i : idx) k = add(k, out.shifts[i]);
    for (const auto& w : fine) {
      long s = 0;
      for (std::size_t i : idx) s += w[nv + i];
      k.push_back(s);
    }
    return k;
  };

  auto monos = monomials_up_to(grading, nv, dmax);
  std::map<Key, std::vector<Monomial>> by_key;
  for (const auto& a : monos) by_key[mono_key(a)].push_back(a);
  auto multipliers = [&](const Key& k) -> const std::vector<Monomial>& {
    static const std::vector<Monomial> none;
    auto it = by_key.find(k);
    return it == by_key.end() ? none : it->second;
  };

  std::vector<Key> lin_key(rank);
  for (std::size_t lin = 0; lin < rank; ++lin) lin_key[lin] = index_key(tensor_index(lin, m, n));
  OrbitBasis orbits(m, n);
  std::vector<Key> orbit_key(orbits.size());
  std::vector<std::vector<std::size_t>> orbit_members_of(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    orbit_key[k] = index_key(sorted_index(orbits[k]));
    orbit_members_of[k] = orbit_members(orbits[k], static_cast<std::size_t>(-1));
  }

  // graded pieces of T^n(F) and of Γ^n(F) = ⊕ R e_ν
  std::map<Key, Piece> T, G;
  std::size_t total = 0;
  for (std::size_t lin = 0; lin < rank; ++lin)
    for (const auto& a : monos) {
      Key k = add(mono_key(a), lin_key[lin]);
      if (k[0] > dmax) continue;
      T[k].add(a, lin);
      if (++total > options.max_elements)
        throw GuardrailExceeded("oracle graded pieces exceed " + std::to_string(options.max_elements) + " elements");
    }
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (const auto& a : monos) {
      Key key = add(mono_key(a), orbit_key[k]);
      if (key[0] <= dmax) G[key].add(a, k);
    }

  auto homogeneous_key = [&](const std::vector<std::tuple<Monomial, std::size_t, typename F::Elem>>& terms,
                             const std::vector<Key>& basis_key) {
    Key k = add(mono_key(std::get<0>(terms.front())), basis_key[std::get<1>(terms.front())]);
    for (const auto& t : terms)
      if (add(mono_key(std::get<0>(t)), basis_key[std::get<1>(t)]) != k)
        throw InternalError("oracle generator is not homogeneous");
    return k;
  };
  auto to_gen = [&](const std::vector<Polynomial<F>>& coords, const std::vector<Key>& basis_key) {
    HomGen<F> h;
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (const auto& [a, c] : coords[i].terms()) h.terms.emplace_back(a, i, c);
    if (!h.terms.empty()) h.key = homogeneous_key(h.terms, basis_key);
    return h;
  };

  // N plus the I-lift in T^n(F); K plus the I-lift in orbit coordinates
  std::vector<HomGen<F>> Ngens, Kgens;
  if (n > 0) {
    std::size_t rest_count = tensor_rank(m, n - 1, static_cast<std::size_t>(-1));
    for (const auto& p : M.relations)
      for (std::size_t slot = 0; slot < n; ++slot)
        for (std::size_t r = 0; r < rest_count; ++r) {
          auto g = insert_factor(p, slot, tensor_index(r, m, n - 1));
          auto h = to_gen(g.coords(), lin_key);
          if (!h.terms.empty()) Ngens.push_back(std::move(h));
        }
  }
  for (const auto& p : M.relations)
    for (std::size_t s = 1; s <= n; ++s) {
      auto gp = gamma_expand(p, s);
      OrbitBasis rest(m, n - s);
      for (std::size_t k = 0; k < rest.size(); ++k) {
        auto z = shuffle(gp, OrbitTensor<F>::basis_element(R, rest, k));
        auto h = to_gen(z.coords, orbit_key);
        if (!h.terms.empty()) Kgens.push_back(std::move(h));
      }
    }
  for (const auto& gen : M.ring->ideal_generators()) {
    for (std::size_t lin = 0; lin < rank; ++lin) {
      std::vector<Polynomial<F>> c(rank, Polynomial<F>(R));
      c[lin] = gen;
      Ngens.push_back(to_gen(c, lin_key));
    }
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      std::vector<Polynomial<F>> c(orbits.size(), Polynomial<F>(R));
      c[k] = gen;
      Kgens.push_back(to_gen(c, orbit_key));
    }
  }

  auto rows_in = [&](const std::vector<HomGen<F>>& gens, const Key& key, const Piece& piece) {
    std::vector<DenseVector<F>> rows;
    for (const auto& h : gens)
      for (const auto& mu : multipliers(sub(key, h.key))) {
        DenseVector<F> v(piece.elems.size(), f.zero());
        for (const auto& [a, i, c] : h.terms) {
          auto col = piece.at(mu * a, i);
          v[col] = f.add(v[col], c);
        }
        rows.push_back(std::move(v));
      }
    return rows;
  };

  auto sigmas = symmetric_generators(n);
  std::map<Key, DegreeRow> table;
  for (const auto& [key, piece] : T) {
    std::size_t dim = piece.elems.size();
    EchelonBasis<F> N(f, dim);
    for (auto& v : rows_in(Ngens, key, piece)) N.insert(std::move(v));
    std::vector<std::size_t> qcols;
    std::vector<long> qpos(dim, -1);
    for (std::size_t c = 0; c < dim; ++c)
      if (!N.is_pivot(c)) {
        qpos[c] = static_cast<long>(qcols.size());
        qcols.push_back(c);
      }
    std::size_t qdim = qcols.size();
    auto project = [&](DenseVector<F> v) {
      v = N.reduce(std::move(v));
      DenseVector<F> q(qdim);
      for (std::size_t i = 0; i < qdim; ++i) q[i] = v[qcols[i]];
      return q;
    };
    std::vector<DenseMatrix<F>> action;
    for (const auto& sigma : sigmas) {
      DenseMatrix<F> S(f, qdim, qdim);
      for (std::size_t j = 0; j < qdim; ++j) {
        const auto& e = piece.elems[qcols[j]];
        DenseVector<F> v(dim, f.zero());
        v[piece.at(e.mono, linear_index(permute_index(sigma, tensor_index(e.index, m, n)), m))] = f.one();
        auto q = project(std::move(v));
        for (std::size_t i = 0; i < qdim; ++i) S(i, j) = q[i];
      }
      action.push_back(std::move(S));
    }
    std::size_t fixed = brute_fixed_subspace(f, action, qdim).size();

    // orbit sums mono·e_ν and K, both read in T^n(F)
    const Piece* gp = nullptr;
    if (auto it = G.find(key); it != G.end()) gp = &it->second;
    std::size_t gdim = gp ? gp->elems.size() : 0, kdim = 0;
    std::vector<DenseVector<F>> orbit_vectors;
    if (gp) {
      EchelonBasis<F> K(f, gdim);
      for (auto& v : rows_in(Kgens, key, *gp)) {
        DenseVector<F> t(dim, f.zero());
        for (std::size_t c = 0; c < gdim; ++c) {
          if (f.is_zero(v[c])) continue;
          const auto& e = gp->elems[c];
          for (std::size_t lin : orbit_members_of[e.index]) t[piece.at(e.mono, lin)] = f.add(t[piece.at(e.mono, lin)], v[c]);
        }
        if (!N.contains(t)) throw InternalError("oracle: K is not contained in the invariants of N");
        K.insert(std::move(v));
      }
      kdim = K.rank();
      for (const auto& e : gp->elems) {
        DenseVector<F> t(dim, f.zero());
        for (std::size_t lin : orbit_members_of[e.index]) t[piece.at(e.mono, lin)] = f.one();
        orbit_vectors.push_back(std::move(t));
      }
    }
    std::size_t before = N.rank();
    for (auto& v : orbit_vectors) N.insert(std::move(v));
    std::size_t image = N.rank() - before;

    Key degree(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(grading.rank()));
    auto& row = table[degree];
    row.degree = degree;
    row.tensor_dim += qdim;
    row.fixed_dim += fixed;
    row.image_dim += image;
    row.gamma_dim += gdim - kdim;
    row.invariant_dim += gdim - image;
    row.k_dim += kdim;
  }

  auto before = [](const Key& a, const Key& b) { return a[0] != b[0] ? a[0] < b[0] : a < b; };
  for (auto& [d, row] : table) out.rows.push_back(row);
  std::sort(out.rows.begin(), out.rows.end(), [&](const DegreeRow& a, const DegreeRow& b) { return before(a.degree, b.degree); });
  for (const auto& row : out.rows) {
    if (row.injective_defect() < 0 || row.surjective_defect() < 0)
      throw InternalError("oracle: negative defect in degree " + degree_to_string(row.degree));
    if (row.injective_defect() > 0 && !out.first_injective_defect) out.first_injective_defect = row.degree;
    if (row.surjective_defect() > 0 && !out.first_surjective_defect) out.first_surjective_defect = row.degree;
  }
  return out;
}

#define GTS_INSTANTIATE_ORACLE(F)                                                                              \
  template std::vector<std::vector<long>> infer_shifts(const PresentedModule<F>&, const Grading&);            \
  template GradedComponent<F> graded_component(const QuotientRing<F>&, const Grading&, const std::vector<long>&); \
  template std::optional<std::vector<long>> tensor_degree(const ModElement<F>&, std::size_t, std::size_t,      \
                                                          const Grading&, const std::vector<std::vector<long>>&); \
  template GradedVerdict graded_verdict(const PresentedModule<F>&, std::size_t, const OracleOptions&);

GTS_INSTANTIATE_ORACLE(PrimeField)
GTS_INSTANTIATE_ORACLE(RationalField)

}  // namespace gts
