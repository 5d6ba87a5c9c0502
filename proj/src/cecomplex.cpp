/*
   Copyright 2026 algebroid-kit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "cecomplex.hpp"

#include <numeric>

#include "qlinalg.hpp"
#include "rng.hpp"

namespace algk {

EForm::EForm(AlgebroidPtr alg, std::size_t module_rank,
             std::map<IndexMask, std::vector<Poly>> comp)
    : alg_(std::move(alg)), rank_(module_rank), comp_(std::move(comp)) {
  for (const auto& [m, v] : comp_) {
    (void)m;
    if (v.size() != rank_) throw Error("RankMismatch", "E-valued form value length mismatch");
  }
  prune();
}

void EForm::prune() {
  for (auto it = comp_.begin(); it != comp_.end();) {
    bool zero = std::all_of(it->second.begin(), it->second.end(),
                            [](const Poly& p) { return p.is_zero(); });
    it = zero ? comp_.erase(it) : std::next(it);
  }
}

EForm EForm::from_form(const Form& f) {
  std::map<IndexMask, std::vector<Poly>> comp;
  for (const auto& [m, p] : f.components()) comp.emplace(m, std::vector<Poly>{p});
  return EForm(f.algebroid(), 1, std::move(comp));
}

std::vector<Poly> EForm::value(IndexMask m) const {
  auto it = comp_.find(m);
  if (it != comp_.end()) return it->second;
  return std::vector<Poly>(rank_, Poly(alg_->ring()));
}

Form EForm::to_form() const {
  if (rank_ != 1) throw Error("RankMismatch", "only rank-1 values convert to a Form");
  detail::ExtTable t;
  for (const auto& [m, v] : comp_) detail::table_add(t, m, v[0]);
  return Form(alg_, std::move(t));
}

EForm EForm::operator+(const EForm& o) const {
  require_same_algebroid(alg_, o.alg_);
  if (rank_ != o.rank_) throw Error("RankMismatch", "E-valued form rank mismatch");
  auto comp = comp_;
  for (const auto& [m, v] : o.comp_) {
    auto it = comp.find(m);
    if (it == comp.end()) {
      comp.emplace(m, v);
    } else {
      for (std::size_t i = 0; i < rank_; ++i) it->second[i] = it->second[i] + v[i];
    }
  }
  return EForm(alg_, rank_, std::move(comp));
}

EForm EForm::operator-(const EForm& o) const {
  require_same_algebroid(alg_, o.alg_);
  if (rank_ != o.rank_) throw Error("RankMismatch", "E-valued form rank mismatch");
  auto comp = comp_;
  for (const auto& [m, v] : o.comp_) {
    auto it = comp.find(m);
    if (it == comp.end()) {
      std::vector<Poly> neg;
      neg.reserve(v.size());
      for (const auto& p : v) neg.push_back(-p);
      comp.emplace(m, std::move(neg));
    } else {
      for (std::size_t i = 0; i < rank_; ++i) it->second[i] = it->second[i] - v[i];
    }
  }
  return EForm(alg_, rank_, std::move(comp));
}

bool EForm::operator==(const EForm& o) const {
  require_same_algebroid(alg_, o.alg_);
  return rank_ == o.rank_ && comp_ == o.comp_;
}

namespace {

// Value of omega on [e_i, e_j] ^ e_rest by A-linear expansion of the
// bracket section.
template <typename Value, typename GetValue>
Value eval_on_bracket(const Algebroid& alg, std::size_t i, std::size_t j, IndexMask rest,
                      const GetValue& value_of, const Value& zero) {
  Section c = alg.bracket_basis(i, j);
  Value acc = zero;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    IndexMask km = IndexMask(1) << k;
    int sign = wedge_sign(km, rest);
    if (sign == 0) continue;
    Value v = value_of(km | rest);
    for (auto& p : v) {
      p = p * c[k];
      if (sign < 0) p = -p;
    }
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] = acc[t] + v[t];
  }
  return acc;
}

// Shared CE differential: `apply_op(i, value)` is the coefficient action of
// the generator e_i (anchor for trivial coefficients, the connection
// operator for twisted ones).
std::map<IndexMask, std::vector<Poly>> ce_diff_impl(
    const Algebroid& alg, std::size_t module_rank,
    const std::map<IndexMask, std::vector<Poly>>& comp,
    const std::function<std::vector<Poly>(std::size_t, const std::vector<Poly>&)>& apply_op) {
  const std::size_t n = alg.rank();
  const PolyRing& ring = alg.ring();
  std::vector<Poly> zero_vec(module_rank, Poly(ring));
  auto value_of = [&](IndexMask m) -> std::vector<Poly> {
    auto it = comp.find(m);
    return it == comp.end() ? zero_vec : it->second;
  };

  // Degrees present in the input.
  std::map<int, bool> degrees;
  for (const auto& [m, v] : comp) {
    (void)v;
    degrees[mask_degree(m)] = true;
  }

  std::map<IndexMask, std::vector<Poly>> out;
  for (IndexMask u = 0; u < (IndexMask(1) << n); ++u) {
    int deg = mask_degree(u);
    if (deg == 0 || !degrees.count(deg - 1)) continue;
    auto idx = mask_indices(u);
    std::vector<Poly> acc(module_rank, Poly(ring));
    bool nonzero = false;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      IndexMask rest = u & ~(IndexMask(1) << idx[a]);
      std::vector<Poly> v = apply_op(idx[a], value_of(rest));
      int sign = (a % 2 == 0) ? 1 : -1;  // (-1)^{i+1} with i = a+1
      for (std::size_t t = 0; t < module_rank; ++t) {
        if (v[t].is_zero()) continue;
        acc[t] = sign > 0 ? acc[t] + v[t] : acc[t] - v[t];
        nonzero = true;
      }
    }
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        IndexMask rest = u & ~(IndexMask(1) << idx[a]) & ~(IndexMask(1) << idx[b]);
        std::vector<Poly> v = eval_on_bracket<std::vector<Poly>>(
            alg, idx[a], idx[b], rest, value_of, zero_vec);
        int sign = ((a + b) % 2 == 0) ? 1 : -1;  // (-1)^{i+j} with i = a+1, j = b+1
        for (std::size_t t = 0; t < module_rank; ++t) {
          if (v[t].is_zero()) continue;
          acc[t] = sign > 0 ? acc[t] + v[t] : acc[t] - v[t];
          nonzero = true;
        }
      }
    if (nonzero) out.emplace(u, std::move(acc));
  }
  return out;
}

}  // namespace

Form ce_differential(const Algebroid& alg, const Form& omega) {
  std::map<IndexMask, std::vector<Poly>> comp;
  for (const auto& [m, p] : omega.components()) comp.emplace(m, std::vector<Poly>{p});
  auto out = ce_diff_impl(alg, 1, comp, [&](std::size_t i, const std::vector<Poly>& v) {
    return std::vector<Poly>{alg.anchor(i).apply(v[0])};
  });
  detail::ExtTable t;
  for (const auto& [m, v] : out) detail::table_add(t, m, v[0]);
  return Form(omega.algebroid(), std::move(t));
}

CochainComplex::CochainComplex(AlgebroidPtr alg) : alg_(std::move(alg)) {}

CochainComplex::CochainComplex(AlgebroidPtr alg, Connection conn)
    : alg_(std::move(alg)), conn_(std::move(conn)) {
  require_same_algebroid(alg_, conn_->algebroid());
  if (!check_flat(*conn_).passed)
    throw Error("NonFlatCoefficients", "twisted complex needs a flat connection");
}

std::vector<int> CochainComplex::module_weights() const {
  if (conn_ && conn_->module_weights()) return *conn_->module_weights();
  return std::vector<int>(module_rank(), 0);
}

EForm CochainComplex::differential(const EForm& omega) const {
  require_same_algebroid(alg_, omega.algebroid());
  if (omega.module_rank() != module_rank())
    throw Error("RankMismatch", "form value rank does not match coefficients");
  std::function<std::vector<Poly>(std::size_t, const std::vector<Poly>&)> op;
  if (conn_) {
    op = [&](std::size_t i, const std::vector<Poly>& v) { return conn_->op(i).apply(v); };
  } else {
    op = [&](std::size_t i, const std::vector<Poly>& v) {
      return std::vector<Poly>{alg_->anchor(i).apply(v[0])};
    };
  }
  return EForm(alg_, module_rank(), ce_diff_impl(*alg_, module_rank(), omega.components(), op));
}

namespace detail {

std::vector<Exponents> monomials_of_weight(const PolyRing& ring,
                                           const std::vector<int>& var_weights, long w) {
  std::vector<Exponents> out;
  if (w < 0) return out;
  Exponents cur(ring.var_count(), 0);
  // Lexicographic enumeration over exponents; variable weights are >= 1 so
  // the recursion is finite.
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
    if (i == ring.var_count()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    long wv = var_weights[i];
    for (long e = 0; e * wv <= remaining; ++e) {
      cur[i] = static_cast<std::uint32_t>(e);
      rec(i + 1, remaining - e * wv);
      if (wv == 0) break;  // guarded elsewhere; avoid an infinite loop
    }
    cur[i] = 0;
  };
  rec(0, w);
  return out;
}

}  // namespace detail

namespace {

struct PieceContext {
  const Algebroid* alg;
  std::vector<int> var_weights;
  std::vector<int> basis_weights;
  std::vector<int> module_weights;
  bool chain_side;  // multivector weights add basis weights; forms subtract
};

long piece_floor_weight(const PieceContext& ctx, IndexMask m, std::size_t gen) {
  long w = ctx.module_weights[gen];
  for (auto i : mask_indices(m))
    w += ctx.chain_side ? ctx.basis_weights[i] : -ctx.basis_weights[i];
  return w;
}

detail::WeightBasis weight_piece_basis(const PieceContext& ctx, int degree, long w) {
  detail::WeightBasis basis;
  const std::size_t n = ctx.alg->rank();
  const PolyRing& ring = ctx.alg->ring();
  for (IndexMask m = 0; m < (IndexMask(1) << n); ++m) {
    if (mask_degree(m) != degree) continue;
    for (std::size_t gen = 0; gen < ctx.module_weights.size(); ++gen) {
      long need = w - piece_floor_weight(ctx, m, gen);
      for (auto& e : detail::monomials_of_weight(ring, ctx.var_weights, need)) {
        basis.index.emplace(std::make_tuple(m, gen, e), basis.elems.size());
        basis.elems.emplace_back(m, gen, e);
      }
    }
  }
  return basis;
}

// Expands an E-valued element over the weight-piece basis; throws if a term
// falls outside (weight homogeneity violated).
void expand_in_basis(const PieceContext& ctx,
                     const std::map<IndexMask, std::vector<Poly>>& comp,
                     const detail::WeightBasis& basis, std::vector<Rational>& column) {
  (void)ctx;
  for (const auto& [m, v] : comp)
    for (std::size_t gen = 0; gen < v.size(); ++gen)
      for (const auto& [e, c] : v[gen].terms()) {
        auto it = basis.index.find(std::make_tuple(m, gen, e));
        if (it == basis.index.end())
          throw Error("NotHomogeneous", "differential left the weight piece");
        column[it->second] += c;
      }
}

void require_bounded_weights(const Algebroid& alg) {
  if (!alg.weights())
    throw Error("NotHomogeneous", "no weight data declared on the algebroid");
  for (std::size_t j = 0; j < alg.weights()->var_weights.size(); ++j)
    if (alg.weights()->var_weights[j] <= 0)
      throw Error("WeightUnbounded", "variable '" + alg.ring().var_name(j) +
                                         "' has weight <= 0; weight pieces would be "
                                         "infinite-dimensional");
  AxiomReport hom = check_weight_homogeneity(alg);
  if (!hom.passed)
    throw Error("NotHomogeneous", hom.violations.front().witness + ": " +
                                      hom.violations.front().lhs + " expected " +
                                      hom.violations.front().rhs);
}

}  // namespace

GradedDims cohomology(const CochainComplex& complex, long max_weight) {
  const Algebroid& alg = *complex.algebroid();
  require_bounded_weights(alg);
  const auto& wd = *alg.weights();
  PieceContext ctx{&alg, wd.var_weights, wd.basis_weights, complex.module_weights(), false};

  // Twisted coefficients must be weight-homogeneous too.
  if (complex.twisted()) {
    const Connection& conn = *complex.connection();
    for (std::size_t i = 0; i < alg.rank(); ++i)
      for (std::size_t a = 0; a < conn.module_rank(); ++a)
        for (std::size_t b = 0; b < conn.module_rank(); ++b) {
          long target = wd.basis_weights[i] + ctx.module_weights[b] - ctx.module_weights[a];
          if (!conn.op(i).matrix()[a][b].is_homogeneous_of_weight(target, wd.var_weights))
            throw Error("NotHomogeneous", "connection matrix entry is not homogeneous");
        }
  }

  const int n = static_cast<int>(alg.rank());
  long min_w = 0;
  for (IndexMask m = 0; m < (IndexMask(1) << n); ++m)
    for (std::size_t gen = 0; gen < ctx.module_weights.size(); ++gen)
      min_w = std::min(min_w, piece_floor_weight(ctx, m, gen));

  GradedDims report;
  report.min_weight = min_w;
  report.max_weight = max_weight;

  for (long w = min_w; w <= max_weight; ++w) {
    std::vector<detail::WeightBasis> bases;
    for (int k = 0; k <= n + 1; ++k) bases.push_back(weight_piece_basis(ctx, k, w));
    // Matrix of d from degree k to k+1 in the weight-w piece.
    auto matrix_of_d = [&](int k) {
      const auto& dom = bases[k];
      const auto& cod = bases[k + 1];
      QMatrix m(cod.elems.size(), dom.elems.size());
      for (std::size_t col = 0; col < dom.elems.size(); ++col) {
        const auto& [mask, gen, e] = dom.elems[col];
        std::map<IndexMask, std::vector<Poly>> comp;
        std::vector<Poly> v(complex.module_rank(), Poly(alg.ring()));
        v[gen] = Poly::monomial(alg.ring(), e, 1);
        comp.emplace(mask, std::move(v));
        EForm image = complex.differential(EForm(complex.algebroid(),
                                                 complex.module_rank(), std::move(comp)));
        std::vector<Rational> column(cod.elems.size(), 0);
        expand_in_basis(ctx, image.components(), cod, column);
        for (std::size_t row = 0; row < column.size(); ++row) m.at(row, col) = column[row];
      }
      return m;
    };
    std::vector<QMatrix> ds;
    for (int k = 0; k <= n; ++k) ds.push_back(matrix_of_d(k));
    for (int k = 0; k <= n; ++k) {
      QMatrix d_in = k == 0 ? QMatrix(bases[0].elems.size(), 0) : ds[k - 1];
      std::size_t dim = quotient_dim(ds[k], d_in);
      if (dim > 0 || !bases[k].elems.empty()) report.dims[{k, w}] = dim;
    }
  }
  return report;
}

Multivector dual_differential(const AlgebroidPtr& primal, const AlgebroidPtr& lstar,
                              const Multivector& p) {
  require_same_ring(primal->ring(), lstar->ring());
  if (primal->rank() != lstar->rank())
    throw Error("RankMismatch", "dual algebroid rank mismatch");
  require_same_algebroid(primal, p.algebroid());
  Form as_form(lstar, p.components());
  Form image = ce_differential(*lstar, as_form);
  return Multivector(primal, image.components());
}

AxiomReport check_bialgebroid(const AlgebroidPtr& primal, const AlgebroidPtr& lstar,
                              int samples, std::uint64_t seed, const AlgebroidMorphism* phi,
                              const AlgebroidMorphism* psi) {
  AxiomReport rep;
  const std::size_t n = primal->rank();
  auto dstar = [&](const Multivector& x) { return dual_differential(primal, lstar, x); };
  auto compat = [&](const Multivector& d1, const Multivector& d2) {
    Multivector lhs = dstar(sn_bracket(d1, d2));
    Multivector rhs = sn_bracket(dstar(d1), d2) + sn_bracket(d1, dstar(d2));
    return lhs - rhs;
  };

  // d_* must be a differential (the dual Jacobi identity); for triangular
  // data the derivation identity below holds for any bivector by graded
  // Jacobi, so this is the leg that detects a broken dual.
  for (std::size_t v = 0; v < primal->ring().var_count(); ++v) {
    Multivector f = Multivector::scalar(primal, Poly::variable(primal->ring(), v));
    Multivector sq = dstar(dstar(f));
    if (!sq.is_zero())
      rep.add({"dual-square-zero", primal->ring().var_name(v), sq.to_string(), "0"});
  }
  for (std::size_t i = 0; i < n; ++i) {
    Multivector sq = dstar(dstar(Multivector::basis(primal, IndexMask(1) << i)));
    if (!sq.is_zero())
      rep.add({"dual-square-zero", primal->basis_names()[i], sq.to_string(), "0"});
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Multivector diff = compat(Multivector::basis(primal, IndexMask(1) << i),
                                Multivector::basis(primal, IndexMask(1) << j));
      if (!diff.is_zero())
        rep.add({"bialgebroid-compatibility",
                 "(" + primal->basis_names()[i] + "," + primal->basis_names()[j] + ")",
                 diff.to_string(), "0"});
    }

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Multivector d1 = random_multivector(primal, 1, rng);
    Multivector d2 = random_multivector(primal, 1, rng);
    Multivector diff = compat(d1, d2);
    if (!diff.is_zero()) {
      rep.add({"bialgebroid-compatibility", "random sample " + std::to_string(s),
               diff.to_string(), "0"});
      break;
    }
    Multivector sq = dstar(dstar(random_multivector(primal, 0, rng)));
    if (!sq.is_zero()) {
      rep.add({"dual-square-zero", "random sample " + std::to_string(s), sq.to_string(),
               "0"});
      break;
    }
  }

  if (phi) {
    AxiomReport r = check_morphism(*phi);
    for (auto& v : r.violations) v.axiom = "rooting-phi-" + v.axiom;
    rep.merge(r);
  }
  if (psi) {
    AxiomReport r = check_morphism(*psi);
    for (auto& v : r.violations) v.axiom = "rooting-psi-" + v.axiom;
    rep.merge(r);
  }
  return rep;
}

AxiomReport dual_cochain_map(const AlgebroidMorphism& phi, int samples, std::uint64_t seed) {
  AxiomReport rep;
  const AlgebroidPtr& src = phi.source();
  const AlgebroidPtr& tgt = phi.target();
  const std::size_t n = tgt->rank();
  auto check_one = [&](const Form& omega, const std::string& witness) {
    Form lhs = ce_differential(*src, pullback_form(phi, omega));
    Form rhs = pullback_form(phi, ce_differential(*tgt, omega));
    if (!(lhs == rhs))
      rep.add({"cochain-map", witness, lhs.to_string(), rhs.to_string()});
  };
  for (IndexMask m = 0; m < (IndexMask(1) << n); ++m)
    check_one(Form::basis(tgt, m), "basis form mask " + std::to_string(m));
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    int k = static_cast<int>(rng.range(0, static_cast<long>(n)));
    check_one(random_form(tgt, k, rng), "random sample " + std::to_string(s));
    if (!rep.passed && rep.violations.size() > 8) break;
  }
  return rep;
}

}  // namespace algk
