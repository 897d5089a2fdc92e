#pragma once
// Sparse multivariate polynomials with exact rational coefficients, the
// orientation product  h_D = prod_{arcs v->w} (x_v - phi(e) x_w),  target
// monomials M_D = prod_v x_v^{outdeg(v)}, and coefficient extraction.
//
// Coefficients are carried exactly and reduced into a field only on
// extraction, so the same expansion serves Q and GF(p) (pass integer
// representatives for GF(p) slopes when exact integer identities matter).
//
// Monomial order: graded lexicographic, ascending (total degree first, then
// the exponent vector lexicographically). The expansion of a full product is
// homogeneous of degree m, where plain lex on exponent vectors agrees with
// graded lex, so the term map's natural order is the graded-lex order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dporient/correspondence.hpp"
#include "dporient/field.hpp"
#include "dporient/graph.hpp"

namespace dporient {

struct Monomial {
  std::vector<int> exps;  // exps[i] is the exponent of x_{i+1}

  int total_degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
  }

  // Coordinatewise >=.
  bool dominates(const Monomial& other) const {
    if (exps.size() != other.exps.size()) throw Error("monomial arity mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] < other.exps[i]) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class SparsePolynomial {
 public:
  explicit SparsePolynomial(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const Rational& coef) {
    if (static_cast<int>(exps.size()) != nvars_) throw Error("term arity mismatch");
    if (coef == 0) return;
    auto [it, fresh] = terms_.emplace(exps, coef);
    if (!fresh) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient_raw(const Monomial& m) const {
    if (static_cast<int>(m.exps.size()) != nvars_) throw Error("monomial arity mismatch");
    auto it = terms_.find(m.exps);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

// M_D: exponent of x_v is the out-degree of v.
inline Monomial target_monomial(const Orientation& D) {
  Monomial m;
  auto out = D.out_degrees();
  m.exps.assign(out.begin() + 1, out.end());
  return m;
}

// Expands  prod_{edges e, read tail->head} (x_tail - phi[e] x_head).
// phi[edge_id] must be nonzero. With degree_cap set, intermediate monomials
// exceeding the cap coordinatewise are pruned; since exponents only grow,
// every coefficient at or under the cap is still exact.
inline SparsePolynomial expand_graph_polynomial(
    const Orientation& D, const std::vector<Rational>& phi,
    const std::optional<Monomial>& degree_cap = {}, int edge_cap = 26) {
  const Multigraph& g = D.base();
  int n = g.vertex_count();
  int m = g.edge_count();
  if (m > edge_cap)
    throw CapExceeded("expansion over " + std::to_string(m) + " edges exceeds cap " +
                      std::to_string(edge_cap));
  if (static_cast<int>(phi.size()) != m + 1)
    throw Error("phi vector must have one entry per edge (1-indexed)");
  if (degree_cap && static_cast<int>(degree_cap->exps.size()) != n)
    throw Error("degree cap arity mismatch");

  auto fits = [&](const std::vector<int>& exps) {
    if (!degree_cap) return true;
    for (int i = 0; i < n; ++i)
      if (exps[i] > degree_cap->exps[i]) return false;
    return true;
  };

  std::map<std::vector<int>, Rational> acc;
  acc.emplace(std::vector<int>(n, 0), Rational(1));
  for (const Edge& e : g.edges()) {
    if (phi[e.id] == 0) throw FieldError("zero phi on edge " + std::to_string(e.id));
    int t = D.tail(e.id) - 1, h = D.head(e.id) - 1;
    std::map<std::vector<int>, Rational> next;
    for (const auto& [exps, coef] : acc) {
      std::vector<int> up = exps;
      ++up[t];
      if (fits(up)) {
        auto [it, fresh] = next.emplace(up, coef);
        if (!fresh) it->second += coef;
      }
      up = exps;
      ++up[h];
      if (fits(up)) {
        Rational c = -phi[e.id] * coef;
        auto [it, fresh] = next.emplace(std::move(up), c);
        if (!fresh) it->second += c;
      }
    }
    acc = std::move(next);
  }
  SparsePolynomial p(n);
  for (const auto& [exps, coef] : acc) p.add_term(exps, coef);
  return p;
}

// The coefficient of m reduced into the field.
inline FieldElement coefficient(const SparsePolynomial& p, const Monomial& m,
                                const FieldSpec& spec) {
  return spec.reduce_rational(p.coefficient_raw(m));
}

// First monomial in ascending graded-lex order whose coefficient is nonzero
// in the field and whose exponents satisfy exps[v-1] + 1 <= |L(v)|.
// Assumes p homogeneous (a full orientation-product expansion).
inline std::optional<Monomial> at_sufficient_monomial(const SparsePolynomial& p,
                                                      const ListAssignment& lists,
                                                      const FieldSpec& spec) {
  if (lists.vertex_count() != p.nvars()) throw Error("list/polynomial arity mismatch");
  for (const auto& [exps, coef] : p.terms()) {
    if (spec.reduce_rational(coef) == 0) continue;
    bool ok = true;
    for (int i = 0; i < p.nvars(); ++i)
      if (exps[i] + 1 > lists.list_size(i + 1)) {
        ok = false;
        break;
      }
    if (ok) return Monomial{exps};
  }
  return std::nullopt;
}

}  // namespace dporient
