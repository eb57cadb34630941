#ifndef CATKIT_HOPF_ADJOINT_OBJECT_HPP
#define CATKIT_HOPF_ADJOINT_OBJECT_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "catkit/hopf/operators.hpp"

namespace catkit {

namespace detail {

/** Components equal to those of the identity on F. */
inline bool is_identity_on(const NatTrans& t, const Functor& F) {
  return t.components() == identity_nat(F).components();
}

/** Both triangle composites of an adjunction, as whiskered 2-cells. */
inline void check_triangles(Report& r, const std::string& tag, const Adjunction& a) {
  NatTrans left = vcompose(whisker_right(a.counit, a.left), whisker_left(a.left, a.unit));
  NatTrans right = vcompose(whisker_left(a.right, a.counit), whisker_right(a.unit, a.right));
  r.check("triangle-" + tag + "-left", is_identity_on(left, a.left));
  r.check("triangle-" + tag + "-right", is_identity_on(right, a.right));
}

/**
 * Visit every family choosing one morphism from each candidate list, in
 * lexicographic order; stops when `visit` returns true.
 */
inline bool search_families(const std::vector<std::vector<int>>& choices,
                            const std::function<bool(const std::vector<int>&)>& visit,
                            std::size_t budget = 1'000'000) {
  std::size_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return false;
    total *= c.size();
    if (total > budget) throw ResourceError("candidate search space is too large", budget);
  }
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<int> family(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) family[i] = choices[i][pos[i]];
    if (visit(family)) return true;
    std::size_t i = 0;
    while (i < choices.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == choices.size()) return false;
  }
}

} // namespace detail

/** Right adjoint of an invertible Adj 1-cell, with every verified identity. */
struct AdjAdjointObject {
  AdjOneCell cell;
  Adjunction jk;
  Adjunction vw;
  NatTrans gamma;
  AdjOneCell right;
  NatTrans rho_displayed;
  NatTrans delta;
  NatTrans gamma_recovered;
  AdjTwoCell unit;
  AdjTwoCell counit;
  Report report;

  bool ok() const { return report.ok(); }
};

/**
 * From an invertible (J, V, lambda) and adjunctions J -| K, V -| W, the
 * 1-cell (K, W, lambda^KW) with
 *   lambda^KW = W Lbar eps^JK . W gamma K . eta^VW L K,   gamma = lambda^-1.
 */
inline AdjAdjointObject adjoint_object_adj(const AdjOneCell& c, const Adjunction& jk, const Adjunction& vw) {
  if (!(jk.left == c.top) || !(vw.left == c.bottom))
    throw StructuralError("adjoint object: the adjunctions are not on the top and bottom functors");
  NatTrans gamma = inverse_of(c.lambda, "adjoint object");

  const Functor& J = c.top;
  const Functor& V = c.bottom;
  const Functor& K = jk.right;
  const Functor& W = vw.right;
  const Functor& L = c.source.left;
  const Functor& R = c.source.right;
  const Functor& Lb = c.target.left;
  const Functor& Rb = c.target.right;
  const auto& C = *c.source.domain();
  const auto& X = *c.source.codomain();
  const auto& D = *c.target.domain();
  const auto& Y = *c.target.codomain();

  std::vector<int> lam(D.object_count());
  for (int d = 0; d < D.object_count(); ++d) {
    int k = K.obj(d);
    lam[d] = X.compose({W.mor(Lb.mor(jk.counit.at(d))), W.mor(gamma.at(k)), vw.unit.at(L.obj(k))});
  }
  NatTrans lambdaKW("lambda^KW", compose_functors(L, K), compose_functors(W, Lb), std::move(lam));
  AdjOneCell right = make_adj_one_cell(c.target, c.source, K, W, lambdaKW);

  Report r;
  r.absorb("right-cell", validate_adj_one_cell(right));

  std::vector<int> rho(Y.object_count()), delta(Y.object_count());
  for (int y = 0; y < Y.object_count(); ++y) {
    int rby = Rb.obj(y);
    int k = K.obj(rby);
    rho[y] = C.compose({R.mor(W.mor(c.target.counit.at(y))), R.mor(W.mor(Lb.mor(jk.counit.at(rby)))),
                        R.mor(W.mor(gamma.at(k))), R.mor(vw.unit.at(L.obj(k))), c.source.unit.at(k)});
    int w = W.obj(y);
    int rw = R.obj(w);
    delta[y] = C.compose({K.mor(Rb.mor(vw.counit.at(y))), K.mor(Rb.mor(V.mor(c.source.counit.at(w)))),
                          K.mor(Rb.mor(c.lambda.at(rw))), K.mor(c.target.unit.at(J.obj(rw))),
                          jk.unit.at(rw)});
  }
  NatTrans rho_displayed("rho^KW", compose_functors(K, Rb), compose_functors(R, W), std::move(rho));
  NatTrans delta_t("delta^KW", compose_functors(R, W), compose_functors(K, Rb), std::move(delta));
  r.check("rho-displayed-equals-mate", rho_displayed == right.rho);
  r.check("delta-inverse-left", detail::is_identity_on(vcompose(delta_t, rho_displayed), rho_displayed.source()));
  r.check("delta-inverse-right", detail::is_identity_on(vcompose(rho_displayed, delta_t), delta_t.source()));

  AdjTwoCell unit{identity_adj_one_cell(c.source), compose_adj_one_cells(right, c), jk.unit, vw.unit};
  AdjTwoCell counit{compose_adj_one_cells(c, right), identity_adj_one_cell(c.target), jk.counit, vw.counit};
  r.absorb("unit", validate_adj_two_cell(unit));
  r.absorb("counit", validate_adj_two_cell(counit));
  detail::check_triangles(r, "top", jk);
  detail::check_triangles(r, "bottom", vw);

  std::vector<int> g(C.object_count());
  for (int x = 0; x < C.object_count(); ++x)
    g[x] = Y.compose({vw.counit.at(Lb.obj(J.obj(x))), V.mor(lambdaKW.at(J.obj(x))), V.mor(L.mor(jk.unit.at(x)))});
  NatTrans gamma_recovered("gamma'", compose_functors(V, L), compose_functors(Lb, J), std::move(g));
  r.check("gamma-recovered", gamma_recovered == gamma);

  return AdjAdjointObject{c,     jk,        vw,   std::move(gamma), std::move(right), std::move(rho_displayed),
                          std::move(delta_t), std::move(gamma_recovered), std::move(unit), std::move(counit),
                          std::move(r)};
}

/** Right adjoint of an invertible monad 1-cell. */
struct MndAdjointObject {
  MndOneCell cell;
  Adjunction jk;
  NatTrans zeta;
  MndOneCell right;
  NatTrans zeta_recovered;
  MndTwoCell unit;
  MndTwoCell counit;
  Report report;

  bool ok() const { return report.ok(); }
};

/**
 * From an invertible (J, psi) and J -| K, the 1-cell (K, psi^K) with
 *   psi^K = K T eps . K zeta K . eta S K,   zeta = psi^-1.
 */
inline MndAdjointObject adjoint_object_mnd(const MndOneCell& c, const Adjunction& jk) {
  if (!(jk.left == c.carrier))
    throw StructuralError("adjoint object: the adjunction is not on the carrier");
  NatTrans zeta = inverse_of(c.psi, "adjoint object");

  const Functor& J = c.carrier;
  const Functor& K = jk.right;
  const Functor& S = c.source.endo;
  const Functor& T = c.target.endo;
  const auto& C = *c.source.base;
  const auto& D = *c.target.base;

  std::vector<int> p(D.object_count());
  for (int d = 0; d < D.object_count(); ++d) {
    int k = K.obj(d);
    p[d] = C.compose({K.mor(T.mor(jk.counit.at(d))), K.mor(zeta.at(k)), jk.unit.at(S.obj(k))});
  }
  MndOneCell right{c.target, c.source, K,
                   NatTrans("psi^K", compose_functors(S, K), compose_functors(K, T), std::move(p))};

  Report r;
  r.absorb("right-cell", validate_mnd_one_cell(right));
  MndTwoCell unit{identity_mnd_one_cell(c.source), c, jk.unit};
  MndTwoCell counit{c, identity_mnd_one_cell(c.target), jk.counit};
  if (r.ok()) {
    unit.to = compose_mnd_one_cells(right, c);
    counit.from = compose_mnd_one_cells(c, right);
    r.absorb("unit", validate_mnd_two_cell(unit));
    r.absorb("counit", validate_mnd_two_cell(counit));
  }
  detail::check_triangles(r, "carrier", jk);

  std::vector<int> z(C.object_count());
  for (int x = 0; x < C.object_count(); ++x)
    z[x] = D.compose({jk.counit.at(T.obj(J.obj(x))), J.mor(right.psi.at(J.obj(x))), J.mor(S.mor(jk.unit.at(x)))});
  NatTrans zeta_recovered("zeta'", compose_functors(J, S), compose_functors(T, J), std::move(z));
  r.check("zeta-recovered", zeta_recovered == zeta);

  return MndAdjointObject{c, jk, std::move(zeta), std::move(right), std::move(zeta_recovered),
                          std::move(unit), std::move(counit), std::move(r)};
}

/** The four conditions of the adjoint-object equivalence, each decided on its own. */
struct AdjointEquivalence {
  /** Some psi^K makes (K, psi^K) an adjoint object in Mnd. */
  bool mnd_adjoint_object = false;
  /** The lifted bottom functor has a right adjoint and some lambda^KW completes an adjoint object in Adj. */
  bool adj_adjoint_object = false;
  bool psi_invertible = false;
  bool lambda_invertible = false;
  std::vector<std::string> witness;

  bool agree() const noexcept {
    return mnd_adjoint_object == adj_adjoint_object && adj_adjoint_object == psi_invertible &&
           psi_invertible == lambda_invertible;
  }
};

/**
 * The two existence questions are answered by exhaustive search over
 * candidate components, never from the invertibility results.
 */
inline AdjointEquivalence adjoint_equivalence(const MndOneCell& c, const Adjunction& jk) {
  if (!(jk.left == c.carrier))
    throw StructuralError("adjoint equivalence: the adjunction is not on the carrier");
  AdjointEquivalence out;

  auto inv = is_invertible(c.psi);
  out.psi_invertible = inv.invertible;
  if (!inv) out.witness = {c.psi.dom()->object_id(inv.witness)};

  AdjOneCell lifted = psi_one_cell(c);
  out.lambda_invertible = is_invertible(lifted.lambda).invertible;

  const Functor& K = jk.right;
  const auto& C = *c.source.base;
  const auto& D = *c.target.base;
  {
    std::vector<std::vector<int>> choices(D.object_count());
    for (int d = 0; d < D.object_count(); ++d)
      choices[d] = C.hom(c.source.endo.obj(K.obj(d)), K.obj(c.target.endo.obj(d)));
    out.mnd_adjoint_object = detail::search_families(choices, [&](const std::vector<int>& fam) {
      MndOneCell right{c.target, c.source, K,
                       NatTrans("psi^K", compose_functors(c.source.endo, K), compose_functors(K, c.target.endo), fam)};
      if (!validate_mnd_one_cell(right).ok()) return false;
      MndTwoCell unit{identity_mnd_one_cell(c.source), compose_mnd_one_cells(right, c), jk.unit};
      MndTwoCell counit{compose_mnd_one_cells(c, right), identity_mnd_one_cell(c.target), jk.counit};
      return validate_mnd_two_cell(unit).ok() && validate_mnd_two_cell(counit).ok();
    });
  }

  auto vw = find_right_adjoint(lifted.bottom);
  if (vw) {
    const Functor& W = vw->right;
    const Functor& L = lifted.source.left;
    const Functor& Lb = lifted.target.left;
    const auto& X = *lifted.source.codomain();
    std::vector<std::vector<int>> choices(D.object_count());
    for (int d = 0; d < D.object_count(); ++d) choices[d] = X.hom(L.obj(K.obj(d)), W.obj(Lb.obj(d)));
    out.adj_adjoint_object = detail::search_families(choices, [&](const std::vector<int>& fam) {
      NatTrans lambda("lambda^KW", compose_functors(L, K), compose_functors(W, Lb), fam);
      if (!validate_nat_trans(lambda).ok()) return false;
      try {
        AdjOneCell right = make_adj_one_cell(lifted.target, lifted.source, K, W, lambda);
        AdjTwoCell unit{identity_adj_one_cell(lifted.source), compose_adj_one_cells(right, lifted), jk.unit,
                        vw->unit};
        AdjTwoCell counit{compose_adj_one_cells(lifted, right), identity_adj_one_cell(lifted.target),
                          jk.counit, vw->counit};
        return validate_adj_two_cell(unit).ok() && validate_adj_two_cell(counit).ok();
      } catch (const DomainError&) {
        return false;
      }
    });
  }
  return out;
}

} // namespace catkit

#endif
