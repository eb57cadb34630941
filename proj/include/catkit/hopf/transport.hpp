#ifndef CATKIT_HOPF_TRANSPORT_HPP
#define CATKIT_HOPF_TRANSPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "catkit/hopf/operators.hpp"

namespace catkit {

/** How the Adj and monad Hopf operators relate across Phi. */
struct PhiComparison {
  AdjHopf adj;
  MndHopf mnd;
  /** Phi of the Adj Hopf 1-cell. */
  MndOneCell phi_of_hopf;
  bool reflects_isos = false;
  Report report;

  bool ok() const { return report.ok(); }
};

/**
 * H(Phi lambda) = Phi(H lambda) with the mate unchanged. When Rbar reflects
 * isomorphisms both operators are invertible together, and then
 *   N(Phi lambda) = Rbar N(lambda) . rho(L * Q).
 */
inline PhiComparison compare_hopf_phi(const AdjOneCell& c, const Adjunction& left, const Adjunction& param) {
  AdjHopf adj = hopf_operator_adj(c, left, param);
  MndOneCell phi = phi_one_cell(c);
  MndHopf mnd = hopf_operator_mnd_along(phi, monad_from_adjunction(left), param);
  MndOneCell phi_h = phi_one_cell(adj.cell);

  Report r;
  r.check("hopf-commutes-with-phi", phi_h == mnd.cell);
  r.check("mate-unchanged", adj.cell.rho.components() == c.rho.components());
  bool reflects = reflects_isomorphisms(c.target.right);
  bool inv_adj = adj.analysis.hopf();
  bool inv_mnd = mnd.analysis.hopf();
  r.check("adj-hopf-implies-mnd-hopf", !inv_adj || inv_mnd);
  if (reflects) r.check("hopf-equivalence", inv_adj == inv_mnd, mnd.analysis.witness());
  if (inv_adj && inv_mnd) {
    const NatTrans& N = *adj.analysis.inv.inverse;
    NatTrans rhoLQ = whisker_right(adj.cell.rho, adj.cell.source.left);
    NatTrans formula = vcompose(whisker_left(c.target.right, N), rhoLQ);
    r.check("inverse-relation", formula.components() == mnd.analysis.inv.inverse->components());
  }
  return PhiComparison{std::move(adj), std::move(mnd), std::move(phi_h), reflects, std::move(r)};
}

/** Fusion operator of Phi(lambda) against the Adj Hopf operator. */
struct FusionComparison {
  MndFusion fusion;
  AdjHopf adj;
  MndOneCell phi_of_hopf;
  bool reflects_isos = false;
  Report report;

  bool ok() const { return report.ok(); }
};

/**
 * F(Phi lambda) = Phi(H lambda)(C * L~); per object C the pointwise lemma
 * turns invertibility of the whiskered family into invertibility of the
 * family itself with the explicit inverse A(R~ eps~) . (alpha L~)^-1 R~ . B(eta~ R~).
 */
inline FusionComparison fusion_hopf_equivalence(const AdjOneCell& c, const Adjunction& left,
                                                const Adjunction& param) {
  Monad S = monad_from_adjunction(left);
  Monad E = monad_from_adjunction(param);
  MndOneCell phi = phi_one_cell(c);
  MndFusion fusion = fusion_operator_mnd(phi, S, E);
  AdjHopf adj = hopf_operator_adj(c, left, param);
  MndOneCell phi_h = phi_one_cell(adj.cell);

  const Cat& C = left.domain();
  const Cat& Q = param.codomain();
  const Cat& CP = c.source.domain();
  const Cat& CQ = adj.cell.top.dom();
  const auto& D = *c.target.domain();
  const Functor& Lt = param.left;
  const Functor& Rt = param.right;
  const Functor& J = c.top;
  const Functor& T = phi.target.endo;

  Report r;
  Functor CxL = product_functor(identity_functor(C), Lt, CP, CQ);
  NatTrans reindexed = whisker_right(phi_h.psi, CxL);
  r.check("fusion-equals-reindexed-hopf", reindexed.components() == fusion.cell.psi.components() &&
                                              reindexed.source() == fusion.cell.psi.source() &&
                                              reindexed.target() == fusion.cell.psi.target());

  // Pointwise lemma at each object of C: alpha: A R~ => B R~ with A, B: P -> D.
  bool all_pointwise = true;
  for (int x = 0; x < C->object_count(); ++x) {
    const std::string& xid = C->object_id(x);
    Functor A = compose_functors({T, J, insert_left(CP, x)});
    Functor B = compose_functors(J, insert_left(CP, S.endo.obj(x)));
    NatTrans a0 = whisker_right(phi_h.psi, insert_left(CQ, x));
    NatTrans alpha("alpha_" + xid, compose_functors(A, Rt), compose_functors(B, Rt), a0.components());
    r.absorb("lemma[" + xid + "]", validate_nat_trans(alpha));
    NatTrans alphaL = whisker_right(alpha, Lt);
    auto invL = is_invertible(alphaL);
    auto inv = is_invertible(alpha);
    r.check("lemma-invertibility", invL.invertible == inv.invertible, {xid});
    all_pointwise = all_pointwise && inv.invertible;
    if (invL && inv) {
      std::vector<int> comp(Q->object_count());
      for (int q = 0; q < Q->object_count(); ++q) {
        int rq = Rt.obj(q);
        comp[q] = D.compose({A.mor(Rt.mor(param.counit.at(q))), invL.inverse->at(rq),
                             B.mor(param.unit.at(rq))});
      }
      r.check("lemma-inverse-formula", comp == inv.inverse->components(), {xid});
    }
  }
  r.check("pointwise-matches-global", all_pointwise == is_invertible(phi_h.psi).invertible);

  bool fusion_inv = fusion.analysis.hopf();
  bool hopf_mnd = is_invertible(phi_h.psi).invertible;
  r.check("fusion-iff-phi-hopf", fusion_inv == hopf_mnd, fusion.analysis.witness());
  bool reflects = reflects_isomorphisms(c.target.right);
  if (reflects) r.check("fusion-iff-hopf", fusion_inv == adj.analysis.hopf());

  if (fusion_inv && hopf_mnd && adj.analysis.hopf()) {
    // Rbar N(lambda) . rho(L*Q) = T J(C * R~eps~) . G(C * R~) . J(RL * eta~ R~)
    const NatTrans& G = *fusion.analysis.inv.inverse;
    const Functor& RL = S.endo;
    std::vector<int> comp(CQ->object_count());
    for (int x = 0; x < CQ->object_count(); ++x) {
      auto [cx, q] = CQ->split_object(x);
      int rq = Rt.obj(q);
      int first = J.mor(CP->pair_morphism(RL.mor(C->identity(cx)), param.unit.at(rq)));
      int second = G.at(CP->pair_object(cx, rq));
      int third = T.mor(J.mor(CP->pair_morphism(C->identity(cx), Rt.mor(param.counit.at(q)))));
      comp[x] = D.compose({third, second, first});
    }
    NatTrans rhoLQ = whisker_right(adj.cell.rho, adj.cell.source.left);
    NatTrans formula = vcompose(whisker_left(c.target.right, *adj.analysis.inv.inverse), rhoLQ);
    r.check("global-inverse-formula", comp == formula.components());
  }
  return FusionComparison{std::move(fusion), std::move(adj), std::move(phi_h), reflects, std::move(r)};
}

} // namespace catkit

#endif
