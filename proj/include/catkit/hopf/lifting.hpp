#ifndef CATKIT_HOPF_LIFTING_HPP
#define CATKIT_HOPF_LIFTING_HPP

#include <string>
#include <utility>
#include <vector>

#include "catkit/hopf/antipode.hpp"

namespace catkit {

/**
 * A parametric adjunction J -|_P K with a Hopf monad 1-cell on J, lifted to
 * Jhat: C^S * P^E -> D^T and Khat: (P^E)^op * D^T -> C^S.
 */
struct LiftingResult {
  MndHopf hopf;
  MndExtension extension;
  EMBundle em_source;
  EMBundle em_target;
  /** (J, Jhat, lambda) from F^S * F^E to F^T. */
  AdjOneCell left_cell;
  /** (K(U^Eop * D), Khat, lambda) from 1 * F^T to F^S. */
  AdjOneCell right_cell;
  ParametricAdjunction lifted;
  Report report;

  bool ok() const { return report.ok(); }
  const EMBundle& em_parameters() const { return *hopf.param_em; }
};

namespace detail {

/** The Eilenberg-Moore category of the identity monad and its comparison from C. */
struct IdentityResolution {
  EMBundle em;
  Functor iso;
};

inline IdentityResolution identity_resolution(const Cat& C, Report& r, const std::string& tag) {
  EMBundle em = em_category(identity_monad(C));
  Functor iso = comparison_functor(identity_adjunction(C), em);
  r.check("canonical-iso-" + tag, compose_functors(em.forget, iso) == identity_functor(C) &&
                                      compose_functors(iso, em.forget) == identity_functor(em.em));
  return IdentityResolution{std::move(em), std::move(iso)};
}

/** Lambda recovered from an identity mate: left mate of 1 : F Ra => Rb G. */
inline MndOneCell recover_from_lift(const Functor& F, const Functor& G, const Adjunction& a, const Adjunction& b) {
  Functor FRa = compose_functors(F, a.right);
  NatTrans one("1", FRa, compose_functors(b.right, G), identity_nat(FRa).components());
  NatTrans lambda = left_mate(one, F, G, a, b);
  return phi_one_cell(make_adj_one_cell(a, b, F, G, lambda));
}

} // namespace detail

inline LiftingResult lift_parametric_adjunction(const MndOneCell& c, const Monad& S, const Monad& E,
                                                const ParametricAdjunction& jk) {
  if (!(jk.F == c.carrier)) throw StructuralError("lifting: the parametric adjunction is not on the carrier");
  MndHopf hopf = hopf_operator_mnd(c, S, E);
  if (!hopf.analysis.hopf()) throw DomainError("lifting: the monad 1-cell is not Hopf", hopf.analysis.witness());
  MndExtension ext = dinatural_extension_mnd(hopf, jk);
  require(ext.report, "lifting: dinatural extension");

  Report r;
  EMBundle emS = em_category(S);
  EMBundle emT = em_category(c.target);
  const EMBundle& emE = *hopf.param_em;
  const Cat& Q = emE.em;
  Cat Qop = op_category(Q);

  Adjunction over_left = product_adjunction(emS.adjunction, emE.adjunction);
  AdjOneCell left_cell = lift_one_cell(c, over_left, emT);
  const Functor& Jhat = left_cell.bottom;
  AdjOneCell hopf_lift = lift_one_cell(hopf.cell, product_adjunction(emS.adjunction, identity_adjunction(Q)), emT);
  r.check("hopf-lift-agrees", hopf_lift.bottom == Jhat);

  Adjunction over_right = product_adjunction(identity_adjunction(Qop), emT.adjunction);
  AdjOneCell right_cell = lift_one_cell(ext.cell, over_right, emS);
  const Functor& Khat = right_cell.bottom;

  std::vector<Adjunction> per;
  for (int q = 0; q < Q->object_count(); ++q) {
    const Adjunction& a = jk.at(emE.forget.obj(q));
    Functor Jq = section_left(Jhat, q);
    Functor Kq = section_right(Khat, q);
    const auto& CS = *emS.em;
    const auto& DT = *emT.em;
    std::vector<int> unit(CS.object_count()), counit(DT.object_count());
    for (int x = 0; x < CS.object_count(); ++x) {
      unit[x] = emS.lift(a.unit.at(emS.forget.obj(x)), x, Kq.obj(Jq.obj(x)));
      if (unit[x] < 0) throw LawError("lifted unit is not an algebra map", {Q->object_id(q), CS.object_id(x)});
    }
    for (int y = 0; y < DT.object_count(); ++y) {
      counit[y] = emT.lift(a.counit.at(emT.forget.obj(y)), Jq.obj(Kq.obj(y)), y);
      if (counit[y] < 0) throw LawError("lifted counit is not an algebra map", {Q->object_id(q), DT.object_id(y)});
    }
    NatTrans eta("eta^" + Q->object_id(q), identity_functor(emS.em), compose_functors(Kq, Jq), std::move(unit));
    NatTrans eps("eps^" + Q->object_id(q), compose_functors(Jq, Kq), identity_functor(emT.em), std::move(counit));
    per.push_back(Adjunction{Jq.name() + "-|" + Kq.name(), Jq, Kq, std::move(eta), std::move(eps)});
  }
  ParametricAdjunction lifted{jk.name + "^", Jhat, Khat, std::move(per)};
  r.absorb("lifted", validate_parametric_adjunction(lifted));

  r.check("forgetful-square-left",
          compose_functors(emT.forget, Jhat) ==
              compose_functors(c.carrier, product_functor(emS.forget, emE.forget, Jhat.dom(), c.carrier.dom())));
  Functor UEop = op_functor(emE.forget, Khat.dom()->left_factor(), jk.G.dom()->left_factor());
  r.check("forgetful-square-right",
          compose_functors(emS.forget, Khat) ==
              compose_functors(jk.G, product_functor(UEop, emT.forget, Khat.dom(), jk.G.dom())));

  AdjHopf adj = hopf_operator_adj(left_cell, emS.adjunction, emE.adjunction);
  r.check("lifted-cell-hopf", adj.analysis.hopf(), adj.analysis.witness());

  // Comparison functors carry both lifts of the Hopf data onto each other.
  Functor KX = comparison_functor(emS.adjunction, emS);
  Functor KY = comparison_functor(emT.adjunction, emT);
  auto idQ = detail::identity_resolution(Q, r, "parameters");
  auto idQop = detail::identity_resolution(Qop, r, "op-parameters");
  Functor Hlift = lift_one_cell(hopf.cell, product_adjunction(emS.adjunction, idQ.em.adjunction), emT).bottom;
  r.check("comparison-square-left",
          compose_functors(Hlift, product_functor(KX, idQ.iso, Jhat.dom(), Hlift.dom())) ==
              compose_functors(KY, Jhat));
  Functor Hsharp = lift_one_cell(ext.cell, product_adjunction(idQop.em.adjunction, emT.adjunction), emS).bottom;
  r.check("comparison-square-right",
          compose_functors(KX, Khat) ==
              compose_functors(Hsharp, product_functor(idQop.iso, KY, Khat.dom(), Hsharp.dom())));

  if (r.ok()) {
    AdjExtension adj_ext = dinatural_extension_adj(adj, jk, lifted);
    r.absorb("adj-extension", adj_ext.report);
    ParamTrans psi_adj = psi_from_extension(adj_ext);
    r.check("adj-extension-matches-mnd-extension", psi_adj.family.components() == ext.psi.family.components());
    r.absorb("adj-antipode", antipode_adj(adj_ext).report);
  }

  MndOneCell back = detail::recover_from_lift(c.carrier, Jhat, over_left, emT.adjunction);
  r.check("roundtrip-lifting-to-hopf", back.psi.components() == c.psi.components());
  MndOneCell back_ext = detail::recover_from_lift(ext.cell.carrier, Khat, over_right, emS.adjunction);
  r.check("roundtrip-lifting-to-extension", back_ext.psi.components() == ext.psi.family.components());

  MndOneCell again{c.source, c.target, c.carrier,
                   NatTrans(c.psi.name(), c.psi.source(), c.psi.target(), back.psi.components())};
  MndOneCell again_ext{ext.cell.source, ext.cell.target, ext.cell.carrier,
                       NatTrans(ext.cell.psi.name(), ext.cell.psi.source(), ext.cell.psi.target(),
                                back_ext.psi.components())};
  r.check("roundtrip-hopf-to-lifting", lift_one_cell(again, over_left, emT).bottom == Jhat &&
                                           lift_one_cell(again_ext, over_right, emS).bottom == Khat);

  return LiftingResult{std::move(hopf), std::move(ext),      std::move(emS),     std::move(emT),
                       std::move(left_cell), std::move(right_cell), std::move(lifted), std::move(r)};
}

} // namespace catkit

#endif
