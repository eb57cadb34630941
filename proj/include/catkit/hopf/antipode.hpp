#ifndef CATKIT_HOPF_ANTIPODE_HPP
#define CATKIT_HOPF_ANTIPODE_HPP

#include <string>
#include <utility>
#include <vector>

#include "catkit/hopf/extension.hpp"

namespace catkit {

/**
 * Shared data of the antipode passage: K: P^op*D -> C, an endofunctor S
 * applied after K, an endofunctor T of D and the parameter adjunction
 * Lt -| Rt: P -> Q.
 */
struct AntipodeContext {
  Functor K;
  Functor S;
  Functor T;
  Adjunction param;
};

namespace detail {

inline Functor second_factor(const Functor& T, const Cat& product) {
  return product_functor(identity_functor(product->left_factor()), T, product, product);
}

} // namespace detail

/** sigma(P, D) = K((eta_P)^op, T D) . psi(Lt P, D), a family over P^op * D. */
inline ParamTrans sigma_from_psi(const AntipodeContext& ctx, const ParamTrans& psi) {
  const Functor& K = ctx.K;
  const Cat& PopD = K.dom();
  const Cat& P = ctx.param.domain();
  const auto& D = *PopD->right_factor();
  const auto& C = *K.cod();
  Functor E = compose_functors(ctx.param.right, ctx.param.left);
  std::vector<int> comp(PopD->object_count());
  for (int x = 0; x < PopD->object_count(); ++x) {
    auto [p, d] = PopD->split_object(x);
    int Kunit = K.mor(PopD->pair_morphism(ctx.param.unit.at(p), D.identity(ctx.T.obj(d))));
    comp[x] = C.compose(Kunit, psi.at(ctx.param.left.obj(p), d));
  }
  Functor source = compose_functors({ctx.S, K, detail::op_times(E, PopD->right_factor(), PopD, PopD)});
  Functor target = compose_functors(K, detail::second_factor(ctx.T, PopD));
  return ParamTrans{"sigma", P, PopD->right_factor(), NatTrans("sigma", source, target, std::move(comp))};
}

/** iota(Q, D) = sigma(Rt Q, D) . S K((Rt eps_Q)^op, D), a family over Q^op * D. */
inline ParamTrans psi_from_sigma(const AntipodeContext& ctx, const ParamTrans& sigma) {
  const Functor& K = ctx.K;
  const Cat& PopD = K.dom();
  const Cat& Q = ctx.param.codomain();
  const Cat& D = PopD->right_factor();
  const auto& C = *K.cod();
  const Functor& Rt = ctx.param.right;
  Cat QopD = product_category(op_category(Q), D);
  std::vector<int> comp(QopD->object_count());
  for (int x = 0; x < QopD->object_count(); ++x) {
    auto [q, d] = QopD->split_object(x);
    int Keps = K.mor(PopD->pair_morphism(Rt.mor(ctx.param.counit.at(q)), D->identity(d)));
    comp[x] = C.compose(sigma.at(Rt.obj(q), d), ctx.S.mor(Keps));
  }
  Functor KR = compose_functors(K, detail::op_times(Rt, D, QopD, PopD));
  Functor source = compose_functors(ctx.S, KR);
  Functor target = compose_functors(KR, detail::second_factor(ctx.T, QopD));
  return ParamTrans{"iota", Q, D, NatTrans("iota", source, target, std::move(comp))};
}

/** Antipode of a Hopf monad 1-cell over Eilenberg-Moore parameters. */
struct MndAntipode {
  AntipodeContext context;
  ParamTrans sigma;
  ParamTrans iota;
  Report report;

  bool ok() const { return report.ok(); }
};

inline MndAntipode antipode_mnd(const MndExtension& ext) {
  if (!ext.hopf.param_em) throw DomainError("antipode: parameters are not Eilenberg-Moore algebras");
  const EMBundle& em = *ext.hopf.param_em;
  const Monad& E = em.monad;
  const Monad& S = ext.hopf.S;
  const Monad& T = ext.hopf.cell.target;
  AntipodeContext ctx{ext.jk.G, S.endo, T.endo, em.adjunction};
  ParamTrans sigma = sigma_from_psi(ctx, ext.psi);
  ParamTrans iota = psi_from_sigma(ctx, sigma);

  Report r;
  r.absorb("sigma", validate_param_trans(sigma));
  r.check("iota-sigma-is-identity", iota == ext.psi);
  r.check("sigma-iota-is-identity", sigma_from_psi(ctx, iota) == sigma);

  const Functor& K = ctx.K;
  const Cat& PopD = K.dom();
  const auto& P = *E.base;
  const auto& D = *T.base;
  const auto& C = *S.base;
  for (int p = 0; p < P.object_count(); ++p)
    for (int d = 0; d < D.object_count(); ++d) {
      int Ep = E.endo.obj(p);
      int KEp = K.obj(PopD->pair_object(Ep, d));
      int Td = T.endo.obj(d);
      int lhs = C.compose(sigma.at(p, d), S.mult.at(KEp));
      int Kmu = K.mor(PopD->pair_morphism(E.mult.at(p), D.identity(d)));
      int rhs = C.compose({K.mor(PopD->pair_morphism(P.identity(p), T.mult.at(d))), sigma.at(p, Td),
                           S.endo.mor(sigma.at(Ep, d)), S.endo.mor(S.endo.mor(Kmu))});
      if (lhs != rhs) r.fail("antipode-mult", {P.object_id(p), D.object_id(d)});
      int lhs2 = C.compose(sigma.at(p, d), S.unit.at(KEp));
      int rhs2 = K.mor(PopD->pair_morphism(E.unit.at(p), T.unit.at(d)));
      if (lhs2 != rhs2) r.fail("antipode-unit", {P.object_id(p), D.object_id(d)});
    }
  return MndAntipode{std::move(ctx), std::move(sigma), std::move(iota), std::move(r)};
}

/** Antipode of a Hopf Adj 1-cell, through its monad-side family psi^KR~. */
struct AdjAntipode {
  AntipodeContext context;
  ParamTrans psi;
  ParamTrans sigma;
  ParamTrans iota;
  Report report;

  bool ok() const { return report.ok(); }
};

/** psi^KR~(Q, D) = varrho(Q, Lbar D) . R lambda(Q, D). */
inline ParamTrans psi_from_extension(const AdjExtension& ext) {
  const Adjunction& LR = ext.hopf.left;
  const Adjunction& LRb = ext.hopf.cell.target;
  const Functor& KR = ext.cell.top;
  const Cat& QopD = KR.dom();
  const auto& C = *KR.cod();
  std::vector<int> comp(QopD->object_count());
  for (int x = 0; x < QopD->object_count(); ++x) {
    auto [q, d] = QopD->split_object(x);
    comp[x] = C.compose(ext.varrho.at(q, LRb.left.obj(d)), LR.right.mor(ext.lambda.at(q, d)));
  }
  Functor RL = compose_functors(LR.right, LR.left);
  Functor TD = compose_functors(LRb.right, LRb.left);
  return ParamTrans{"psi^KR", ext.lambda.parameter, ext.lambda.argument,
                    NatTrans("psi^KR", compose_functors(RL, KR),
                             compose_functors(KR, detail::second_factor(TD, QopD)), std::move(comp))};
}

inline AdjAntipode antipode_adj(const AdjExtension& ext) {
  const Adjunction& LR = ext.hopf.left;
  const Adjunction& LRb = ext.hopf.cell.target;
  AntipodeContext ctx{ext.jk.G, compose_functors(LR.right, LR.left), compose_functors(LRb.right, LRb.left),
                      ext.hopf.param};
  ParamTrans psi = psi_from_extension(ext);
  ParamTrans sigma = sigma_from_psi(ctx, psi);
  ParamTrans iota = psi_from_sigma(ctx, sigma);
  Report r;
  r.absorb("psi", validate_param_trans(psi));
  r.absorb("sigma", validate_param_trans(sigma));
  r.check("iota-sigma-is-identity", iota == psi);
  r.check("sigma-iota-is-identity", sigma_from_psi(ctx, iota) == sigma);
  return AdjAntipode{std::move(ctx), std::move(psi), std::move(sigma), std::move(iota), std::move(r)};
}

} // namespace catkit

#endif
