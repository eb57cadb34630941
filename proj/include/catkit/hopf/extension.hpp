#ifndef CATKIT_HOPF_EXTENSION_HPP
#define CATKIT_HOPF_EXTENSION_HPP

#include <string>
#include <utility>
#include <vector>

#include "catkit/hopf/adjoint_object.hpp"

namespace catkit {

/**
 * Per-parameter adjoint objects of an invertible Adj Hopf cell assembled
 * into families over Q^op * D and Q^op * Y, plus the 1-cell they form
 * from 1_{Q^op} * (Lbar -| Rbar) to L -| R.
 */
struct AdjExtension {
  AdjHopf hopf;
  ParametricAdjunction jk;
  ParametricAdjunction vw;
  std::vector<AdjAdjointObject> per_parameter;
  /** lambda^KWR~ : L K (R~^op * D) => W (Q^op * Lbar). */
  ParamTrans lambda;
  /** inverse mates: R W => K (R~^op * Rbar). */
  ParamTrans varrho;
  AdjOneCell cell;
  Report report;

  bool ok() const { return report.ok(); }
};

namespace detail {

inline Functor op_times(const Functor& R, const Cat& D, const Cat& dom, const Cat& cod) {
  return product_functor(op_functor(R, dom->left_factor(), cod->left_factor()), identity_functor(D), dom, cod);
}

} // namespace detail

/**
 * Requires the Hopf operator to be invertible. `jk` is a parametric
 * adjunction on the top functor J: C*P -> D, `vw` one on V: X*Q -> Y.
 */
inline AdjExtension dinatural_extension_adj(const AdjHopf& h, const ParametricAdjunction& jk,
                                            const ParametricAdjunction& vw) {
  if (!h.analysis.hopf())
    throw DomainError("dinatural extension: the Hopf operator is not invertible", h.analysis.witness());
  const Adjunction& Lt = h.param;
  const Functor& Rt = Lt.right;
  const Cat& Q = Lt.codomain();
  const Cat& D = h.cell.target.domain();
  const Cat& Y = h.cell.target.codomain();
  const Adjunction& LR = h.left;
  const Adjunction& LRb = h.cell.target;
  if (!same(jk.P(), Lt.domain()) || !same(vw.P(), Q))
    throw StructuralError("dinatural extension: parametric adjunctions have the wrong parameters");
  if (!(vw.F == h.cell.bottom)) throw StructuralError("dinatural extension: V is not the bottom functor");

  Report r;
  std::vector<AdjAdjointObject> objects;
  for (int q = 0; q < Q->object_count(); ++q) {
    AdjOneCell cq = restrict_at_parameter(h, q);
    const Adjunction& a = jk.at(Rt.obj(q));
    objects.push_back(adjoint_object_adj(cq, a, vw.at(q)));
    r.absorb("adjoint-object[" + Q->object_id(q) + "]", objects.back().report);
  }

  const Functor& K = jk.G;
  const Functor& W = vw.G;
  Cat QopD = product_category(op_category(Q), D);
  Cat QopY = product_category(op_category(Q), Y);
  Functor K_Rt = compose_functors(K, detail::op_times(Rt, D, QopD, K.dom()));
  Functor Q_Lb = product_functor(identity_functor(QopY->left_factor()), LRb.left, QopD, W.dom());
  Functor Q_Rb = product_functor(identity_functor(QopD->left_factor()), LRb.right, QopY, QopD);

  std::vector<int> lam(QopD->object_count()), rho(QopY->object_count());
  for (int x = 0; x < QopD->object_count(); ++x) {
    auto [q, d] = QopD->split_object(x);
    lam[x] = objects[q].right.lambda.at(d);
  }
  for (int x = 0; x < QopY->object_count(); ++x) {
    auto [q, y] = QopY->split_object(x);
    rho[x] = objects[q].right.rho_inv.at(y);
  }
  ParamTrans lambda{"lambda^KWR", Q, D,
                    NatTrans("lambda^KWR", compose_functors(LR.left, K_Rt), compose_functors(W, Q_Lb), std::move(lam))};
  ParamTrans varrho{"varrho^KWR", Q, Y,
                    NatTrans("varrho^KWR", compose_functors(LR.right, W), compose_functors(K_Rt, Q_Rb), std::move(rho))};
  r.absorb("lambda", validate_param_trans(lambda));
  r.absorb("varrho", validate_param_trans(varrho));
  require(r, "dinatural extension");

  Adjunction source = product_adjunction(identity_adjunction(op_category(Q)), LRb);
  NatTrans l(lambda.family.name(), compose_functors(LR.left, K_Rt), compose_functors(W, source.left),
             lambda.family.components());
  AdjOneCell cell = make_adj_one_cell(source, LR, K_Rt, W, std::move(l));
  r.absorb("cell", validate_adj_one_cell(cell));
  r.check("cell-rho-inverse-is-varrho", cell.rho_inv.components() == varrho.family.components());
  return AdjExtension{h,     jk, vw, std::move(objects), std::move(lambda), std::move(varrho), std::move(cell),
                      std::move(r)};
}

/** Monad-side counterpart: psi^KU over Q^op * D with Q the parameters of the Hopf cell. */
struct MndExtension {
  MndHopf hopf;
  ParametricAdjunction jk;
  std::vector<MndAdjointObject> per_parameter;
  /** psi^KU : S K (R~^op * D) => K (R~^op * T). */
  ParamTrans psi;
  /** (K(R~^op * D), psi^KU) from 1_{Q^op} * T to S. */
  MndOneCell cell;
  Report report;

  bool ok() const { return report.ok(); }
};

inline MndExtension dinatural_extension_mnd(const MndHopf& h, const ParametricAdjunction& jk) {
  if (!h.analysis.hopf())
    throw DomainError("dinatural extension: the Hopf operator is not invertible", h.analysis.witness());
  const Functor& Rt = h.param.right;
  const Cat& Q = h.param.codomain();
  const Cat& D = h.cell.target.base;
  const Monad& T = h.cell.target;
  if (!same(jk.P(), h.param.domain()))
    throw StructuralError("dinatural extension: parametric adjunction has the wrong parameters");

  Report r;
  std::vector<MndAdjointObject> objects;
  for (int q = 0; q < Q->object_count(); ++q) {
    MndOneCell cq = restrict_at_algebra(h, q);
    objects.push_back(adjoint_object_mnd(cq, jk.at(Rt.obj(q))));
    r.absorb("adjoint-object[" + Q->object_id(q) + "]", objects.back().report);
  }

  Cat QopD = product_category(op_category(Q), D);
  Functor K_Rt = compose_functors(jk.G, detail::op_times(Rt, D, QopD, jk.G.dom()));
  Monad source = product_monad(identity_monad(QopD->left_factor()), T);
  std::vector<int> comp(QopD->object_count());
  for (int x = 0; x < QopD->object_count(); ++x) {
    auto [q, d] = QopD->split_object(x);
    comp[x] = objects[q].right.psi.at(d);
  }
  NatTrans family("psi^KU", compose_functors(h.S.endo, K_Rt), compose_functors(K_Rt, source.endo),
                  std::move(comp));
  ParamTrans psi{"psi^KU", Q, D, family};
  r.absorb("psi", validate_param_trans(psi));
  require(r, "dinatural extension");

  MndOneCell cell{source, h.S, K_Rt, family};
  r.absorb("cell", validate_mnd_one_cell(cell));
  return MndExtension{h, jk, std::move(objects), std::move(psi), std::move(cell), std::move(r)};
}

/**
 * The parametric adjoint object of a Hopf Adj 1-cell: refuses non-Hopf
 * input and requires every verification to pass.
 */
inline AdjExtension build_hopf_parametric_adjoint_object(const AdjOneCell& c, const Adjunction& left,
                                                         const Adjunction& param, const ParametricAdjunction& jk,
                                                         const ParametricAdjunction& vw) {
  AdjHopf h = hopf_operator_adj(c, left, param);
  if (!h.analysis.hopf())
    throw DomainError("the 1-cell is not Hopf", h.analysis.witness());
  ParametricAdjunction reindexed = reindex(jk, param.right);
  if (!(reindexed.F == h.cell.top)) throw LawError("reindexed parametric adjunction does not sit on J(C*R~)");
  AdjExtension ext = dinatural_extension_adj(h, jk, vw);
  require(ext.report, "Hopf parametric adjoint object");
  return ext;
}

inline MndExtension build_hopf_parametric_adjoint_object(const MndOneCell& c, const Monad& S, const Monad& E,
                                                         const ParametricAdjunction& jk) {
  MndHopf h = hopf_operator_mnd(c, S, E);
  if (!h.analysis.hopf())
    throw DomainError("the monad 1-cell is not Hopf", h.analysis.witness());
  MndExtension ext = dinatural_extension_mnd(h, jk);
  require(ext.report, "Hopf parametric adjoint object");
  return ext;
}

} // namespace catkit

#endif
