#ifndef CATKIT_HOPF_OPERATORS_HPP
#define CATKIT_HOPF_OPERATORS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catkit/hopf/parametric.hpp"

namespace catkit {

/** An operator transformation and whether it is invertible. */
struct HopfAnalysis {
  NatTrans op;
  Invertibility inv;

  bool hopf() const noexcept { return inv.invertible; }

  /** Object of the operator's domain where invertibility first fails. */
  std::vector<std::string> witness() const {
    if (inv.invertible) return {};
    return {op.dom()->object_id(inv.witness)};
  }
};

inline HopfAnalysis analyse(NatTrans op) {
  Invertibility inv = is_invertible(op);
  return HopfAnalysis{std::move(op), std::move(inv)};
}

/** Result of the Hopf operator on a 1-cell out of left * param. */
struct AdjHopf {
  /** (J(C*R~), V, H(lambda)) out of left * 1_Q. */
  AdjOneCell cell;
  Adjunction left;
  Adjunction param;
  HopfAnalysis analysis;
};

/**
 * For (J, V, lambda) out of L*L~ -| R*R~:
 *   H(lambda) = V(L * eps~) . lambda(C * R~)  :  Lbar J (C*R~) => V (L*Q).
 */
inline AdjHopf hopf_operator_adj(const AdjOneCell& c, const Adjunction& left, const Adjunction& param) {
  if (!(c.source == product_adjunction(left, param)))
    throw DomainError("Hopf operator: the cell does not start at " + left.name + "*" + param.name);
  const Cat& CP = c.source.domain();
  const Cat& XQ = c.source.codomain();
  const Cat& C = left.domain();
  const Cat& Q = param.codomain();
  Cat CQ = product_category(C, Q);

  Functor CxR = product_functor(identity_functor(C), param.right, CQ, CP);
  NatTrans reindexed = whisker_right(c.lambda, CxR);
  NatTrans Leps = product_nat(identity_nat(left.left), param.counit, CQ, XQ);
  NatTrans H = vcompose(whisker_left(c.bottom, Leps), reindexed);

  Adjunction source = product_adjunction(left, identity_adjunction(Q));
  Functor top = compose_functors(c.top, CxR).renamed(c.top.name() + "(C*" + param.right.name() + ")");
  NatTrans lambda("H(" + c.lambda.name() + ")", compose_functors(c.target.left, top),
                  compose_functors(c.bottom, source.left), H.components());
  AdjOneCell cell = make_adj_one_cell(source, c.target, top, c.bottom, lambda);
  HopfAnalysis analysis = analyse(cell.lambda);
  return AdjHopf{std::move(cell), left, param, std::move(analysis)};
}

/** Result of the Hopf operator on a monad 1-cell out of S * E. */
struct MndHopf {
  /** (J(C*R~), H(psi)) out of S * 1_Q. */
  MndOneCell cell;
  Monad S;
  Adjunction param;
  HopfAnalysis analysis;
  /** Set when the parameter adjunction is the Eilenberg-Moore one of E. */
  std::optional<EMBundle> param_em;
};

/**
 * Along an adjunction L~ -| R~ inducing E:
 *   H(psi) = J(S * R~eps~) . psi(C * R~)  :  T J (C*R~) => J (C*R~) (S*Q).
 */
inline MndHopf hopf_operator_mnd_along(const MndOneCell& c, const Monad& S, const Adjunction& param) {
  Monad E = monad_from_adjunction(param);
  if (!(c.source == product_monad(S, E)))
    throw DomainError("Hopf operator: the monad 1-cell does not start at " + S.name + "*" + E.name);
  const Cat& C = S.base;
  const Cat& Q = param.codomain();
  const Cat& CP = c.source.base;
  Cat CQ = product_category(C, Q);

  Functor CxR = product_functor(identity_functor(C), param.right, CQ, CP);
  NatTrans reindexed = whisker_right(c.psi, CxR);
  NatTrans Reps = whisker_left(param.right, param.counit);
  NatTrans SxReps = product_nat(identity_nat(S.endo), Reps, CQ, CP);
  NatTrans H = vcompose(whisker_left(c.carrier, SxReps), reindexed);

  Monad source = product_monad(S, identity_monad(Q));
  Functor carrier =
      compose_functors(c.carrier, CxR).renamed(c.carrier.name() + "(C*" + param.right.name() + ")");
  NatTrans psi("H(" + c.psi.name() + ")", compose_functors(c.target.endo, carrier),
               compose_functors(carrier, source.endo), H.components());
  MndOneCell cell = checked(MndOneCell{std::move(source), c.target, std::move(carrier), std::move(psi)});
  HopfAnalysis analysis = analyse(cell.psi);
  return MndHopf{std::move(cell), S, param, std::move(analysis), std::nullopt};
}

/** Component at (C, (M,k)) is J(S C, k) . psi_(C, M). */
inline MndHopf hopf_operator_mnd(const MndOneCell& c, const Monad& S, const Monad& E) {
  EMBundle em = em_category(E);
  MndHopf h = hopf_operator_mnd_along(c, S, em.adjunction);
  h.param_em = std::move(em);
  return h;
}

struct MndFusion {
  /** (J(C*E), F(psi)) out of S * 1_P. */
  MndOneCell cell;
  HopfAnalysis analysis;
};

/** F(psi) = J(S * mu^E) . psi(C * E)  :  T J (C*E) => J (S*E). */
inline MndFusion fusion_operator_mnd(const MndOneCell& c, const Monad& S, const Monad& E) {
  if (!(c.source == product_monad(S, E)))
    throw DomainError("fusion operator: the monad 1-cell does not start at " + S.name + "*" + E.name);
  const Cat& C = S.base;
  const Cat& CP = c.source.base;
  Functor CxE = product_functor(identity_functor(C), E.endo, CP, CP);
  NatTrans reindexed = whisker_right(c.psi, CxE);
  NatTrans Smu = product_nat(identity_nat(S.endo), E.mult, CP, CP);
  NatTrans F = vcompose(whisker_left(c.carrier, Smu), reindexed);

  Monad source = product_monad(S, identity_monad(E.base));
  Functor carrier = compose_functors(c.carrier, CxE).renamed(c.carrier.name() + "(C*" + E.endo.name() + ")");
  NatTrans psi("F(" + c.psi.name() + ")", compose_functors(c.target.endo, carrier),
               compose_functors(carrier, source.endo), F.components());
  MndOneCell cell = checked(MndOneCell{std::move(source), c.target, std::move(carrier), std::move(psi)});
  HopfAnalysis analysis = analyse(cell.psi);
  return MndFusion{std::move(cell), std::move(analysis)};
}

/**
 * The Hopf 1-cell with its parameter fixed at q: (J(-,R~q), V(-,q), lambda_q)
 * from left to the target. Computed whether or not the operator is invertible.
 */
inline AdjOneCell restrict_at_parameter(const AdjHopf& h, int q) {
  const AdjOneCell& c = h.cell;
  const Cat& Q = h.param.codomain();
  if (q < 0 || q >= Q->object_count()) throw DomainError("restriction: no such parameter");
  Functor iC = insert_right(c.top.dom(), q);
  Functor iX = insert_right(c.bottom.dom(), q);
  const std::string& qid = Q->object_id(q);
  Functor Jq = compose_functors(c.top, iC).renamed(c.top.name() + "(-," + qid + ")");
  Functor Vq = compose_functors(c.bottom, iX).renamed(c.bottom.name() + "(-," + qid + ")");
  NatTrans l = whisker_right(c.lambda, iC);
  NatTrans lambda(c.lambda.name() + "_" + qid, compose_functors(c.target.left, Jq),
                  compose_functors(Vq, h.left.left), l.components());
  return make_adj_one_cell(h.left, c.target, std::move(Jq), std::move(Vq), std::move(lambda));
}

/** The Hopf monad 1-cell at a fixed parameter object (an algebra for EM parameters). */
inline MndOneCell restrict_at_algebra(const MndHopf& h, int q) {
  const MndOneCell& c = h.cell;
  const Cat& Q = h.param.codomain();
  if (q < 0 || q >= Q->object_count()) throw DomainError("restriction: no such parameter");
  Functor iC = insert_right(c.carrier.dom(), q);
  const std::string& qid = Q->object_id(q);
  Functor Jq = compose_functors(c.carrier, iC).renamed(c.carrier.name() + "(-," + qid + ")");
  NatTrans l = whisker_right(c.psi, iC);
  NatTrans psi(c.psi.name() + "_" + qid, compose_functors(c.target.endo, Jq),
               compose_functors(Jq, h.S.endo), l.components());
  return checked(MndOneCell{h.S, c.target, std::move(Jq), std::move(psi)});
}

} // namespace catkit

#endif
