#ifndef CATKIT_TESTS_SCENARIOS_HPP
#define CATKIT_TESTS_SCENARIOS_HPP

#include <string>

#include "catkit/fixtures.hpp"

namespace scenario {

using namespace catkit;

/** A monad 1-cell out of S * E with its Eilenberg-Moore resolutions and Adj-side lift. */
struct ProductCell {
  MndOneCell cell;
  Monad S;
  Monad E;
  EMBundle em_S;
  EMBundle em_E;
  EMBundle em_T;
  /** The lift of the cell over the product of the two resolutions. */
  AdjOneCell adj;

  const Adjunction& left() const { return em_S.adjunction; }
  const Adjunction& param() const { return em_E.adjunction; }
};

inline ProductCell make(MndOneCell cell, Monad S, Monad E) {
  EMBundle s = em_category(S), e = em_category(E), t = em_category(cell.target);
  AdjOneCell adj = lift_one_cell(cell, product_adjunction(s.adjunction, e.adjunction), t);
  return ProductCell{std::move(cell), std::move(S), std::move(E), std::move(s), std::move(e), std::move(t),
                     std::move(adj)};
}

inline ProductCell nucleus() { return make(fixtures::nucleus_cell(), fixtures::nucleus(), fixtures::nucleus()); }

inline ProductCell meetcell() {
  Monad S = fixtures::closure1();
  return make(fixtures::meet_cell(), S, identity_monad(S.base));
}

/** A left adjoint's adjunction, found by search; fails loudly when absent. */
inline Adjunction right_adjoint(const Functor& L) {
  auto a = find_right_adjoint(L);
  if (!a) throw DomainError("no right adjoint for " + L.name());
  return *a;
}

} // namespace scenario

#endif
