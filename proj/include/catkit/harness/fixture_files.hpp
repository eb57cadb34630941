#ifndef CATKIT_HARNESS_FIXTURE_FILES_HPP
#define CATKIT_HARNESS_FIXTURE_FILES_HPP

#include <string>
#include <vector>

#include "catkit/fixtures.hpp"
#include "catkit/harness/spec_file.hpp"

namespace catkit::harness {

namespace detail {

/** Accumulates a spec document from engine values, naming each by the caller's references. */
class FixtureDoc {
public:
  void category(const Cat& c) { section("categories")[c->name()] = category_json(*c); }

  void functor(const std::string& name, const Functor& F, const std::string& dom, const std::string& cod) {
    section("functors")[name] = functor_json(F, dom, cod);
  }

  void nat(const std::string& name, const NatTrans& t, const std::string& source, const std::string& target) {
    section("natural_transformations")[name] = {
        {"source", source}, {"target", target}, {"components", components_json(t)}};
  }

  /** Declares the endofunctor, multiplication and unit alongside the monad. */
  void monad(const Monad& m) {
    const std::string& n = m.name;
    const std::string& base = m.base->name();
    functor(n, m.endo, base, base);
    nat("mu_" + n, m.mult, n + "." + n, n);
    nat("eta_" + n, m.unit, "id(" + base + ")", n);
    section("monads")[n] = {{"base", base}, {"endo", n}, {"mult", "mu_" + n}, {"unit", "eta_" + n}};
  }

  void adjunction(const std::string& name, const Adjunction& a, const std::string& left, const std::string& right) {
    const std::string C = a.domain()->name();
    const std::string D = a.codomain()->name();
    functor(left, a.left, C, D);
    functor(right, a.right, D, C);
    nat("eta_" + name, a.unit, "id(" + C + ")", right + "." + left);
    nat("eps_" + name, a.counit, left + "." + right, "id(" + D + ")");
    section("adjunctions")[name] = {
        {"left", left}, {"right", right}, {"unit", "eta_" + name}, {"counit", "eps_" + name}};
  }

  void mnd_cell(const std::string& name, const std::string& source, const std::string& target, const std::string& top,
                const std::string& psi) {
    section("one_cells")[name] = {{"kind", "mnd"}, {"source", source}, {"target", target}, {"top", top}, {"psi", psi}};
  }

  void adj_cell(const std::string& name, const std::string& source, const std::string& target, const std::string& top,
                const std::string& bottom, const NatTrans& lambda) {
    section("one_cells")[name] = {{"kind", "adj"},       {"source", source}, {"target", target}, {"top", top},
                                  {"bottom", bottom},    {"lambda", {{"components", components_json(lambda)}}}};
  }

  /** Per-parameter adjunctions named <name>_<p>, with sections named <F>_<p> and <G>_<p>. */
  void parametric(const std::string& name, const ParametricAdjunction& pa, const std::string& F, const std::string& G,
                  const std::string& fdom, const std::string& gdom) {
    const std::string C = pa.C()->name();
    functor(F, pa.F, fdom, C);
    functor(G, pa.G, gdom, C);
    ojson per = ojson::array();
    for (int p = 0; p < pa.P()->object_count(); ++p) {
      const std::string& q = pa.P()->object_id(p);
      adjunction(name + "_" + q, pa.at(p), F + "_" + q, G + "_" + q);
      per.push_back({{"param", q}, {"adjunction", name + "_" + q}});
    }
    section("parametric_adjunctions")[name] = {{"F", F}, {"G", G}, {"per_parameter", std::move(per)}};
  }

  void task(const std::string& name, const std::string& op, ojson args) {
    if (!doc_.contains("tasks")) doc_["tasks"] = ojson::array();
    doc_["tasks"].push_back({{"name", name}, {"op", op}, {"args", std::move(args)}});
  }

  const ojson& doc() const { return doc_; }

private:
  ojson doc_ = ojson::object();

  ojson& section(const char* key) {
    if (!doc_.contains(key)) doc_[key] = ojson::object();
    return doc_[key];
  }
};

inline Cat fixture_category(const std::string& name) {
  if (name == "one") return fixtures::one();
  if (name == "two") return fixtures::two();
  if (name == "bool4") return fixtures::bool4();
  if (name == "z2") return fixtures::z2();
  return nullptr;
}

inline ojson category_fixture(const Cat& c) {
  FixtureDoc d;
  d.category(c);
  const std::string n = c->name();
  d.task("category", "validate-category", {{"category", n}});
  d.task("identity-monad", "validate-monad", {{"monad", "id(" + n + ")"}});
  d.task("em", "em", {{"monad", "id(" + n + ")"}});
  return d.doc();
}

inline ojson closure1_fixture() {
  FixtureDoc d;
  Monad j1 = fixtures::closure1();
  d.category(j1.base);
  d.monad(j1);
  d.task("monad", "validate-monad", {{"monad", "j1"}});
  d.task("em", "em", {{"monad", "j1"}});
  return d.doc();
}

inline ojson nucleus_fixture() {
  FixtureDoc d;
  Monad j = fixtures::nucleus();
  MndOneCell cell = fixtures::nucleus_cell();
  EMBundle em = em_category(j);
  AdjOneCell lifted = lift_one_cell(cell, product_adjunction(em.adjunction, em.adjunction), em);

  d.category(j.base);
  d.monad(j);
  d.parametric("heyting", fixtures::heyting(j.base), "meet", "imp", "Bool4*Bool4", "Bool4^op*Bool4");
  d.nat("psi_meet", cell.psi, "j.meet", "meet.(j*j)");
  d.mnd_cell("meet_cell", "j*j", "j", "meet", "psi_meet");
  d.functor("meet_em", lifted.bottom, "EM(j)*EM(j)", "EM(j)");
  d.adj_cell("meet_lift", "EM(j)*EM(j)", "EM(j)", "meet", "meet_em", lifted.lambda);

  ojson mnd{{"cell", "meet_cell"}, {"left", "j"}, {"param", "j"}};
  ojson adj{{"cell", "meet_lift"}, {"left", "EM(j)"}, {"param", "EM(j)"}};
  ojson with_heyting = mnd;
  with_heyting["parametric"] = "heyting";

  d.task("category", "validate-category", {{"category", "Bool4"}});
  d.task("monad", "validate-monad", {{"monad", "j"}});
  d.task("parametric", "validate-parametric", {{"parametric", "heyting"}});
  d.task("meet-cell", "validate-one-cell", {{"cell", "meet_cell"}});
  d.task("meet-lift", "validate-one-cell", {{"cell", "meet_lift"}});
  d.task("em", "em", {{"monad", "j"}});
  d.task("phi", "phi", {{"cell", "meet_lift"}});
  d.task("psi", "psi", {{"cell", "meet_cell"}});
  d.task("hopf-mnd", "hopf-mnd", mnd);
  d.task("hopf-adj", "hopf-adj", adj);
  d.task("fusion", "fusion", mnd);
  d.task("compare-phi", "compare-phi", adj);
  d.task("fusion-hopf", "fusion-hopf", adj);
  d.task("adjoint-object-mnd", "adjoint-object", with_heyting);
  d.task("adjoint-object-adj", "adjoint-object", adj);
  d.task("adjoint-equivalence", "adjoint-equivalence", with_heyting);
  d.task("dinatural-extend", "dinatural-extend", with_heyting);
  d.task("antipode", "antipode", with_heyting);
  d.task("lift", "lift", with_heyting);
  return d.doc();
}

inline ojson meetcell_fixture() {
  FixtureDoc d;
  Monad j1 = fixtures::closure1();
  MndOneCell cell = fixtures::meet_cell();
  EMBundle es = em_category(j1), ee = em_category(identity_monad(j1.base));
  AdjOneCell lifted = lift_one_cell(cell, product_adjunction(es.adjunction, ee.adjunction), ee);

  d.category(j1.base);
  d.monad(j1);
  d.functor("meet", cell.carrier, "Two*Two", "Two");
  d.nat("psi_meet", cell.psi, "id(Two).meet", "meet.(j1*id(Two))");
  d.mnd_cell("meet_cell", "j1*id(Two)", "id(Two)", "meet", "psi_meet");
  d.functor("meet_em", lifted.bottom, "EM(j1)*EM(id(Two))", "EM(id(Two))");
  d.adj_cell("meet_lift", "EM(j1)*EM(id(Two))", "EM(id(Two))", "meet", "meet_em", lifted.lambda);

  ojson mnd{{"cell", "meet_cell"}, {"left", "j1"}, {"param", "id(Two)"}};
  ojson adj{{"cell", "meet_lift"}, {"left", "EM(j1)"}, {"param", "EM(id(Two))"}};
  d.task("meet-cell", "validate-one-cell", {{"cell", "meet_cell"}});
  d.task("em", "em", {{"monad", "j1"}});
  d.task("hopf-mnd", "hopf-mnd", mnd);
  d.task("hopf-adj", "hopf-adj", adj);
  d.task("fusion", "fusion", mnd);
  d.task("compare-phi", "compare-phi", adj);
  d.task("fusion-hopf", "fusion-hopf", adj);
  d.task("adjoint-equivalence", "adjoint-equivalence", mnd);
  return d.doc();
}

/** The identity monad on C declared as an entity, with its laws and algebras checked. */
inline ojson id_monad_fixture(const Cat& c) {
  FixtureDoc d;
  Monad m = identity_monad(c);
  m.name = "id_" + c->name();
  d.category(c);
  d.monad(m);
  d.task("monad", "validate-monad", {{"monad", m.name}});
  d.task("em", "em", {{"monad", m.name}});
  return d.doc();
}

} // namespace detail

/** Names accepted by generate_fixture; id-monad takes a category fixture, e.g. id-monad(bool4). */
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"one",         "two",      "bool4",         "z2",
                                                 "closure1",    "bool4-nucleus", "meetcell", "id-monad(one)",
                                                 "id-monad(two)", "id-monad(bool4)", "id-monad(z2)"};
  return names;
}

/** Fixture document as JSON text (two-space indent, trailing newline). */
inline std::string fixture_text(const std::string& name) {
  ojson doc;
  if (Cat c = detail::fixture_category(name)) doc = detail::category_fixture(c);
  else if (name == "closure1") doc = detail::closure1_fixture();
  else if (name == "bool4-nucleus") doc = detail::nucleus_fixture();
  else if (name == "meetcell") doc = detail::meetcell_fixture();
  else if (name.rfind("id-monad(", 0) == 0 && name.back() == ')') {
    Cat c = detail::fixture_category(name.substr(9, name.size() - 10));
    if (!c) throw std::invalid_argument("unknown category fixture in \"" + name + "\"");
    doc = detail::id_monad_fixture(c);
  } else {
    throw std::invalid_argument("unknown fixture \"" + name + "\"");
  }
  return doc.dump(2) + "\n";
}

inline SpecFile generate_fixture(const std::string& name) { return parse_spec_file(fixture_text(name)); }

} // namespace catkit::harness

#endif
