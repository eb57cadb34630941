#ifndef CATKIT_HARNESS_RUNNER_HPP
#define CATKIT_HARNESS_RUNNER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catkit/harness/report.hpp"
#include "catkit/harness/spec_file.hpp"
#include "catkit/hopf/lifting.hpp"
#include "catkit/hopf/transport.hpp"

namespace catkit::harness {

namespace detail {

using nlohmann::json;

struct TaskContext {
  SpecScope& scope;
  const ojson& args;
  TaskReport& out;

  std::string arg(const char* k) const { return args.at(k).get<std::string>(); }
  bool has(const char* k) const { return args.contains(k); }
  OneCellDecl cell() const { return scope.cell_named(arg("cell")); }
  Monad monad(const char* k) const { return scope.monad(arg(k)); }
  Adjunction adjunction(const char* k) const { return scope.adjunction(arg(k)); }
};

inline json counts(const FinCat& c) { return {{"objects", c.object_count()}, {"morphisms", c.morphism_count()}}; }

inline json decision(const HopfAnalysis& a) {
  json j{{"invertible", a.hopf()}};
  if (!a.hopf()) j["witness"] = a.witness();
  return j;
}

inline std::vector<std::string> ids(const FinCat& c) {
  std::vector<std::string> out;
  for (int a = 0; a < c.object_count(); ++a) out.push_back(c.object_id(a));
  return out;
}

/** Right adjoint for a restricted carrier: from the parametric adjunction when given, else by search. */
inline std::optional<Adjunction> carrier_adjoint(const TaskContext& ctx, const Functor& carrier, int p) {
  if (ctx.has("parametric")) return ctx.scope.parametric_named(ctx.arg("parametric")).at(p);
  return find_right_adjoint(carrier);
}

inline void run_validate(const TaskContext& ctx, const std::string& what) {
  Report r;
  if (what == "category") {
    Cat c = ctx.scope.category(ctx.arg("category"));
    r = validate_category(*c);
    ctx.out.derived = counts(*c);
  } else if (what == "functor") {
    r = validate_functor(ctx.scope.functor(ctx.arg("functor")));
  } else if (what == "nat") {
    r = validate_nat_trans(ctx.scope.nat_named(ctx.arg("nat")));
  } else if (what == "monad") {
    r = validate_monad(ctx.monad("monad"));
  } else if (what == "adjunction") {
    r = validate_adjunction(ctx.adjunction("adjunction"));
  } else if (what == "one-cell") {
    OneCellDecl c = ctx.cell();
    r = c.adj ? validate_adj_one_cell(*c.adj) : validate_mnd_one_cell(*c.mnd);
  } else {
    r = validate_parametric_adjunction(ctx.scope.parametric_named(ctx.arg("parametric")));
  }
  record(ctx.out, r);
}

inline void run_em(const TaskContext& ctx) {
  Monad m = ctx.monad("monad");
  Report r;
  r.absorb("monad", validate_monad(m));
  if (r.structurally_ok() && r.ok()) {
    const EMBundle& em = ctx.scope.em(ctx.arg("monad"));
    r.absorb("em-category", validate_category(*em.em));
    r.absorb("em-adjunction", validate_adjunction(em.adjunction));
    r.check("induced-monad", monad_from_adjunction(em.adjunction) == m);
    r.check("forget-reflects-isos", reflects_isomorphisms(em.forget));
    ctx.out.derived = counts(*em.em);
    ctx.out.derived["algebras"] = ids(*em.em);
  }
  record(ctx.out, r);
}

inline void run_phi(const TaskContext& ctx) {
  MndOneCell m = phi_one_cell(*ctx.cell().adj);
  Report r;
  r.absorb("phi", validate_mnd_one_cell(m));
  record(ctx.out, r);
  ctx.out.derived = {{"carrier", m.carrier.name()}, {"psi_invertible", is_invertible(m.psi).invertible}};
}

inline void run_psi(const TaskContext& ctx) {
  MndOneCell c = *ctx.cell().mnd;
  AdjOneCell lifted = psi_one_cell(c);
  Report r;
  r.absorb("psi", validate_adj_one_cell(lifted));
  r.check("phi-after-psi", transpose_adj_to_mnd(lifted) == c);
  record(ctx.out, r);
  ctx.out.derived = {{"lifted_domain", counts(*lifted.bottom.dom())},
                     {"lifted_codomain", counts(*lifted.bottom.cod())},
                     {"lambda_invertible", is_invertible(lifted.lambda).invertible}};
}

inline void run_hopf(const TaskContext& ctx, const std::string& op) {
  OneCellDecl c = ctx.cell();
  HopfAnalysis a = op == "hopf-adj" ? hopf_operator_adj(*c.adj, ctx.adjunction("left"), ctx.adjunction("param")).analysis
                   : op == "hopf-mnd" ? hopf_operator_mnd(*c.mnd, ctx.monad("left"), ctx.monad("param")).analysis
                                      : fusion_operator_mnd(*c.mnd, ctx.monad("left"), ctx.monad("param")).analysis;
  Report r;
  r.check(op == "fusion" ? "fusion-invertible" : "hopf-invertible", a.hopf(), a.witness());
  record(ctx.out, r);
  ctx.out.derived = decision(a);
}

inline void run_compare(const TaskContext& ctx, const std::string& op) {
  AdjOneCell c = *ctx.cell().adj;
  Adjunction left = ctx.adjunction("left"), param = ctx.adjunction("param");
  if (op == "compare-phi") {
    PhiComparison cmp = compare_hopf_phi(c, left, param);
    record(ctx.out, cmp.report);
    ctx.out.derived = {{"adj", decision(cmp.adj.analysis)},
                       {"mnd", decision(cmp.mnd.analysis)},
                       {"reflects_isos", cmp.reflects_isos}};
  } else {
    FusionComparison cmp = fusion_hopf_equivalence(c, left, param);
    record(ctx.out, cmp.report);
    ctx.out.derived = {{"fusion", decision(cmp.fusion.analysis)},
                       {"hopf", decision(cmp.adj.analysis)},
                       {"reflects_isos", cmp.reflects_isos}};
  }
}

inline void run_adjoint_object(const TaskContext& ctx) {
  OneCellDecl c = ctx.cell();
  Report r;
  json per = json::object();
  if (c.mnd) {
    MndHopf h = hopf_operator_mnd(*c.mnd, ctx.monad("left"), ctx.monad("param"));
    const Cat& Q = h.param.codomain();
    for (int q = 0; q < Q->object_count(); ++q) {
      const std::string& qid = Q->object_id(q);
      MndOneCell cq = restrict_at_algebra(h, q);
      auto inv = is_invertible(cq.psi);
      r.check("restriction-invertible", inv.invertible, {qid});
      auto jk = carrier_adjoint(ctx, cq.carrier, h.param.right.obj(q));
      r.check("carrier-has-right-adjoint", jk.has_value(), {qid});
      if (!inv || !jk) continue;
      MndAdjointObject ao = adjoint_object_mnd(cq, *jk);
      r.absorb("algebra[" + qid + "]", ao.report);
      per[qid] = ao.ok();
    }
  } else {
    AdjHopf h = hopf_operator_adj(*c.adj, ctx.adjunction("left"), ctx.adjunction("param"));
    const Cat& Q = h.param.codomain();
    for (int q = 0; q < Q->object_count(); ++q) {
      const std::string& qid = Q->object_id(q);
      AdjOneCell cq = restrict_at_parameter(h, q);
      auto inv = is_invertible(cq.lambda);
      r.check("restriction-invertible", inv.invertible, {qid});
      auto jk = find_right_adjoint(cq.top);
      auto vw = find_right_adjoint(cq.bottom);
      r.check("top-has-right-adjoint", jk.has_value(), {qid});
      r.check("bottom-has-right-adjoint", vw.has_value(), {qid});
      if (!inv || !jk || !vw) continue;
      AdjAdjointObject ao = adjoint_object_adj(cq, *jk, *vw);
      r.absorb("parameter[" + qid + "]", ao.report);
      per[qid] = ao.ok();
    }
  }
  record(ctx.out, r);
  ctx.out.derived = {{"adjoint_objects", per}};
}

inline void run_adjoint_equivalence(const TaskContext& ctx) {
  MndHopf h = hopf_operator_mnd(*ctx.cell().mnd, ctx.monad("left"), ctx.monad("param"));
  const Cat& Q = h.param.codomain();
  Report r;
  json per = json::object();
  for (int q = 0; q < Q->object_count(); ++q) {
    const std::string& qid = Q->object_id(q);
    MndOneCell cq = restrict_at_algebra(h, q);
    auto jk = carrier_adjoint(ctx, cq.carrier, h.param.right.obj(q));
    r.check("carrier-has-right-adjoint", jk.has_value(), {qid});
    if (!jk) continue;
    AdjointEquivalence eq = adjoint_equivalence(cq, *jk);
    r.check("four-way-agreement", eq.agree(), {qid});
    per[qid] = {{"mnd_adjoint_object", eq.mnd_adjoint_object},
                {"adj_adjoint_object", eq.adj_adjoint_object},
                {"psi_invertible", eq.psi_invertible},
                {"lambda_invertible", eq.lambda_invertible}};
  }
  record(ctx.out, r);
  ctx.out.derived = {{"algebras", per}};
}

inline MndExtension extension(const TaskContext& ctx) {
  return build_hopf_parametric_adjoint_object(*ctx.cell().mnd, ctx.monad("left"), ctx.monad("param"),
                                              ctx.scope.parametric_named(ctx.arg("parametric")));
}

inline void run_extension(const TaskContext& ctx) {
  MndExtension ext = extension(ctx);
  record(ctx.out, ext.report);
  ctx.out.derived = {{"parameters", ext.per_parameter.size()}, {"cell_domain", counts(*ext.cell.source.base)}};
}

inline void run_antipode(const TaskContext& ctx) {
  MndAntipode a = antipode_mnd(extension(ctx));
  record(ctx.out, a.report);
  json sigma = json::object();
  const FinCat& dom = *a.sigma.family.dom();
  for (int x = 0; x < dom.object_count(); ++x) sigma[dom.object_id(x)] = a.sigma.family.cod()->morphism_id(a.sigma.family.at(x));
  ctx.out.derived = {{"sigma", sigma}};
}

/** Object table of a functor out of a product, keyed by the product's object ids. */
inline json table(const Functor& F) {
  json t = json::object();
  for (int x = 0; x < F.dom()->object_count(); ++x) t[F.dom()->object_id(x)] = F.obj_id(x);
  return t;
}

inline void run_lift(const TaskContext& ctx) {
  LiftingResult res = lift_parametric_adjunction(*ctx.cell().mnd, ctx.monad("left"), ctx.monad("param"),
                                                 ctx.scope.parametric_named(ctx.arg("parametric")));
  Report r = res.report;
  r.absorb("lifted", validate_parametric_adjunction(res.lifted));
  record(ctx.out, r);
  ctx.out.derived = {{"parameter_algebras", ids(*res.em_parameters().em)},
                     {"lifted_left", table(res.lifted.F)},
                     {"lifted_right", table(res.lifted.G)}};
}

inline TaskError task_error(const char* kind, const std::exception& e, std::vector<std::string> witness = {}) {
  return TaskError{kind, e.what(), std::move(witness), std::nullopt};
}

} // namespace detail

/** Run one task; engine exceptions become task-level errors. */
inline TaskReport run_task(SpecScope& scope, const TaskDecl& t) {
  TaskReport out;
  out.name = t.name;
  out.op = t.op;
  detail::TaskContext ctx{scope, t.args, out};
  const std::string& op = t.op;
  try {
    if (op.rfind("validate-", 0) == 0) detail::run_validate(ctx, op.substr(9));
    else if (op == "em") detail::run_em(ctx);
    else if (op == "phi") detail::run_phi(ctx);
    else if (op == "psi") detail::run_psi(ctx);
    else if (op == "hopf-adj" || op == "hopf-mnd" || op == "fusion") detail::run_hopf(ctx, op);
    else if (op == "compare-phi" || op == "fusion-hopf") detail::run_compare(ctx, op);
    else if (op == "adjoint-object") detail::run_adjoint_object(ctx);
    else if (op == "adjoint-equivalence") detail::run_adjoint_equivalence(ctx);
    else if (op == "dinatural-extend") detail::run_extension(ctx);
    else if (op == "antipode") detail::run_antipode(ctx);
    else if (op == "lift") detail::run_lift(ctx);
    else throw ReferenceError(code::schema, "unknown op " + op);
  } catch (const ResourceError& e) {
    out.error = detail::task_error("resource", e);
    out.error->limit = e.limit();
  } catch (const StructuralError& e) {
    out.error = detail::task_error("structural", e, e.witness());
  } catch (const LawError& e) {
    out.error = detail::task_error("law", e, e.witness());
  } catch (const DomainError& e) {
    out.error = detail::task_error("domain", e, e.witness());
  } catch (const ReferenceError& e) {
    out.error = detail::task_error("reference", e);
  }
  if (out.error) {
    out.outcome = Outcome::Error;
    out.derived = nlohmann::json::object();
  }
  return out;
}

/** Run tasks in order, optionally only the one named; the suite always continues. */
inline RunReport run_check_suite(const SpecFile& spec, std::string_view input_bytes,
                                 const std::optional<std::string>& only = std::nullopt) {
  RunReport report;
  report.input_sha256 = sha256_hex(input_bytes);
  SpecScope scope(spec);
  for (const auto& t : spec.tasks) {
    if (only && t.name != *only) continue;
    report.tasks.push_back(run_task(scope, t));
  }
  return report;
}

/** Implicit validation tasks for every declared entity, in declaration order. */
inline std::vector<TaskDecl> validation_tasks(const SpecFile& spec) {
  std::vector<TaskDecl> out;
  auto add = [&](const char* op, const char* key, const std::string& name) {
    out.push_back(TaskDecl{std::string(op) + ":" + name, op, ojson{{key, name}}, true});
  };
  for (const auto& [n, d] : spec.categories) add("validate-category", "category", n);
  for (const auto& [n, d] : spec.functors) add("validate-functor", "functor", n);
  for (const auto& [n, d] : spec.natural_transformations) add("validate-nat", "nat", n);
  for (const auto& [n, d] : spec.monads) add("validate-monad", "monad", n);
  for (const auto& [n, d] : spec.adjunctions) add("validate-adjunction", "adjunction", n);
  for (const auto& [n, d] : spec.one_cells) add("validate-one-cell", "cell", n);
  for (const auto& [n, d] : spec.parametric_adjunctions) add("validate-parametric", "parametric", n);
  return out;
}

} // namespace catkit::harness

#endif
