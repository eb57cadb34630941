#ifndef CATKIT_HARNESS_SPEC_FILE_HPP
#define CATKIT_HARNESS_SPEC_FILE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catkit/harness/expression.hpp"
#include "catkit/harness/json_input.hpp"
#include "catkit/hopf/parametric.hpp"
#include "catkit/twocat.hpp"

namespace catkit::harness {

/** Name-keyed collection that keeps declaration order. */
template <class D>
class Collection {
public:
  using value_type = std::pair<std::string, D>;

  D& add(std::string name, D decl) {
    index_[name] = items_.size();
    items_.emplace_back(std::move(name), std::move(decl));
    return items_.back().second;
  }
  const D* find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &items_[it->second].second;
  }
  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const Collection& a, const Collection& b) { return a.items_ == b.items_; }

private:
  std::vector<value_type> items_;
  std::map<std::string, std::size_t> index_;
};

struct CategoryDecl {
  Cat value;
  friend bool operator==(const CategoryDecl& a, const CategoryDecl& b) {
    return same(a.value, b.value) && a.value->name() == b.value->name();
  }
};

struct FunctorDecl {
  std::string dom;
  std::string cod;
  Functor value;
  friend bool operator==(const FunctorDecl&, const FunctorDecl&) = default;
};

struct NatDecl {
  std::string source;
  std::string target;
  NatTrans value;
  friend bool operator==(const NatDecl&, const NatDecl&) = default;
};

struct MonadDecl {
  std::string base;
  std::string endo;
  std::string mult;
  std::string unit;
  Monad value;
  friend bool operator==(const MonadDecl&, const MonadDecl&) = default;
};

struct AdjunctionDecl {
  std::string left;
  std::string right;
  std::string unit;
  std::string counit;
  Adjunction value;
  friend bool operator==(const AdjunctionDecl&, const AdjunctionDecl&) = default;
};

/** kind "adj": (top, bottom, lambda) between adjunctions; kind "mnd": (top, psi) between monads. */
struct OneCellDecl {
  std::string kind;
  std::string source;
  std::string target;
  std::string top;
  std::string bottom;
  /** Name of the structure transformation; empty when given inline. */
  std::string structure;
  std::optional<AdjOneCell> adj;
  std::optional<MndOneCell> mnd;

  const NatTrans& structure_map() const { return adj ? adj->lambda : mnd->psi; }
  friend bool operator==(const OneCellDecl&, const OneCellDecl&) = default;
};

struct ParametricDecl {
  std::string F;
  std::string G;
  /** (parameter object id, adjunction expression) in parameter order. */
  std::vector<std::pair<std::string, std::string>> per_parameter;
  ParametricAdjunction value;
  friend bool operator==(const ParametricDecl&, const ParametricDecl&) = default;
};

struct TaskDecl {
  std::string name;
  std::string op;
  ojson args;
  /** False when the name was generated from the position. */
  bool named = false;
  friend bool operator==(const TaskDecl&, const TaskDecl&) = default;
};

/** Error raised while evaluating a reference; the caller attaches the path. */
class ReferenceError : public std::runtime_error {
public:
  ReferenceError(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/**
 * Expression evaluation against some source of named entities. Eilenberg-
 * Moore constructions are cached by canonical expression text.
 */
class Scope {
public:
  virtual ~Scope() = default;

  Cat category(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Name: return category_named(e.name);
    case Expr::Kind::Op: return op_category(category(*e.lhs));
    case Expr::Kind::Product: return product_category(category(*e.lhs), category(*e.rhs));
    case Expr::Kind::Em: return em(*e.lhs).em;
    default: throw ReferenceError(code::type_mismatch, "\"" + e.str() + "\" is not a category expression");
    }
  }

  Functor functor(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Name: return functor_named(e.name);
    case Expr::Kind::Identity: return identity_functor(category(*e.lhs));
    case Expr::Kind::Op: return op_functor(functor(*e.lhs));
    case Expr::Kind::Product: return product_functor(functor(*e.lhs), functor(*e.rhs));
    case Expr::Kind::Compose: {
      Functor g = functor(*e.lhs);
      Functor f = functor(*e.rhs);
      if (!same(g.dom(), f.cod()))
        throw ReferenceError(code::type_mismatch, "cannot compose \"" + e.str() + "\": " + g.name() +
                                                      " does not start where " + f.name() + " ends");
      return compose_functors(g, f);
    }
    default: throw ReferenceError(code::type_mismatch, "\"" + e.str() + "\" is not a functor expression");
    }
  }

  Monad monad(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Name: return monad_named(e.name);
    case Expr::Kind::Identity: return identity_monad(category(*e.lhs));
    case Expr::Kind::Product: return product_monad(monad(*e.lhs), monad(*e.rhs));
    default: throw ReferenceError(code::type_mismatch, "\"" + e.str() + "\" is not a monad expression");
    }
  }

  Adjunction adjunction(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Name: return adjunction_named(e.name);
    case Expr::Kind::Identity: return identity_adjunction(category(*e.lhs));
    case Expr::Kind::Product: return product_adjunction(adjunction(*e.lhs), adjunction(*e.rhs));
    case Expr::Kind::Em: return em(*e.lhs).adjunction;
    default: throw ReferenceError(code::type_mismatch, "\"" + e.str() + "\" is not an adjunction expression");
    }
  }

  const EMBundle& em(const Expr& monad_expr) {
    std::string key = monad_expr.str();
    auto it = em_cache_->find(key);
    if (it == em_cache_->end()) it = em_cache_->emplace(key, em_category(monad(monad_expr))).first;
    return it->second;
  }

  Cat category(const std::string& text) { return category(*parse(text)); }
  Functor functor(const std::string& text) { return functor(*parse(text)); }
  Monad monad(const std::string& text) { return monad(*parse(text)); }
  Adjunction adjunction(const std::string& text) { return adjunction(*parse(text)); }
  const EMBundle& em(const std::string& text) { return em(*parse(text)); }

  virtual NatTrans nat_named(const std::string& name) = 0;
  virtual OneCellDecl cell_named(const std::string& name) = 0;
  virtual ParametricAdjunction parametric_named(const std::string& name) = 0;

protected:
  explicit Scope(std::shared_ptr<std::map<std::string, EMBundle>> cache) : em_cache_(std::move(cache)) {}

  virtual Cat category_named(const std::string& name) = 0;
  virtual Functor functor_named(const std::string& name) = 0;
  virtual Monad monad_named(const std::string& name) = 0;
  virtual Adjunction adjunction_named(const std::string& name) = 0;

  static ExprPtr parse(const std::string& text) {
    try {
      return parse_expression(text);
    } catch (const ExpressionError& e) {
      throw ReferenceError(code::expression, e.what());
    }
  }

private:
  std::shared_ptr<std::map<std::string, EMBundle>> em_cache_;
};

/** A fully resolved spec file. */
struct SpecFile {
  Collection<CategoryDecl> categories;
  Collection<FunctorDecl> functors;
  Collection<NatDecl> natural_transformations;
  Collection<MonadDecl> monads;
  Collection<AdjunctionDecl> adjunctions;
  Collection<OneCellDecl> one_cells;
  Collection<ParametricDecl> parametric_adjunctions;
  std::vector<TaskDecl> tasks;

  std::shared_ptr<std::map<std::string, EMBundle>> em_cache = std::make_shared<std::map<std::string, EMBundle>>();

  /** Structural equality of every declaration and task; the cache is ignored. */
  friend bool operator==(const SpecFile& a, const SpecFile& b) {
    return a.categories == b.categories && a.functors == b.functors &&
           a.natural_transformations == b.natural_transformations && a.monads == b.monads &&
           a.adjunctions == b.adjunctions && a.one_cells == b.one_cells &&
           a.parametric_adjunctions == b.parametric_adjunctions && a.tasks == b.tasks;
  }
};

/** Evaluates expressions against an already resolved spec file. */
class SpecScope : public Scope {
public:
  explicit SpecScope(const SpecFile& spec) : Scope(spec.em_cache), spec_(spec) {}

  NatTrans nat_named(const std::string& name) override { return get(spec_.natural_transformations, name, "natural transformation").value; }
  OneCellDecl cell_named(const std::string& name) override { return get(spec_.one_cells, name, "one-cell"); }
  ParametricAdjunction parametric_named(const std::string& name) override {
    return get(spec_.parametric_adjunctions, name, "parametric adjunction").value;
  }

protected:
  Cat category_named(const std::string& name) override { return get(spec_.categories, name, "category").value; }
  Functor functor_named(const std::string& name) override { return get(spec_.functors, name, "functor").value; }
  Monad monad_named(const std::string& name) override { return get(spec_.monads, name, "monad").value; }
  Adjunction adjunction_named(const std::string& name) override { return get(spec_.adjunctions, name, "adjunction").value; }

private:
  const SpecFile& spec_;

  template <class D>
  static const D& get(const Collection<D>& c, const std::string& name, const char* what) {
    const D* d = c.find(name);
    if (!d) throw ReferenceError(code::dangling, std::string("no ") + what + " named \"" + name + "\"");
    return *d;
  }
};

// ---------------------------------------------------------------------------
// Task argument schema

enum class ArgKind { Category, Functor, Nat, Monad, Adjunction, Cell, Parametric, Side };

struct ArgSpec {
  std::string key;
  ArgKind kind;
  bool required = true;
};

/** Kind of one-cell an op accepts: "adj", "mnd", or "" for either. */
struct OpSpec {
  std::vector<ArgSpec> args;
  std::string cell_kind;
};

/**
 * For cell-driven ops the "left" and "param" arguments are monads when the
 * cell is a monad 1-cell and adjunctions when it is an Adj 1-cell.
 */
inline const std::map<std::string, OpSpec>& op_vocabulary() {
  using K = ArgKind;
  static const std::map<std::string, OpSpec> ops = {
      {"validate-category", {{{"category", K::Category}}, ""}},
      {"validate-functor", {{{"functor", K::Functor}}, ""}},
      {"validate-nat", {{{"nat", K::Nat}}, ""}},
      {"validate-monad", {{{"monad", K::Monad}}, ""}},
      {"validate-adjunction", {{{"adjunction", K::Adjunction}}, ""}},
      {"validate-one-cell", {{{"cell", K::Cell}}, ""}},
      {"validate-parametric", {{{"parametric", K::Parametric}}, ""}},
      {"em", {{{"monad", K::Monad}}, ""}},
      {"phi", {{{"cell", K::Cell}}, "adj"}},
      {"psi", {{{"cell", K::Cell}}, "mnd"}},
      {"hopf-adj", {{{"cell", K::Cell}, {"left", K::Adjunction}, {"param", K::Adjunction}}, "adj"}},
      {"hopf-mnd", {{{"cell", K::Cell}, {"left", K::Monad}, {"param", K::Monad}}, "mnd"}},
      {"fusion", {{{"cell", K::Cell}, {"left", K::Monad}, {"param", K::Monad}}, "mnd"}},
      {"compare-phi", {{{"cell", K::Cell}, {"left", K::Adjunction}, {"param", K::Adjunction}}, "adj"}},
      {"fusion-hopf", {{{"cell", K::Cell}, {"left", K::Adjunction}, {"param", K::Adjunction}}, "adj"}},
      {"adjoint-object",
       {{{"cell", K::Cell}, {"left", K::Side}, {"param", K::Side}, {"parametric", K::Parametric, false}}, ""}},
      {"adjoint-equivalence",
       {{{"cell", K::Cell}, {"left", K::Monad}, {"param", K::Monad}, {"parametric", K::Parametric, false}}, "mnd"}},
      {"dinatural-extend",
       {{{"cell", K::Cell}, {"left", K::Monad}, {"param", K::Monad}, {"parametric", K::Parametric}}, "mnd"}},
      {"antipode",
       {{{"cell", K::Cell}, {"left", K::Monad}, {"param", K::Monad}, {"parametric", K::Parametric}}, "mnd"}},
      {"lift", {{{"cell", K::Cell}, {"left", K::Monad}, {"param", K::Monad}, {"parametric", K::Parametric}}, "mnd"}},
  };
  return ops;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

/** An issue bound to a document location. */
struct Located {
  ParseIssue issue;
};

/** Thrown past entities whose dependency already reported an issue. */
struct DependencyFailed {};

inline const char* type_name(const ojson& j) {
  if (j.is_object()) return "object";
  if (j.is_array()) return "array";
  if (j.is_string()) return "string";
  if (j.is_null()) return "null";
  if (j.is_boolean()) return "boolean";
  return "number";
}

[[noreturn]] inline void raise(const char* c, const std::string& path, const std::string& msg) {
  throw Located{{c, path, msg}};
}

inline const ojson& expect(const ojson& j, bool ok, const char* want, const std::string& path) {
  if (!ok) raise(code::schema, path, std::string("expected ") + want + ", found " + type_name(j));
  return j;
}
inline const ojson& expect_object(const ojson& j, const std::string& path) { return expect(j, j.is_object(), "an object", path); }
inline const ojson& expect_array(const ojson& j, const std::string& path) { return expect(j, j.is_array(), "an array", path); }
inline std::string expect_string(const ojson& j, const std::string& path) {
  return expect(j, j.is_string(), "a string", path).get<std::string>();
}

/** Reject unknown keys and require the listed ones. */
inline void keys(const ojson& j, const std::string& path, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  expect_object(j, path);
  for (const auto& [k, v] : j.items()) {
    bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                 std::any_of(optional.begin(), optional.end(), [&](const char* o) { return k == o; });
    if (!known) raise(code::unknown_key, child_path(path, k), "unknown key \"" + k + "\"");
  }
  for (const char* r : required)
    if (!j.contains(r)) raise(code::schema, path, std::string("missing key \"") + r + "\"");
}

/** Run f, converting engine and reference errors into located issues. */
template <class F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ReferenceError& e) {
    raise(e.code().c_str(), path, e.what());
  } catch (const ResourceError& e) {
    raise(code::resource, path, e.what());
  } catch (const StructuralError& e) {
    raise(code::structural, path, e.what());
  } catch (const LawError& e) {
    raise(code::structural, path, e.what());
  } catch (const DomainError& e) {
    raise(code::structural, path, e.what());
  }
}

inline std::vector<int> map_objects(const ojson& j, const std::string& path, const FinCat& dom, const FinCat& cod) {
  expect_object(j, path);
  std::vector<int> out(dom.object_count(), -1);
  for (const auto& [k, v] : j.items()) {
    std::string p = child_path(path, k);
    int a = dom.find_object(k);
    if (a < 0) raise(code::dangling, p, "no object \"" + k + "\" in " + dom.name());
    std::string img = expect_string(v, p);
    int b = cod.find_object(img);
    if (b < 0) raise(code::dangling, p, "no object \"" + img + "\" in " + cod.name());
    out[a] = b;
  }
  for (int a = 0; a < dom.object_count(); ++a)
    if (out[a] < 0) raise(code::schema, path, "no image given for object \"" + dom.object_id(a) + "\"");
  return out;
}

/** obj -> morphism map over the objects of dom (components) or morphism -> morphism over its morphisms. */
inline std::vector<int> map_to_morphisms(const ojson& j, const std::string& path, const FinCat& dom,
                                         const FinCat& cod, bool over_objects) {
  expect_object(j, path);
  int n = over_objects ? dom.object_count() : dom.morphism_count();
  std::vector<int> out(n, -1);
  for (const auto& [k, v] : j.items()) {
    std::string p = child_path(path, k);
    int a = over_objects ? dom.find_object(k) : dom.find_morphism(k);
    if (a < 0)
      raise(code::dangling, p, std::string("no ") + (over_objects ? "object" : "morphism") + " \"" + k + "\" in " +
                                   dom.name());
    std::string img = expect_string(v, p);
    int b = cod.find_morphism(img);
    if (b < 0) raise(code::dangling, p, "no morphism \"" + img + "\" in " + cod.name());
    out[a] = b;
  }
  for (int a = 0; a < n; ++a)
    if (out[a] < 0)
      raise(code::schema, path,
            "no image given for " + std::string(over_objects ? "object \"" + dom.object_id(a) : "morphism \"" + dom.morphism_id(a)) + "\"");
  return out;
}

class Resolver : public Scope {
public:
  Resolver(const ojson& doc, SpecFile& out, std::vector<ParseIssue>& issues)
      : Scope(out.em_cache), doc_(doc), out_(out), issues_(issues) {}

  void run() {
    static const char* collections[] = {"categories", "functors", "natural_transformations", "monads",
                                        "adjunctions", "one_cells", "parametric_adjunctions"};
    if (!doc_.is_object()) {
      issues_.push_back({code::schema, "", std::string("expected an object, found ") + type_name(doc_)});
      return;
    }
    for (const auto& [k, v] : doc_.items()) {
      bool known = k == "tasks" || std::any_of(std::begin(collections), std::end(collections),
                                               [&](const char* c) { return k == c; });
      if (!known) issues_.push_back({code::unknown_key, child_path("", k), "unknown key \"" + k + "\""});
      else if (k == "tasks" ? !v.is_array() : !v.is_object())
        issues_.push_back({code::schema, child_path("", k),
                           std::string("expected ") + (k == "tasks" ? "an array" : "an object") + ", found " +
                               type_name(v)});
      else if (k != "tasks") {
        for (const auto& [name, body] : v.items()) {
          if (!is_reference_name(name))
            issues_.push_back({code::schema, child_path(child_path("", k), name),
                               "\"" + name + "\" is not a usable name (letters, digits, _ - ')"});
        }
      }
    }
    if (!issues_.empty()) return;

    auto each = [&](const char* coll, auto&& resolve) {
      if (!doc_.contains(coll)) return;
      for (const auto& [name, body] : doc_[coll].items()) {
        try {
          resolve(name);
        } catch (const DependencyFailed&) {
        }
      }
    };
    each("categories", [&](const std::string& n) { category_named(n); });
    each("functors", [&](const std::string& n) { functor_named(n); });
    each("natural_transformations", [&](const std::string& n) { nat_named(n); });
    each("monads", [&](const std::string& n) { monad_named(n); });
    each("adjunctions", [&](const std::string& n) { adjunction_named(n); });
    each("one_cells", [&](const std::string& n) { cell_named(n); });
    each("parametric_adjunctions", [&](const std::string& n) { parametric_named(n); });

    // Collections in declaration order, independent of resolution order.
    reorder();
    if (doc_.contains("tasks")) tasks(doc_["tasks"]);
  }

  NatTrans nat_named(const std::string& name) override {
    return resolve(nats_, "natural_transformations", name,
                   [&](const ojson& j, const std::string& p) { return nat_decl(name, j, p); })
        .value;
  }
  OneCellDecl cell_named(const std::string& name) override {
    return resolve(cells_, "one_cells", name,
                   [&](const ojson& j, const std::string& p) { return cell(j, p); });
  }
  ParametricAdjunction parametric_named(const std::string& name) override {
    return resolve(params_, "parametric_adjunctions", name,
                   [&](const ojson& j, const std::string& p) { return parametric(name, j, p); })
        .value;
  }

protected:
  Cat category_named(const std::string& name) override {
    return resolve(cats_, "categories", name,
                   [&](const ojson& j, const std::string& p) { return category_decl(name, j, p); })
        .value;
  }
  Functor functor_named(const std::string& name) override {
    return resolve(funs_, "functors", name,
                   [&](const ojson& j, const std::string& p) { return functor_decl(name, j, p); })
        .value;
  }
  Monad monad_named(const std::string& name) override {
    return resolve(monads_, "monads", name,
                   [&](const ojson& j, const std::string& p) { return monad_decl(name, j, p); })
        .value;
  }
  Adjunction adjunction_named(const std::string& name) override {
    return resolve(adjs_, "adjunctions", name,
                   [&](const ojson& j, const std::string& p) { return adjunction_decl(name, j, p); })
        .value;
  }

private:
  const ojson& doc_;
  SpecFile& out_;
  std::vector<ParseIssue>& issues_;
  std::set<std::string> active_;
  std::set<std::string> failed_;
  // Resolved declarations, gathered before being placed in declaration order.
  std::map<std::string, CategoryDecl> cats_;
  std::map<std::string, FunctorDecl> funs_;
  std::map<std::string, NatDecl> nats_;
  std::map<std::string, MonadDecl> monads_;
  std::map<std::string, AdjunctionDecl> adjs_;
  std::map<std::string, OneCellDecl> cells_;
  std::map<std::string, ParametricDecl> params_;

  template <class D, class Build>
  const D& resolve(std::map<std::string, D>& done, const char* coll, const std::string& name,
                   Build&& build) {
    if (auto it = done.find(name); it != done.end()) return it->second;
    std::string key = std::string(coll) + "/" + name;
    if (failed_.count(key)) throw DependencyFailed{};
    if (!doc_.contains(coll) || !doc_[coll].contains(name))
      throw ReferenceError(code::dangling, std::string("no entry \"") + name + "\" in " + coll);
    std::string path = child_path(child_path("", coll), name);
    if (active_.count(key)) throw ReferenceError(code::cyclic, "\"" + name + "\" depends on itself");
    active_.insert(key);
    try {
      D decl = build(doc_[coll][name], path);
      active_.erase(key);
      return done.emplace(name, std::move(decl)).first->second;
    } catch (const Located& l) {
      active_.erase(key);
      failed_.insert(key);
      issues_.push_back(l.issue);
      throw DependencyFailed{};
    } catch (const DependencyFailed&) {
      active_.erase(key);
      failed_.insert(key);
      throw;
    }
  }

  template <class D>
  void place(Collection<D>& coll, std::map<std::string, D>& done, const char* key) {
    if (!doc_.contains(key)) return;
    for (const auto& [name, body] : doc_[key].items())
      if (auto it = done.find(name); it != done.end()) coll.add(name, it->second);
  }

  void reorder() {
    place(out_.categories, cats_, "categories");
    place(out_.functors, funs_, "functors");
    place(out_.natural_transformations, nats_, "natural_transformations");
    place(out_.monads, monads_, "monads");
    place(out_.adjunctions, adjs_, "adjunctions");
    place(out_.one_cells, cells_, "one_cells");
    place(out_.parametric_adjunctions, params_, "parametric_adjunctions");
  }

  // --- entities ---

  CategoryDecl category_decl(const std::string& name, const ojson& j, const std::string& path) {
    keys(j, path, {"objects", "morphisms", "identities", "composition"});
    CategoryData d;
    d.name = name;
    std::set<std::string> objs, mors;
    std::string op = child_path(path, "objects");
    expect_array(j["objects"], op);
    for (std::size_t i = 0; i < j["objects"].size(); ++i) {
      std::string id = expect_string(j["objects"][i], child_path(op, i));
      if (!objs.insert(id).second) raise(code::schema, child_path(op, i), "object \"" + id + "\" declared twice");
      d.objects.push_back(id);
    }
    std::string mp = child_path(path, "morphisms");
    expect_array(j["morphisms"], mp);
    at(mp, [&] { enforce_morphism_limit(j["morphisms"].size(), "category " + name); });
    for (std::size_t i = 0; i < j["morphisms"].size(); ++i) {
      std::string p = child_path(mp, i);
      const ojson& m = j["morphisms"][i];
      keys(m, p, {"id", "dom", "cod"});
      MorphismRecord r{expect_string(m["id"], child_path(p, "id")), expect_string(m["dom"], child_path(p, "dom")),
                       expect_string(m["cod"], child_path(p, "cod"))};
      if (!mors.insert(r.id).second) raise(code::schema, child_path(p, "id"), "morphism \"" + r.id + "\" declared twice");
      for (const char* end : {"dom", "cod"}) {
        const std::string& o = std::string(end) == "dom" ? r.dom : r.cod;
        if (!objs.count(o)) raise(code::dangling, child_path(p, end), "no object \"" + o + "\"");
      }
      d.morphisms.push_back(std::move(r));
    }
    std::string ip = child_path(path, "identities");
    expect_object(j["identities"], ip);
    for (const auto& [obj, mor] : j["identities"].items()) {
      std::string p = child_path(ip, obj);
      if (!objs.count(obj)) raise(code::dangling, p, "no object \"" + obj + "\"");
      std::string m = expect_string(mor, p);
      if (!mors.count(m)) raise(code::dangling, p, "no morphism \"" + m + "\"");
      d.identities.emplace_back(obj, m);
    }
    std::string cp = child_path(path, "composition");
    expect_array(j["composition"], cp);
    for (std::size_t i = 0; i < j["composition"].size(); ++i) {
      std::string p = child_path(cp, i);
      const ojson& e = j["composition"][i];
      keys(e, p, {"g", "f", "eq"});
      CompositionEntry c{expect_string(e["g"], child_path(p, "g")), expect_string(e["f"], child_path(p, "f")),
                         expect_string(e["eq"], child_path(p, "eq"))};
      for (const auto& [k, v] : {std::pair{"g", c.g}, std::pair{"f", c.f}, std::pair{"eq", c.eq}})
        if (!mors.count(v)) raise(code::dangling, child_path(p, k), "no morphism \"" + v + "\"");
      d.composition.push_back(std::move(c));
    }
    return CategoryDecl{at(path, [&] { return FinCat::from_data(d); })};
  }

  FunctorDecl functor_decl(const std::string& name, const ojson& j, const std::string& path) {
    keys(j, path, {"dom", "cod", "obj_map", "mor_map"});
    std::string dom = expect_string(j["dom"], child_path(path, "dom"));
    std::string cod = expect_string(j["cod"], child_path(path, "cod"));
    Cat C = at(child_path(path, "dom"), [&] { return category(dom); });
    Cat D = at(child_path(path, "cod"), [&] { return category(cod); });
    std::vector<int> objs = map_objects(j["obj_map"], child_path(path, "obj_map"), *C, *D);
    std::vector<int> mors = map_to_morphisms(j["mor_map"], child_path(path, "mor_map"), *C, *D, false);
    return FunctorDecl{dom, cod, Functor(name, C, D, std::move(objs), std::move(mors))};
  }

  NatDecl nat_decl(const std::string& name, const ojson& j, const std::string& path) {
    keys(j, path, {"source", "target", "components"});
    std::string s = expect_string(j["source"], child_path(path, "source"));
    std::string t = expect_string(j["target"], child_path(path, "target"));
    Functor S = at(child_path(path, "source"), [&] { return functor(s); });
    Functor T = at(child_path(path, "target"), [&] { return functor(t); });
    if (!same(S.dom(), T.dom()) || !same(S.cod(), T.cod()))
      raise(code::type_mismatch, path, "source and target functors are not parallel");
    auto comp = map_to_morphisms(j["components"], child_path(path, "components"), *S.dom(), *S.cod(), true);
    return NatDecl{s, t, NatTrans(name, S, T, std::move(comp))};
  }

  NatTrans nat_ref(const ojson& j, const std::string& path) {
    std::string n = expect_string(j, path);
    return at(path, [&] { return nat_named(n); });
  }

  MonadDecl monad_decl(const std::string& name, const ojson& j, const std::string& path) {
    keys(j, path, {"base", "endo", "mult", "unit"});
    MonadDecl d;
    d.base = expect_string(j["base"], child_path(path, "base"));
    d.endo = expect_string(j["endo"], child_path(path, "endo"));
    d.mult = expect_string(j["mult"], child_path(path, "mult"));
    d.unit = expect_string(j["unit"], child_path(path, "unit"));
    Cat base = at(child_path(path, "base"), [&] { return category(d.base); });
    Functor endo = at(child_path(path, "endo"), [&] { return functor(d.endo); });
    if (!same(endo.dom(), base) || !same(endo.cod(), base))
      raise(code::type_mismatch, child_path(path, "endo"), "endofunctor does not act on the base category");
    NatTrans mult = nat_ref(j["mult"], child_path(path, "mult"));
    NatTrans unit = nat_ref(j["unit"], child_path(path, "unit"));
    d.value = Monad{name, base, endo, mult, unit};
    return d;
  }

  AdjunctionDecl adjunction_decl(const std::string& name, const ojson& j, const std::string& path) {
    keys(j, path, {"left", "right", "unit", "counit"});
    AdjunctionDecl d;
    d.left = expect_string(j["left"], child_path(path, "left"));
    d.right = expect_string(j["right"], child_path(path, "right"));
    d.unit = expect_string(j["unit"], child_path(path, "unit"));
    d.counit = expect_string(j["counit"], child_path(path, "counit"));
    Functor L = at(child_path(path, "left"), [&] { return functor(d.left); });
    Functor R = at(child_path(path, "right"), [&] { return functor(d.right); });
    if (!same(L.dom(), R.cod()) || !same(L.cod(), R.dom()))
      raise(code::type_mismatch, path, "left and right functors do not run in opposite directions");
    d.value = Adjunction{name, L, R, nat_ref(j["unit"], child_path(path, "unit")),
                         nat_ref(j["counit"], child_path(path, "counit"))};
    return d;
  }

  /** Structure map given by name or inline {"components": {...}} against the expected functors. */
  NatTrans structure(const ojson& j, const std::string& path, const std::string& name, const Functor& S,
                     const Functor& T, std::string& ref) {
    if (j.is_string()) {
      ref = j.get<std::string>();
      NatTrans t = at(path, [&] { return nat_named(ref); });
      if (!(t.source() == S) || !(t.target() == T))
        raise(code::type_mismatch, path, "\"" + ref + "\" does not have the shape the cell requires");
      return t;
    }
    keys(j, path, {"components"});
    ref.clear();
    auto comp = map_to_morphisms(j["components"], child_path(path, "components"), *S.dom(), *S.cod(), true);
    return NatTrans(name, S, T, std::move(comp));
  }

  OneCellDecl cell(const ojson& j, const std::string& path) {
    expect_object(j, path);
    if (!j.contains("kind")) raise(code::schema, path, "missing key \"kind\"");
    OneCellDecl d;
    d.kind = expect_string(j["kind"], child_path(path, "kind"));
    std::string name = path.substr(path.rfind('/') + 1);
    if (d.kind == "adj") {
      keys(j, path, {"kind", "source", "target", "top", "bottom", "lambda"});
      d.source = expect_string(j["source"], child_path(path, "source"));
      d.target = expect_string(j["target"], child_path(path, "target"));
      d.top = expect_string(j["top"], child_path(path, "top"));
      d.bottom = expect_string(j["bottom"], child_path(path, "bottom"));
      Adjunction src = at(child_path(path, "source"), [&] { return adjunction(d.source); });
      Adjunction tgt = at(child_path(path, "target"), [&] { return adjunction(d.target); });
      Functor J = at(child_path(path, "top"), [&] { return functor(d.top); });
      Functor V = at(child_path(path, "bottom"), [&] { return functor(d.bottom); });
      if (!same(J.dom(), src.domain()) || !same(J.cod(), tgt.domain()) || !same(V.dom(), src.codomain()) ||
          !same(V.cod(), tgt.codomain()))
        raise(code::type_mismatch, path, "top and bottom functors do not connect source to target");
      NatTrans lambda = structure(j["lambda"], child_path(path, "lambda"), "lambda_" + name,
                                  compose_functors(tgt.left, J), compose_functors(V, src.left), d.structure);
      d.adj = at(path, [&] { return make_adj_one_cell(src, tgt, J, V, lambda); });
    } else if (d.kind == "mnd") {
      keys(j, path, {"kind", "source", "target", "top", "psi"});
      d.source = expect_string(j["source"], child_path(path, "source"));
      d.target = expect_string(j["target"], child_path(path, "target"));
      d.top = expect_string(j["top"], child_path(path, "top"));
      Monad src = at(child_path(path, "source"), [&] { return monad(d.source); });
      Monad tgt = at(child_path(path, "target"), [&] { return monad(d.target); });
      Functor J = at(child_path(path, "top"), [&] { return functor(d.top); });
      if (!same(J.dom(), src.base) || !same(J.cod(), tgt.base))
        raise(code::type_mismatch, child_path(path, "top"), "carrier does not run from source base to target base");
      NatTrans psi = structure(j["psi"], child_path(path, "psi"), "psi_" + name, compose_functors(tgt.endo, J),
                               compose_functors(J, src.endo), d.structure);
      d.mnd = MndOneCell{src, tgt, J, psi};
    } else {
      raise(code::schema, child_path(path, "kind"), "kind must be \"adj\" or \"mnd\"");
    }
    return d;
  }

  ParametricDecl parametric(const std::string& name, const ojson& j, const std::string& path) {
    keys(j, path, {"F", "G", "per_parameter"});
    ParametricDecl d;
    d.F = expect_string(j["F"], child_path(path, "F"));
    d.G = expect_string(j["G"], child_path(path, "G"));
    Functor F = at(child_path(path, "F"), [&] { return functor(d.F); });
    Functor G = at(child_path(path, "G"), [&] { return functor(d.G); });
    if (!F.dom()->is_product() || !G.dom()->is_product())
      raise(code::type_mismatch, path, "F and G must be functors out of products");
    const Cat& P = F.dom()->right_factor();
    std::string pp = child_path(path, "per_parameter");
    expect_array(j["per_parameter"], pp);
    std::vector<std::optional<Adjunction>> per(P->object_count());
    for (std::size_t i = 0; i < j["per_parameter"].size(); ++i) {
      std::string p = child_path(pp, i);
      const ojson& e = j["per_parameter"][i];
      keys(e, p, {"param", "adjunction"});
      std::string q = expect_string(e["param"], child_path(p, "param"));
      std::string a = expect_string(e["adjunction"], child_path(p, "adjunction"));
      int idx = P->find_object(q);
      if (idx < 0) raise(code::dangling, child_path(p, "param"), "no parameter object \"" + q + "\"");
      if (per[idx]) raise(code::schema, child_path(p, "param"), "parameter \"" + q + "\" given twice");
      per[idx] = at(child_path(p, "adjunction"), [&] { return adjunction(a); });
      d.per_parameter.emplace_back(q, a);
    }
    std::vector<Adjunction> adjs;
    for (int q = 0; q < P->object_count(); ++q) {
      if (!per[q]) raise(code::schema, pp, "no adjunction for parameter \"" + P->object_id(q) + "\"");
      adjs.push_back(*per[q]);
    }
    d.value = ParametricAdjunction{name, F, G, std::move(adjs)};
    return d;
  }

  void tasks(const ojson& list) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string path = child_path("/tasks", i);
      try {
        TaskDecl t = task(list[i], path, i);
        if (!names.insert(t.name).second)
          raise(code::schema, child_path(path, "name"), "task name \"" + t.name + "\" used twice");
        out_.tasks.push_back(std::move(t));
      } catch (const Located& l) {
        issues_.push_back(l.issue);
      } catch (const DependencyFailed&) {
      }
    }
  }

  TaskDecl task(const ojson& j, const std::string& path, std::size_t index) {
    keys(j, path, {"op", "args"}, {"name"});
    TaskDecl t;
    t.op = expect_string(j["op"], child_path(path, "op"));
    auto it = op_vocabulary().find(t.op);
    if (it == op_vocabulary().end()) raise(code::schema, child_path(path, "op"), "unknown op \"" + t.op + "\"");
    if (j.contains("name")) {
      t.name = expect_string(j["name"], child_path(path, "name"));
      t.named = true;
    } else {
      t.name = t.op + "#" + std::to_string(index + 1);
    }
    const OpSpec& spec = it->second;
    std::string ap = child_path(path, "args");
    const ojson& args = j["args"];
    expect_object(args, ap);
    for (const auto& [k, v] : args.items()) {
      bool known = std::any_of(spec.args.begin(), spec.args.end(), [&](const ArgSpec& a) { return a.key == k; });
      if (!known) raise(code::unknown_key, child_path(ap, k), "op " + t.op + " takes no argument \"" + k + "\"");
    }
    std::string cell_kind;
    for (const ArgSpec& a : spec.args) {
      std::string p = child_path(ap, a.key);
      if (!args.contains(a.key)) {
        if (a.required) raise(code::schema, ap, "missing argument \"" + a.key + "\"");
        continue;
      }
      std::string v = expect_string(args[a.key], p);
      ArgKind kind = a.kind;
      if (kind == ArgKind::Side) kind = cell_kind == "adj" ? ArgKind::Adjunction : ArgKind::Monad;
      at(p, [&] {
        switch (kind) {
        case ArgKind::Category: category(v); break;
        case ArgKind::Functor: functor(v); break;
        case ArgKind::Nat: nat_named(v); break;
        case ArgKind::Monad: monad(v); break;
        case ArgKind::Adjunction: adjunction(v); break;
        case ArgKind::Parametric: parametric_named(v); break;
        case ArgKind::Cell: {
          cell_kind = cell_named(v).kind;
          if (!spec.cell_kind.empty() && cell_kind != spec.cell_kind)
            throw ReferenceError(code::type_mismatch, "op " + t.op + " needs a " + spec.cell_kind + " one-cell");
          break;
        }
        case ArgKind::Side: break;
        }
      });
    }
    t.args = args;
    return t;
  }
};

} // namespace detail

/** Parse and resolve a spec file; every problem found is reported at once. */
inline SpecFile parse_spec_file(std::string_view text) {
  ojson doc = parse_strict_json(text);
  SpecFile out;
  std::vector<ParseIssue> issues;
  detail::Resolver(doc, out, issues).run();
  if (!issues.empty()) throw SpecParseError(std::move(issues));
  return out;
}

// ---------------------------------------------------------------------------
// Emission

namespace detail {

inline ojson category_json(const FinCat& c) {
  CategoryData d = c.data();
  ojson j;
  j["objects"] = d.objects;
  j["morphisms"] = ojson::array();
  for (const auto& m : d.morphisms) j["morphisms"].push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["identities"] = ojson::object();
  for (const auto& [o, m] : d.identities) j["identities"][o] = m;
  j["composition"] = ojson::array();
  for (const auto& e : d.composition) j["composition"].push_back({{"g", e.g}, {"f", e.f}, {"eq", e.eq}});
  return j;
}

inline ojson functor_json(const Functor& F, const std::string& dom, const std::string& cod) {
  ojson f{{"dom", dom}, {"cod", cod}, {"obj_map", ojson::object()}, {"mor_map", ojson::object()}};
  for (int a = 0; a < F.dom()->object_count(); ++a) f["obj_map"][F.dom()->object_id(a)] = F.obj_id(a);
  for (int m = 0; m < F.dom()->morphism_count(); ++m) f["mor_map"][F.dom()->morphism_id(m)] = F.mor_id(m);
  return f;
}

inline ojson components_json(const NatTrans& t) {
  ojson j = ojson::object();
  const auto& C = *t.dom();
  for (int a = 0; a < C.object_count(); ++a) j[C.object_id(a)] = t.cod()->morphism_id(t.at(a));
  return j;
}

} // namespace detail

inline ojson emit_spec_file(const SpecFile& s) {
  ojson j = ojson::object();
  if (!s.categories.empty()) {
    j["categories"] = ojson::object();
    for (const auto& [n, d] : s.categories) j["categories"][n] = detail::category_json(*d.value);
  }
  if (!s.functors.empty()) {
    j["functors"] = ojson::object();
    for (const auto& [n, d] : s.functors) j["functors"][n] = detail::functor_json(d.value, d.dom, d.cod);
  }
  if (!s.natural_transformations.empty()) {
    j["natural_transformations"] = ojson::object();
    for (const auto& [n, d] : s.natural_transformations)
      j["natural_transformations"][n] = {
          {"source", d.source}, {"target", d.target}, {"components", detail::components_json(d.value)}};
  }
  if (!s.monads.empty()) {
    j["monads"] = ojson::object();
    for (const auto& [n, d] : s.monads)
      j["monads"][n] = {{"base", d.base}, {"endo", d.endo}, {"mult", d.mult}, {"unit", d.unit}};
  }
  if (!s.adjunctions.empty()) {
    j["adjunctions"] = ojson::object();
    for (const auto& [n, d] : s.adjunctions)
      j["adjunctions"][n] = {{"left", d.left}, {"right", d.right}, {"unit", d.unit}, {"counit", d.counit}};
  }
  if (!s.one_cells.empty()) {
    j["one_cells"] = ojson::object();
    for (const auto& [n, d] : s.one_cells) {
      ojson c{{"kind", d.kind}, {"source", d.source}, {"target", d.target}, {"top", d.top}};
      if (d.kind == "adj") c["bottom"] = d.bottom;
      ojson st = d.structure.empty() ? ojson{{"components", detail::components_json(d.structure_map())}}
                                     : ojson(d.structure);
      c[d.kind == "adj" ? "lambda" : "psi"] = std::move(st);
      j["one_cells"][n] = std::move(c);
    }
  }
  if (!s.parametric_adjunctions.empty()) {
    j["parametric_adjunctions"] = ojson::object();
    for (const auto& [n, d] : s.parametric_adjunctions) {
      ojson per = ojson::array();
      for (const auto& [q, a] : d.per_parameter) per.push_back({{"param", q}, {"adjunction", a}});
      j["parametric_adjunctions"][n] = {{"F", d.F}, {"G", d.G}, {"per_parameter", std::move(per)}};
    }
  }
  if (!s.tasks.empty()) {
    j["tasks"] = ojson::array();
    for (const auto& t : s.tasks) {
      ojson e{{"op", t.op}, {"args", t.args}};
      if (t.named) e["name"] = t.name;
      j["tasks"].push_back(std::move(e));
    }
  }
  return j;
}

} // namespace catkit::harness

#endif
