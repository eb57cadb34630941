#ifndef CATKIT_ERROR_HPP
#define CATKIT_ERROR_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catkit {

inline std::string format_witness(const std::vector<std::string>& witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += witness[i];
  }
  return out + ")";
}

/** Base class of every error raised by the engine. */
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what, std::vector<std::string> witness = {})
      : std::runtime_error(witness.empty() ? what : what + " at " + format_witness(witness)),
        witness_(std::move(witness)) {}

  const std::vector<std::string>& witness() const noexcept { return witness_; }

private:
  std::vector<std::string> witness_;
};

/** Dangling identifiers, shape mismatches, duplicate declarations. */
class StructuralError : public Error {
public:
  using Error::Error;
};

/** A value produced by the engine failed one of its laws. */
class LawError : public Error {
public:
  using Error::Error;
};

/** The inputs do not satisfy the hypotheses of the requested operation. */
class DomainError : public Error {
public:
  using Error::Error;
};

/** A construction would exceed the configured morphism limit. */
class ResourceError : public Error {
public:
  ResourceError(const std::string& what, std::size_t limit)
      : Error(what + " (limit " + std::to_string(limit) + " morphisms)"), limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t limit_;
};

struct Violation {
  std::string law;
  std::vector<std::string> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/**
 * Outcome of a validation or verification. Structural problems and law
 * failures are kept apart; named checks record every verified claim.
 */
class Report {
public:
  void structural(std::string what, std::vector<std::string> witness = {}) {
    structural_.push_back({std::move(what), std::move(witness)});
  }

  void fail(std::string law, std::vector<std::string> witness = {}) {
    violations_.push_back({std::move(law), std::move(witness)});
  }

  /** Record a named claim; a false claim is also recorded as a violation. */
  bool check(const std::string& name, bool ok, std::vector<std::string> witness = {}) {
    checks_.emplace_back(name, ok);
    if (!ok) fail(name, std::move(witness));
    return ok;
  }

  /** Merge another report, prefixing its law names with `scope`. */
  void absorb(const std::string& scope, const Report& other) {
    auto prefixed = [&](const std::string& s) { return scope.empty() ? s : scope + "/" + s; };
    for (const auto& v : other.structural_) structural_.push_back({prefixed(v.law), v.witness});
    for (const auto& v : other.violations_) violations_.push_back({prefixed(v.law), v.witness});
    for (const auto& [n, ok] : other.checks_) checks_.emplace_back(prefixed(n), ok);
  }

  bool ok() const noexcept { return structural_.empty() && violations_.empty(); }
  bool structurally_ok() const noexcept { return structural_.empty(); }

  const std::vector<Violation>& structural_issues() const noexcept { return structural_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const std::vector<std::pair<std::string, bool>>& checks() const noexcept { return checks_; }

  bool has_violation(const std::string& law) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& v) { return v.law == law; });
  }

  bool has_violation(const std::string& law, const std::vector<std::string>& witness) const {
    return std::find(violations_.begin(), violations_.end(), Violation{law, witness}) !=
           violations_.end();
  }

  /** Violations in canonical order, for reproducible output. */
  std::vector<Violation> sorted_violations() const {
    auto all = structural_;
    all.insert(all.end(), violations_.begin(), violations_.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  }

  std::string summary() const {
    if (ok()) return "ok";
    auto all = sorted_violations();
    std::string out = all.front().law + " " + format_witness(all.front().witness);
    if (all.size() > 1) out += " and " + std::to_string(all.size() - 1) + " more";
    return out;
  }

private:
  std::vector<Violation> structural_;
  std::vector<Violation> violations_;
  std::vector<std::pair<std::string, bool>> checks_;
};

/** Throw if `r` is not clean; structural issues take precedence. */
inline void require(const Report& r, const std::string& context) {
  if (!r.structurally_ok()) {
    const auto& v = r.structural_issues().front();
    throw StructuralError(context + ": " + v.law, v.witness);
  }
  if (!r.ok()) {
    auto all = r.sorted_violations();
    throw LawError(context + ": " + all.front().law, all.front().witness);
  }
}

namespace detail {
inline std::atomic<std::size_t> morphism_limit{4000};
}

inline std::size_t morphism_limit() noexcept { return detail::morphism_limit.load(); }

inline void set_morphism_limit(std::size_t n) noexcept { detail::morphism_limit.store(n); }

/** Temporarily replaces the morphism limit. */
class ScopedMorphismLimit {
public:
  explicit ScopedMorphismLimit(std::size_t n) : saved_(morphism_limit()) { set_morphism_limit(n); }
  ~ScopedMorphismLimit() { set_morphism_limit(saved_); }
  ScopedMorphismLimit(const ScopedMorphismLimit&) = delete;
  ScopedMorphismLimit& operator=(const ScopedMorphismLimit&) = delete;

private:
  std::size_t saved_;
};

inline void enforce_morphism_limit(std::size_t count, const std::string& what) {
  if (count > morphism_limit())
    throw ResourceError(what + " would have " + std::to_string(count) + " morphisms",
                        morphism_limit());
}

} // namespace catkit

#endif
