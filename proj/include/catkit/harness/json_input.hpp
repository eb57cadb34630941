#ifndef CATKIT_HARNESS_JSON_INPUT_HPP
#define CATKIT_HARNESS_JSON_INPUT_HPP

#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace catkit::harness {

using ojson = nlohmann::ordered_json;

/** Error codes a spec file can be rejected with. */
namespace code {
inline constexpr const char* malformed_json = "malformed-json";
inline constexpr const char* duplicate_key = "duplicate-key";
inline constexpr const char* schema = "schema-violation";
inline constexpr const char* unknown_key = "unknown-key";
inline constexpr const char* dangling = "dangling-reference";
inline constexpr const char* cyclic = "cyclic-reference";
inline constexpr const char* expression = "bad-expression";
inline constexpr const char* type_mismatch = "type-mismatch";
inline constexpr const char* structural = "structural-error";
inline constexpr const char* resource = "resource-limit";
} // namespace code

struct ParseIssue {
  std::string code;
  /** JSON pointer into the document. */
  std::string path;
  std::string message;
  /** 1-based; 0 when only the path is known. */
  std::size_t line = 0;
  std::size_t column = 0;

  std::string describe() const {
    std::string where = path.empty() ? "/" : path;
    if (line > 0) where += " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    return code + " at " + where + ": " + message;
  }
};

/** Raised with every issue found; parsing never returns a partial result. */
class SpecParseError : public std::runtime_error {
public:
  explicit SpecParseError(std::vector<ParseIssue> issues)
      : std::runtime_error(issues.empty() ? "spec parse error" : issues.front().describe()),
        issues_(std::move(issues)) {}

  const std::vector<ParseIssue>& issues() const noexcept { return issues_; }

  /** Resource problems during resolution outrank schema problems for the exit status. */
  bool resource_limited() const {
    for (const auto& i : issues_)
      if (i.code == code::resource) return true;
    return false;
  }

private:
  std::vector<ParseIssue> issues_;
};

inline std::string pointer_escape(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

inline std::string child_path(const std::string& parent, const std::string& key) {
  return parent + "/" + pointer_escape(key);
}

inline std::string child_path(const std::string& parent, std::size_t index) {
  return parent + "/" + std::to_string(index);
}

namespace detail {

/** Builds an insertion-ordered DOM and records repeated keys instead of overwriting. */
class StrictSax : public nlohmann::json_sax<ojson> {
public:
  StrictSax(ojson& root, std::string_view text, std::vector<ParseIssue>& issues)
      : root_(root), text_(text), issues_(issues) {}

  bool null() override { return put(nullptr); }
  bool boolean(bool v) override { return put(v); }
  bool number_integer(number_integer_t v) override { return put(v); }
  bool number_unsigned(number_unsigned_t v) override { return put(v); }
  bool number_float(number_float_t v, const string_t&) override { return put(v); }
  bool string(string_t& v) override { return put(v); }
  bool binary(binary_t& v) override { return put(ojson::binary(v)); }

  bool start_object(std::size_t) override {
    ojson* slot = place(ojson::object());
    frames_.push_back({slot, {}, pending_path()});
    return true;
  }
  bool key(string_t& k) override {
    Frame& f = frames_.back();
    std::string path = child_path(f.path, k);
    if (!f.keys.insert(k).second) {
      issues_.push_back({code::duplicate_key, path, "key \"" + k + "\" appears more than once"});
      key_ = {};
      skip_ = true;
      return true;
    }
    key_ = k;
    skip_ = false;
    return true;
  }
  bool end_object() override {
    frames_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    ojson* slot = place(ojson::array());
    frames_.push_back({slot, {}, pending_path()});
    return true;
  }
  bool end_array() override {
    frames_.pop_back();
    return true;
  }

  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    auto [line, col] = line_column(position);
    std::string msg = ex.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    issues_.push_back({code::malformed_json, "", msg, line, col});
    return false;
  }

private:
  struct Frame {
    ojson* node;
    std::set<std::string> keys;
    std::string path;
  };

  ojson& root_;
  std::string_view text_;
  std::vector<ParseIssue>& issues_;
  std::vector<Frame> frames_;
  std::string key_;
  bool skip_ = false;
  std::string last_path_;
  std::deque<ojson> discarded_;

  std::pair<std::size_t, std::size_t> line_column(std::size_t position) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < position && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  std::string pending_path() const { return last_path_; }

  /** Insert a value at the current position and return where it went. */
  ojson* place(ojson v) {
    if (frames_.empty()) {
      root_ = std::move(v);
      last_path_.clear();
      return &root_;
    }
    Frame& f = frames_.back();
    if (f.node->is_array()) {
      last_path_ = child_path(f.path, f.node->size());
      f.node->push_back(std::move(v));
      return &f.node->back();
    }
    if (skip_) {
      // Value of a duplicated key: parsed into scratch space and dropped.
      skip_ = false;
      last_path_ = child_path(f.path, "~duplicate");
      discarded_.push_back(std::move(v));
      return &discarded_.back();
    }
    last_path_ = child_path(f.path, key_);
    ojson& slot = (*f.node)[key_];
    slot = std::move(v);
    return &slot;
  }
  bool put(ojson v) {
    place(std::move(v));
    return true;
  }
};

} // namespace detail

/** Parse UTF-8 JSON, rejecting malformed input and duplicate keys at any depth. */
inline ojson parse_strict_json(std::string_view text) {
  ojson root;
  std::vector<ParseIssue> issues;
  detail::StrictSax sax(root, text, issues);
  bool ok = ojson::sax_parse(text.begin(), text.end(), &sax, ojson::input_format_t::json, true);
  if (!ok || !issues.empty()) throw SpecParseError(std::move(issues));
  return root;
}

} // namespace catkit::harness

#endif
