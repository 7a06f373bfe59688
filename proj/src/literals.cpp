#include "cayley/literals.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

namespace {

[[noreturn]] void Fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::kParse, "cannot parse '" + std::string(text) + "': " + why);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) Fail(text_, std::string("expected '") + c + "'");
  }
  Int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      Fail(text_, "expected an integer");
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec ParseGroupLiteral(std::string_view text) {
  GroupSpec spec;
  Cursor cur(text);
  if (cur.done()) Fail(text, "empty group literal");
  do {
    if (!cur.consume('Z')) Fail(text, "expected 'Z<n>'");
    Int n = cur.integer();
    if (n < 1) Fail(text, "factor must be positive");
    if (n > 1) spec.factors.push_back(n);
  } while (cur.consume('x'));
  if (!cur.done()) Fail(text, "trailing characters");
  return spec;
}

std::vector<std::vector<Int>> ParseElementList(std::string_view text) {
  std::vector<std::vector<Int>> out;
  Cursor cur(text);
  if (cur.done()) return out;
  do {
    std::vector<Int> coords;
    if (cur.consume('(')) {
      if (!cur.consume(')')) {
        do coords.push_back(cur.integer());
        while (cur.consume(','));
        cur.expect(')');
      }
    } else {
      coords.push_back(cur.integer());
    }
    out.push_back(std::move(coords));
  } while (cur.consume(','));
  if (!cur.done()) Fail(text, "trailing characters");
  return out;
}

std::vector<GroupElement> ParseElements(const CanonicalForm& form, std::string_view text) {
  std::vector<GroupElement> out;
  for (const auto& coords : ParseElementList(text)) {
    if (coords.size() != form.spec().factors.size()) {
      Fail(text, "element rank does not match the group literal");
    }
    out.push_back(form.map(coords));
  }
  return out;
}

std::string FormatElement(const GroupElement& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < u.rank(); ++j) {
    if (j > 0) os << ',';
    os << u[j];
  }
  os << ')';
  return os.str();
}

std::string FormatElementList(const std::vector<GroupElement>& elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += FormatElement(elements[i]);
  }
  return out;
}

}  // namespace cayley
