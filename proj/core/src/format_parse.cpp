#include <climits>
#include <string_view>

#include "saferc/format.hpp"

namespace saferc {
namespace {

constexpr std::string_view kConversions = "diouxXfFeEgGaAcspn%";

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

FormatError malformed(std::size_t offset, std::string description) {
  return FormatError{FormatError::Kind::MalformedDirective, offset, std::move(description)};
}

class Scanner {
 public:
  explicit Scanner(std::string_view format) : format_(format) {}

  FormatResult<std::vector<FormatItem>> run() {
    std::vector<FormatItem> items;
    std::size_t literal_start = 0;
    while (pos_ < format_.size()) {
      if (format_[pos_] != '%') {
        ++pos_;
        continue;
      }
      if (pos_ > literal_start) items.emplace_back(literal(literal_start, pos_));
      auto directive = scan_directive();
      if (!directive) return directive.error();
      items.emplace_back(std::move(directive).value());
      literal_start = pos_;
    }
    if (pos_ > literal_start) items.emplace_back(literal(literal_start, pos_));
    return items;
  }

 private:
  Literal literal(std::size_t begin, std::size_t end) const {
    return Literal{std::string{format_.substr(begin, end - begin)}, SourceSpan{begin, end - begin}};
  }

  bool at_end() const noexcept { return pos_ >= format_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : format_[pos_]; }

  // Reads a decimal field; false if it does not fit in an int.
  bool read_number(int& out) {
    long long value = 0;
    while (!at_end() && is_digit(peek())) {
      value = value * 10 + (peek() - '0');
      if (value > INT_MAX) return false;
      ++pos_;
    }
    out = static_cast<int>(value);
    return true;
  }

  FormatResult<Directive> scan_directive() {
    const std::size_t start = pos_;
    ++pos_;  // '%'
    Directive d;

    for (bool more = true; more && !at_end();) {
      switch (peek()) {
        case '-': d.flags.left = true; break;
        case '+': d.flags.plus = true; break;
        case ' ': d.flags.space = true; break;
        case '#': d.flags.alt = true; break;
        case '0': d.flags.zero = true; break;
        default: more = false; continue;
      }
      ++pos_;
    }

    if (peek() == '*') {
      d.width = Amount::from_arg();
      ++pos_;
    } else if (is_digit(peek())) {
      int width = 0;
      if (!read_number(width)) return malformed(start, "width overflows int");
      d.width = Amount::fixed(width);
    }

    if (peek() == '.') {
      ++pos_;
      if (peek() == '*') {
        d.precision = Amount::from_arg();
        ++pos_;
      } else {
        int precision = 0;
        if (!read_number(precision)) return malformed(start, "precision overflows int");
        d.precision = Amount::fixed(precision);
      }
    }

    switch (peek()) {
      case 'h':
        ++pos_;
        d.length = LengthModifier::h;
        if (peek() == 'h') {
          ++pos_;
          d.length = LengthModifier::hh;
        }
        break;
      case 'l':
        ++pos_;
        d.length = LengthModifier::l;
        if (peek() == 'l') {
          ++pos_;
          d.length = LengthModifier::ll;
        }
        break;
      case 'j': ++pos_; d.length = LengthModifier::j; break;
      case 'z': ++pos_; d.length = LengthModifier::z; break;
      case 't': ++pos_; d.length = LengthModifier::t; break;
      case 'L': ++pos_; d.length = LengthModifier::L; break;
      default: break;
    }

    if (at_end()) return malformed(start, "incomplete directive");
    const char conversion = peek();
    if (kConversions.find(conversion) == std::string_view::npos) {
      return malformed(start, std::string{"unknown conversion '"} + conversion + "'");
    }
    ++pos_;
    d.conversion = conversion;

    if (conversion == '%' && (d.flags.any() || !d.width.is_none() || !d.precision.is_none() ||
                              d.length != LengthModifier::None)) {
      return malformed(start, "'%%' takes no flags, width, precision or length");
    }
    d.span = SourceSpan{start, pos_ - start};
    return d;
  }

  std::string_view format_;
  std::size_t pos_ = 0;
};

}  // namespace

std::size_t Directive::args_consumed() const noexcept {
  if (conversion == '%') return 0;
  return 1 + (width.is_from_arg() ? 1u : 0u) + (precision.is_from_arg() ? 1u : 0u);
}

std::string_view source_text(std::string_view format, const FormatItem& item) noexcept {
  const SourceSpan span = std::visit([](const auto& i) { return i.span; }, item);
  if (span.offset > format.size()) return {};
  return format.substr(span.offset, span.length);
}

std::string_view to_string(FormatError::Kind kind) noexcept {
  switch (kind) {
    case FormatError::Kind::MalformedDirective: return "MalformedDirective";
    case FormatError::Kind::ArgCountMismatch: return "ArgCountMismatch";
    case FormatError::Kind::ArgTypeMismatch: return "ArgTypeMismatch";
  }
  return "Unknown";
}

FormatResult<std::vector<FormatItem>> parse_directives(std::string_view format) {
  return Scanner{format}.run();
}

std::size_t args_consumed(std::span<const FormatItem> items) noexcept {
  std::size_t total = 0;
  for (const auto& item : items) {
    if (const auto* d = std::get_if<Directive>(&item)) total += d->args_consumed();
  }
  return total;
}

}  // namespace saferc
