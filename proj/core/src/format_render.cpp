#include <algorithm>
#include <climits>
#include <cstdio>
#include <string>

#include "saferc/format.hpp"

namespace saferc {
namespace {

FormatError type_mismatch(const Directive& d, std::string what) {
  return FormatError{FormatError::Kind::ArgTypeMismatch, d.span.offset, std::move(what)};
}

FormatError count_mismatch(std::size_t offset, std::string what) {
  return FormatError{FormatError::Kind::ArgCountMismatch, offset, std::move(what)};
}

// Integer value reduced to the domain selected by the length modifier.
struct IntegerValue {
  bool negative = false;
  std::uint64_t magnitude = 0;
};

std::int64_t narrow_signed(std::int64_t v, LengthModifier length) {
  switch (length) {
    case LengthModifier::hh: return static_cast<signed char>(v);
    case LengthModifier::h: return static_cast<short>(v);
    case LengthModifier::None: return static_cast<int>(v);
    case LengthModifier::l: return static_cast<long>(v);
    default: return v;
  }
}

std::uint64_t narrow_unsigned(std::uint64_t v, LengthModifier length) {
  switch (length) {
    case LengthModifier::hh: return static_cast<unsigned char>(v);
    case LengthModifier::h: return static_cast<unsigned short>(v);
    case LengthModifier::None: return static_cast<unsigned int>(v);
    case LengthModifier::l: return static_cast<unsigned long>(v);
    default: return v;
  }
}

bool integer_arg(const ArgValue& value, std::uint64_t& bits) {
  if (const auto* s = std::get_if<arg::Signed>(&value)) {
    bits = static_cast<std::uint64_t>(s->value);
  } else if (const auto* u = std::get_if<arg::Unsigned>(&value)) {
    bits = u->value;
  } else if (const auto* c = std::get_if<arg::Char>(&value)) {
    bits = c->value;
  } else {
    return false;
  }
  return true;
}

std::string to_base(std::uint64_t v, unsigned base, bool upper) {
  const char* digits = upper ? "0123456789ABCDEF" : "0123456789abcdef";
  std::string out;
  do {
    out += digits[v % base];
    v /= base;
  } while (v != 0);
  std::reverse(out.begin(), out.end());
  return out;
}

void pad_into(std::string& out, const std::string& prefix, const std::string& body, int width,
              bool left, bool zero_pad) {
  const std::size_t len = prefix.size() + body.size();
  const std::size_t w = width > 0 ? static_cast<std::size_t>(width) : 0;
  const std::size_t fill = w > len ? w - len : 0;
  if (left) {
    out += prefix;
    out += body;
    out.append(fill, ' ');
  } else if (zero_pad) {
    out += prefix;
    out.append(fill, '0');
    out += body;
  } else {
    out.append(fill, ' ');
    out += prefix;
    out += body;
  }
}

struct Resolved {
  Flags flags;
  int width = 0;
  int precision = -1;  // -1: not given
};

void render_integer(std::string& out, const Directive& d, const Resolved& r, std::uint64_t bits) {
  IntegerValue value;
  const char conv = d.conversion;
  if (conv == 'd' || conv == 'i') {
    const std::int64_t v = narrow_signed(static_cast<std::int64_t>(bits), d.length);
    value.negative = v < 0;
    value.magnitude = value.negative ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  } else {
    value.magnitude = narrow_unsigned(bits, d.length);
  }

  const unsigned base = conv == 'o' ? 8 : (conv == 'x' || conv == 'X') ? 16 : 10;
  std::string digits = to_base(value.magnitude, base, conv == 'X');
  if (r.precision == 0 && value.magnitude == 0) digits.clear();
  if (r.precision > 0 && digits.size() < static_cast<std::size_t>(r.precision)) {
    digits.insert(0, static_cast<std::size_t>(r.precision) - digits.size(), '0');
  }

  std::string prefix;
  if (conv == 'd' || conv == 'i') {
    if (value.negative) {
      prefix = "-";
    } else if (r.flags.plus) {
      prefix = "+";
    } else if (r.flags.space) {
      prefix = " ";
    }
  } else if (r.flags.alt) {
    if (conv == 'o' && (digits.empty() || digits.front() != '0')) digits.insert(0, "0");
    if ((conv == 'x' || conv == 'X') && value.magnitude != 0) prefix = conv == 'x' ? "0x" : "0X";
  }

  // '0' is ignored with '-' or with an explicit precision.
  const bool zero_pad = r.flags.zero && !r.flags.left && r.precision < 0;
  pad_into(out, prefix, digits, r.width, r.flags.left, zero_pad);
}

void render_float(std::string& out, const Directive& d, const Resolved& r, double v) {
  std::string spec = "%";
  if (r.flags.left) spec += '-';
  if (r.flags.plus) spec += '+';
  if (r.flags.space) spec += ' ';
  if (r.flags.alt) spec += '#';
  if (r.flags.zero) spec += '0';
  if (r.width > 0) spec += std::to_string(r.width);
  if (r.precision >= 0) spec += '.' + std::to_string(r.precision);
  spec += d.conversion;

  const int needed = std::snprintf(nullptr, 0, spec.c_str(), v);
  if (needed <= 0) return;
  std::string buffer(static_cast<std::size_t>(needed) + 1, '\0');
  std::snprintf(buffer.data(), buffer.size(), spec.c_str(), v);
  buffer.resize(static_cast<std::size_t>(needed));
  out += buffer;
}

class Renderer {
 public:
  explicit Renderer(std::span<const ArgValue> args) : args_(args) {}

  FormatResult<std::string> run(std::span<const FormatItem> items) {
    for (const auto& item : items) {
      if (const auto* lit = std::get_if<Literal>(&item)) {
        out_ += lit->text;
        continue;
      }
      if (auto err = directive(std::get<Directive>(item))) return std::move(*err);
    }
    if (next_ != args_.size()) {
      return count_mismatch(0, std::to_string(args_.size()) + " arguments supplied, " +
                                   std::to_string(next_) + " consumed");
    }
    return std::move(out_);
  }

 private:
  const ArgValue* take() { return next_ < args_.size() ? &args_[next_++] : nullptr; }

  std::optional<FormatError> star(const Directive& d, int& out) {
    const ArgValue* a = take();
    if (a == nullptr) return count_mismatch(d.span.offset, "missing '*' argument");
    if (const auto* s = std::get_if<arg::Signed>(a)) {
      if (s->value < INT_MIN || s->value > INT_MAX) return type_mismatch(d, "'*' argument out of int range");
      out = static_cast<int>(s->value);
      return std::nullopt;
    }
    if (const auto* u = std::get_if<arg::Unsigned>(a)) {
      if (u->value > INT_MAX) return type_mismatch(d, "'*' argument out of int range");
      out = static_cast<int>(u->value);
      return std::nullopt;
    }
    return type_mismatch(d, "'*' argument must be an integer");
  }

  std::optional<FormatError> directive(const Directive& d) {
    if (d.conversion == '%') {
      out_ += '%';
      return std::nullopt;
    }

    Resolved r;
    r.flags = d.flags;
    if (d.width.is_fixed()) r.width = d.width.value;
    if (d.width.is_from_arg()) {
      int w = 0;
      if (auto err = star(d, w)) return err;
      // A negative '*' width means left adjustment.
      if (w < 0) {
        r.flags.left = true;
        r.width = w == INT_MIN ? INT_MAX : -w;
      } else {
        r.width = w;
      }
    }
    if (d.precision.is_fixed()) r.precision = d.precision.value;
    if (d.precision.is_from_arg()) {
      int p = 0;
      if (auto err = star(d, p)) return err;
      r.precision = p < 0 ? -1 : p;
    }

    const ArgValue* a = take();
    if (a == nullptr) {
      return count_mismatch(d.span.offset, std::string{"missing argument for %"} + d.conversion);
    }

    switch (d.conversion) {
      case 'd': case 'i': case 'o': case 'u': case 'x': case 'X': {
        if (d.length == LengthModifier::L) return type_mismatch(d, "'L' is not an integer length");
        std::uint64_t bits = 0;
        if (!integer_arg(*a, bits)) return type_mismatch(d, "integer conversion needs an integer");
        render_integer(out_, d, r, bits);
        return std::nullopt;
      }
      case 'f': case 'F': case 'e': case 'E': case 'g': case 'G': {
        if (d.length != LengthModifier::None && d.length != LengthModifier::l &&
            d.length != LengthModifier::L) {
          return type_mismatch(d, "invalid length for a floating conversion");
        }
        const auto* f = std::get_if<arg::Float>(a);
        if (f == nullptr) return type_mismatch(d, "floating conversion needs a float");
        render_float(out_, d, r, f->value);
        return std::nullopt;
      }
      case 'a': case 'A':
        return type_mismatch(d, "hexadecimal floating output is not supported");
      case 'c': {
        if (d.length != LengthModifier::None) return type_mismatch(d, "wide characters are not supported");
        unsigned char ch = 0;
        if (const auto* c = std::get_if<arg::Char>(a)) {
          ch = c->value;
        } else if (const auto* s = std::get_if<arg::Signed>(a)) {
          ch = static_cast<unsigned char>(s->value);
        } else {
          return type_mismatch(d, "%c needs a character");
        }
        pad_into(out_, {}, std::string(1, static_cast<char>(ch)), r.width, r.flags.left, false);
        return std::nullopt;
      }
      case 's': {
        if (d.length != LengthModifier::None) return type_mismatch(d, "wide strings are not supported");
        const auto* s = std::get_if<arg::Str>(a);
        if (s == nullptr) return type_mismatch(d, "%s needs a string");
        if (!s->text) return type_mismatch(d, "%s argument is absent");
        std::string_view text = *s->text;
        // Stop at an embedded terminator, as a C string would.
        text = text.substr(0, std::min(text.size(), text.find('\0')));
        if (r.precision >= 0) text = text.substr(0, std::min(text.size(), static_cast<std::size_t>(r.precision)));
        pad_into(out_, {}, std::string{text}, r.width, r.flags.left, false);
        return std::nullopt;
      }
      case 'p': {
        const auto* p = std::get_if<arg::Address>(a);
        if (p == nullptr) return type_mismatch(d, "%p needs an address");
        pad_into(out_, "0x", to_base(p->value, 16, false), r.width, r.flags.left, false);
        return std::nullopt;
      }
      case 'n':
        return type_mismatch(d, "%n is never rendered");
      default:
        return FormatError{FormatError::Kind::MalformedDirective, d.span.offset, "unknown conversion"};
    }
  }

  std::span<const ArgValue> args_;
  std::size_t next_ = 0;
  std::string out_;
};

}  // namespace

FormatResult<std::string> render(std::span<const FormatItem> items, std::span<const ArgValue> args) {
  return Renderer{args}.run(items);
}

}  // namespace saferc
