#include "cubicbasis/parse.hpp"

#include <cctype>

namespace cubic {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const Field& f) : text_(text), field_(f) {}

  RatFn parse() {
    RatFn v = expr();
    skip_ws();
    require(pos_ == text_.size(), errc::parse_error,
            "unexpected trailing input at position " + std::to_string(pos_));
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFn expr() {
    RatFn v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  RatFn term() {
    RatFn v = factor();
    for (;;) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) {
        RatFn d = factor();
        require(!d.is_zero(), errc::division_by_zero, "division by zero in input");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RatFn factor() {
    if (eat('-')) return -factor();
    RatFn base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      std::uint64_t e = integer();
      require(e <= 4096, errc::parse_error, "exponent too large");
      if (neg) {
        require(!base.is_zero(), errc::division_by_zero, "zero to a negative power");
        return base.pow(-static_cast<int>(e));
      }
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  RatFn atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      RatFn v = expr();
      require(eat(')'), errc::parse_error, "missing closing parenthesis");
      return v;
    }
    if (c == 'x') {
      ++pos_;
      return RatFn(Poly::x(field_));
    }
    if (c == 't') {
      ++pos_;
      require(field_.n() > 1, errc::parse_error,
              "generator symbol t needs an extension field");
      return RatFn(Poly::constant(field_, field_.gen()));
    }
    require(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
            std::string("unexpected character '") + c + "'");
    return RatFn(Poly::constant(field_, field_.from_int(static_cast<std::int64_t>(integer()))));
  }

  std::uint64_t integer() {
    skip_ws();
    require(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])),
            errc::parse_error, "expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      require(v <= (std::uint64_t{1} << 62), errc::parse_error, "number too large");
      ++pos_;
    }
    return v;
  }

  const std::string& text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

std::uint64_t parse_u64(const std::string& s) {
  require(!s.empty(), errc::parse_error, "empty number");
  std::uint64_t v = 0;
  for (char c : s) {
    require(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
            "invalid number '" + s + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    require(v <= (std::uint64_t{1} << 62), errc::parse_error, "number too large");
  }
  return v;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
  FieldSpec spec;
  std::size_t caret = text.find('^');
  if (caret == std::string::npos) {
    spec.p = parse_u64(text);
  } else {
    spec.p = parse_u64(text.substr(0, caret));
    std::uint64_t n = parse_u64(text.substr(caret + 1));
    require(n >= 1 && n <= 64, errc::parse_error, "extension degree out of range");
    spec.n = static_cast<unsigned>(n);
  }
  return spec;
}

std::vector<std::uint64_t> parse_modulus_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_u64(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Field make_field(const FieldSpec& spec) {
  if (spec.modulus.empty()) return Field::make(spec.p, spec.n);
  return Field::make(spec.p, spec.n, spec.modulus);
}

RatFn parse_ratfn(const std::string& expr, const Field& f) {
  return Parser(expr, f).parse();
}

std::array<RatFn, 3> parse_cubic_coeffs(const std::string& text, const Field& f) {
  std::array<std::string, 3> parts;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', start);
    bool last = i == 2;
    require(last == (comma == std::string::npos), errc::parse_error,
            "cubic input needs exactly three comma-separated coefficients");
    parts[static_cast<std::size_t>(i)] =
        text.substr(start, last ? std::string::npos : comma - start);
    start = comma + 1;
  }
  return {parse_ratfn(parts[0], f), parse_ratfn(parts[1], f), parse_ratfn(parts[2], f)};
}

}  // namespace cubic
