#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "eqstiefel/character_ring.hpp"

namespace eqs {

namespace {

std::string format_monomial(const CharacterMonomial& mono) {
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += '*';
    out += factor;
  };
  if (mono.a != 0) append("s^" + std::to_string(mono.a));
  for (std::size_t j = 0; j < mono.e.size(); ++j) {
    if (mono.e[j] != 0) append("x" + std::to_string(j + 1) + "^" + std::to_string(mono.e[j]));
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Ambient ambient) : text_(text), ambient_(ambient) {}

  CharacterPolynomial parse() {
    CharacterPolynomial f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "polynomial parse error at offset " << pos_ << ": " << what << " in \"" << text_ << "\"";
    throw std::invalid_argument(os.str());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_integer() {
    bool negative = accept('-');
    if (!negative) accept('+');
    std::string ds = digits();
    if (ds.size() > 9) fail("exponent too large");
    int v = std::stoi(ds);
    return negative ? -v : v;
  }

  CharacterPolynomial expression() {
    CharacterPolynomial sum(ambient_);
    bool negative = accept('-');
    if (!negative) accept('+');
    CharacterPolynomial t = term();
    sum += negative ? -t : t;
    while (true) {
      if (accept('+')) {
        sum += term();
      } else if (accept('-')) {
        sum -= term();
      } else {
        break;
      }
    }
    return sum;
  }

  CharacterPolynomial term() {
    CharacterPolynomial product = factor();
    while (accept('*')) product = product * factor();
    return product;
  }

  CharacterPolynomial factor() {
    CharacterPolynomial base = atom();
    if (!accept('^')) return base;
    int k = small_integer();
    if (k >= 0) return pow(base, k);
    return pow(invert_monomial(base), -k);
  }

  CharacterPolynomial invert_monomial(const CharacterPolynomial& base) {
    if (base.size() != 1) fail("negative power of a non-monomial");
    const auto& [mono, c] = *base.terms().begin();
    if (c != 1 && c != -1) fail("negative power of a non-unit monomial");
    CharacterMonomial inv{-mono.a, mono.e};
    for (int& v : inv.e) v = -v;
    CharacterPolynomial out(ambient_);
    out.add_term(std::move(inv), c);
    return out;
  }

  CharacterPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CharacterPolynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return CharacterPolynomial::constant(ambient_, Integer(digits()));
    }
    if (c == 's') {
      ++pos_;
      return CharacterPolynomial::sigma(ambient_);
    }
    if (c == 'x') {
      ++pos_;
      std::string ds = digits();
      int j = ds.size() > 6 ? 0 : std::stoi(ds);
      if (j < 1 || j > ambient_.r) fail("torus index out of range");
      return CharacterPolynomial::x(ambient_, j);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  Ambient ambient_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const CharacterPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string factors = format_monomial(mono);
    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + "*" + factors;
    }
  }
  return out;
}

CharacterPolynomial parse_polynomial(std::string_view text, Ambient ambient) {
  return Parser(text, ambient).parse();
}

}  // namespace eqs
