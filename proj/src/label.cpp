#include "coxart/label.hpp"

#include "coxart/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace coxart {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer at position " +
                       std::to_string(pos) + " in label");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) throw DomainError("label parameter too large");
      ++pos;
    }
    return static_cast<int>(v);
  }
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

} // namespace

bool GroupLabel::is_finite_type() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::D:
    case Family::F4:
    case Family::G2:
    case Family::I2:
      return true;
    default:
      return false;
  }
}

bool GroupLabel::is_affine() const {
  return family == Family::AffA || family == Family::AffB ||
         family == Family::AffC || family == Family::AffD;
}

int GroupLabel::rank() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::D:
      return n;
    case Family::F4:
      return 4;
    case Family::G2:
    case Family::I2:
      return 2;
    case Family::AffA:
    case Family::AffB:
    case Family::AffC:
    case Family::AffD:
      return n + 1;
    case Family::Gder:
      return r;
  }
  return 0;
}

std::string GroupLabel::text() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(n);
    case Family::B:
      return "B" + std::to_string(n);
    case Family::D:
      return "D" + std::to_string(n);
    case Family::F4:
      return "F4";
    case Family::G2:
      return "G2";
    case Family::I2:
      return "I2(" + std::to_string(n) + ")";
    case Family::AffA:
      return "~A" + std::to_string(n);
    case Family::AffB:
      return "~B" + std::to_string(n);
    case Family::AffC:
      return "~C" + std::to_string(n);
    case Family::AffD:
      return "~D" + std::to_string(n);
    case Family::Gder:
      return "G(" + std::to_string(de) + "," + std::to_string(e) + "," +
             std::to_string(r) + ")";
  }
  return "?";
}

GroupLabel parse_label(const std::string& text) {
  Cursor c{text};
  GroupLabel out;

  bool affine = c.eat('~');
  char fam = c.peek();
  ++c.pos;

  if (affine) {
    switch (fam) {
      case 'A':
        out.family = Family::AffA;
        out.n = c.integer();
        require(out.n >= 1, "~A requires n >= 1, got " + out.text());
        break;
      case 'B':
        out.family = Family::AffB;
        out.n = c.integer();
        require(out.n >= 3, "~B requires n >= 3, got ~B" + std::to_string(out.n));
        break;
      case 'C':
        out.family = Family::AffC;
        out.n = c.integer();
        require(out.n >= 2, "~C requires n >= 2, got ~C" + std::to_string(out.n));
        break;
      case 'D':
        out.family = Family::AffD;
        out.n = c.integer();
        require(out.n >= 3, "~D requires n >= 3, got ~D" + std::to_string(out.n));
        break;
      default:
        throw ParseError("unknown affine family '~" + std::string(1, fam) +
                         "' in label '" + text + "'");
    }
  } else {
    switch (fam) {
      case 'A':
        out.family = Family::A;
        out.n = c.integer();
        require(out.n >= 1, "A requires n >= 1, got A" + std::to_string(out.n));
        break;
      case 'B':
      case 'C':  // C_n = B_n
        out.family = Family::B;
        out.n = c.integer();
        require(out.n >= 2, "B requires n >= 2, got " + std::string(1, fam) +
                                std::to_string(out.n));
        break;
      case 'D':
        out.family = Family::D;
        out.n = c.integer();
        require(out.n >= 2, "D requires n >= 2, got D" + std::to_string(out.n));
        break;
      case 'F':
        require(c.integer() == 4, "only F4 is supported");
        out.family = Family::F4;
        out.n = 4;
        break;
      case 'G': {
        if (c.eat('(')) {
          out.family = Family::Gder;
          out.de = c.integer();
          if (!c.eat(',')) throw ParseError("expected ',' in G(de,e,r)");
          out.e = c.integer();
          if (!c.eat(',')) throw ParseError("expected ',' in G(de,e,r)");
          out.r = c.integer();
          if (!c.eat(')')) throw ParseError("expected ')' in G(de,e,r)");
          require(out.e >= 1, "G(de,e,r) requires e >= 1");
          require(out.de % out.e == 0,
                  "G(de,e,r) requires e to divide de, got " + out.text());
          require(out.de / out.e >= 2,
                  "G(de,e,r) requires d >= 2, got d=" +
                      std::to_string(out.de / out.e) + " in " + out.text());
          require(out.r >= 2, "G(de,e,r) requires r >= 2, got " + out.text());
        } else {
          require(c.integer() == 2, "only G2 or G(de,e,r) is supported");
          out.family = Family::G2;
          out.n = 6;  // I2(6) bond order
        }
        break;
      }
      case 'I': {
        require(c.integer() == 2, "only I2(p) is supported");
        if (!c.eat('(')) throw ParseError("expected '(' after I2");
        out.family = Family::I2;
        out.n = c.integer();
        if (!c.eat(')')) throw ParseError("expected ')' in I2(p)");
        require(out.n >= 3,
                "I2(p) requires p >= 3 (p=2 is reducible), got I2(" +
                    std::to_string(out.n) + ")");
        break;
      }
      default:
        throw ParseError("unknown family '" + std::string(1, fam) +
                         "' in label '" + text + "'");
    }
  }

  if (!c.done())
    throw ParseError("trailing characters '" + text.substr(c.pos) +
                     "' in label '" + text + "'");
  return out;
}

long long reflection_count_formula(const GroupLabel& label) {
  switch (label.family) {
    case Family::A:
      return static_cast<long long>(label.n) * (label.n + 1) / 2;
    case Family::B:
      return static_cast<long long>(label.n) * label.n;
    case Family::D:
      return static_cast<long long>(label.n) * (label.n - 1);
    case Family::F4:
      return 24;
    case Family::G2:
      return 6;
    case Family::I2:
      return label.n;
    default:
      throw DomainError("no reflecting-hyperplane count for " + label.text() +
                        ": not a finite type");
  }
}

long long coxeter_order_formula(const GroupLabel& label) {
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (label.family) {
    case Family::A:
      return factorial(label.n + 1);
    case Family::B:
      return (1LL << label.n) * factorial(label.n);
    case Family::D:
      return (1LL << (label.n - 1)) * factorial(label.n);
    case Family::F4:
      return 1152;
    case Family::G2:
      return 12;
    case Family::I2:
      return 2LL * label.n;
    default:
      throw DomainError("group of type " + label.text() + " is infinite");
  }
}

} // namespace coxart
