#include "cremona/map_language.hpp"

#include <cstdint>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

enum class Tok { Num, Ident, LBrack, RBrack, LParen, RParen, Colon, Comma, Plus, Minus, Star, Slash, Caret, Super, Compose, End };

struct Token {
  Tok kind;
  std::string text;
  mpz_class num;
  int line, col;
};

constexpr int kMaxExponent = 64;
constexpr int kMaxDegree = 64;
constexpr int kMaxDepth = 200;

bool is_word(const std::string& w) {
  return w == "gamma" || w == "sigma" || w == "rho" || w == "tau" || w == "inf" || w == "infty" || w == "infinity" ||
         w == "id";
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int line = line_, col = col_;
      if (pos_ >= s_.size()) {
        out.push_back({Tok::End, "end of input", 0, line, col});
        return out;
      }
      unsigned char c = s_[pos_];
      if (c >= '0' && c <= '9') {
        std::string digits;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
          digits += s_[pos_];
          advance(1);
        }
        if (digits.size() > 200) throw ParseError("numeric literal too long", line, col);
        out.push_back({Tok::Num, digits, mpz_class(digits, 10), line, col});
        continue;
      }
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
        std::string run;
        std::vector<std::pair<int, int>> where;
        while (pos_ < s_.size() && ((s_[pos_] >= 'a' && s_[pos_] <= 'z') || (s_[pos_] >= 'A' && s_[pos_] <= 'Z'))) {
          where.emplace_back(line_, col_);
          run += s_[pos_];
          advance(1);
        }
        if (is_word(run)) {
          out.push_back({Tok::Ident, run == "infty" || run == "infinity" ? std::string("inf") : run, 0, line, col});
        } else {
          for (size_t i = 0; i < run.size(); ++i)
            out.push_back({Tok::Ident, std::string(1, run[i]), 0, where[i].first, where[i].second});
        }
        continue;
      }
      if (c < 0x80) {
        Tok k;
        switch (c) {
          case '[': k = Tok::LBrack; break;
          case ']': k = Tok::RBrack; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          case ':': k = Tok::Colon; break;
          case ',': k = Tok::Comma; break;
          case '+': k = Tok::Plus; break;
          case '-': k = Tok::Minus; break;
          case '*': k = Tok::Star; break;
          case '/': k = Tok::Slash; break;
          case '^': k = Tok::Caret; break;
          default: throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
        }
        out.push_back({k, std::string(1, static_cast<char>(c)), 0, line, col});
        advance(1);
        continue;
      }
      uint32_t cp = 0;
      size_t len = decode(cp);
      if (len == 0) throw ParseError("invalid UTF-8 byte", line, col);
      std::string text(s_.substr(pos_, len));
      advance(len);
      int digit = superscript_digit(cp);
      if (digit >= 0) {
        if (!out.empty() && out.back().kind == Tok::Super && out.back().line == line) {
          out.back().num = out.back().num * 10 + digit;
          out.back().text += text;
        } else {
          out.push_back({Tok::Super, text, digit, line, col});
        }
        continue;
      }
      switch (cp) {
        case 0x03B3: out.push_back({Tok::Ident, "γ", 0, line, col}); break;
        case 0x03C3: out.push_back({Tok::Ident, "sigma", 0, line, col}); break;
        case 0x03C1: out.push_back({Tok::Ident, "rho", 0, line, col}); break;
        case 0x03C4: out.push_back({Tok::Ident, "tau", 0, line, col}); break;
        case 0x221E: out.push_back({Tok::Ident, "inf", 0, line, col}); break;
        case 0x2218: out.push_back({Tok::Compose, text, 0, line, col}); break;
        case 0x2212: out.push_back({Tok::Minus, text, 0, line, col}); break;
        case 0x00B7: case 0x22C5: out.push_back({Tok::Star, text, 0, line, col}); break;
        default: throw ParseError("unexpected character '" + text + "'", line, col);
      }
    }
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  void advance(size_t n) {
    for (size_t i = 0; i < n; ++i) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(s_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++pos_;
    }
  }
  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) advance(1);
  }
  size_t decode(uint32_t& cp) const {
    unsigned char c = s_[pos_];
    size_t len;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return 0;
    }
    if (pos_ + len > s_.size()) return 0;
    for (size_t i = 1; i < len; ++i) {
      unsigned char d = s_[pos_ + i];
      if ((d & 0xC0) != 0x80) return 0;
      cp = (cp << 6) | (d & 0x3F);
    }
    return len;
  }
  static int superscript_digit(uint32_t cp) {
    switch (cp) {
      case 0x2070: return 0;
      case 0x00B9: return 1;
      case 0x00B2: return 2;
      case 0x00B3: return 3;
      default: break;
    }
    if (cp >= 0x2074 && cp <= 0x2079) return static_cast<int>(cp - 0x2070);
    return -1;
  }
};

class Parser {
 public:
  Parser(std::string_view text, const Bindings& b) : toks_(Lexer(text).run()), bindings_(b) {}

  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_ == toks_.size() - 1 ? i_ : i_++]; }

  [[noreturn]] void fail(const std::string& what, const Token& t) const { throw ParseError(what, t.line, t.col); }
  [[noreturn]] void unexpected(const Token& t) const {
    if (t.kind == Tok::End) fail("unexpected end of input", t);
    fail("unexpected '" + t.text + "'", t);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) {
      const Token& t = peek();
      if (t.kind == Tok::End) fail(std::string("expected ") + what + " before end of input", t);
      fail(std::string("expected ") + what + ", found '" + t.text + "'", t);
    }
    next();
  }
  void expect_end() {
    if (peek().kind != Tok::End) unexpected(peek());
  }

  HomPoly expr() {
    Guard g(*this);
    HomPoly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      HomPoly t = term();
      if (minus) acc -= t;
      else acc += t;
    }
    return acc;
  }

  HomPoly constant_expr(const char* what) {
    Token start = peek();
    HomPoly e = expr();
    if (!e.is_constant()) fail(std::string(what) + " must not involve x, y, z", start);
    return e;
  }

  std::array<HomPoly, 3> triple(std::array<Token, 3>& starts) {
    expect(Tok::LBrack, "'['");
    std::array<HomPoly, 3> out;
    for (int k = 0; k < 3; ++k) {
      starts[k] = peek();
      out[k] = expr();
      if (k < 2) expect(Tok::Colon, "':'");
    }
    expect(Tok::RBrack, "']'");
    return out;
  }

  BubblePoint point() {
    Guard g(*this);
    const Token& t = peek();
    if (t.kind == Tok::LBrack) {
      next();
      Vec3 v;
      for (int k = 0; k < 3; ++k) {
        v[k] = constant_expr("point coordinate").constant_value();
        if (k < 2) expect(Tok::Colon, "':'");
      }
      Token close = peek();
      expect(Tok::RBrack, "']'");
      if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) fail("point coordinates are all zero", close);
      return BubblePoint(v);
    }
    if (t.kind == Tok::LParen) {
      next();
      BubblePoint p = point();
      if (peek().kind != Tok::Comma) fail("expected ',' and a slope", peek());
      while (peek().kind == Tok::Comma) {
        next();
        if (peek().kind == Tok::Ident && peek().text == "inf") {
          next();
          p.tail.push_back(std::nullopt);
        } else {
          p.tail.push_back(constant_expr("slope").constant_value());
        }
      }
      expect(Tok::RParen, "')'");
      return p;
    }
    unexpected(t);
  }

 private:
  std::vector<Token> toks_;
  size_t i_ = 0;
  const Bindings& bindings_;
  int depth_ = 0;

  struct Guard {
    Parser& p;
    explicit Guard(Parser& q) : p(q) {
      if (++p.depth_ > kMaxDepth) p.fail("expression nested too deeply", p.peek());
    }
    ~Guard() { --p.depth_; }
  };

  bool starts_factor(const Token& t) const {
    if (t.kind == Tok::Num || t.kind == Tok::LParen) return true;
    if (t.kind != Tok::Ident) return false;
    return t.text != "sigma" && t.text != "rho" && t.text != "tau" && t.text != "inf" && t.text != "id" &&
           t.text != "o";
  }

  HomPoly term() {
    HomPoly acc = unary();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Star) {
        next();
        acc = checked_product(acc, unary(), t);
      } else if (t.kind == Tok::Slash) {
        Token op = next();
        Token start = peek();
        HomPoly d = unary();
        if (!d.is_constant()) fail("division by a non-constant expression", start);
        if (d.is_zero()) fail("division by zero", op);
        acc = acc.scaled(Scalar(1) / d.constant_value());
      } else if (starts_factor(t)) {
        acc = checked_product(acc, unary(), t);
      } else {
        return acc;
      }
    }
  }

  HomPoly checked_product(const HomPoly& a, const HomPoly& b, const Token& at) {
    if (a.degree() + b.degree() > kMaxDegree) fail("degree too large", at);
    return a * b;
  }

  HomPoly unary() {
    Guard g(*this);
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  HomPoly power() {
    HomPoly base = primary();
    while (peek().kind == Tok::Caret || peek().kind == Tok::Super) {
      Token op = next();
      mpz_class e;
      if (op.kind == Tok::Super) {
        e = op.num;
      } else {
        Token n = peek();
        if (n.kind != Tok::Num) fail("exponent must be a nonnegative integer", n);
        next();
        e = n.num;
      }
      if (e > kMaxExponent) fail("exponent too large", op);
      int k = static_cast<int>(e.get_si());
      if (base.degree() * k > kMaxDegree) fail("degree too large", op);
      base = base.pow(k);
    }
    return base;
  }

  HomPoly primary() {
    Token t = peek();
    switch (t.kind) {
      case Tok::Num:
        next();
        return HomPoly(Scalar(Rational(t.num)));
      case Tok::LParen: {
        next();
        HomPoly e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        if (t.text == "x") return next(), x_();
        if (t.text == "y") return next(), y_();
        if (t.text == "z") return next(), z_();
        std::string name = t.text == "gamma" ? "γ" : t.text;
        auto it = bindings_.find(name);
        if (it == bindings_.end() && name == "γ") it = bindings_.find("gamma");
        if (it != bindings_.end()) return next(), HomPoly(it->second);
        if (name == "γ" || name == "a" || name == "b") return next(), HomPoly(Scalar::symbol(name));
        fail("unknown symbol '" + t.text + "'", t);
      }
      default:
        unexpected(t);
    }
  }
};

}  // namespace

HomPoly parse_form(std::string_view text, const Bindings& bindings) {
  Parser p(text, bindings);
  Token start = p.peek();
  HomPoly f = p.expr();
  p.expect_end();
  if (!f.is_homogeneous()) throw ParseError("polynomial is not homogeneous", start.line, start.col);
  return f;
}

CremonaMap parse_map(std::string_view text, const Bindings& bindings) {
  Parser p(text, bindings);
  std::array<Token, 3> starts;
  auto f = p.triple(starts);
  p.expect_end();
  int d = -1;
  for (int k = 0; k < 3; ++k) {
    const Token& s = starts[k];
    if (f[k].is_zero()) throw ParseError("component " + std::to_string(k + 1) + " is zero", s.line, s.col);
    if (!f[k].is_homogeneous())
      throw ParseError("component " + std::to_string(k + 1) + " is not homogeneous", s.line, s.col);
    if (d >= 0 && f[k].degree() != d)
      throw ParseError("degree mismatch: component " + std::to_string(k + 1) + " has degree " +
                           std::to_string(f[k].degree()) + ", expected " + std::to_string(d),
                       s.line, s.col);
    d = f[k].degree();
  }
  return CremonaMap(f);
}

BubblePoint parse_point(std::string_view text, const Bindings& bindings) {
  Parser p(text, bindings);
  BubblePoint b = p.point();
  p.expect_end();
  return b;
}

namespace {

ProjAut linear_triple(Parser& p) {
  std::array<Token, 3> starts;
  auto f = p.triple(starts);
  for (int k = 0; k < 3; ++k)
    if (f[k].is_zero() || f[k].degree() != 1 || !f[k].is_homogeneous())
      throw ParseError("non-linear entry in automorphism", starts[k].line, starts[k].col);
  try {
    return ProjAut::from_forms(f);
  } catch (const InputError& e) {
    throw ParseError(e.what(), starts[0].line, starts[0].col);
  }
}

}  // namespace

Decomposition parse_decomposition(std::string_view text, const Bindings& bindings) {
  Parser p(text, bindings);
  Decomposition d;
  while (true) {
    Token t = p.peek();
    if (t.kind == Tok::LBrack) {
      d.push_back(Factor::of(linear_triple(p)));
    } else if (t.kind == Tok::Ident && (t.text == "sigma" || t.text == "rho" || t.text == "tau" || t.text == "id")) {
      p.next();
      if (t.text == "sigma") d.push_back(Factor::of(Factor::Kind::Sigma));
      else if (t.text == "rho") d.push_back(Factor::of(Factor::Kind::Rho));
      else if (t.text == "tau") d.push_back(Factor::of(Factor::Kind::Tau));
      else d.push_back(Factor::of(ProjAut()));
    } else if (t.kind == Tok::Ident) {
      p.fail("unknown symbol '" + t.text + "'", t);
    } else {
      p.unexpected(t);
    }
    Token sep = p.peek();
    if (sep.kind == Tok::End) break;
    if (sep.kind == Tok::Compose || (sep.kind == Tok::Ident && sep.text == "o")) {
      p.next();
      continue;
    }
    p.fail("expected composition operator", sep);
  }
  return d;
}

ProjAut parse_aut(std::string_view text, const Bindings& bindings) {
  Parser p(text, bindings);
  ProjAut a = linear_triple(p);
  p.expect_end();
  return a;
}

Scalar parse_scalar(std::string_view text, const Bindings& bindings) {
  Parser p(text, bindings);
  HomPoly e = p.constant_expr("value");
  p.expect_end();
  return e.constant_value();
}

}  // namespace cremona
