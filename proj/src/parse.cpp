#include "wbf/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "wbf/errors.hpp"

namespace wbf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, SignaturePtr sig) : text_(text), sig_(std::move(sig)) {
    for (std::size_t i = 0; i < sig_->n(); ++i) {
      const std::string& x = sig_->xs()[i];
      names_[x] = WeylOperator::x(sig_, i);
      names_["d" + x] = WeylOperator::d(sig_, i);
      if (x.size() > 1 && x[0] == 'x' && std::all_of(x.begin() + 1, x.end(), ::isdigit)) {
        names_["d" + x.substr(1)] = WeylOperator::d(sig_, i);
      }
    }
    for (const auto& p : sig_->params()) names_[p] = WeylOperator::param(sig_, p);
    if (sig_->has_shift_pair()) {
      names_["sigma"] = WeylOperator::sigma(sig_);
      names_["dt"] = WeylOperator::dt(sig_);
    }
  }

  WeylOperator parse() {
    WeylOperator r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WeylOperator expr() {
    skip();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    WeylOperator r = term();
    if (neg) r = -r;
    while (true) {
      if (accept('+')) {
        r = r + term();
      } else if (accept('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  WeylOperator term() {
    WeylOperator r = factor();
    while (true) {
      if (accept('*')) {
        r = r * factor();
      } else if (accept('/')) {
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("only numeric divisors are allowed");
        }
        Rational q = number();
        if (sgn(q) == 0) fail("division by zero");
        r = r.scaled(1 / q);
      } else {
        return r;
      }
    }
  }

  WeylOperator factor() {
    WeylOperator base = atom();
    if (accept('^')) {
      skip();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a natural number");
      }
      Rational e = number();
      if (e.get_den() != 1 || e > 1000) fail("exponent must be a natural number below 1000");
      return base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
    return base;
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
  }

  WeylOperator atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WeylOperator r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return WeylOperator::constant(sig_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto it = names_.find(name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return it->second;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SignaturePtr sig_;
  std::map<std::string, WeylOperator> names_;
};

std::vector<std::string> identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.emplace_back(text.substr(start, i - start));
    } else {
      ++i;
    }
  }
  return out;
}

bool indexed(const std::string& s, std::size_t prefix) {
  return s.size() > prefix && std::all_of(s.begin() + static_cast<long>(prefix), s.end(), ::isdigit);
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

WeylOperator parse_operator(std::string_view text, const SignaturePtr& sig) { return Parser(text, sig).parse(); }

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  auto sig = make_signature(vars);
  WeylOperator op = parse_operator(text, sig);
  Polynomial p(vars.size());
  for (const auto& [m, c] : op.terms()) {
    MultiIndex g(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (m.e[sig->d_slot(i)] != 0) throw InputError("expected a polynomial, found a derivative");
      g.set(i, m.e[sig->x_slot(i)]);
    }
    p.add_term(g, c);
  }
  return p;
}

std::vector<std::string> infer_variables(std::string_view text) {
  std::size_t max_index = 0;
  std::size_t max_letter = 0;
  for (const auto& id : identifiers(text)) {
    std::string base = id;
    if (base.size() > 1 && base[0] == 'd') {
      if (indexed(base, 1)) {
        max_index = std::max<std::size_t>(max_index, std::stoul(base.substr(1)));
        continue;
      }
      base = base.substr(1);
    }
    if (indexed(base, 1) && base[0] == 'x') {
      max_index = std::max<std::size_t>(max_index, std::stoul(base.substr(1)));
    } else if (base == "x") {
      max_letter = std::max<std::size_t>(max_letter, 1);
    } else if (base == "y") {
      max_letter = std::max<std::size_t>(max_letter, 2);
    } else if (base == "z") {
      max_letter = std::max<std::size_t>(max_letter, 3);
    }
  }
  if (max_index > 0 && max_letter > 0) throw InputError("cannot mix x,y,z with indexed variables");
  if (max_index > kMaxVars / 2) throw InputError("too many variables");
  std::vector<std::string> vars;
  if (max_index > 0) {
    for (std::size_t i = 1; i <= max_index; ++i) vars.push_back("x" + std::to_string(i));
  } else {
    const char* letters[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < std::max<std::size_t>(max_letter, 1); ++i) vars.emplace_back(letters[i]);
  }
  return vars;
}

Polynomial parse_polynomial(std::string_view text) { return parse_polynomial(text, infer_variables(text)); }

std::vector<Rational> parse_weight(std::string_view text) {
  std::vector<Rational> w;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (piece.empty()) throw InputError("empty weight entry");
    w.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; })) {
    throw InputError("weight vector must be nonzero");
  }
  return w;
}

IdealPresentation parse_ideal(std::string_view text) {
  std::vector<std::string> vars, params, lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      vars = split_words(line.substr(5));
    } else if (line.rfind("params:", 0) == 0) {
      params = split_words(line.substr(7));
    } else {
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw InputError("ideal file has no generators");
  if (vars.empty()) {
    std::string all;
    for (const auto& l : lines) all += l + " ";
    vars = infer_variables(all);
  }
  auto sig = make_signature(vars, params);
  std::vector<WeylOperator> gens;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      gens.push_back(parse_operator(lines[i], sig));
    } catch (const InputError& e) {
      throw InputError("generator " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return IdealPresentation(sig, gens);
}

}  // namespace wbf
