#include "geninv/poly.hpp"

#include "geninv/error.hpp"

#include <algorithm>
#include <cctype>

namespace geninv {

Variable Ring::add(std::string name) {
  if (by_name_.contains(name)) throw ContractError("duplicate variable name '" + name + "'");
  const std::size_t id = names_.size();
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  return {names_.back(), id};
}

std::optional<Variable> Ring::find(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return Variable{it->first, it->second};
}

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& [id, e] : m) d += e;
  return d;
}

bool GradedLexOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const auto dl = total_degree(lhs);
  const auto dr = total_degree(rhs);
  if (dl != dr) return dl < dr;
  auto l = lhs.begin();
  auto r = rhs.begin();
  while (l != lhs.end() && r != rhs.end()) {
    if (l->first != r->first) return l->first < r->first;  // lhs has the smaller id
    if (l->second != r->second) return l->second > r->second;
    ++l;
    ++r;
  }
  // Equal degrees make the remaining tails both empty.
  return false;
}

namespace {

Monomial multiply(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  out.reserve(lhs.size() + rhs.size());
  auto l = lhs.begin();
  auto r = rhs.begin();
  while (l != lhs.end() || r != rhs.end()) {
    if (r == rhs.end() || (l != lhs.end() && l->first < r->first)) {
      out.push_back(*l++);
    } else if (l == lhs.end() || r->first < l->first) {
      out.push_back(*r++);
    } else {
      out.emplace_back(l->first, l->second + r->second);
      ++l;
      ++r;
    }
  }
  return out;
}

Poly power(const Poly& base, std::uint32_t exponent) {
  Poly out(1);
  for (std::uint32_t k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

Poly::Poly(Gaussian constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

Poly Poly::variable(std::size_t id) {
  Poly p;
  p.terms_.emplace(Monomial{{id, 1}}, Gaussian(1));
  return p;
}

void Poly::add_term(const Monomial& m, const Gaussian& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Gaussian Poly::constant_term() const { return coefficient({}); }

Gaussian Poly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Gaussian() : it->second;
}

Gaussian Poly::linear_coefficient(std::size_t id) const { return coefficient({{id, 1}}); }

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  // The order is graded, so the last term has the highest degree.
  return static_cast<int>(geninv::total_degree(terms_.rbegin()->first));
}

int Poly::degree_in(const std::set<std::size_t>& ids) const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [id, e] : m) {
      if (ids.contains(id)) d += static_cast<int>(e);
    }
    best = std::max(best, d);
  }
  return best;
}

std::set<std::size_t> Poly::variables() const {
  std::set<std::size_t> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [id, e] : m) out.insert(id);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(multiply(ml, mr), cl * cr);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Gaussian& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Poly Poly::substitute(std::size_t id, const Poly& replacement) const {
  return substitute(std::map<std::size_t, Poly>{{id, replacement}});
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& replacements) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    Poly factor(c);
    for (const auto& [id, e] : m) {
      const auto it = replacements.find(id);
      if (it == replacements.end()) {
        kept.emplace_back(id, e);
      } else {
        factor *= power(it->second, e);
      }
    }
    for (const auto& [fm, fc] : factor.terms_) out.add_term(multiply(kept, fm), fc);
  }
  return out;
}

Poly Poly::partial_evaluate(const Assignment& values) const {
  std::map<std::size_t, Poly> replacements;
  for (const auto& [id, v] : values) replacements.emplace(id, Poly(v));
  return substitute(replacements);
}

Gaussian Poly::evaluate(const Assignment& values) const {
  Gaussian sum;
  for (const auto& [m, c] : terms_) {
    Gaussian term = c;
    for (const auto& [id, e] : m) {
      const auto it = values.find(id);
      if (it == values.end()) {
        throw UnboundVariableError("no value for variable #" + std::to_string(id));
      }
      for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

std::string Poly::render(const Ring& ring) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string monomial;
    bool short_names = std::all_of(m.begin(), m.end(), [&](const auto& f) {
      return ring.name(f.first).size() == 1;
    });
    for (const auto& [id, e] : m) {
      if (!monomial.empty() && !short_names) monomial += '*';
      monomial += ring.name(id);
      if (e > 1) monomial += "^" + std::to_string(e);
    }

    std::string sign;
    std::string coeff;
    if (c.is_real()) {
      sign = c.re().sign() < 0 ? "-" : (first ? "" : "+");
      const Rational magnitude = c.re().abs();
      if (monomial.empty()) {
        coeff = magnitude.to_string();
      } else if (magnitude != Rational(1)) {
        coeff = magnitude.to_string() + (magnitude.is_integer() ? "" : "*");
      }
    } else {
      sign = first ? "" : "+";
      coeff = "(" + render_scalar(c) + ")" + (monomial.empty() ? "" : "*");
    }
    out += sign + coeff + monomial;
    first = false;
  }
  return out;
}

SymMatrix::SymMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

SymMatrix::SymMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("symbolic matrix of shape " + shape() + " needs " +
                         std::to_string(rows_ * cols_) + " entries");
  }
}

SymMatrix::SymMatrix(const Matrix& constants)
    : rows_(constants.rows()), cols_(constants.cols()) {
  entries_.reserve(constants.size());
  for (const auto& x : constants.entries()) entries_.emplace_back(x);
}

bool SymMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::set<std::size_t> SymMatrix::variables() const {
  std::set<std::size_t> out;
  for (const auto& p : entries_) out.merge(p.variables());
  return out;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("add: shape mismatch " + shape() + " vs " + other.shape());
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("subtract: shape mismatch " + shape() + " vs " + other.shape());
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

SymMatrix operator*(const SymMatrix& lhs, const SymMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw DimensionError("multiply: inner dimensions differ " + lhs.shape() + " * " +
                         rhs.shape());
  }
  SymMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 1; i <= lhs.rows_; ++i) {
    for (std::size_t k = 1; k <= lhs.cols_; ++k) {
      const Poly& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 1; j <= rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

SymMatrix sym_matmul(const SymMatrix& lhs, const SymMatrix& rhs) { return lhs * rhs; }

SymMatrix SymMatrix::partial_evaluate(const Assignment& values) const {
  SymMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = entries_[k].partial_evaluate(values);
  }
  return out;
}

Matrix SymMatrix::evaluate(const Assignment& values) const {
  std::vector<Gaussian> out;
  out.reserve(entries_.size());
  for (const auto& p : entries_) out.push_back(p.evaluate(values));
  return Matrix(rows_, cols_, std::move(out));
}

std::string SymMatrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

AffineSplit affine_decompose(const std::vector<Poly>& system) {
  AffineSplit out;
  for (const auto& p : system) {
    (p.total_degree() <= 1 ? out.affine : out.residual).push_back(p);
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, Ring& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Poly out;
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (!accept('+') && !first) {
        throw ParseError(std::string("expected '+' or '-', got '") + peek() + "'", pos_);
      }
      Poly t = term();
      out += negative ? -t : t;
      first = false;
      skip_space();
    }
    return out;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool at_digit() {
    skip_space();
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }
  bool at_letter() {
    skip_space();
    return std::isalpha(static_cast<unsigned char>(peek())) != 0;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError("malformed number", start + e.position());
    }
  }

  Poly term() {
    Poly out(1);
    bool any = false;
    if (at_digit()) {
      out = Poly(Gaussian(number()));
      any = true;
    } else if (accept('(')) {
      const std::size_t start = pos_;
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) throw ParseError("unbalanced '('", start);
      try {
        out = Poly(parse_scalar(text_.substr(start, close - start)));
      } catch (const ParseError& e) {
        throw ParseError("malformed coefficient", start + e.position());
      }
      pos_ = close + 1;
      any = true;
    }
    for (;;) {
      const bool star = any && accept('*');
      if (at_letter()) {
        out *= factor();
        any = true;
      } else if (star) {
        throw ParseError("expected variable after '*'", pos_);
      } else {
        break;
      }
    }
    if (accept('/')) {
      const std::size_t at = pos_;
      skip_space();
      const Rational d = number();
      if (d.is_zero()) throw ParseError("division by zero", at);
      out *= Gaussian(d.inverse());
    }
    if (!any) throw ParseError("expected term", pos_);
    return out;
  }

  Poly factor() {
    const std::size_t start = pos_;
    ++pos_;
    while (peek() == '\'') ++pos_;
    if (peek() == '_') {
      ++pos_;
      if (peek() == '{') {
        const std::size_t close = text_.find('}', pos_);
        if (close == std::string_view::npos) throw ParseError("unbalanced '{'", pos_);
        pos_ = close + 1;
      } else {
        while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    const std::string name(text_.substr(start, pos_ - start));
    Poly base;
    if (name == "i") {
      base = Poly(Gaussian::i());
    } else {
      const auto found = ring_.find(name);
      base = Poly::variable(found ? *found : ring_.add(name));
    }
    if (peek() == '^') {
      ++pos_;
      const Rational e = number();
      if (!e.is_integer() || e.sign() < 0) throw ParseError("bad exponent", pos_);
      Poly out(1);
      for (long k = 0; k < e.numerator().get_si(); ++k) out *= base;
      return out;
    }
    return base;
  }

  std::string_view text_;
  Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, Ring& ring) { return PolyParser(text, ring).parse(); }

}  // namespace geninv
