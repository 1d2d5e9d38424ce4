#include "irrstrat/exactnum/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "irrstrat/errors.hpp"

namespace irrstrat {

namespace {

int degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    for (std::size_t j = i + 1; j < variables_.size(); ++j)
      if (variables_[i] == variables_[j])
        throw Error(ErrorCode::VariableMismatch, "duplicate variable '" + variables_[i] + "'");
}

MultiPoly::MultiPoly(GaussianRational c) { add_term({}, c); }

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const GaussianRational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponent(p.variables_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly p(std::move(variables));
  const auto idx = p.variable_index(name);
  if (!idx) throw Error(ErrorCode::VariableMismatch, "unknown variable '" + std::string(name) + "'");
  Exponent e(p.variables_.size(), 0);
  e[*idx] = 1;
  p.add_term(e, GaussianRational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponent exponent, const GaussianRational& c) {
  MultiPoly p(std::move(variables));
  if (exponent.size() != p.variables_.size())
    throw Error(ErrorCode::VariableMismatch, "exponent length does not match variable count");
  if (std::any_of(exponent.begin(), exponent.end(), [](int x) { return x < 0; }))
    throw Error(ErrorCode::OutOfRange, "negative exponent");
  p.add_term(exponent, c);
  return p;
}

std::optional<std::size_t> MultiPoly::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

bool MultiPoly::is_constant() const { return total_degree() <= 0; }

GaussianRational MultiPoly::constant_term() const {
  const auto it = terms_.find(Exponent(variables_.size(), 0));
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != variables_.size())
    throw Error(ErrorCode::VariableMismatch, "evaluation point has wrong dimension");
  GaussianRational sum(0);
  for (const auto& [e, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= point[i].pow(e[i]);
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != variables_.size())
    throw Error(ErrorCode::VariableMismatch, "substitution needs one image per variable");
  std::vector<std::string> target = images.empty() ? std::vector<std::string>{} : images.front().variables();
  for (const auto& img : images)
    if (img.variables() != target) throw Error(ErrorCode::VariableMismatch, "substitution images disagree on variables");
  MultiPoly result(target);
  // Powers cached per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(target, GaussianRational(1)));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      term *= cache[static_cast<std::size_t>(e[i])];
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = MultiPoly::constant(variables_, GaussianRational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  if (var >= variables_.size()) throw Error(ErrorCode::VariableMismatch, "variable index out of range");
  std::vector<std::string> rest = variables_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0) + 1), MultiPoly(rest));
  for (const auto& [e, c] : terms_) {
    Exponent reduced = e;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(var));
    out[static_cast<std::size_t>(e[var])].add_term(reduced, c);
  }
  return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& superset) const {
  std::vector<std::size_t> position;
  for (const auto& v : variables_) {
    const auto it = std::find(superset.begin(), superset.end(), v);
    if (it == superset.end()) throw Error(ErrorCode::VariableMismatch, "variable '" + v + "' missing from superset");
    position.push_back(static_cast<std::size_t>(it - superset.begin()));
  }
  MultiPoly out(superset);
  for (const auto& [e, c] : terms_) {
    Exponent lifted(superset.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) lifted[position[i]] = e[i];
    out.add_term(lifted, c);
  }
  return out;
}

MultiPoly MultiPoly::without_variable(std::size_t var) const {
  if (degree_in(var) > 0)
    throw Error(ErrorCode::VariableMismatch, "variable '" + variables_.at(var) + "' occurs in polynomial");
  return coefficients_in(var).front();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += c.to_string();
    else if (c == GaussianRational(1)) out += mono;
    else out += "(" + c.to_string() + ")*" + mono;
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
  if (a.variables_ == b.variables_) return;
  if (a.variables_.empty() && a.is_constant()) {
    a = MultiPoly::constant(b.variables_, a.constant_term());
    return;
  }
  if (b.variables_.empty() && b.is_constant()) {
    b = MultiPoly::constant(a.variables_, b.constant_term());
    return;
  }
  throw Error(ErrorCode::VariableMismatch, "polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  MultiPoly other = o;
  align(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly other = o;
  align(*this, other);
  MultiPoly out(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables_ == b.variables_) return a.terms_ == b.terms_;
  MultiPoly x = a, y = b;
  try {
    MultiPoly::align(x, y);
  } catch (const Error&) {
    return false;
  }
  return x.terms_ == y.terms_;
}

void MultiPoly::add_term(const Exponent& exponent, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

}  // namespace irrstrat
