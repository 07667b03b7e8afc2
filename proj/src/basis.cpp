#include "smooth/basis.hpp"

#include <algorithm>
#include <numeric>

namespace smooth {

std::string BasisViolation::message() const {
  switch (kind) {
    case Kind::NotAscending:
      return "elements " + std::to_string(i) + " and " + std::to_string(j) +
             " are not strictly ascending";
    case Kind::ElementBelowTwo:
      return "element " + std::to_string(i) + " is below 2";
    case Kind::GcdNotOne:
      return "gcd of the elements is not 1";
    case Kind::MultiplicativelyDependentPair:
      return "elements " + std::to_string(i) + " and " + std::to_string(j) +
             " are multiplicatively dependent";
  }
  return "unknown violation";
}

namespace {

std::string join_messages(const std::vector<BasisViolation>& violations) {
  if (violations.empty()) return "invalid basis: empty";
  std::string out = "invalid basis: ";
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) out += "; ";
    out += violations[k].message();
  }
  return out;
}

// Exponent vectors are parallel iff they share a support and all
// coordinates are in the same ratio.
bool parallel(const ExponentVector& u, const ExponentVector& v) {
  if (u.size() != v.size()) return false;
  auto ui = u.begin();
  auto vi = v.begin();
  for (; ui != u.end(); ++ui, ++vi) {
    if (ui->first != vi->first) return false;
  }
  long u0 = u.begin()->second;
  long v0 = v.begin()->second;
  for (ui = u.begin(), vi = v.begin(); ui != u.end(); ++ui, ++vi) {
    if (static_cast<long>(ui->second) * v0 != static_cast<long>(vi->second) * u0) return false;
  }
  return true;
}

}  // namespace

InvalidBasis::InvalidBasis(std::vector<BasisViolation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

ExponentVector factorize(long n) {
  ExponentVector f;
  for (long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

std::vector<BasisViolation> check_basis(const std::vector<long>& elements, Validation level) {
  using Kind = BasisViolation::Kind;
  std::vector<BasisViolation> out;
  bool small = false;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 2) {
      out.push_back({Kind::ElementBelowTwo, i, i});
      small = true;
    }
  }
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i] <= elements[i - 1]) out.push_back({Kind::NotAscending, i - 1, i});
  }
  if (level == Validation::Minimal || elements.size() < 2) return out;

  long g = 0;
  for (long a : elements) g = std::gcd(g, a);
  if (g != 1) out.push_back({Kind::GcdNotOne, 0, 0});

  if (level == Validation::Strict && !small) {
    std::vector<ExponentVector> f;
    for (long a : elements) f.push_back(factorize(a));
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (parallel(f[i], f[j])) out.push_back({Kind::MultiplicativelyDependentPair, i, j});
      }
    }
  }
  return out;
}

Basis validate_basis(const std::vector<long>& elements, Validation level) {
  auto violations = check_basis(elements, level);
  if (elements.empty() || !violations.empty()) throw InvalidBasis(std::move(violations));
  Basis b;
  b.elements_ = elements;
  b.level_ = level;
  for (long a : elements) b.factors_.push_back(factorize(a));
  return b;
}

Basis validate_unsorted(std::vector<long> elements, Validation level) {
  std::sort(elements.begin(), elements.end());
  return validate_basis(elements, level);
}

namespace {

bool member_dfs(const mpz_class& y, const std::vector<long>& a, const std::vector<bool>& coprime,
                std::size_t i) {
  if (y == 1) return true;
  if (i == a.size()) return false;
  mpz_class rest;
  mpz_class base = a[i];
  unsigned long top = mpz_remove(rest.get_mpz_t(), y.get_mpz_t(), base.get_mpz_t());
  if (member_dfs(rest, a, coprime, i + 1)) return true;
  // A factor of a[i] left behind could only be absorbed by a later element
  // sharing a prime with it.
  if (coprime[i]) return false;
  for (unsigned long q = top; q-- > 0;) {
    rest *= base;
    if (member_dfs(rest, a, coprime, i + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_member(const XValue& x, const Basis& basis) {
  if (!x.is_integer()) return false;
  const auto& a = basis.elements();
  std::vector<bool> coprime(a.size(), true);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (std::gcd(a[i], a[j]) != 1) coprime[i] = false;
    }
  }
  return member_dfs(x.numerator(), a, coprime, 0);
}

bool is_member_squares(const XValue& x, long a, long b) {
  if (!x.is_integer()) return false;
  const mpz_class& y = x.numerator();
  mpz_class base_a = a;
  mpz_class b_power = 1;  // b^(q^2)
  for (unsigned long q = 0; b_power <= y; ++q) {
    if (mpz_divisible_p(y.get_mpz_t(), b_power.get_mpz_t())) {
      mpz_class cofactor = y / b_power;
      mpz_class rest;
      unsigned long p2 = mpz_remove(rest.get_mpz_t(), cofactor.get_mpz_t(), base_a.get_mpz_t());
      if (rest == 1 && mpz_perfect_square_p(mpz_class(p2).get_mpz_t())) return true;
    }
    mpz_class step;
    mpz_ui_pow_ui(step.get_mpz_t(), static_cast<unsigned long>(b), 2 * q + 1);
    b_power *= step;
  }
  return false;
}

}  // namespace smooth
