#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace curvehom {

using Rational = mpq_class;

/// Raised for malformed input: ring mismatches, bad ranks, unparsable text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's mathematical precondition does not hold
/// (for example a "complex" whose differentials do not square to zero).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for well-formed requests the engine refuses to answer, such as a
/// basis of an infinite-dimensional homology group.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxVariables = 4;

/// Exponent vector of a commutative monomial. Entries past the ring's
/// variable count are always zero.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
class Polynomial;

/// Ambient ring descriptor: Q[variables], optionally modulo relations.
/// Relations are polynomials over the ambient polynomial ring.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr polynomial(std::vector<std::string> variables);
  static RingPtr quotient(const RingPtr& ambient, std::vector<Polynomial> relations);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  const std::vector<Polynomial>& relations() const;
  bool is_quotient() const { return ambient_ != nullptr; }
  /// The polynomial ring with the same variables (itself when not a quotient).
  RingPtr ambient() const;

  bool same_variables(const Ring& other) const { return variables_ == other.variables_; }
  std::string describe() const;

  struct Private;
  Ring(Private, std::vector<std::string> variables, RingPtr ambient,
       std::vector<Polynomial> relations);

 private:
  std::vector<std::string> variables_;
  RingPtr ambient_;
  std::shared_ptr<const std::vector<Polynomial>> relations_;
};

/// Exact-rational multivariate polynomial. Terms are kept sorted in
/// descending graded-reverse-lex order with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;
  Rational coefficient(const Monomial& m) const;
  /// Same terms, reinterpreted in another ring with identical variables.
  Polynomial with_ring(RingPtr ring) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  /// Text form, e.g. `x^3 + x^2 - y^2` or `-3/2*x*y + 1`.
  std::string to_string() const;
  static Polynomial parse(const RingPtr& ring, std::string_view text);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Element of a free module R^rank, stored as its coordinate column.
struct FreeElement {
  std::vector<Polynomial> coords;

  FreeElement() = default;
  explicit FreeElement(std::vector<Polynomial> c) : coords(std::move(c)) {}
  static FreeElement zero(const RingPtr& ring, std::size_t rank);
  static FreeElement basis(const RingPtr& ring, std::size_t rank, std::size_t index);

  std::size_t rank() const { return coords.size(); }
  const RingPtr& ring() const;
  bool is_zero() const;
  int degree() const;
  std::string to_string() const;

  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const Polynomial& p, const FreeElement& v);
  friend FreeElement operator*(const Rational& c, const FreeElement& v);
  bool operator==(const FreeElement&) const = default;
};

/// Graded-reverse-lex comparison (total degree first). Returns <0, 0, >0.
int compare_grevlex(const Monomial& a, const Monomial& b);
int compare_lex(const Monomial& a, const Monomial& b);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);
std::string rational_to_string(const Rational& q);

}  // namespace curvehom
