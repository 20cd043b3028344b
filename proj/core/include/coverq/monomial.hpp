#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coverq {

inline constexpr std::size_t kMaxVariables = 64;

/// A monomial stored as a dense exponent vector over a fixed alphabet of at
/// most kMaxVariables variables. Value type; equality is structural.
///
/// The defaulted ordering is lexicographic on the exponent vector and exists
/// for deterministic output only.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;
  /// The unit monomial over `alphabet` variables.
  explicit Monomial(std::size_t alphabet);

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial from_exponents(std::initializer_list<unsigned> exponents);
  /// Squarefree monomial with the given variable indices (0-based).
  static Monomial squarefree(std::size_t alphabet, std::span<const std::size_t> support);
  static Monomial squarefree(std::size_t alphabet, std::initializer_list<std::size_t> support);
  static Monomial from_mask(std::size_t alphabet, std::uint64_t mask);
  static Monomial variable(std::size_t alphabet, std::size_t index);

  std::size_t alphabet() const noexcept { return alphabet_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned exponent(std::size_t i) const;
  unsigned degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  /// Bit i set iff variable i occurs.
  std::uint64_t support() const noexcept;

  /// Same monomial over a larger alphabet (new variables get exponent 0).
  Monomial extended(std::size_t alphabet) const;

  Monomial& operator*=(const Monomial& other);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  friend Monomial gcd(const Monomial&, const Monomial&);
  friend Monomial colon(const Monomial&, const Monomial&);

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t alphabet_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial multiply(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// Exponentwise a <= b.
bool divides(const Monomial& a, const Monomial& b);
bool strictly_divides(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// u : v = u / gcd(u, v).
Monomial colon(const Monomial& a, const Monomial& b);
unsigned total_degree(const Monomial& a) noexcept;
Monomial pow(const Monomial& a, unsigned s);

/// Canonical output order: lexicographically greater exponent vector first,
/// so x1 comes before x2.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a > b; }
};

/// A finite duplicate-free set of monomials over a shared alphabet, kept in
/// canonical order. `minimal()` is set when no element divides another.
class MonomialSet {
 public:
  MonomialSet() = default;
  /// Duplicates are dropped.
  explicit MonomialSet(std::vector<Monomial> elements);
  MonomialSet(std::initializer_list<Monomial> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool minimal() const noexcept { return minimal_; }
  bool contains(const Monomial& m) const;
  std::span<const Monomial> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const Monomial& operator[](std::size_t i) const { return elements_[i]; }

  friend bool operator==(const MonomialSet& a, const MonomialSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  friend MonomialSet minimalize(std::span<const Monomial>);

  std::vector<Monomial> elements_;
  bool minimal_ = false;
};

/// Elements not strictly divisible by another element, flagged minimal.
MonomialSet minimalize(std::span<const Monomial> elements);
MonomialSet minimalize(const MonomialSet& set);

/// Variable names used to render and parse monomials.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  /// prefix1 .. prefixN, e.g. x1..xn.
  static Alphabet indexed(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::span<const std::string> names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

enum class RenderStyle {
  Compact,  // x1x3^2x4
  Starred,  // x1*x3^2*x4
};

/// The unit monomial renders as "1".
std::string render(const Monomial& m, const Alphabet& alphabet,
                   RenderStyle style = RenderStyle::Compact);

/// Accepts both render styles. Throws ParseError.
Monomial parse_monomial(std::string_view text, const Alphabet& alphabet);

}  // namespace coverq
