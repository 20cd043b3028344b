#include "coverq/monomial.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <unordered_map>

#include "coverq/error.hpp"

namespace coverq {

AlphabetMismatch::AlphabetMismatch(std::size_t lhs, std::size_t rhs)
    : Error("alphabet mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs) +
            " variables") {}

GuardExceeded::GuardExceeded(std::string what, std::uint64_t estimate, std::uint64_t limit)
    : Error(what + ": estimated " + std::to_string(estimate) + " operations exceeds limit " +
            std::to_string(limit)),
      estimate_(estimate),
      limit_(limit) {}

namespace {

std::string join_cycle(const std::vector<std::string>& cycle) {
  std::string out;
  for (const auto& v : cycle) {
    if (!out.empty()) out += " - ";
    out += v;
  }
  return out;
}

void check_alphabet(std::size_t alphabet) {
  if (alphabet > kMaxVariables) {
    throw std::invalid_argument("alphabet of " + std::to_string(alphabet) +
                                " variables exceeds the supported maximum of " +
                                std::to_string(kMaxVariables));
  }
}

void check_same(const Monomial& a, const Monomial& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch(a.alphabet(), b.alphabet());
}

}  // namespace

NotChordal::NotChordal(std::vector<std::string> cycle)
    : Error("graph is not chordal; chordless cycle: " + join_cycle(cycle)),
      cycle_(std::move(cycle)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

Monomial::Monomial(std::size_t alphabet) {
  check_alphabet(alphabet);
  alphabet_ = static_cast<std::uint8_t>(alphabet);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > std::numeric_limits<Exponent>::max()) {
      throw std::overflow_error("exponent " + std::to_string(exponents[i]) + " out of range");
    }
    m.exps_[i] = static_cast<Exponent>(exponents[i]);
  }
  return m;
}

Monomial Monomial::from_exponents(std::initializer_list<unsigned> exponents) {
  return from_exponents(std::span<const unsigned>(exponents.begin(), exponents.size()));
}

Monomial Monomial::squarefree(std::size_t alphabet, std::span<const std::size_t> support) {
  Monomial m(alphabet);
  for (auto i : support) {
    if (i >= alphabet) throw std::out_of_range("variable index " + std::to_string(i));
    m.exps_[i] = 1;
  }
  return m;
}

Monomial Monomial::squarefree(std::size_t alphabet, std::initializer_list<std::size_t> support) {
  return squarefree(alphabet, std::span<const std::size_t>(support.begin(), support.size()));
}

Monomial Monomial::from_mask(std::size_t alphabet, std::uint64_t mask) {
  Monomial m(alphabet);
  for (std::size_t i = 0; i < alphabet; ++i) m.exps_[i] = (mask >> i) & 1U;
  if (alphabet < 64 && (mask >> alphabet) != 0) {
    throw std::out_of_range("mask has bits outside the alphabet");
  }
  return m;
}

Monomial Monomial::variable(std::size_t alphabet, std::size_t index) {
  return squarefree(alphabet, {index});
}

unsigned Monomial::exponent(std::size_t i) const {
  if (i >= alphabet_) throw std::out_of_range("variable index " + std::to_string(i));
  return exps_[i];
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < alphabet_; ++i) d += exps_[i];
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.begin() + alphabet_, [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.begin() + alphabet_, [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::support() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < alphabet_; ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Monomial Monomial::extended(std::size_t alphabet) const {
  if (alphabet < alphabet_) throw std::invalid_argument("cannot shrink a monomial's alphabet");
  check_alphabet(alphabet);
  Monomial m = *this;
  m.alphabet_ = static_cast<std::uint8_t>(alphabet);
  return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < alphabet_; ++i) {
    const unsigned sum = unsigned{exps_[i]} + other.exps_[i];
    if (sum > std::numeric_limits<Exponent>::max()) {
      throw std::overflow_error("exponent overflow in monomial product");
    }
    exps_[i] = static_cast<Exponent>(sum);
  }
  return *this;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the used exponents.
  std::uint64_t h = 1469598103934665603ULL ^ m.alphabet();
  for (std::size_t i = 0; i < m.alphabet(); ++i) {
    h ^= m[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out *= b;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) { return multiply(a, b); }

bool divides(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.alphabet(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool strictly_divides(const Monomial& a, const Monomial& b) { return a != b && divides(a, b); }

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial out(a.alphabet());
  for (std::size_t i = 0; i < a.alphabet(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial colon(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial out(a.alphabet());
  for (std::size_t i = 0; i < a.alphabet(); ++i) {
    out.exps_[i] = a.exps_[i] > b.exps_[i] ? static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]) : 0;
  }
  return out;
}

unsigned total_degree(const Monomial& a) noexcept { return a.degree(); }

Monomial pow(const Monomial& a, unsigned s) {
  Monomial out(a.alphabet());
  for (unsigned k = 0; k < s; ++k) out *= a;
  return out;
}

MonomialSet::MonomialSet(std::vector<Monomial> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 1; i < elements_.size(); ++i) check_same(elements_[0], elements_[i]);
  std::sort(elements_.begin(), elements_.end(), CanonicalOrder{});
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

MonomialSet::MonomialSet(std::initializer_list<Monomial> elements)
    : MonomialSet(std::vector<Monomial>(elements)) {}

bool MonomialSet::contains(const Monomial& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m, CanonicalOrder{});
}

MonomialSet minimalize(std::span<const Monomial> elements) {
  MonomialSet distinct{std::vector<Monomial>(elements.begin(), elements.end())};

  // A strict divisor has strictly smaller degree, so scanning by ascending
  // degree lets us compare only against elements already kept.
  std::vector<const Monomial*> by_degree;
  by_degree.reserve(distinct.size());
  for (const auto& m : distinct) by_degree.push_back(&m);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const Monomial* a, const Monomial* b) { return a->degree() < b->degree(); });

  std::vector<Monomial> kept;
  for (const Monomial* m : by_degree) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, *m); });
    if (!covered) kept.push_back(*m);
  }
  MonomialSet out{std::move(kept)};
  out.minimal_ = true;
  return out;
}

MonomialSet minimalize(const MonomialSet& set) { return minimalize(set.elements()); }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  check_alphabet(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    }
  }
}

Alphabet Alphabet::indexed(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string render(const Monomial& m, const Alphabet& alphabet, RenderStyle style) {
  if (m.alphabet() != alphabet.size()) throw AlphabetMismatch(m.alphabet(), alphabet.size());
  std::string out;
  for (std::size_t i = 0; i < m.alphabet(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty() && style == RenderStyle::Starred) out += '*';
    out += alphabet.name(i);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, const Alphabet& alphabet) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError(0, "empty monomial");

  std::vector<unsigned> exps(alphabet.size(), 0);
  if (text == "1") return Monomial::from_exponents(exps);

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '*') {
      ++pos;
      continue;
    }
    // Longest variable name matching at pos.
    std::optional<std::size_t> var;
    std::size_t len = 0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      const auto& name = alphabet.name(i);
      if (name.size() > len && text.substr(pos, name.size()) == name) {
        var = i;
        len = name.size();
      }
    }
    if (!var) {
      throw ParseError(0, "unknown variable at '" + std::string(text.substr(pos)) + "'");
    }
    pos += len;
    unsigned e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (ec != std::errc{} || ptr == first) throw ParseError(0, "bad exponent in monomial");
      pos += static_cast<std::size_t>(ptr - first);
    }
    exps[*var] += e;
  }
  return Monomial::from_exponents(exps);
}

}  // namespace coverq
