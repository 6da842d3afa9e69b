#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tperf {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Coordinates indexed by vertex index of an associated graph.
using QVec = std::vector<Rational>;

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Always "p/q", including q == 1.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p", "-p", "p/q". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Rank of a list of equal-length vectors, by exact elimination.
int rank(std::vector<QVec> rows);

// Lexicographic comparison of equal-length vectors.
inline bool lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace tperf
