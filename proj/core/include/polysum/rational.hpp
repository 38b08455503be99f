#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace polysum {

// Exact arithmetic throughout: no floating point anywhere in the library.
using BigInt = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

using IVec = std::vector<BigInt>;
using IMat = std::vector<IVec>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p/q" or "p"; result is canonical (lowest terms, positive denominator).
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  Rat r;
  try {
    r = Rat(s);
  } catch (const std::exception&) {
    throw Error("bad rational literal: '" + s + "'");
  }
  if (denominator(r) == 0) throw Error("zero denominator in rational literal: '" + s + "'");
  mpq_canonicalize(r.backend().data());
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec vec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("vec_add: dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec vec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("vec_sub: dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec vec_scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const QVec& a) {
  for (const Rat& x : a) {
    if (x != 0) return false;
  }
  return true;
}

/// Lexicographic order; used for canonical vertex ordering.
inline bool lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace polysum
