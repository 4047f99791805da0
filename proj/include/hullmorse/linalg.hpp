#pragma once

// Exact matrices over the rationals or the two-element field.

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hullmorse {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class Field { kRationals, kTwo };

std::string field_name(Field f);  // "q" or "f2"
Field parse_field(const std::string& name);

/// Reduce a scalar into the field: identity over Q, parity over F2 (the
/// denominator must then be odd).
Rational in_field(const Rational& x, Field f);

/// Sparse exact matrix; rows hold (column, nonzero value) sorted by column.
class ExactMatrix {
 public:
  using Row = std::vector<std::pair<int, Rational>>;

  ExactMatrix(int rows, int cols, Field field = Field::kRationals);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }

  void set(int r, int c, const Rational& value);
  /// Adds to an entry; entries are kept reduced into the field.
  void add(int r, int c, const Rational& value);
  Rational at(int r, int c) const;
  const Row& row(int r) const { return data_[r]; }

 private:
  int rows_;
  int cols_;
  Field field_;
  std::vector<Row> data_;
};

/// Exact rank. Over Q this is fraction-free elimination on integer rows
/// (machine words while they fit, GMP integers after an overflow); over F2 it
/// is bit-packed elimination.
int rank(const ExactMatrix& m);

/// Rank of small dense integer matrices (used for affine dimensions).
int integer_rank(std::vector<std::vector<std::int64_t>> rows);

/// Basis of the right null space of a small dense rational matrix.
std::vector<std::vector<Rational>> null_space(const std::vector<std::vector<Rational>>& a, int cols);

/// Feasibility of { x : a x <= b } with free variables, decided by exact
/// Phase-I simplex with Bland's rule. On success fills `witness`.
bool feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
              std::vector<Rational>* witness = nullptr);

}  // namespace hullmorse
