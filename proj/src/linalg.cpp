#include "hullmorse/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hullmorse/error.hpp"

namespace hullmorse {

std::string field_name(Field f) { return f == Field::kRationals ? "q" : "f2"; }

Field parse_field(const std::string& name) {
  if (name == "q" || name == "Q") return Field::kRationals;
  if (name == "f2" || name == "F2") return Field::kTwo;
  fail(ErrorKind::kInvalidInput, "unknown field '" + name + "' (expected q or f2)");
}

Rational in_field(const Rational& x, Field f) {
  if (f == Field::kRationals) return x;
  const BigInt den = boost::multiprecision::denominator(x);
  require(boost::multiprecision::bit_test(den, 0), ErrorKind::kInvalidInput,
          "value with even denominator has no image in F2");
  const BigInt num = boost::multiprecision::numerator(x);
  return boost::multiprecision::bit_test(boost::multiprecision::abs(num), 0) ? Rational(1) : Rational(0);
}

ExactMatrix::ExactMatrix(int rows, int cols, Field field) : rows_(rows), cols_(cols), field_(field), data_(rows) {}

namespace {

ExactMatrix::Row::iterator locate(ExactMatrix::Row& row, int c) {
  return std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
}

}  // namespace

void ExactMatrix::set(int r, int c, const Rational& value) {
  require(r >= 0 && r < rows_ && c >= 0 && c < cols_, ErrorKind::kInvalidInput, "matrix index out of range");
  Row& row = data_[r];
  auto it = locate(row, c);
  Rational v = in_field(value, field_);
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = std::move(v);
  } else if (v != 0) {
    row.insert(it, {c, std::move(v)});
  }
}

void ExactMatrix::add(int r, int c, const Rational& value) { set(r, c, at(r, c) + value); }

Rational ExactMatrix::at(int r, int c) const {
  const Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

namespace {

struct Overflow {};

// Checked arithmetic for machine words; BigInt never overflows.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename Int>
using IntRow = std::vector<std::pair<int, Int>>;

template <typename Int>
void normalize(IntRow<Int>& row) {
  Int g = 0;
  for (const auto& [c, v] : row) {
    g = gcd_of(g, v < 0 ? Int(-v) : v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

// r <- b*r - a*p where a, b are the leading entries of r and p.
template <typename Int>
IntRow<Int> cancel_lead(const IntRow<Int>& r, const IntRow<Int>& p) {
  const Int a = r.front().second;
  const Int b = p.front().second;
  IntRow<Int> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 1, j = 1;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, mul(b, r[i].second));
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, sub(Int(0), mul(a, p[j].second)));
      ++j;
    } else {
      Int v = sub(mul(b, r[i].second), mul(a, p[j].second));
      if (v != 0) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  normalize(out);
  return out;
}

template <typename Int>
int integer_row_rank(std::vector<IntRow<Int>> rows) {
  // Sparsest rows first keeps fill-in low for boundary matrices.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::map<int, IntRow<Int>> pivots;
  int rank = 0;
  for (auto& r : rows) {
    normalize(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        pivots.emplace(r.front().first, std::move(r));
        ++rank;
        break;
      }
      r = cancel_lead(r, it->second);
    }
  }
  return rank;
}

int rational_rank(const ExactMatrix& m) {
  std::vector<IntRow<BigInt>> big(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    BigInt lcm = 1;
    for (const auto& [c, v] : m.row(r)) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(v)));
    for (const auto& [c, v] : m.row(r))
      big[r].emplace_back(c, BigInt(boost::multiprecision::numerator(v)) * (lcm / boost::multiprecision::denominator(v)));
  }
  try {
    std::vector<IntRow<std::int64_t>> small(big.size());
    const BigInt limit = BigInt(1) << 40;
    for (std::size_t r = 0; r < big.size(); ++r)
      for (const auto& [c, v] : big[r]) {
        if (boost::multiprecision::abs(v) > limit) throw Overflow{};
        small[r].emplace_back(c, v.convert_to<std::int64_t>());
      }
    return integer_row_rank(std::move(small));
  } catch (const Overflow&) {
    return integer_row_rank(std::move(big));
  }
}

int binary_rank(const ExactMatrix& m) {
  const int words = (m.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(m.cols());
  int rank = 0;
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<std::uint64_t> bits(words, 0);
    for (const auto& [c, v] : m.row(r))
      if (in_field(v, Field::kTwo) != 0) bits[c / 64] ^= std::uint64_t{1} << (c % 64);
    for (int w = 0; w < words; ++w) {
      while (bits[w] != 0) {
        const int c = w * 64 + std::countr_zero(bits[w]);
        if (pivots[c].empty()) {
          pivots[c] = bits;
          ++rank;
          w = words;
          break;
        }
        for (int k = w; k < words; ++k) bits[k] ^= pivots[c][k];
      }
    }
  }
  return rank;
}

}  // namespace

int rank(const ExactMatrix& m) {
  return m.field() == Field::kRationals ? rational_rank(m) : binary_rank(m);
}

int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  std::vector<IntRow<std::int64_t>> sparse(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] != 0) sparse[r].emplace_back(static_cast<int>(c), rows[r][c]);
  try {
    return integer_row_rank(sparse);
  } catch (const Overflow&) {
    std::vector<IntRow<BigInt>> big(sparse.size());
    for (std::size_t r = 0; r < sparse.size(); ++r)
      for (const auto& [c, v] : sparse[r]) big[r].emplace_back(c, BigInt(v));
    return integer_row_rank(std::move(big));
  }
}

std::vector<std::vector<Rational>> null_space(const std::vector<std::vector<Rational>>& a, int cols) {
  std::vector<std::vector<Rational>> m = a;
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(m.size()); ++c) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
              std::vector<Rational>* witness) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a.front().size());
  if (m == 0) {
    if (witness) witness->assign(n, Rational(0));
    return true;
  }
  // Columns: x+ (n), x- (n), slacks (m), artificials (one per row with b < 0).
  std::vector<int> art_row;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) art_row.push_back(i);
  const int cols = 2 * n + m + static_cast<int>(art_row.size());
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<int> basis(m);
  std::vector<Rational> cost(cols, Rational(0));
  for (int i = 0; i < m; ++i) {
    const Rational sign = b[i] < 0 ? Rational(-1) : Rational(1);
    for (int j = 0; j < n; ++j) {
      t[i][j] = sign * a[i][j];
      t[i][n + j] = -sign * a[i][j];
    }
    t[i][2 * n + i] = sign;
    t[i][cols] = sign * b[i];
    basis[i] = 2 * n + i;
  }
  for (std::size_t k = 0; k < art_row.size(); ++k) {
    const int col = 2 * n + m + static_cast<int>(k);
    t[art_row[k]][col] = 1;
    basis[art_row[k]] = col;
    cost[col] = 1;
  }

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      Rational reduced = cost[j];
      for (int i = 0; i < m; ++i) reduced -= cost[basis[i]] * t[i][j];
      if (reduced < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    require(leave >= 0, ErrorKind::kInternalConsistency, "phase-one simplex is unbounded");
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (int i = 0; i < m; ++i) objective += cost[basis[i]] * t[i][cols];
  if (objective != 0) return false;
  if (witness) {
    witness->assign(n, Rational(0));
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n) (*witness)[basis[i]] += t[i][cols];
      else if (basis[i] < 2 * n) (*witness)[basis[i] - n] -= t[i][cols];
    }
  }
  return true;
}

}  // namespace hullmorse
