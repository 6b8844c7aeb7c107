#include "logfano/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace logfano {
namespace {

using UniPoly = std::vector<Rat>;  // coefficient of t^i at index i

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

UniPoly uni_pow(const UniPoly& base, int e) {
  UniPoly out{Rat(1)};
  for (int i = 0; i < e; ++i) out = uni_mul(out, base);
  return out;
}

void check_point_size(int nvars, std::size_t got, const char* what) {
  if (static_cast<std::size_t>(nvars) != got)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(nvars) +
                                " coordinates, got " + std::to_string(got));
}

bool proportional(std::span<const Rat> p, std::span<const Rat> v) {
  // All 2x2 minors vanish <=> the 2 x (n+1) matrix (p; v) has rank < 2.
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] * v[j] - p[j] * v[i] != 0) return false;
  return true;
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("polynomial needs a nonnegative variable count");
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int index, int nvars) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

Polynomial Polynomial::monomial(std::vector<int> exponents, const Rat& c) {
  Polynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rat& c) {
  if (static_cast<int>(exponents.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial out(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial& Polynomial::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

long Polynomial::total_degree() const {
  long deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, static_cast<long>(std::accumulate(e.begin(), e.end(), 0)));
  return deg;
}

bool Polynomial::is_homogeneous() const {
  long deg = -1;
  for (const auto& [e, c] : terms_) {
    const long d = std::accumulate(e.begin(), e.end(), 0);
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

Rat Polynomial::evaluate(std::span<const Rat> point) const {
  check_point_size(nvars_, point.size(), "evaluate");
  Rat out = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int rep = 0; rep < e[i]; ++rep) term *= point[i];
    out += term;
  }
  return out;
}

std::vector<Rat> Polynomial::restrict_to_line(std::span<const Rat> p,
                                              std::span<const Rat> v) const {
  check_point_size(nvars_, p.size(), "restrict_to_line point");
  check_point_size(nvars_, v.size(), "restrict_to_line direction");
  const long deg = std::max<long>(total_degree(), 0);
  UniPoly out(static_cast<std::size_t>(deg) + 1, Rat(0));
  for (const auto& [e, c] : terms_) {
    UniPoly term{c};
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      term = uni_mul(term, uni_pow(UniPoly{p[i], v[i]}, e[i]));
    }
    for (std::size_t i = 0; i < term.size(); ++i) out[i] += term[i];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  const int nvars = m[0][0].nvars();
  // minor(row, cols): determinant of rows row..n-1 on the column set `cols`.
  std::map<std::uint32_t, Polynomial> memo;
  auto full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1u);
  std::function<Polynomial(std::size_t, std::uint32_t)> minor_det =
      [&](std::size_t row, std::uint32_t cols) -> Polynomial {
    if (row == n) return Polynomial::constant(nvars, Rat(1));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Polynomial acc(nvars);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(cols & (1u << col))) continue;
      Polynomial sub = minor_det(row + 1, cols & ~(1u << col));
      sub = sub * m[row][col];
      if (sign < 0) sub *= Rat(-1);
      acc += sub;
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor_det(0, full);
}

Polynomial hankel_det_poly(int h) {
  if (h < 0) throw std::invalid_argument("hankel_det_poly needs h >= 0");
  const int nvars = 2 * h + 1;
  std::vector<std::vector<Polynomial>> m(
      h + 1, std::vector<Polynomial>(h + 1, Polynomial(nvars)));
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= h; ++j) m[i][j] = Polynomial::variable(i + j, nvars);
  return poly_determinant(m);
}

Polynomial cremona_divisor_poly(int n) {
  if (n < 2) throw std::invalid_argument("cremona_divisor_poly needs n >= 2");
  Polynomial out(n + 1);
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> e(n + 1, 1);
    e[skip] = 0;
    out.add_term(e, Rat(1));
  }
  return out;
}

Polynomial rnc_hyperplane(const std::vector<Rat>& ts) {
  const int n = static_cast<int>(ts.size());
  if (n < 1) throw std::invalid_argument("rnc_hyperplane needs at least one parameter");
  // prod_j (T - t_j), ascending coefficients.
  UniPoly prod{Rat(1)};
  for (const Rat& t : ts) prod = uni_mul(prod, UniPoly{-t, Rat(1)});
  Polynomial out(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<int> e(n + 1, 0);
    e[i] = 1;
    out.add_term(e, prod[i]);
  }
  return out;
}

int vanishing_order(const Polynomial& f, std::span<const Rat> p, std::span<const Rat> v,
                    int max_order) {
  if (f.is_zero()) throw std::invalid_argument("vanishing order of the zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("vanishing order needs a homogeneous form");
  if (max_order < 0) throw std::invalid_argument("max_order must be nonnegative");
  auto all_zero = [](std::span<const Rat> x) {
    return std::all_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; });
  };
  if (all_zero(p) || all_zero(v)) throw std::invalid_argument("zero vector is not a point of P^n");
  if (proportional(p, v))
    throw std::invalid_argument("degenerate direction: v is proportional to p");
  const std::vector<Rat> g = f.restrict_to_line(p, v);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) return std::min<int>(static_cast<int>(i), max_order);
  return max_order;  // restriction vanishes identically: order is infinite
}

int vanishing_order_product(std::span<const Polynomial> factors, std::span<const Rat> p,
                            std::span<const Rat> v, int max_order) {
  long total = 0;
  for (const Polynomial& f : factors) {
    total += vanishing_order(f, p, v, max_order);
    if (total >= max_order) return max_order;
  }
  return static_cast<int>(total);
}

int exact_rank(const std::vector<std::vector<Rat>>& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  if (cols == 0) return 0;

  // Clear denominators row by row: rank is unchanged by row scaling.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (const Rat& q : m[i]) {
      Int den = q.get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      Rat scaled = m[i][j] * Rat(lcm);
      a[i][j] = scaled.get_num();  // denominator is 1 after scaling
    }
  }

  // Bareiss fraction-free elimination with full pivoting; every division is
  // exact by the Sylvester identity.
  std::size_t rank = 0;
  Int prev = 1;
  while (rank < rows && rank < cols) {
    std::size_t pr = rank, pc = cols;
    for (std::size_t i = rank; i < rows && pc == cols; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pc == cols) break;  // remaining block is zero
    std::swap(a[rank], a[pr]);
    if (pc != rank)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][rank], a[i][pc]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = rank + 1; j < cols; ++j) {
        Int num = a[rank][rank] * a[i][j] - a[i][rank] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][rank] = 0;
    }
    prev = a[rank][rank];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace logfano
