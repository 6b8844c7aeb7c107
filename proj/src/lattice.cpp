#include "logfano/lattice.hpp"

#include <sstream>

namespace logfano {
namespace {

void check_space(int n, int k) {
  if (n < 2) throw std::invalid_argument("ambient projective space needs n >= 2");
  if (k < 0) throw std::invalid_argument("point count k must be nonnegative");
}

void check_index(int i, int k) {
  if (i < 1 || i > k) throw std::out_of_range("point index out of range 1..k");
}

// Shared pretty-printer for h*B + sum c_i*B_i style class strings.
std::string format_class(const Rat& lead, const char* lead_sym, const std::vector<Rat>& coeffs,
                         const char* sym) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rat& c, const std::string& basis) {
    if (c == 0) return;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    const Rat a = abs(c);
    if (a != 1) out << rat_to_string(a) << "*";
    out << basis;
  };
  emit(lead, lead_sym);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    emit(coeffs[i], std::string(sym) + "_" + std::to_string(i + 1));
  if (first) out << "0";
  return out.str();
}

}  // namespace

DivisorClass::DivisorClass(int n, int k, Rat h, std::vector<Rat> e)
    : n_(n), k_(k), h_(std::move(h)), e_(std::move(e)) {
  check_space(n, k);
  if (static_cast<int>(e_.size()) != k)
    throw std::invalid_argument("divisor class needs exactly k exceptional coefficients");
}

DivisorClass DivisorClass::zero(int n, int k) {
  return DivisorClass(n, k, 0, std::vector<Rat>(k, Rat(0)));
}

const Rat& DivisorClass::e(int i) const {
  check_index(i, k_);
  return e_[i - 1];
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (n_ != other.n_ || k_ != other.k_)
    throw std::invalid_argument("divisor classes live on different blow-ups");
  h_ += other.h_;
  for (int i = 0; i < k_; ++i) e_[i] += other.e_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (n_ != other.n_ || k_ != other.k_)
    throw std::invalid_argument("divisor classes live on different blow-ups");
  h_ -= other.h_;
  for (int i = 0; i < k_; ++i) e_[i] -= other.e_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& scalar) {
  h_ *= scalar;
  for (auto& c : e_) c *= scalar;
  return *this;
}

std::string DivisorClass::to_string() const { return format_class(h_, "H", e_, "E"); }

CurveClass::CurveClass(int n, int k, Rat l, std::vector<Rat> r)
    : n_(n), k_(k), l_(std::move(l)), r_(std::move(r)) {
  check_space(n, k);
  if (static_cast<int>(r_.size()) != k)
    throw std::invalid_argument("curve class needs exactly k exceptional coefficients");
}

CurveClass CurveClass::zero(int n, int k) {
  return CurveClass(n, k, 0, std::vector<Rat>(k, Rat(0)));
}

const Rat& CurveClass::r(int i) const {
  check_index(i, k_);
  return r_[i - 1];
}

CurveClass& CurveClass::operator+=(const CurveClass& other) {
  if (n_ != other.n_ || k_ != other.k_)
    throw std::invalid_argument("curve classes live on different blow-ups");
  l_ += other.l_;
  for (int i = 0; i < k_; ++i) r_[i] += other.r_[i];
  return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& other) {
  if (n_ != other.n_ || k_ != other.k_)
    throw std::invalid_argument("curve classes live on different blow-ups");
  l_ -= other.l_;
  for (int i = 0; i < k_; ++i) r_[i] -= other.r_[i];
  return *this;
}

CurveClass& CurveClass::operator*=(const Rat& scalar) {
  l_ *= scalar;
  for (auto& c : r_) c *= scalar;
  return *this;
}

std::string CurveClass::to_string() const { return format_class(l_, "L", r_, "R"); }

DivisorClass anticanonical(int n, int k) {
  check_space(n, k);
  return DivisorClass(n, k, Rat(n + 1), std::vector<Rat>(k, Rat(-(n - 1))));
}

DivisorClass hyperplane_class(int n, int k) {
  check_space(n, k);
  return DivisorClass(n, k, 1, std::vector<Rat>(k, Rat(0)));
}

DivisorClass exceptional_divisor(int i, int n, int k) {
  check_space(n, k);
  check_index(i, k);
  std::vector<Rat> e(k, Rat(0));
  e[i - 1] = 1;
  return DivisorClass(n, k, 0, std::move(e));
}

CurveClass curve_line(int n, int k) {
  check_space(n, k);
  return CurveClass(n, k, 1, std::vector<Rat>(k, Rat(0)));
}

CurveClass curve_exceptional(int i, int n, int k) {
  check_space(n, k);
  check_index(i, k);
  std::vector<Rat> r(k, Rat(0));
  r[i - 1] = 1;
  return CurveClass(n, k, 0, std::move(r));
}

CurveClass curve_line_through(int i, int n, int k) {
  check_space(n, k);
  check_index(i, k);
  std::vector<Rat> r(k, Rat(0));
  r[i - 1] = -1;
  return CurveClass(n, k, 1, std::move(r));
}

CurveClass curve_line_through(int i, int j, int n, int k) {
  check_space(n, k);
  check_index(i, k);
  check_index(j, k);
  if (i == j) throw std::invalid_argument("a line through two points needs distinct indices");
  std::vector<Rat> r(k, Rat(0));
  r[i - 1] = -1;
  r[j - 1] = -1;
  return CurveClass(n, k, 1, std::move(r));
}

Rat intersection_pairing(const DivisorClass& d, const CurveClass& c) {
  if (d.n() != c.n() || d.k() != c.k())
    throw std::invalid_argument("pairing requires classes on the same blow-up");
  Rat out = d.h() * c.l();
  for (int i = 1; i <= d.k(); ++i) out -= d.e(i) * c.r(i);
  return out;
}

}  // namespace logfano
