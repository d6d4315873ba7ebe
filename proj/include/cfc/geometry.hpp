#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "12", "-0.375", "+3.", "7/8". No exponents.
inline Rational parse_rational(std::string_view s) {
  auto fail = [&] { throw std::invalid_argument("malformed number '" + std::string(s) + "'"); };
  if (s.empty()) fail();
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational p = parse_rational(s.substr(0, slash));
    Rational q = parse_rational(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return p / q;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  BigInt num = 0, den = 1;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = true;
      num = num * 10 + (ch - '0');
      if (dot) den *= 10;
    } else {
      fail();
    }
  }
  if (!digits) fail();
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

/// Terminating decimals print as decimals, everything else as p/q.
inline std::string format_rational(const Rational& r) {
  BigInt p = boost::multiprecision::numerator(r);
  BigInt q = boost::multiprecision::denominator(r);
  BigInt t = q;
  unsigned twos = 0, fives = 0;
  while (t % 2 == 0) t /= 2, ++twos;
  while (t % 5 == 0) t /= 5, ++fives;
  if (t != 1) return p.str() + "/" + q.str();
  unsigned places = std::max(twos, fives);
  if (places == 0) return p.str();
  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  BigInt scaled = p * (scale / q);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (neg ? "-" : "") + digits;
}

/// floor(p/q) for q > 0.
inline std::int64_t floor_div(const BigInt& p, const BigInt& q) {
  BigInt d = p / q;  // truncates toward zero
  if (p < 0 && d * q != p) d -= 1;
  return d.convert_to<std::int64_t>();
}

inline std::int64_t floor_of(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

struct Interval {
  Rational l, r;
};

struct Point {
  Rational x, y;
};

using IntervalScene = std::vector<Interval>;
using PointScene = std::vector<Point>;

enum class Shape { Square, Disk };

inline bool intervals_meet(const Interval& a, const Interval& b) {
  return a.l <= b.r && b.l <= a.r;
}

inline bool squares_meet(const Point& a, const Point& b) {
  return abs(a.x - b.x) <= 2 && abs(a.y - b.y) <= 2;
}

inline bool disks_meet(const Point& a, const Point& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy <= 4;
}

inline void check_scene(const IntervalScene& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!(s[i].l < s[i].r))
      throw std::invalid_argument("interval " + std::to_string(i) + " has L >= R");
}

inline Graph geometric_graph(const IntervalScene& s) {
  check_scene(s);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (intervals_meet(s[i], s[j])) es.emplace_back(Vertex(i), Vertex(j));
  return Graph(s.size(), es);
}

inline Graph geometric_graph(const PointScene& s, Shape shape) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool hit = shape == Shape::Square ? squares_meet(s[i], s[j]) : disks_meet(s[i], s[j]);
      if (hit) es.emplace_back(Vertex(i), Vertex(j));
    }
  return Graph(s.size(), es);
}

/// Stripe of height 2: 2(l-1) < y <= 2l.
inline std::int64_t square_stripe(const Rational& y) { return ceil_of(y / 2); }

/// y <= sqrt(3) * m, decided exactly.
inline bool leq_sqrt3_times(const Rational& y, std::int64_t m) {
  Rational m2 = Rational(3) * m * m;
  if (m >= 0) return y <= 0 || y * y <= m2;
  return y < 0 && y * y >= m2;
}

/// Stripe of height sqrt(3): sqrt(3)(l-1) < y <= sqrt(3) l.
inline std::int64_t disk_stripe(const Rational& y) {
  auto l = static_cast<std::int64_t>(std::ceil(y.convert_to<double>() / 1.7320508075688772));
  while (!leq_sqrt3_times(y, l)) ++l;
  while (leq_sqrt3_times(y, l - 1)) --l;
  return l;
}

/// Non-negative residue.
inline std::int64_t pos_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace cfc
