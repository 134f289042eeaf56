#pragma once

// Exact arithmetic in Z[phi], phi = (1 + sqrt 5) / 2, and in rationals over it.
//
// A GoldenInt a + b*phi is stored as its two integer coordinates; since phi is
// irrational the representation is unique. Multiplication reduces with
// phi^2 = phi + 1. Ordering never goes through floating point: the sign of
// a + b*phi is decided from the field norm a^2 + ab - b^2.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace fibcurve {

using BigInt = boost::multiprecision::cpp_int;

class GoldenInt {
public:
    GoldenInt() = default;
    GoldenInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}
    // Implicit: an ordinary integer is a GoldenInt with zero phi part.
    GoldenInt(long long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)

    static GoldenInt phi() { return {0, 1}; }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    GoldenInt operator-() const { return {-a_, -b_}; }
    GoldenInt& operator+=(const GoldenInt& o);
    GoldenInt& operator-=(const GoldenInt& o);
    GoldenInt& operator*=(const GoldenInt& o);

    friend GoldenInt operator+(GoldenInt u, const GoldenInt& v) { return u += v; }
    friend GoldenInt operator-(GoldenInt u, const GoldenInt& v) { return u -= v; }
    friend GoldenInt operator*(GoldenInt u, const GoldenInt& v) { return u *= v; }

    friend bool operator==(const GoldenInt& u, const GoldenInt& v) = default;
    friend std::strong_ordering operator<=>(const GoldenInt& u, const GoldenInt& v);

    // Field norm N(a + b*phi) = (a + b*phi)(a + b*psi) = a^2 + ab - b^2.
    BigInt norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    // Galois conjugate a + b*psi with psi = 1 - phi, written back in the phi basis.
    GoldenInt conjugate() const { return {a_ + b_, -b_}; }

    // Multiplies by phi^-1 = -1 + phi.
    GoldenInt div_by_phi() const { return {b_ - a_, a_}; }
    GoldenInt mul_by_phi() const { return {b_, a_ + b_}; }

    double to_double() const;

    std::string to_string() const;

private:
    BigInt a_ = 0;
    BigInt b_ = 0;
};

int sign(const GoldenInt& u);
int cmp(const GoldenInt& u, const GoldenInt& v);
GoldenInt add(const GoldenInt& u, const GoldenInt& v);
GoldenInt mul(const GoldenInt& u, const GoldenInt& v);
// phi^n for any integer n.
GoldenInt phi_pow(long n);
// Fibonacci numbers with F(0) = 0, F(1) = F(2) = 1; throws std::invalid_argument for n < 0.
BigInt fibonacci(long n);
// floor(u) computed exactly with an integer square root.
BigInt floor(const GoldenInt& u);

std::ostream& operator<<(std::ostream& os, const GoldenInt& u);

// (num) / den with den a positive ordinary integer, kept in lowest terms.
class GoldenRat {
public:
    GoldenRat() = default;
    GoldenRat(GoldenInt num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    GoldenRat(long long v) : num_(v) {}                 // NOLINT(google-explicit-constructor)
    GoldenRat(GoldenInt num, BigInt den);

    const GoldenInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }

    GoldenRat operator-() const;
    GoldenRat& operator+=(const GoldenRat& o);
    GoldenRat& operator-=(const GoldenRat& o);
    GoldenRat& operator*=(const GoldenRat& o);

    friend GoldenRat operator+(GoldenRat u, const GoldenRat& v) { return u += v; }
    friend GoldenRat operator-(GoldenRat u, const GoldenRat& v) { return u -= v; }
    friend GoldenRat operator*(GoldenRat u, const GoldenRat& v) { return u *= v; }

    GoldenRat div_int(const BigInt& d) const;
    GoldenRat half() const { return div_int(2); }

    friend bool operator==(const GoldenRat& u, const GoldenRat& v) = default;
    friend std::strong_ordering operator<=>(const GoldenRat& u, const GoldenRat& v);

    double to_double() const;
    std::string to_string() const;

private:
    void normalize();

    GoldenInt num_;
    BigInt den_ = 1;
};

int sign(const GoldenRat& u);
int rat_cmp(const GoldenRat& u, const GoldenRat& v);
BigInt floor(const GoldenRat& u);

std::ostream& operator<<(std::ostream& os, const GoldenRat& u);

struct Point2 {
    GoldenRat x;
    GoldenRat y;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
    friend Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
    friend Point2 operator*(const GoldenRat& s, const Point2& p) { return {s * p.x, s * p.y}; }
};

std::ostream& operator<<(std::ostream& os, const Point2& p);
std::string to_string(const Point2& p);

struct Rect {
    Point2 origin;
    GoldenRat width;
    GoldenRat height;

    GoldenRat x0() const { return origin.x; }
    GoldenRat y0() const { return origin.y; }
    GoldenRat x1() const { return origin.x + width; }
    GoldenRat y1() const { return origin.y + height; }
    GoldenRat area() const { return width * height; }
    Point2 center() const { return {origin.x + width.half(), origin.y + height.half()}; }

    bool contains(const Point2& p) const;
    bool contains(const Rect& r) const;

    friend bool operator==(const Rect&, const Rect&) = default;
};

// Interiors intersect.
bool interiors_overlap(const Rect& r, const Rect& s);
// The closed rectangles meet in a segment of positive length.
bool share_edge(const Rect& r, const Rect& s);
// The closed rectangles have at least one point in common.
bool intersects(const Rect& r, const Rect& s);

}  // namespace fibcurve
