#include "fibcurve/golden.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fibcurve {

namespace {

constexpr double kPhi = 1.6180339887498948482;
constexpr double kPsi = -0.6180339887498948482;

BigInt floor_div(const BigInt& n, const BigInt& d) {
    // d > 0
    BigInt q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

// floor(b * sqrt 5)
BigInt floor_sqrt5_times(const BigInt& b) {
    if (b.is_zero()) return 0;
    BigInt r = boost::multiprecision::sqrt(BigInt(5 * b * b));
    // 5 b^2 is never a perfect square for b != 0
    return b > 0 ? r : BigInt(-r - 1);
}

double big_to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace

GoldenInt& GoldenInt::operator+=(const GoldenInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenInt& GoldenInt::operator-=(const GoldenInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenInt& GoldenInt::operator*=(const GoldenInt& o) {
    // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
    BigInt bd = b_ * o.b_;
    BigInt na = a_ * o.a_ + bd;
    BigInt nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

int sign(const GoldenInt& u) {
    const int sa = u.a().sign();
    const int sb = u.b().sign();
    if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    const int sn = u.norm().sign();
    return sa < 0 ? -sn : sn;
}

std::strong_ordering operator<=>(const GoldenInt& u, const GoldenInt& v) {
    return sign(u - v) <=> 0;
}

int cmp(const GoldenInt& u, const GoldenInt& v) { return sign(u - v); }

GoldenInt add(const GoldenInt& u, const GoldenInt& v) { return u + v; }

GoldenInt mul(const GoldenInt& u, const GoldenInt& v) { return u * v; }

BigInt fibonacci(long n) {
    if (n < 0) throw std::invalid_argument("fibonacci index must be non-negative");
    BigInt f0 = 0;
    BigInt f1 = 1;
    for (long i = 0; i < n; ++i) {
        BigInt f2 = f0 + f1;
        f0 = std::move(f1);
        f1 = std::move(f2);
    }
    return f0;
}

GoldenInt phi_pow(long n) {
    // phi^n = F(n-1) + F(n) phi, and phi^-n = (-1)^n (F(n+1) - F(n) phi).
    if (n == 0) return 1;
    if (n > 0) return {fibonacci(n - 1), fibonacci(n)};
    const long m = -n;
    BigInt a = fibonacci(m + 1);
    BigInt b = -fibonacci(m);
    if (m % 2 == 1) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

double GoldenInt::to_double() const {
    if (a_.sign() * b_.sign() >= 0) return big_to_double(a_) + big_to_double(b_) * kPhi;
    // Opposite signs: a + b psi has no cancellation, so divide the norm by it.
    return big_to_double(norm()) / (big_to_double(a_) + big_to_double(b_) * kPsi);
}

BigInt floor(const GoldenInt& u) {
    // a + b phi = (2a + b + b sqrt 5) / 2
    return floor_div(2 * u.a() + u.b() + floor_sqrt5_times(u.b()), 2);
}

std::string GoldenInt::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& u) {
    os << u.a();
    if (u.b() < 0)
        os << "-" << BigInt(-u.b()) << "φ";
    else
        os << "+" << u.b() << "φ";
    return os;
}

// ---------------------------------------------------------------------------

GoldenRat::GoldenRat(GoldenInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("GoldenRat: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    normalize();
}

void GoldenRat::normalize() {
    if (den_ == 1) return;
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(num_.a(), num_.b()), den_);
    if (g > 1) {
        num_ = GoldenInt(num_.a() / g, num_.b() / g);
        den_ /= g;
    }
}

GoldenRat GoldenRat::operator-() const {
    GoldenRat r = *this;
    r.num_ = -r.num_;
    return r;
}

GoldenRat& GoldenRat::operator+=(const GoldenRat& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * GoldenInt(o.den_, 0) + o.num_ * GoldenInt(den_, 0);
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

GoldenRat& GoldenRat::operator-=(const GoldenRat& o) { return *this += -o; }

GoldenRat& GoldenRat::operator*=(const GoldenRat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

GoldenRat GoldenRat::div_int(const BigInt& d) const { return GoldenRat(num_, den_ * d); }

int sign(const GoldenRat& u) { return sign(u.num()); }

std::strong_ordering operator<=>(const GoldenRat& u, const GoldenRat& v) {
    if (u.den() == v.den()) return u.num() <=> v.num();
    return sign(u.num() * GoldenInt(v.den(), 0) - v.num() * GoldenInt(u.den(), 0)) <=> 0;
}

int rat_cmp(const GoldenRat& u, const GoldenRat& v) {
    auto c = u <=> v;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

BigInt floor(const GoldenRat& u) {
    const GoldenInt& n = u.num();
    return floor_div(2 * n.a() + n.b() + floor_sqrt5_times(n.b()), 2 * u.den());
}

double GoldenRat::to_double() const { return num_.to_double() / big_to_double(den_); }

std::string GoldenRat::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenRat& u) {
    if (u.den() == 1) return os << u.num();
    return os << "(" << u.num() << ")/" << u.den();
}

std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << "(" << p.x << ", " << p.y << ")";
}

std::string to_string(const Point2& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

// ---------------------------------------------------------------------------

bool Rect::contains(const Point2& p) const {
    return x0() <= p.x && p.x <= x1() && y0() <= p.y && p.y <= y1();
}

bool Rect::contains(const Rect& r) const {
    return x0() <= r.x0() && r.x1() <= x1() && y0() <= r.y0() && r.y1() <= y1();
}

namespace {

// Signed extents of the intersection of the two closed rectangles.
std::pair<GoldenRat, GoldenRat> overlap_extent(const Rect& r, const Rect& s) {
    GoldenRat dx = std::min(r.x1(), s.x1()) - std::max(r.x0(), s.x0());
    GoldenRat dy = std::min(r.y1(), s.y1()) - std::max(r.y0(), s.y0());
    return {dx, dy};
}

}  // namespace

bool interiors_overlap(const Rect& r, const Rect& s) {
    auto [dx, dy] = overlap_extent(r, s);
    return sign(dx) > 0 && sign(dy) > 0;
}

bool share_edge(const Rect& r, const Rect& s) {
    auto [dx, dy] = overlap_extent(r, s);
    const int sx = sign(dx);
    const int sy = sign(dy);
    return (sx > 0 && sy == 0) || (sx == 0 && sy > 0);
}

bool intersects(const Rect& r, const Rect& s) {
    auto [dx, dy] = overlap_extent(r, s);
    return sign(dx) >= 0 && sign(dy) >= 0;
}

}  // namespace fibcurve
