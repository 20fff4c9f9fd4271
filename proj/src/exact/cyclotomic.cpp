/*
   Copyright 2026 The genuscenter Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "genus/exact/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace genus::exact {

namespace {

struct Context {
    int n = 1;
    int phi = 1;
    std::vector<long> poly;               // Phi_n, constant term first, monic
    std::vector<std::vector<long>> pow;   // pow[e] = x^e mod Phi_n, e in [0, n)
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long> &den) {
    // num / den with den monic, exact division assumed
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        long c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return q;
}

std::mutex g_mutex;
std::map<int, std::unique_ptr<Context>> g_contexts;
std::map<int, std::vector<long>> g_polys;

const std::vector<long> &poly_locked(int n) {
    auto it = g_polys.find(n);
    if (it != g_polys.end()) return it->second;
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, poly_locked(d));
    return g_polys.emplace(n, std::move(p)).first->second;
}

const Context &context(int n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_contexts.find(n);
    if (it != g_contexts.end()) return *it->second;
    auto ctx = std::make_unique<Context>();
    ctx->n = n;
    ctx->poly = poly_locked(n);
    ctx->phi = static_cast<int>(ctx->poly.size()) - 1;
    int phi = ctx->phi;
    int top = std::max(n, 2 * phi);
    ctx->pow.assign(top, std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    for (int e = 0; e < top; ++e) {
        ctx->pow[e] = cur;
        // multiply by x and reduce
        long carry = cur[phi - 1];
        for (int k = phi - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        if (carry != 0)
            for (int k = 0; k < phi; ++k) cur[k] -= carry * ctx->poly[k];
    }
    return *g_contexts.emplace(n, std::move(ctx)).first->second;
}

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

void add_scaled_row(std::vector<mpz_class> &acc, const std::vector<long> &row, const mpz_class &c) {
    for (size_t k = 0; k < row.size(); ++k) {
        long r = row[k];
        if (r == 0) continue;
        if (r == 1)
            acc[k] += c;
        else if (r == -1)
            acc[k] -= c;
        else
            acc[k] += c * r;
    }
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

int totient(int n) {
    int r = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

const std::vector<long> &cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
    return context(n).poly;
}

Cyclotomic::Cyclotomic() : order_(1), num_(1, 0), den_(1) {}

Cyclotomic::Cyclotomic(long value) : order_(1), num_(1, value), den_(1) {}

Cyclotomic::Cyclotomic(const mpq_class &value) : order_(1), num_(1, value.get_num()), den_(value.get_den()) {
    canonicalize();
}

Cyclotomic::Cyclotomic(int order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

Cyclotomic Cyclotomic::rational(long num, long den) {
    if (den == 0) throw MalformedRational("zero denominator");
    return Cyclotomic(mpq_class(mpz_class(num), mpz_class(den)));
}

Cyclotomic Cyclotomic::zeta(int order, long exponent) {
    return from_terms(order, {RawTerm{exponent, 1, 1}});
}

Cyclotomic Cyclotomic::from_terms(int order, const std::vector<RawTerm> &terms) {
    if (order < 1) throw InvalidArgument("cyclotomic order must be positive, got " + std::to_string(order));
    const Context &ctx = context(order);
    mpz_class den = 1;
    for (const auto &t : terms) {
        if (t.denominator == 0) throw MalformedRational("zero denominator in cyclotomic term");
        mpz_class d = abs(t.denominator);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> acc(ctx.phi, 0);
    for (const auto &t : terms) {
        mpz_class c = t.numerator * (den / abs(t.denominator));
        if (t.denominator < 0) c = -c;
        add_scaled_row(acc, ctx.pow[mod(t.exponent, order)], c);
    }
    return Cyclotomic(order, std::move(acc), std::move(den));
}

void Cyclotomic::canonicalize() {
    if (den_ == 0) throw MalformedRational("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto &c : num_) c = -c;
    }
    bool rational = true;
    for (size_t k = 1; k < num_.size(); ++k)
        if (num_[k] != 0) {
            rational = false;
            break;
        }
    if (rational && order_ != 1) {
        num_.resize(1);
        order_ = 1;
    }
    mpz_class g = den_;
    for (const auto &c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    bool zero = true;
    for (const auto &c : num_)
        if (c != 0) zero = false;
    if (zero) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        den_ /= g;
        for (auto &c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

bool Cyclotomic::is_zero() const {
    for (const auto &c : num_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const { return order_ == 1 && num_[0] == 1 && den_ == 1; }

bool Cyclotomic::is_rational() const { return order_ == 1; }

mpq_class Cyclotomic::to_rational() const {
    if (!is_rational()) throw InvalidArgument("value is not rational: " + to_string());
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

mpq_class Cyclotomic::coefficient(int k) const {
    if (k < 0 || k >= degree()) return 0;
    mpq_class q(num_[k], den_);
    q.canonicalize();
    return q;
}

Cyclotomic Cyclotomic::lift(int m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw InvalidArgument("lift target must be a multiple of the order");
    const Context &ctx = context(m);
    int step = m / order_;
    std::vector<mpz_class> acc(ctx.phi, 0);
    for (size_t k = 0; k < num_.size(); ++k)
        if (num_[k] != 0) add_scaled_row(acc, ctx.pow[(k * step) % m], num_[k]);
    return Cyclotomic(m, std::move(acc), den_);
}

Cyclotomic Cyclotomic::galois(long t) const {
    if (order_ == 1) return *this;
    long tt = mod(t, order_);
    if (std::gcd(tt, static_cast<long>(order_)) != 1) throw InvalidArgument("Galois exponent not coprime to order");
    if (tt == 1) return *this;
    const Context &ctx = context(order_);
    std::vector<mpz_class> acc(ctx.phi, 0);
    for (size_t k = 0; k < num_.size(); ++k)
        if (num_[k] != 0) add_scaled_row(acc, ctx.pow[(k * tt) % order_], num_[k]);
    return Cyclotomic(order_, std::move(acc), den_);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero");
    if (order_ == 1) return Cyclotomic(order_, {den_}, num_[0]);
    Cyclotomic prod(1);
    for (long t = 2; t < order_; ++t)
        if (std::gcd(t, static_cast<long>(order_)) == 1) prod *= galois(t);
    Cyclotomic norm = prod * *this;
    // norm is rational
    mpq_class q = norm.to_rational();
    Cyclotomic scale(mpq_class(q.get_den(), q.get_num()));
    return prod * scale;
}

std::complex<double> Cyclotomic::to_complex() const { return to_complex(1); }

std::complex<double> Cyclotomic::to_complex(long t) const {
    std::complex<double> s = 0;
    double d = den_.get_d();
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        double ang = 2.0 * M_PI * static_cast<double>(mod(static_cast<long>(k) * t, order_)) / order_;
        s += num_[k].get_d() * std::polar(1.0, ang);
    }
    return s / d;
}

std::vector<std::tuple<int, mpz_class, mpz_class>> Cyclotomic::terms() const {
    std::vector<std::tuple<int, mpz_class, mpz_class>> out;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        mpq_class q(num_[k], den_);
        q.canonicalize();
        out.emplace_back(static_cast<int>(k), q.get_num(), q.get_den());
    }
    return out;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, n, d] : terms()) {
        mpz_class an = abs(n);
        if (first) {
            if (n < 0) os << "-";
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (an == 1 && d == 1);
        if (k == 0 || !unit) {
            os << an;
            if (d != 1) os << "/" << d;
        }
        if (k != 0) {
            if (!unit) os << "*";
            os << "z" << order_;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto &c : r.num_) c = -c;
    return r;
}

Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.order_ == b.order_ || a.order_ == 1 || b.order_ == 1) {
        const Cyclotomic &big = a.num_.size() >= b.num_.size() ? a : b;
        const Cyclotomic &small = (&big == &a) ? b : a;
        std::vector<mpz_class> acc(big.num_.size());
        mpz_class den = a.den_ * b.den_;
        if (a.den_ == b.den_) {
            den = a.den_;
            for (size_t k = 0; k < acc.size(); ++k) acc[k] = big.num_[k];
            for (size_t k = 0; k < small.num_.size(); ++k) acc[k] += small.num_[k];
        } else {
            for (size_t k = 0; k < acc.size(); ++k) acc[k] = big.num_[k] * small.den_;
            for (size_t k = 0; k < small.num_.size(); ++k) acc[k] += small.num_[k] * big.den_;
        }
        return Cyclotomic(big.order_, std::move(acc), std::move(den));
    }
    int m = lcm_int(a.order_, b.order_);
    return a.lift(m) + b.lift(m);
}

Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.is_zero() || b.is_zero()) return Cyclotomic();
    if (a.order_ == 1 || b.order_ == 1) {
        const Cyclotomic &r = a.order_ == 1 ? a : b;
        const Cyclotomic &o = a.order_ == 1 ? b : a;
        std::vector<mpz_class> acc(o.num_.size());
        for (size_t k = 0; k < acc.size(); ++k) acc[k] = o.num_[k] * r.num_[0];
        return Cyclotomic(o.order_, std::move(acc), o.den_ * r.den_);
    }
    if (a.order_ != b.order_) {
        int m = lcm_int(a.order_, b.order_);
        return a.lift(m) * b.lift(m);
    }
    const Context &ctx = context(a.order_);
    int phi = ctx.phi;
    std::vector<mpz_class> raw(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (a.num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.num_[j] == 0) continue;
            mpz_addmul(raw[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    std::vector<mpz_class> acc(phi);
    for (int k = 0; k < phi; ++k) acc[k] = std::move(raw[k]);
    for (int e = phi; e < 2 * phi - 1; ++e)
        if (raw[e] != 0) add_scaled_row(acc, ctx.pow[e], raw[e]);
    return Cyclotomic(a.order_, std::move(acc), a.den_ * b.den_);
}

Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    return a * b.inverse();
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.order_ == 1 || b.order_ == 1) return false;  // canonical rationals always have order 1
    int m = lcm_int(a.order_, b.order_);
    Cyclotomic x = a.lift(m), y = b.lift(m);
    return x.den_ == y.den_ && x.num_ == y.num_;
}

std::ostream &operator<<(std::ostream &os, const Cyclotomic &c) { return os << c.to_string(); }

}  // namespace genus::exact
