#include "flatspin/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace flatspin {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NonConvexPolygon: return "NonConvexPolygon";
        case Errc::EdgeVectorMismatch: return "EdgeVectorMismatch";
        case Errc::UnmatchedEdge: return "UnmatchedEdge";
        case Errc::Disconnected: return "Disconnected";
        case Errc::InvalidK: return "InvalidK";
        case Errc::OddN: return "OddN";
        case Errc::EvenN: return "EvenN";
        case Errc::AngleSumMismatch: return "AngleSumMismatch";
        case Errc::DegenerateTriangle: return "DegenerateTriangle";
        case Errc::NotRhombusSurface: return "NotRhombusSurface";
        case Errc::NotAutomorphism: return "NotAutomorphism";
        case Errc::NotInvolution: return "NotInvolution";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        fail(Errc::Internal, "malformed rational '" + s + "'");
    if (r.get_den() == 0)
        fail(Errc::DivisionByZero, "rational with zero denominator");
    r.canonicalize();
    return r;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned lcm_order(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

// ---------------------------------------------------------------------------
// integer / rational polynomial helpers (little-endian coefficient vectors)

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<Rational>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division by a monic divisor
ZPoly zdiv_monic(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num, quot;
    if (den.empty() || den.back() != 1) fail(Errc::Internal, "divisor not monic");
    if (rem.size() < den.size()) return {};
    quot.assign(rem.size() - den.size() + 1, mpz_class(0));
    for (size_t i = rem.size(); i-- >= den.size();) {
        mpz_class c = rem[i];
        if (c == 0) continue;
        size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
        if (i == den.size() - 1) break;
    }
    for (const auto& c : rem)
        if (c != 0) fail(Errc::Internal, "nonzero remainder in cyclotomic division");
    ztrim(quot);
    return quot;
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    qtrim(out);
    return out;
}

// remainder of p modulo the monic integer polynomial phi
void qreduce(QPoly& p, const ZPoly& phi) {
    size_t d = phi.size() - 1;
    while (p.size() > d) {
        Rational c = p.back();
        size_t shift = p.size() - 1 - d;
        if (c != 0)
            for (size_t j = 0; j < d; ++j) p[shift + j] -= c * phi[j];
        p.pop_back();
        qtrim(p);
        if (p.size() <= d) break;
    }
}

// division with remainder, arbitrary nonzero divisor
void qdivmod(const QPoly& num, const QPoly& den, QPoly& quot, QPoly& rem) {
    rem = num;
    qtrim(rem);
    quot.clear();
    if (den.empty()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (rem.size() < den.size()) return;
    quot.assign(rem.size() - den.size() + 1, Rational(0));
    Rational lead = den.back();
    while (rem.size() >= den.size() && !rem.empty()) {
        Rational c = rem.back() / lead;
        size_t shift = rem.size() - den.size();
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
        qtrim(rem);
        if (shift == 0) break;
    }
    qtrim(quot);
}

// extended gcd: returns g and u with u*a ≡ g (mod b), g the (nonzero) gcd
void qext_gcd(QPoly a, QPoly b, QPoly& g, QPoly& u) {
    QPoly u0{Rational(1)}, u1;
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly q, r;
        qdivmod(a, b, q, r);
        QPoly u2 = u0;
        QPoly qu1 = qmul(q, u1);
        if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rational(0));
        for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
        qtrim(u2);
        a = b;
        u0 = u1;
        b = r;
        u1 = u2;
    }
    g = a;
    u = u0;
}

std::vector<unsigned> divisors(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_poly(unsigned m) {
    thread_local std::map<unsigned, ZPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    ZPoly phi;
    if (m == 1) {
        phi = {mpz_class(-1), mpz_class(1)}; // t - 1
    } else {
        ZPoly num(m + 1, mpz_class(0));
        num[0] = -1;
        num[m] = 1; // t^m - 1
        for (unsigned d : divisors(m)) {
            if (d == m) continue;
            num = zdiv_monic(num, cyclotomic_poly(d));
        }
        phi = num;
    }
    if (phi.size() != euler_phi(m) + 1)
        fail(Errc::Internal, "cyclotomic polynomial degree mismatch");
    return cache.emplace(m, std::move(phi)).first->second;
}

// ---------------------------------------------------------------------------
// Cyclo

Cyclo::Cyclo(const Rational& r, unsigned order) : order_(order) {
    if (order == 0) fail(Errc::Internal, "order must be positive");
    coeffs_.assign(euler_phi(order), Rational(0));
    coeffs_[0] = r;
}

Cyclo::Cyclo(unsigned order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order == 0) fail(Errc::Internal, "order must be positive");
    if (coeffs_.size() != euler_phi(order))
        fail(Errc::Internal, "coefficient vector length must equal phi(order)");
}

Cyclo Cyclo::root_of_unity(unsigned m, long j) {
    if (m == 0) fail(Errc::Internal, "order must be positive");
    long jm = j % static_cast<long>(m);
    if (jm < 0) jm += m;
    QPoly p(static_cast<size_t>(jm) + 1, Rational(0));
    p.back() = 1;
    qreduce(p, cyclotomic_poly(m));
    p.resize(euler_phi(m), Rational(0));
    return Cyclo(m, std::move(p));
}

bool Cyclo::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclo::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Cyclo Cyclo::lifted(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) fail(Errc::Internal, "lift target must be a multiple of the order");
    unsigned step = new_order / order_;
    QPoly raw(static_cast<size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) raw[j * step] = coeffs_[j];
    qreduce(raw, cyclotomic_poly(new_order));
    raw.resize(euler_phi(new_order), Rational(0));
    return Cyclo(new_order, std::move(raw));
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    unsigned m = lcm_order(a.order_, b.order_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    unsigned m = lcm_order(a.order_, b.order_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    unsigned m = lcm_order(a.order_, b.order_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    QPoly prod = qmul(x.coeffs_, y.coeffs_);
    qreduce(prod, cyclotomic_poly(m));
    prod.resize(euler_phi(m), Rational(0));
    return Cyclo(m, std::move(prod));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    const ZPoly& phiz = cyclotomic_poly(order_);
    QPoly phi(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) phi[i] = Rational(phiz[i]);
    QPoly a = coeffs_;
    qtrim(a);
    QPoly g, u;
    qext_gcd(a, phi, g, u);
    if (g.size() != 1) fail(Errc::Internal, "element not invertible modulo cyclotomic polynomial");
    for (auto& c : u) c /= g[0];
    qreduce(u, phiz);
    u.resize(euler_phi(order_), Rational(0));
    return Cyclo(order_, std::move(u));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
    unsigned m = lcm_order(a.order_, b.order_);
    return a.lifted(m) * b.lifted(m).inverse();
}

Cyclo Cyclo::galois(unsigned r) const {
    r %= order_;
    if (std::gcd(r, order_) != 1) fail(Errc::Internal, "galois exponent not coprime to order");
    QPoly raw(order_, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) raw[(j * r) % order_] += coeffs_[j];
    qreduce(raw, cyclotomic_poly(order_));
    raw.resize(euler_phi(order_), Rational(0));
    return Cyclo(order_, std::move(raw));
}

Cyclo Cyclo::conj() const { return order_ == 1 ? *this : galois(order_ - 1); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo base = *this, acc = Cyclo::one(order_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    unsigned m = lcm_order(a.order_, b.order_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string Cyclo::token() const {
    std::string out = std::to_string(order_) + ":";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        if (any) os << " + ";
        os << coeffs_[j].get_str();
        if (j > 0) os << "*z" << order_ << "^" << j;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// certified embedding via MPFR directed rounding

namespace {

struct MpfrInterval {
    mpfr_t lo, hi;
    explicit MpfrInterval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~MpfrInterval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    MpfrInterval(const MpfrInterval&) = delete;
    MpfrInterval& operator=(const MpfrInterval&) = delete;

    void set_q(const Rational& q) {
        mpfr_set_q(lo, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, q.get_mpq_t(), MPFR_RNDU);
    }
    void add(const MpfrInterval& o) {
        mpfr_add(lo, lo, o.lo, MPFR_RNDD);
        mpfr_add(hi, hi, o.hi, MPFR_RNDU);
    }
    // this = a * b (four products, directed)
    void mul(const MpfrInterval& a, const MpfrInterval& b, mpfr_prec_t prec) {
        mpfr_t p, qlo, qhi;
        mpfr_inits2(prec, p, qlo, qhi, (mpfr_ptr) nullptr);
        bool first = true;
        const mpfr_srcptr xs[2] = {a.lo, a.hi};
        const mpfr_srcptr ys[2] = {b.lo, b.hi};
        for (auto x : xs)
            for (auto y : ys) {
                mpfr_mul(p, x, y, MPFR_RNDD);
                if (first || mpfr_cmp(p, qlo) < 0) mpfr_set(qlo, p, MPFR_RNDD);
                mpfr_mul(p, x, y, MPFR_RNDU);
                if (first || mpfr_cmp(p, qhi) > 0) mpfr_set(qhi, p, MPFR_RNDU);
                first = false;
            }
        mpfr_set(lo, qlo, MPFR_RNDD);
        mpfr_set(hi, qhi, MPFR_RNDU);
        mpfr_clears(p, qlo, qhi, (mpfr_ptr) nullptr);
    }
};

Rational mpfr_to_rational(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rational(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rational r(mant);
    if (e >= 0) {
        mpz_class two_e;
        mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rational(two_e);
    } else {
        mpz_class two_e;
        mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rational(two_e);
    }
    r.canonicalize();
    return r;
}

// enclosures of cos(2*pi*j/m) and sin(2*pi*j/m)
void trig_enclosure(unsigned j, unsigned m, mpfr_prec_t prec, MpfrInterval& c, MpfrInterval& s) {
    mpfr_t pi_lo, pi_hi, t_lo, t_hi, a, b, w;
    mpfr_inits2(prec, pi_lo, pi_hi, t_lo, t_hi, a, b, w, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    // t = 2*pi*j/m, j >= 0
    mpfr_mul_ui(t_lo, pi_lo, 2 * j, MPFR_RNDD);
    mpfr_div_ui(t_lo, t_lo, m, MPFR_RNDD);
    mpfr_mul_ui(t_hi, pi_hi, 2 * j, MPFR_RNDU);
    mpfr_div_ui(t_hi, t_hi, m, MPFR_RNDU);
    mpfr_sub(w, t_hi, t_lo, MPFR_RNDU); // Lipschitz padding for cos/sin

    auto enclose = [&](bool sine, MpfrInterval& out) {
        auto f_d = sine ? mpfr_sin : mpfr_cos;
        f_d(a, t_lo, MPFR_RNDD);
        f_d(b, t_hi, MPFR_RNDD);
        if (mpfr_cmp(a, b) > 0) mpfr_set(a, b, MPFR_RNDD);
        mpfr_sub(out.lo, a, w, MPFR_RNDD);
        f_d(a, t_lo, MPFR_RNDU);
        f_d(b, t_hi, MPFR_RNDU);
        if (mpfr_cmp(a, b) < 0) mpfr_set(a, b, MPFR_RNDU);
        mpfr_add(out.hi, a, w, MPFR_RNDU);
    };
    enclose(false, c);
    enclose(true, s);
    mpfr_clears(pi_lo, pi_hi, t_lo, t_hi, a, b, w, (mpfr_ptr) nullptr);
}

} // namespace

namespace {

// Snap a tight enclosure to [mid - 2^-(bits+1), mid + 2^-(bits+1)]. The
// midpoint is within 2^-(bits+4) of the true value, which makes intervals at
// increasing bit counts nested (refinement is monotone by construction).
RatInterval standardize(const Rational& lo, const Rational& hi, long bits) {
    Rational mid = (lo + hi) / 2;
    Rational radius = Rational(1) / Rational(mpz_class(1) << static_cast<unsigned>(bits + 1));
    return {mid - radius, mid + radius};
}

} // namespace

ComplexInterval Cyclo::embed(long bits) const {
    if (bits < 16) bits = 16;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 40);
    Rational tight = Rational(1) / Rational(mpz_class(1) << static_cast<unsigned>(bits + 5));
    for (;; prec *= 2) {
        if (prec > (1L << 22)) fail(Errc::Internal, "embedding precision runaway");
        MpfrInterval re(prec), im(prec), c(prec), s(prec), q(prec), t(prec);
        for (unsigned j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] == 0) continue;
            trig_enclosure(j, order_, prec, c, s);
            q.set_q(coeffs_[j]);
            t.mul(q, c, prec);
            re.add(t);
            t.mul(q, s, prec);
            im.add(t);
        }
        Rational rlo = mpfr_to_rational(re.lo), rhi = mpfr_to_rational(re.hi);
        Rational ilo = mpfr_to_rational(im.lo), ihi = mpfr_to_rational(im.hi);
        if (rhi - rlo > tight || ihi - ilo > tight) continue;
        ComplexInterval out;
        out.re = standardize(rlo, rhi, bits);
        out.im = standardize(ilo, ihi, bits);
        out.precision_bits = bits;
        return out;
    }
}

namespace {

int refine_sign(const Cyclo& a, bool imag_part) {
    for (long bits = 64; bits <= 16384; bits *= 2) {
        ComplexInterval box = a.embed(bits);
        const RatInterval& part = imag_part ? box.im : box.re;
        if (part.lo > 0) return 1;
        if (part.hi < 0) return -1;
    }
    fail(Errc::Internal, "sign refinement exceeded 16384 bits; nonzero element pinned at zero");
}

} // namespace

int Cyclo::sign_real() const {
    Cyclo twice_re = *this + conj();
    if (twice_re.is_zero()) return 0;
    return refine_sign(twice_re, false);
}

int Cyclo::sign_imag() const {
    Cyclo diff = *this - conj(); // 2i * Im(a)
    if (diff.is_zero()) return 0;
    return refine_sign(diff, true);
}

bool Cyclo::is_real() const { return *this == conj(); }
bool Cyclo::is_imaginary() const { return *this == -conj(); }

int orientation(const Cyclo& p, const Cyclo& q, const Cyclo& r) {
    return cross_sign(q - p, r - p);
}

int cross_sign(const Cyclo& u, const Cyclo& v) { return (u.conj() * v).sign_imag(); }
int dot_sign(const Cyclo& u, const Cyclo& v) { return (u.conj() * v).sign_real(); }

int incircle(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
    int orient = orientation(a, b, c);
    if (orient == 0) fail(Errc::DegenerateTriangle, "incircle with collinear defining points");
    Cyclo u = a - d, v = b - d, w = c - d;
    Cyclo cu = u.conj(), cv = v.conj(), cw = w.conj();
    Cyclo nu = u * cu, nv = v * cv, nw = w * cw;
    // det [u cu nu; v cv nv; w cw nw]; purely imaginary, sign of -Im gives
    // "inside" for a counterclockwise triple
    Cyclo det = u * (cv * nw - nv * cw) - cu * (v * nw - nv * w) + nu * (v * cw - cv * w);
    return -det.sign_imag() * orient;
}

} // namespace flatspin
