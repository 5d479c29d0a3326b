#include "trslab/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace trslab {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over GF(p).
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        trim(a);
    }
    return a;
}

Coeffs digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t m) {
    Coeffs d(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = index % p;
        index /= p;
    }
    return d;
}

std::uint32_t index_of(const Coeffs& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Product of two encoded elements modulo the field modulus, without tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t m,
                       const Coeffs& modulus) {
    const Coeffs da = digits_of(a, p, m);
    const Coeffs db = digits_of(b, p, m);
    Coeffs prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    Coeffs r = poly_mod(prod, modulus, p);
    r.resize(m, 0);
    return index_of(r, p);
}

std::uint32_t slow_add(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t m) {
    Coeffs da = digits_of(a, p, m);
    const Coeffs db = digits_of(b, p, m);
    for (std::uint32_t i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
    return index_of(da, p);
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t n, std::uint32_t p, std::uint32_t m,
                       const Coeffs& modulus) {
    std::uint32_t result = 1;
    while (n != 0) {
        if (n & 1) result = slow_mul(result, a, p, m, modulus);
        a = slow_mul(a, a, p, m, modulus);
        n >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw FieldError(std::string("malformed ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
    const std::size_t deg = monic.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Every monic divisor candidate of degree d.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Coeffs div(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (poly_mod(monic, div, p).empty()) return false;
        }
    }
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw FieldError("field order exceeds 2^16");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->m = m;
    t->q = static_cast<std::uint32_t>(q);

    if (modulus) {
        const auto& mod = *modulus;
        if (mod.size() != m + 1 || mod.back() != 1) {
            throw FieldError("modulus must be monic of degree " + std::to_string(m));
        }
        for (auto c : mod) {
            if (c >= p) throw FieldError("modulus coefficient out of range");
        }
        if (!is_irreducible(p, mod)) throw FieldError("modulus is reducible");
        t->modulus = mod;
    } else {
        for (std::uint32_t code = 0; code < t->q; ++code) {
            Coeffs cand = digits_of(code, p, m);
            cand.push_back(1);
            if (is_irreducible(p, cand)) {
                t->modulus = std::move(cand);
                break;
            }
        }
    }

    const std::uint32_t order = t->q - 1;
    const auto factors = prime_factors(order);
    std::uint32_t gen = 1;
    if (order > 1) {
        for (std::uint32_t g = 2; g < t->q; ++g) {
            bool ok = true;
            for (auto f : factors) {
                if (slow_pow(g, order / f, p, m, t->modulus) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = g;
                break;
            }
        }
    }

    t->exp.assign(2 * static_cast<std::size_t>(order), 0);
    t->log.assign(t->q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t j = 0; j < order; ++j) {
        t->exp[j] = x;
        t->log[x] = j;
        x = slow_mul(x, gen, p, m, t->modulus);
    }
    for (std::uint32_t j = 0; j < order; ++j) t->exp[order + j] = t->exp[j];

    t->neg.assign(t->q, 0);
    for (std::uint32_t a = 0; a < t->q; ++a) {
        Coeffs d = digits_of(a, p, m);
        for (auto& c : d) c = (p - c) % p;
        t->neg[a] = index_of(d, p);
    }

    if (p == 2) {
        t->kind = Kind::kBinary;
    } else if (m == 1) {
        t->kind = Kind::kPrime;
    } else {
        t->kind = Kind::kZech;
        t->zech.assign(order, kNoZech);
        for (std::uint32_t i = 0; i < order; ++i) {
            const std::uint32_t s = slow_add(1, t->exp[i], p, m);
            if (s != 0) t->zech[i] = t->log[s];
        }
    }

    Field field(t);
    // Trace needs working arithmetic, so fill it after the other tables.
    auto& trace = t->trace;
    trace.assign(t->q, 0);
    for (std::uint32_t a = 0; a < t->q; ++a) {
        Elem acc{0};
        Elem frob{a};
        for (std::uint32_t i = 0; i < m; ++i) {
            acc = field.add(acc, frob);
            frob = field.pow(frob, p);
        }
        if (acc.v >= p) throw std::logic_error("trace left the prime subfield");
        trace[a] = acc.v;
    }
    return field;
}

Field Field::parse(std::string_view descriptor) {
    std::string_view head = descriptor;
    std::string_view tail;
    bool has_modulus = false;
    if (auto slash = descriptor.find('/'); slash != std::string_view::npos) {
        head = descriptor.substr(0, slash);
        tail = descriptor.substr(slash + 1);
        has_modulus = true;
    }

    std::uint32_t p = 0;
    std::uint32_t m = 0;
    if (auto caret = head.find('^'); caret != std::string_view::npos) {
        p = parse_uint(head.substr(0, caret), "characteristic");
        m = parse_uint(head.substr(caret + 1), "degree");
    } else {
        const std::uint32_t q = parse_uint(head, "field order");
        const auto f = prime_factors(q);
        if (f.size() != 1) throw FieldError("field order " + std::to_string(q) + " is not a prime power");
        p = static_cast<std::uint32_t>(f[0]);
        m = 0;
        for (std::uint32_t x = q; x > 1; x /= p) ++m;
    }

    if (!has_modulus) return make(p, m);

    std::vector<std::uint32_t> coeffs;
    if (tail.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= tail.size()) {
            auto comma = tail.find(',', start);
            if (comma == std::string_view::npos) comma = tail.size();
            coeffs.push_back(parse_uint(tail.substr(start, comma - start), "modulus coefficient"));
            start = comma + 1;
        }
    } else {
        for (char c : tail) {
            if (c < '0' || c > '9') throw FieldError("malformed modulus '" + std::string(tail) + "'");
            coeffs.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    }
    return make(p, m, coeffs);
}

std::string Field::descriptor() const {
    std::ostringstream os;
    os << t_->p << '^' << t_->m << '/';
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
        if (t_->p > 10 && i > 0) os << ',';
        os << t_->modulus[i];
    }
    return os.str();
}

Elem Field::element(std::uint64_t index) const {
    if (index >= t_->q) {
        throw FieldError("element index " + std::to_string(index) + " outside GF(" + std::to_string(t_->q) + ")");
    }
    return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t n) const {
    const std::int64_t p = t_->p;
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(t_->q);
    for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = Elem{i};
    return out;
}

Elem Field::add_zech(Elem a, Elem b) const {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t order = t_->q - 1;
    const std::uint32_t la = t_->log[a.v];
    const std::uint32_t lb = t_->log[b.v];
    const std::uint32_t d = lb >= la ? lb - la : lb + order - la;
    const std::uint32_t z = t_->zech[d];
    if (z == kNoZech) return Elem{0};
    return Elem{t_->exp[la + z]};
}

Elem Field::inv(Elem a) const {
    if (a.v == 0) throw FieldError("inverse of zero");
    const std::uint32_t order = t_->q - 1;
    const std::uint32_t l = t_->log[a.v];
    return Elem{t_->exp[l == 0 ? 0 : order - l]};
}

Elem Field::pow(Elem a, std::uint64_t n) const {
    if (n == 0) return Elem{1};
    if (a.v == 0) return Elem{0};
    const std::uint64_t order = t_->q - 1;
    return Elem{t_->exp[(t_->log[a.v] * (n % order)) % order]};
}

Elem Field::pow_signed(Elem a, std::int64_t n) const {
    if (n >= 0) return pow(a, static_cast<std::uint64_t>(n));
    return pow(inv(a), static_cast<std::uint64_t>(-n));
}

std::uint32_t Field::log(Elem a) const {
    if (a.v == 0) throw FieldError("logarithm of zero");
    return t_->log[a.v];
}

int Field::quadratic_character(Elem a) const {
    if (t_->p == 2) throw FieldError("quadratic character needs odd characteristic");
    if (a.v == 0) return 0;
    return (t_->log[a.v] % 2 == 0) ? 1 : -1;
}

bool Field::is_square(Elem a) const {
    if (a.v == 0 || t_->p == 2) return true;
    return t_->log[a.v] % 2 == 0;
}

bool Field::operator==(const Field& other) const {
    return t_ == other.t_ || (t_->p == other.t_->p && t_->m == other.t_->m && t_->modulus == other.t_->modulus);
}

}  // namespace trslab
