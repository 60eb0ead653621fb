#include "rodwave/cas/mpoly.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace rodwave::cas {

namespace {

struct SymbolTable {
    std::mutex lock;
    std::vector<std::string> names;
    std::unordered_map<std::string, Var> index;
};

SymbolTable& table()
{
    static SymbolTable t;
    return t;
}

void trim(Monomial& m)
{
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int exponent(const Monomial& m, Var v) { return v < static_cast<int>(m.size()) ? m[v] : 0; }

}  // namespace

Var symbol(std::string_view name)
{
    auto& t = table();
    std::lock_guard<std::mutex> g(t.lock);
    const std::string key(name);
    if (auto it = t.index.find(key); it != t.index.end()) return it->second;
    const Var v = static_cast<Var>(t.names.size());
    t.names.push_back(key);
    t.index.emplace(key, v);
    return v;
}

const std::string& symbol_name(Var v)
{
    auto& t = table();
    std::lock_guard<std::mutex> g(t.lock);
    return t.names.at(static_cast<std::size_t>(v));
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly::MPoly(const Rational& c)
{
    Rational k = c;
    k.canonicalize();
    if (k != 0) terms_.emplace(Monomial{}, k);
}

MPoly MPoly::var(Var v, int power)
{
    if (power < 0) throw std::invalid_argument("negative exponent");
    Monomial m(static_cast<std::size_t>(v) + 1, 0);
    m[v] = power;
    trim(m);
    MPoly p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational MPoly::constant() const
{
    if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MPoly::degree(Var v) const
{
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, v));
    return d;
}

int MPoly::total_degree() const
{
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

MPoly MPoly::coefficient(Var v, int k) const
{
    MPoly out;
    for (const auto& [m, c] : terms_) {
        if (exponent(m, v) != k) continue;
        Monomial r = m;
        if (v < static_cast<int>(r.size())) r[v] = 0;
        trim(r);
        out.terms_.emplace(std::move(r), c);
    }
    return out;
}

std::vector<Var> MPoly::variables() const
{
    std::vector<bool> seen;
    for (const auto& [m, c] : terms_) {
        if (seen.size() < m.size()) seen.resize(m.size(), false);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) seen[i] = true;
    }
    std::vector<Var> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<Var>(i));
    return out;
}

void MPoly::add_term(Monomial m, const Rational& c)
{
    Rational k = c;
    k.canonicalize();
    if (k == 0) return;
    trim(m);
    auto [it, fresh] = terms_.emplace(std::move(m), k);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

MPoly operator-(const MPoly& a)
{
    MPoly out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MPoly MPoly::pow(unsigned k) const
{
    MPoly result(1L), base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

MPoly MPoly::diff(Var v) const
{
    MPoly out;
    for (const auto& [m, c] : terms_) {
        const int e = exponent(m, v);
        if (e == 0) continue;
        Monomial r = m;
        r[v] = e - 1;
        out.add_term(std::move(r), c * e);
    }
    return out;
}

double MPoly::evaluate(const std::map<Var, double>& at) const
{
    double sum = 0;
    for (const auto& [m, c] : terms_) {
        double term = to_double(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = at.find(static_cast<Var>(i));
            if (it == at.end()) throw std::invalid_argument("unbound symbol " + symbol_name(static_cast<Var>(i)));
            term *= std::pow(it->second, m[i]);
        }
        sum += term;
    }
    return sum;
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        const bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string body;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += symbol_name(static_cast<Var>(i));
            if (m[i] > 1) body += "^" + std::to_string(m[i]);
        }
        if (body.empty())
            out += rodwave::to_string(mag);
        else if (mag == 1)
            out += body;
        else
            out += rodwave::to_string(mag) + "*" + body;
    }
    return out;
}

MPoly reduce_radical(const MPoly& p, Var s, const MPoly& square)
{
    const int d = p.degree(s);
    if (d < 2) return p;
    std::vector<MPoly> sq_pow{MPoly(1L)};
    for (int k = 1; 2 * k <= d; ++k) sq_pow.push_back(sq_pow.back() * square);
    MPoly out;
    const MPoly s1 = MPoly::var(s);
    for (int k = 0; k <= d; ++k) {
        const MPoly c = p.coefficient(s, k);
        if (c.is_zero()) continue;
        MPoly term = c * sq_pow[static_cast<std::size_t>(k / 2)];
        if (k % 2) term *= s1;
        out += term;
    }
    return out;
}

}  // namespace rodwave::cas
