#include "dtup/ffmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dtup/arith.hpp"
#include "dtup/graph.hpp"

namespace dtup {

namespace {

void require_field_prime(std::uint64_t p)
{
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("field size must be prime");
    if (p > kMaxFieldPrime) throw std::invalid_argument("field prime above 10^6");
}

void require_residues(const std::vector<std::uint64_t>& set, std::uint64_t p, bool allow_zero, const char* name)
{
    std::vector<std::uint64_t> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument(std::string(name) + " has repeated residues");
    }
    for (auto x : sorted) {
        if (x >= p) throw std::invalid_argument(std::string(name) + " must hold reduced residues");
        if (x == 0 && !allow_zero) throw std::invalid_argument(std::string(name) + " must lie in F_p*");
    }
}

void require_lambda(std::uint64_t lambda, std::uint64_t p)
{
    if (lambda % p == 0) throw std::invalid_argument("lambda must be nonzero mod p");
}

std::complex<double> shifted_product_sum(const CharacterTable& t, std::uint64_t lambda, std::uint64_t j,
                                         const std::vector<std::uint64_t>& a_set, const std::vector<std::uint64_t>& b_set)
{
    const std::uint64_t p = t.p();
    std::complex<double> s{0.0, 0.0};
    for (auto a : a_set) {
        for (auto b : b_set) s += t.value(j, (a * b + lambda) % p);
    }
    return s;
}

std::vector<bool> membership(std::uint64_t p, const std::vector<std::uint64_t>& residues)
{
    std::vector<bool> in(p, false);
    for (auto r : residues) in[r] = true;
    return in;
}

std::vector<std::uint64_t> common_partners(std::uint64_t p, std::uint64_t lambda, const std::vector<std::uint64_t>& a_set,
                                           const std::vector<bool>& target)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t b = 0; b < p; ++b) {
        bool all = true;
        for (auto a : a_set) {
            if (!target[(a * b + lambda) % p]) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(b);
    }
    return out;
}

}  // namespace

CharacterTable::CharacterTable(std::uint64_t p) : p_(p)
{
    require_field_prime(p);
    const std::uint64_t m = p - 1;
    if (p > 2) {
        const auto factors = prime_factors(m);
        for (g_ = 2; g_ < p; ++g_) {
            bool primitive = true;
            for (auto q : factors) {
                if (powmod(g_, m / q, p) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
    }
    dlog_.assign(p, 0);
    pow_.assign(m, 0);
    std::uint64_t x = 1;
    for (std::uint64_t a = 0; a < m; ++a) {
        pow_[a] = static_cast<std::uint32_t>(x);
        dlog_[x] = static_cast<std::uint32_t>(a);
        x = x * g_ % p;
    }
    roots_.resize(m);
    for (std::uint64_t e = 0; e < m; ++e) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m);
        roots_[e] = {std::cos(angle), std::sin(angle)};
    }
}

std::uint64_t CharacterTable::dlog(std::uint64_t x) const
{
    if (x % p_ == 0) throw std::invalid_argument("dlog of zero");
    return dlog_[x % p_];
}

std::complex<double> CharacterTable::value(std::uint64_t j, std::uint64_t x) const
{
    if (j >= order()) throw std::invalid_argument("character index must be < p - 1");
    x %= p_;
    if (x == 0) return {0.0, 0.0};
    const auto e = static_cast<std::uint64_t>((static_cast<u128>(j) * dlog_[x]) % order());
    return roots_[e];
}

std::complex<double> char_value(const CharacterTable& table, std::uint64_t j, std::uint64_t x) { return table.value(j, x); }

std::vector<std::uint64_t> power_residues(std::uint64_t p, std::uint64_t k)
{
    require_field_prime(p);
    if (k < 1) throw std::invalid_argument("power residues need k >= 1");
    std::vector<bool> seen(p, false);
    for (std::uint64_t x = 0; x < p; ++x) seen[powmod(x, k, p)] = true;
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < p; ++r) {
        if (seen[r]) out.push_back(r);
    }
    return out;
}

BoundReport verify_vinogradov(const CharacterTable& table, std::uint64_t lambda, std::uint64_t j,
                              const std::vector<std::uint64_t>& a_set, const std::vector<std::uint64_t>& b_set, double tol)
{
    const std::uint64_t p = table.p();
    if (j % table.order() == 0) throw std::invalid_argument("character must be non-trivial");
    require_lambda(lambda, p);
    require_residues(a_set, p, false, "A");
    require_residues(b_set, p, false, "B");
    const double lhs = std::abs(shifted_product_sum(table, lambda % p, j, a_set, b_set));
    const double rhs = std::sqrt(static_cast<double>(p) * static_cast<double>(a_set.size()) *
                                 static_cast<double>(b_set.size()));
    return upper_bound_report("|sum chi(ab+lambda)| <= sqrt(p|A||B|)", lhs, rhs, tol);
}

FfCliqueReport ff_clique_bound(std::uint64_t p, std::uint64_t lambda, const std::vector<std::uint64_t>& primes,
                               std::optional<std::chrono::milliseconds> timeout)
{
    require_field_prime(p);
    require_lambda(lambda, p);
    lambda %= p;
    std::vector<std::uint64_t> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("exponent primes must be distinct");
    }
    for (auto q : sorted) {
        if (!is_prime(q)) throw std::invalid_argument("exponents must be primes");
        if ((p - 1) % q != 0) throw std::invalid_argument("each exponent prime must divide p - 1");
    }

    std::vector<bool> in_union(p, false);
    for (auto q : sorted) {
        for (auto r : power_residues(p, q)) in_union[r] = true;
    }

    std::vector<std::uint64_t> labels;
    for (std::uint64_t a = 1; a < p; ++a) labels.push_back(a);
    Graph g(labels);
    for (std::uint64_t a = 1; a < p; ++a) {
        for (std::uint64_t b = a + 1; b < p; ++b) {
            if (in_union[(a * b + lambda) % p]) g.add_edge(a - 1, b - 1);
        }
    }

    CliqueOptions options;
    options.timeout = timeout;
    options.lexicographic_witness = false;
    // a -> -a preserves every product ab.
    for (std::uint64_t a = 1; a < p; ++a) options.symmetry.push_back(p - a - 1);
    const auto clique = max_clique(g, options);

    double factor = std::pow(2.0, static_cast<double>(sorted.size())) * std::sqrt(static_cast<double>(p)) + 2.0;
    for (auto q : sorted) factor /= 1.0 - 1.0 / static_cast<double>(q);

    FfCliqueReport out;
    out.max_size = clique.size;
    out.witness = clique.witness;
    out.exhaustive = clique.exhaustive;
    out.report = upper_bound_report("max |A| <= (2^m sqrt(p)+2) prod (1-1/p_i)^-1", static_cast<double>(clique.size),
                                    factor);
    if (!clique.exhaustive) {
        out.report.verdict = Verdict::NoVerdict;
        out.report.note = "search timed out; size is a lower bound";
    } else if (sorted.empty()) {
        out.report.note = "empty exponent set: no pair qualifies, so |A| <= 1";
    }
    return out;
}

ResidueSetReport weil_model_B(std::uint64_t p, std::uint64_t d, std::uint64_t lambda, const std::vector<std::uint64_t>& a_set)
{
    require_field_prime(p);
    if (d < 2) throw std::invalid_argument("weil model needs d >= 2");
    if ((p - 1) % d != 0) throw std::invalid_argument("weil model needs p = 1 mod d");
    require_lambda(lambda, p);
    require_residues(a_set, p, false, "A");

    ResidueSetReport out;
    out.b_set = common_partners(p, lambda % p, a_set, membership(p, power_residues(p, d)));
    const double m = static_cast<double>(a_set.size());
    const double rhs = static_cast<double>(p) / std::pow(static_cast<double>(d), m) + m * std::sqrt(static_cast<double>(p));
    out.report = upper_bound_report("|B| <= p/d^m + m sqrt(p)", static_cast<double>(out.b_set.size()), rhs);
    return out;
}

BoundReport verify_karatsuba(const CharacterTable& table, std::uint64_t lambda, const std::vector<std::uint64_t>& a_set,
                             const std::vector<std::uint64_t>& b_set, unsigned nu, std::uint64_t j, double tol)
{
    const std::uint64_t p = table.p();
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    if (j % table.order() == 0) throw std::invalid_argument("character must be non-trivial");
    require_lambda(lambda, p);
    require_residues(a_set, p, true, "A");
    require_residues(b_set, p, false, "B");

    const double lhs = std::abs(shifted_product_sum(table, lambda % p, j, a_set, b_set));
    const double two_nu = 2.0 * nu;
    const double a = static_cast<double>(a_set.size());
    const double b = static_cast<double>(b_set.size());
    const double inner = two_nu * std::pow(a, two_nu) * std::sqrt(static_cast<double>(p)) +
                         std::pow(two_nu, nu) * std::pow(a, nu) * static_cast<double>(p);
    const double rhs = std::pow(b, (two_nu - 1.0) / two_nu) * std::pow(inner, 1.0 / two_nu);
    return upper_bound_report("|sum chi(ab+lambda)| <= |B|^((2v-1)/2v) (2v|A|^2v sqrt(p) + (2v)^v |A|^v p)^(1/2v)",
                              lhs, rhs, tol);
}

ResidueSetReport check_cor_kb(std::uint64_t p, std::uint64_t k, std::uint64_t lambda, const std::vector<std::uint64_t>& a_set,
                              unsigned nu)
{
    require_field_prime(p);
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    if (std::gcd(k, p - 1) <= 1) throw std::invalid_argument("needs gcd(k, p - 1) > 1");
    require_lambda(lambda, p);
    require_residues(a_set, p, true, "A");

    ResidueSetReport out;
    const double rhs = 12.0 * nu * std::sqrt(static_cast<double>(p));
    const double threshold = 2.0 * nu * std::pow(static_cast<double>(p), 1.0 / (2.0 * nu));
    if (static_cast<double>(a_set.size()) < threshold) {
        out.report.quantity = "|B| <= 12 nu sqrt(p)";
        out.report.rhs = rhs;
        out.report.verdict = Verdict::NotApplicable;
        std::ostringstream note;
        note << "|A| = " << a_set.size() << " is below 2 nu p^(1/2nu) = " << threshold;
        out.report.note = note.str();
        return out;
    }
    out.b_set = common_partners(p, lambda % p, a_set, membership(p, power_residues(p, k)));
    out.report = upper_bound_report("|B| <= 12 nu sqrt(p)", static_cast<double>(out.b_set.size()), rhs);
    return out;
}

}  // namespace dtup
