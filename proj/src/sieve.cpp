#include "dtup/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dtup/parallel.hpp"

namespace dtup {

namespace {

void require_primes(const std::vector<std::uint64_t>& primes)
{
    for (auto p : primes) {
        if (!is_prime(p)) throw std::invalid_argument("sieve moduli must be primes");
    }
}

std::uint64_t image_size(const std::vector<std::uint64_t>& set, std::uint64_t p)
{
    std::unordered_set<std::uint64_t> seen;
    for (auto a : set) seen.insert(a % p);
    return seen.size();
}

BoundReport compare_with_set(const SieveInstance& inst, std::string quantity, double bound)
{
    if (inst.set) {
        auto r = upper_bound_report(std::move(quantity), static_cast<double>(inst.set->size()), bound, kSieveSlack);
        return r;
    }
    BoundReport r;
    r.quantity = std::move(quantity);
    r.rhs = bound;
    r.note = "no set supplied";
    return r;
}

}  // namespace

ThetaConstant theta(std::uint64_t k, unsigned m)
{
    if (k < 2) throw std::invalid_argument("theta needs k >= 2");
    ThetaConstant t{k, m, 0};
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (std::gcd(i, k) != 1) continue;
        t.value += boost::multiprecision::pow(BigInt(std::gcd(i - 1, k)), m);
    }
    return t;
}

SieveInstance SieveInstance::from_set(std::uint64_t N, std::vector<std::uint64_t> set, const std::vector<std::uint64_t>& primes,
                                      unsigned workers)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && (set.front() < 1 || set.back() > N)) throw std::invalid_argument("sieve set must lie in [1, N]");
    require_primes(primes);
    std::vector<std::uint64_t> sizes(primes.size());
    parallel_for(primes.size(), workers, [&](std::size_t i) { sizes[i] = image_size(set, primes[i]); });
    SieveInstance inst;
    inst.N = N;
    for (std::size_t i = 0; i < primes.size(); ++i) inst.images[primes[i]] = sizes[i];
    inst.set = std::move(set);
    return inst;
}

SieveInstance SieveInstance::from_images(std::uint64_t N, std::map<std::uint64_t, std::uint64_t> images)
{
    for (const auto& [p, size] : images) {
        if (!is_prime(p)) throw std::invalid_argument("sieve moduli must be primes");
        if (size < 1 || size > p) throw std::invalid_argument("image size must lie in [1, p]");
    }
    SieveInstance inst;
    inst.N = N;
    inst.images = std::move(images);
    return inst;
}

BoundReport gallagher_bound(const SieveInstance& inst, std::uint64_t Q)
{
    if (Q <= 1 || Q > inst.N) throw std::invalid_argument("gallagher bound needs 1 < Q <= N");
    const double log_n = std::log(static_cast<double>(inst.N));
    double numerator = -log_n;
    double denominator = -log_n;
    for (const auto& [p, size] : inst.images) {
        if (p > Q) continue;
        if (size == 0) throw std::invalid_argument("empty residue image");
        const double lp = std::log(static_cast<double>(p));
        numerator += lp;
        denominator += lp / static_cast<double>(size);
    }
    const std::string quantity = "|A| <= Gallagher larger sieve bound";
    if (denominator <= 0.0) {
        BoundReport r;
        r.quantity = quantity;
        if (inst.set) r.lhs = static_cast<double>(inst.set->size());
        r.verdict = Verdict::NotApplicable;
        std::ostringstream note;
        note << "denominator " << denominator << " is not positive";
        r.note = note.str();
        return r;
    }
    return compare_with_set(inst, quantity, numerator / denominator);
}

BoundReport croot_elsholtz_bound(const SieveInstance& inst, std::uint64_t Q)
{
    if (Q <= 1 || Q > inst.N) throw std::invalid_argument("croot-elsholtz bound needs 1 < Q <= N");
    double over_p = 0.0;
    double over_image = 0.0;
    for (const auto& [p, size] : inst.images) {
        if (p < 2 || p > Q) throw std::invalid_argument("croot-elsholtz bound needs every prime in [2, Q]");
        if (size == 0) throw std::invalid_argument("empty residue image");
        const double lp = std::log(static_cast<double>(p));
        over_p += lp / static_cast<double>(p);
        over_image += lp / static_cast<double>(size);
    }
    const double sieve = 23.0 * static_cast<double>(inst.N) * std::exp(over_p - over_image);
    return compare_with_set(inst, "|A| <= Croot-Elsholtz bound", std::max(static_cast<double>(Q), sieve));
}

ResidueImages residue_images(const std::vector<std::uint64_t>& set, const std::vector<std::uint64_t>& primes,
                             std::uint64_t m, std::optional<std::int64_t> n, unsigned workers)
{
    require_primes(primes);
    std::vector<std::uint64_t> sorted_primes = primes;
    std::sort(sorted_primes.begin(), sorted_primes.end());
    sorted_primes.erase(std::unique(sorted_primes.begin(), sorted_primes.end()), sorted_primes.end());

    std::vector<std::uint64_t> sizes(sorted_primes.size());
    std::vector<char> zero(sorted_primes.size(), 0);
    parallel_for(sorted_primes.size(), workers, [&](std::size_t i) {
        const auto p = sorted_primes[i];
        sizes[i] = image_size(set, p);
        zero[i] = std::any_of(set.begin(), set.end(), [p](std::uint64_t a) { return a % p == 0; });
    });

    ResidueImages out;
    for (std::size_t i = 0; i < sorted_primes.size(); ++i) {
        const auto p = sorted_primes[i];
        out.sizes[p] = sizes[i];
        const bool small = sizes[i] < m;
        const bool divides = n && (static_cast<std::uint64_t>(*n < 0 ? -*n : *n) % p == 0);
        if (small) out.small_image.push_back(p);
        if (zero[i]) out.hits_zero.push_back(p);
        if (divides) out.divides_n.push_back(p);
        if (!small && !zero[i] && !divides) out.remainder.push_back(p);
    }
    return out;
}

MertensSum mertens_log_sum(const std::vector<std::uint64_t>& primes)
{
    require_primes(primes);
    MertensSum out;
    for (auto p : primes) out.sum += std::log(static_cast<double>(p)) / static_cast<double>(p);
    out.bound_ratio = out.sum / std::log(static_cast<double>(primes.size()) + 2.0);
    return out;
}

LinnikForm linnik_form(std::uint64_t q, double x, double c, double L)
{
    if (q < 1) throw std::invalid_argument("modulus must be >= 1");
    LinnikForm out;
    out.applicable = x >= std::pow(static_cast<double>(q), L);
    out.lower = c * x / (static_cast<double>(euler_phi(q)) * std::sqrt(static_cast<double>(q)));
    return out;
}

}  // namespace dtup
