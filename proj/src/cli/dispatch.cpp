#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "serialize.hpp"

namespace dtup::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Output {
    Json inputs = Json::object();
    Json result;
    bool exhaustive = true;
    bool failed = false;     // a checked inequality or property failed
    bool cacheable = false;  // expensive searches only
    std::optional<Json> cached;  // envelope served from the cache
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ------------------------------------------------------------ flag parsing

std::uint64_t parse_u64(const std::string& text)
{
    const i128 v = parse_i128(text);
    if (v < 0 || v > static_cast<i128>(kMaxElement)) throw UsageError("value out of range: " + text);
    return static_cast<std::uint64_t>(v);
}

std::int64_t parse_i64(const std::string& text)
{
    const i128 v = parse_i128(text);
    if (v < -static_cast<i128>(kMaxElement) || v > static_cast<i128>(kMaxElement)) {
        throw UsageError("value out of range: " + text);
    }
    return static_cast<std::int64_t>(v);
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<std::uint64_t> parse_set(const std::string& text)
{
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    for (const auto& part : split(text, ',')) out.push_back(parse_u64(part));
    return out;
}

std::vector<std::int64_t> parse_signed_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_i64(part));
    return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError("range must look like lo:hi");
    return {parse_u64(parts[0]), parse_u64(parts[1])};
}

std::array<std::int64_t, 4> parse_four(const std::string& text)
{
    const auto v = parse_signed_list(text);
    if (v.size() != 4) throw UsageError("expected four comma-separated integers");
    return {v[0], v[1], v[2], v[3]};
}

Shift parse_shift(const std::string& text)
{
    const auto n = parse_i64(text);
    if (n == 0) throw UsageError("shift n must be nonzero");
    return Shift(n);
}

// Power target flags shared by several subcommands.
struct TargetFlags {
    unsigned k = 0;
    unsigned d = 0;
    bool any = false;
    unsigned cap = 0;

    void add(CLI::App* cmd)
    {
        cmd->add_option("--k", k, "exact exponent k >= 2");
        cmd->add_option("--d", d, "exponents 2..d");
        cmd->add_flag("--any", any, "any perfect power");
        cmd->add_option("--cap", cap, "largest exponent tried with --any (default: enough for the inputs)");
    }

    PowerTarget resolve(std::uint64_t max_element, const Shift& n) const
    {
        const int chosen = (k != 0) + (d != 0) + any;
        if (chosen != 1) throw UsageError("give exactly one of --k, --d, --any");
        if (k != 0) return PowerTarget::exact(k);
        if (d != 0) return PowerTarget::up_to(d);
        return cap != 0 ? PowerTarget::any(ExponentCap(cap)) : PowerTarget::any_for(max_element, n);
    }

    Json echo() const
    {
        if (k != 0) return {{"kind", "exact"}, {"k", k}};
        if (d != 0) return {{"kind", "up_to"}, {"d", d}};
        return {{"kind", "any"}, {"cap", cap == 0 ? Json(nullptr) : Json(cap)}};
    }
};

std::vector<std::uint64_t> vertices_from(const std::string& range, const std::string& set)
{
    if (!range.empty() && !set.empty()) throw UsageError("give --range or --set, not both");
    if (!range.empty()) {
        const auto [lo, hi] = parse_range(range);
        if (lo < 1) throw UsageError("range must start at 1 or later");
        return integer_range(lo, hi);
    }
    if (set.empty()) throw UsageError("give --range or --set");
    return normalize_set(parse_set(set));
}

std::uint64_t max_of(const std::vector<std::uint64_t>& v) { return v.empty() ? 1 : *std::max_element(v.begin(), v.end()); }

bool report_failed(const BoundReport& r) { return r.failed(); }

// ----------------------------------------------------------- subcommands

struct Context {
    RunConfig config;
    std::function<std::optional<Json>(const Json&)> lookup = [](const Json&) { return std::optional<Json>{}; };
    std::chrono::milliseconds timeout() const { return std::chrono::milliseconds(config.timeout_seconds * 1000); }
};

using Handler = std::function<Output(const Context&)>;

Handler add_verify(CLI::App& app)
{
    auto* cmd = app.add_subcommand("verify", "check D_k(n), D_<=d(n), D_<=inf(n) or BD_k(n) for explicit sets");
    struct Flags {
        std::string set, b_set, n;
        TargetFlags target;
        bool pair_count = false;
        bool robust = false;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--set", f->set, "comma list A")->required();
    cmd->add_option("--b", f->b_set, "comma list B: check BD_k(n) on A x B");
    cmd->add_option("--n", f->n, "shift")->required();
    cmd->add_flag("--pair-count", f->pair_count, "count qualifying pairs against the pair-count bound (needs --k)");
    cmd->add_flag("--robust", f->robust, "count qualifying pairs and their density (needs --k)");
    f->target.add(cmd);
    return [f](const Context&) {
        Output out;
        const Shift n = parse_shift(f->n);
        auto a = parse_set(f->set);
        out.inputs = {{"set", a}, {"n", n.value()}, {"target", f->target.echo()}};
        if (f->pair_count || f->robust || !f->b_set.empty()) {
            if (f->target.k == 0 || f->target.d != 0 || f->target.any) throw UsageError("this mode needs --k only");
        }
        if (f->pair_count) {
            out.inputs["mode"] = "pair-count";
            const auto r = pair_count_check(a, n, f->target.k);
            out.result = to_json(r);
            out.failed = report_failed(r.report);
        } else if (f->robust) {
            out.inputs["mode"] = "robust";
            out.result = to_json(robust_pair_count(a, n, f->target.k));
        } else if (!f->b_set.empty()) {
            auto b = parse_set(f->b_set);
            out.inputs["mode"] = "bipartite";
            out.inputs["b"] = b;
            const auto r = verify_bipartite(a, b, n, f->target.k);
            out.result = to_json(r);
            out.failed = !r.holds;
        } else {
            out.inputs["mode"] = "tuple";
            const auto r = verify_tuple(a, n, f->target.resolve(max_of(a), n));
            out.result = to_json(r);
            out.failed = !r.holds;
        }
        return out;
    };
}

Handler add_clique(CLI::App& app)
{
    auto* cmd = app.add_subcommand("clique", "maximum tuple (clique) or bipartite t over a vertex set");
    struct Flags {
        std::string range, set, b_range, n, rule = "smallest";
        TargetFlags target;
        std::uint32_t color = 0;
        std::size_t biclique_s = 0;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--range", f->range, "vertices lo:hi");
    cmd->add_option("--set", f->set, "vertices as a comma list");
    cmd->add_option("--n", f->n, "shift")->required();
    cmd->add_option("--color", f->color, "search inside one edge colour");
    cmd->add_option("--rule", f->rule, "edge colouring: smallest or v25")->check(CLI::IsMember({"smallest", "v25"}));
    cmd->add_option("--biclique-s", f->biclique_s, "largest t with |A| = s instead of a clique (needs --k)");
    cmd->add_option("--b-range", f->b_range, "B-side range lo:hi for --biclique-s (default: same as --range)");
    f->target.add(cmd);
    return [f](const Context& ctx) {
        Output out;
        out.cacheable = true;
        const Shift n = parse_shift(f->n);
        const auto vertices = vertices_from(f->range, f->set);
        out.inputs = {{"vertices", f->range.empty() ? Json(vertices) : Json(f->range)},
                      {"n", n.value()},
                      {"target", f->target.echo()}};
        if (f->biclique_s != 0) {
            if (f->target.k == 0 || f->target.d != 0 || f->target.any) throw UsageError("--biclique-s needs --k only");
            const auto b = f->b_range.empty() ? vertices : vertices_from(f->b_range, "");
            out.inputs["s"] = f->biclique_s;
            out.inputs["b_vertices"] = f->b_range.empty() ? out.inputs["vertices"] : Json(f->b_range);
            if ((out.cached = ctx.lookup(out.inputs))) return out;
            SearchOptions opts;
            opts.timeout = ctx.timeout();
            opts.workers = ctx.config.worker_count;
            const auto r = max_biclique_t(vertices, b, n, f->target.k, f->biclique_s, opts);
            out.result = to_json(r);
            out.exhaustive = r.exhaustive;
            return out;
        }
        const auto target = f->target.resolve(max_of(vertices), n);
        const auto rule = f->rule == "v25" ? ColorRule::MergeUpTo25 : ColorRule::SmallestPrime;
        out.inputs["rule"] = f->rule;
        if (f->color != 0) out.inputs["color"] = f->color;
        if ((out.cached = ctx.lookup(out.inputs))) return out;
        const auto g = build_tuple_graph(vertices, n, target, rule, ctx.config.worker_count);
        CliqueOptions opts;
        opts.timeout = ctx.timeout();
        if (f->color != 0) opts.color = f->color;
        const auto r = max_clique(g, opts);
        out.result = to_json(r);
        out.result["edges"] = g.edge_count();
        out.exhaustive = r.exhaustive;
        return out;
    };
}

Handler add_fvalue(CLI::App& app)
{
    auto* cmd = app.add_subcommand("fvalue", "f(x), or f~(x) with --signed");
    struct Flags {
        std::uint64_t x = 0;
        bool signed_shifts = false;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--x", f->x, "x >= 1")->required();
    cmd->add_flag("--signed", f->signed_shifts, "allow negative shifts");
    return [f](const Context& ctx) {
        Output out;
        out.cacheable = true;
        out.inputs = {{"x", f->x}, {"signed", f->signed_shifts}};
        if ((out.cached = ctx.lookup(out.inputs))) return out;
        SearchOptions opts;
        opts.timeout = ctx.timeout();
        opts.workers = ctx.config.worker_count;
        const auto r = compute_f(f->x, f->signed_shifts, opts);
        out.result = to_json(r);
        out.exhaustive = r.exhaustive;
        return out;
    };
}

Handler add_cycles(CLI::App& app)
{
    auto* cmd = app.add_subcommand("cycles", "quadruples whose cyclic products plus n are p1-th / p2-th powers");
    struct Flags {
        std::string range, n;
        unsigned p1 = 0, p2 = 0;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--range", f->range, "lo:hi")->required();
    cmd->add_option("--n", f->n, "shift")->required();
    cmd->add_option("--p1", f->p1, "prime exponent of a1a2 + n and a4a1 + n")->required();
    cmd->add_option("--p2", f->p2, "prime exponent of a2a3 + n and a3a4 + n")->required();
    return [f](const Context&) {
        Output out;
        const auto [lo, hi] = parse_range(f->range);
        const Shift n = parse_shift(f->n);
        out.inputs = {{"range", f->range}, {"n", n.value()}, {"p1", f->p1}, {"p2", f->p2}};
        const auto cycles = find_power_cycles(lo, hi, n, f->p1, f->p2);
        Json list = Json::array();
        for (const auto& c : cycles) list.push_back(c);
        out.result = {{"count", cycles.size()}, {"cycles", list}};
        return out;
    };
}

Handler add_ffmodel(CLI::App& app)
{
    auto* cmd = app.add_subcommand("ffmodel", "prime-field models and character-sum checks");
    struct Flags {
        std::string op, primes, a, b;
        std::uint64_t p = 0, lambda = 0, j = 1, d = 0, k = 0;
        unsigned nu = 1;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--op", f->op, "clique, vinogradov, karatsuba, weil, cor or residues")
        ->required()
        ->check(CLI::IsMember({"clique", "vinogradov", "karatsuba", "weil", "cor", "residues"}));
    cmd->add_option("--p", f->p, "prime")->required();
    cmd->add_option("--lambda", f->lambda, "shift lambda in F_p");
    cmd->add_option("--primes", f->primes, "exponent primes for --op clique, comma list");
    cmd->add_option("--a", f->a, "set A, comma list");
    cmd->add_option("--b", f->b, "set B, comma list");
    cmd->add_option("--j", f->j, "character index");
    cmd->add_option("--d", f->d, "power for --op weil");
    cmd->add_option("--k", f->k, "power for --op cor and --op residues");
    cmd->add_option("--nu", f->nu, "nu for --op karatsuba and --op cor");
    return [f](const Context& ctx) {
        Output out;
        out.inputs = {{"op", f->op}, {"p", f->p}};
        const double tol = ctx.config.tolerance;
        if (f->op == "clique") {
            const auto primes = parse_set(f->primes);
            out.inputs["lambda"] = f->lambda;
            out.inputs["primes"] = primes;
            out.cacheable = true;
            if ((out.cached = ctx.lookup(out.inputs))) return out;
            const auto r = ff_clique_bound(f->p, f->lambda, primes, ctx.timeout());
            out.result = to_json(r);
            out.exhaustive = r.exhaustive;
            out.failed = r.report.failed();
        } else if (f->op == "residues") {
            out.inputs["k"] = f->k;
            out.result = {{"residues", power_residues(f->p, f->k)}};
        } else if (f->op == "vinogradov" || f->op == "karatsuba") {
            const auto a = parse_set(f->a);
            const auto b = parse_set(f->b);
            out.inputs.update({{"lambda", f->lambda}, {"a", a}, {"b", b}, {"j", f->j}, {"tolerance", tol}});
            const CharacterTable table(f->p);
            BoundReport r;
            if (f->op == "vinogradov") {
                r = verify_vinogradov(table, f->lambda, f->j, a, b, tol);
            } else {
                out.inputs["nu"] = f->nu;
                r = verify_karatsuba(table, f->lambda, a, b, f->nu, f->j, tol);
            }
            out.result = to_json(r);
            out.failed = r.failed();
        } else {
            const auto a = parse_set(f->a);
            out.inputs.update({{"lambda", f->lambda}, {"a", a}});
            ResidueSetReport r;
            if (f->op == "weil") {
                out.inputs["d"] = f->d;
                r = weil_model_B(f->p, f->d, f->lambda, a);
            } else {
                out.inputs.update({{"k", f->k}, {"nu", f->nu}});
                r = check_cor_kb(f->p, f->k, f->lambda, a, f->nu);
            }
            out.result = to_json(r);
            out.failed = r.report.failed();
        }
        return out;
    };
}

Handler add_sieve(CLI::App& app)
{
    auto* cmd = app.add_subcommand("sieve", "larger-sieve bounds, residue images and related sums");
    struct Flags {
        std::string op, set, primes, n;
        std::uint64_t N = 0, Q = 0, m = 0, q = 0;
        double x = 0.0, c = 1.0, L = 1.0;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--op", f->op, "gallagher, croot, images, mertens or linnik")
        ->required()
        ->check(CLI::IsMember({"gallagher", "croot", "images", "mertens", "linnik"}));
    cmd->add_option("--N", f->N, "ambient bound: the set lies in [1, N]");
    cmd->add_option("--Q", f->Q, "sieve level; primes default to all p <= Q");
    cmd->add_option("--set", f->set, "set A, comma list");
    cmd->add_option("--primes", f->primes, "primes, comma list");
    cmd->add_option("--m", f->m, "small-image threshold for --op images");
    cmd->add_option("--n", f->n, "shift for --op images");
    cmd->add_option("--q", f->q, "modulus for --op linnik");
    cmd->add_option("--x", f->x, "x for --op linnik");
    cmd->add_option("--c", f->c, "constant c for --op linnik");
    cmd->add_option("--L", f->L, "exponent L for --op linnik");
    return [f](const Context& ctx) {
        Output out;
        out.inputs = {{"op", f->op}};
        if (f->op == "linnik") {
            out.inputs.update({{"q", f->q}, {"x", f->x}, {"c", f->c}, {"L", f->L}});
            out.result = to_json(linnik_form(f->q, f->x, f->c, f->L));
            return out;
        }
        std::vector<std::uint64_t> primes = f->primes.empty() ? primes_up_to(f->Q) : parse_set(f->primes);
        out.inputs["primes"] = primes;
        if (f->op == "mertens") {
            out.result = to_json(mertens_log_sum(primes));
            return out;
        }
        const auto set = parse_set(f->set);
        out.inputs["set"] = set;
        if (f->op == "images") {
            std::optional<std::int64_t> n;
            if (!f->n.empty()) n = parse_i64(f->n);
            out.inputs["m"] = f->m;
            out.inputs["n"] = n ? Json(*n) : Json(nullptr);
            out.result = to_json(residue_images(set, primes, f->m, n, ctx.config.worker_count));
            return out;
        }
        out.inputs.update({{"N", f->N}, {"Q", f->Q}});
        const auto inst = SieveInstance::from_set(f->N, set, primes, ctx.config.worker_count);
        const auto r = f->op == "gallagher" ? gallagher_bound(inst, f->Q) : croot_elsholtz_bound(inst, f->Q);
        out.result = to_json(r);
        out.failed = r.failed();
        return out;
    };
}

Handler add_theta(CLI::App& app)
{
    auto* cmd = app.add_subcommand("theta", "theta_{k,m}");
    struct Flags {
        std::uint64_t k = 0;
        unsigned m = 0;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--k", f->k, "k >= 2")->required();
    cmd->add_option("--m", f->m, "m >= 0")->required();
    return [f](const Context&) {
        Output out;
        out.inputs = {{"k", f->k}, {"m", f->m}};
        out.result = to_json(theta(f->k, f->m));
        return out;
    };
}

Handler add_bounds(CLI::App& app)
{
    auto* cmd = app.add_subcommand("bounds", "extremal bounds, tuple constants and forbidden-subgraph checks");
    struct Flags {
        std::string op, pattern = "complete", range, shift;
        std::uint64_t n = 0, m = 0, r = 0, s = 0, t = 0, colors = 0, k = 0;
        std::optional<std::uint64_t> edges;
        double delta = 0.0;
        TargetFlags target;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--op", f->op, "turan, kst, ordered-kst, cycle, robust, constants or forbidden")
        ->required()
        ->check(CLI::IsMember({"turan", "kst", "ordered-kst", "cycle", "robust", "constants", "forbidden"}));
    cmd->add_option("--vertices", f->n, "vertex count n");
    cmd->add_option("--m", f->m, "larger side m for --op ordered-kst");
    cmd->add_option("--r", f->r, "r");
    cmd->add_option("--s", f->s, "s");
    cmd->add_option("--t", f->t, "t");
    cmd->add_option("--colors", f->colors, "number of colours for --op cycle");
    cmd->add_option("--delta", f->delta, "delta for --op robust");
    cmd->add_option("--edges", f->edges, "edge count to test against the bound (exact)");
    cmd->add_option("--tuple-k", f->k, "k for --op constants");
    cmd->add_option("--pattern", f->pattern, "complete, bipartite or cycle")
        ->check(CLI::IsMember({"complete", "bipartite", "cycle"}));
    cmd->add_option("--range", f->range, "tuple-graph vertices lo:hi for --op forbidden");
    cmd->add_option("--shift", f->shift, "tuple-graph shift for --op forbidden");
    f->target.add(cmd);
    return [f](const Context&) {
        Output out;
        out.inputs = {{"op", f->op}};
        auto admits = [&](bool ok) {
            out.result["edges"] = *f->edges;
            out.result["admits"] = ok;
            out.failed = !ok;
        };
        if (f->op == "constants") {
            out.inputs["k"] = f->k;
            out.result = to_json(constants(static_cast<unsigned>(f->k)));
        } else if (f->op == "turan") {
            out.inputs.update({{"vertices", f->n}, {"r", f->r}});
            out.result = {{"bound", rational(turan_bound(f->n, f->r))}};
            if (f->edges) admits(turan_admits(*f->edges, f->n, f->r));
        } else if (f->op == "kst") {
            out.inputs.update({{"vertices", f->n}, {"s", f->s}, {"t", f->t}});
            out.result = {{"bound", number(kst_bound(f->n, f->s, f->t))}};
            if (f->edges) admits(kst_admits(*f->edges, f->n, f->s, f->t));
        } else if (f->op == "ordered-kst") {
            out.inputs.update({{"vertices", f->n}, {"m", f->m}, {"r", f->r}, {"t", f->t}});
            out.result = {{"bound", number(ordered_kst_bound(f->n, f->m, f->r, f->t))}};
            if (f->edges) admits(ordered_kst_admits(*f->edges, f->n, f->m, f->r, f->t));
        } else if (f->op == "cycle") {
            out.inputs.update({{"vertices", f->n}, {"colors", f->colors}});
            out.result = {{"bound", number(colored_cycle_bound(f->n, f->colors))}};
            if (f->edges) admits(colored_cycle_admits(*f->edges, f->n, f->colors));
        } else if (f->op == "robust") {
            out.inputs.update({{"delta", f->delta}, {"s", f->s}, {"t", f->t}});
            out.result = {{"bound", number(robust_size_bound(f->delta, f->s, f->t))}};
        } else {
            const Shift n = parse_shift(f->shift);
            const auto vertices = vertices_from(f->range, "");
            const auto g = build_tuple_graph(vertices, n, f->target.resolve(max_of(vertices), n));
            Pattern pattern = ColoredCyclePattern{};
            if (f->pattern == "complete") pattern = CompletePattern{f->r};
            if (f->pattern == "bipartite") pattern = BipartitePattern{f->s, f->t};
            out.inputs.update({{"range", f->range}, {"shift", n.value()}, {"target", f->target.echo()}, {"pattern", f->pattern}});
            if (f->pattern == "complete") out.inputs["r"] = f->r;
            if (f->pattern == "bipartite") out.inputs.update({{"s", f->s}, {"t", f->t}});
            out.result = to_json(check_forbidden_subgraph(g, pattern));
            out.result["edges"] = g.edge_count();
        }
        return out;
    };
}

Handler add_powersums(CLI::App& app)
{
    auto* cmd = app.add_subcommand("powersums", "equal sums of like powers, or the m + n < k check with --lps");
    struct Flags {
        unsigned k = 0, terms = 2;
        std::uint64_t H = 0;
        bool lps = false;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--k", f->k, "power k >= 2")->required();
    cmd->add_option("--H", f->H, "height bound")->required();
    cmd->add_option("--terms", f->terms, "largest number of terms per side");
    cmd->add_flag("--lps", f->lps, "look for solutions with m + n < k (multisets)");
    return [f](const Context&) {
        Output out;
        out.inputs = {{"k", f->k}, {"H", f->H}, {"lps", f->lps}};
        if (f->lps) {
            const auto r = lps_desk_check(f->k, f->H);
            out.result = to_json(r);
            out.failed = !r.violations.empty();
        } else {
            out.inputs["terms"] = f->terms;
            const auto sols = equal_power_sums(f->k, f->terms, f->H);
            Json list = Json::array();
            for (const auto& s : sols) list.push_back(to_json(s));
            out.result = {{"count", sols.size()}, {"solutions", list}};
        }
        return out;
    };
}

Handler add_construct(CLI::App& app)
{
    auto* cmd = app.add_subcommand("construct", "greedy distinct-factor rows, singular matrix and ratio checks");
    struct Flags {
        std::string op, stream = "uniform", shift = "1", b, c;
        std::uint64_t seed = 1, lo = 2, hi = 1000000, u = 0, v = 0, x_limit = 1000;
        std::size_t length = 1000;
        unsigned k = 2;
    };
    auto f = std::make_shared<Flags>();
    cmd->add_option("--op", f->op, "greedy, singular or ratio")->required()->check(CLI::IsMember({"greedy", "singular", "ratio"}));
    cmd->add_option("--stream", f->stream, "uniform, monotone or genuine")
        ->check(CLI::IsMember({"uniform", "monotone", "genuine"}));
    cmd->add_option("--seed", f->seed, "seed for synthetic streams");
    cmd->add_option("--length", f->length, "rows in a synthetic stream, or most rows of a genuine one");
    cmd->add_option("--lo", f->lo, "lower value (synthetic) or first t (ratio)");
    cmd->add_option("--hi", f->hi, "upper value (synthetic) or last t (ratio)");
    cmd->add_option("--u", f->u, "u");
    cmd->add_option("--v", f->v, "v");
    cmd->add_option("--shift", f->shift, "shift n");
    cmd->add_option("--k", f->k, "power for a genuine stream");
    cmd->add_option("--x-limit", f->x_limit, "largest x walked by a genuine stream");
    cmd->add_option("--b", f->b, "b_1..b_4 for --op singular");
    cmd->add_option("--c", f->c, "c_1..c_4 for --op singular");
    return [f](const Context&) {
        Output out;
        out.inputs = {{"op", f->op}};
        const Shift n = parse_shift(f->shift);
        if (f->op == "singular") {
            const auto b = parse_four(f->b);
            const auto c = parse_four(f->c);
            out.inputs.update({{"u", f->u}, {"v", f->v}, {"shift", n.value()}, {"b", b}, {"c", c}});
            const auto m = value_matrix(f->u, f->v, n, b, c);
            const auto r = singular_check(m);
            out.result = to_json(r);
            out.result["matrix"] = to_json(m);
            out.failed = !r.singular;
            return out;
        }
        if (f->op == "ratio") {
            out.inputs.update({{"u", f->u}, {"v", f->v}, {"shift", n.value()}, {"lo", f->lo}, {"hi", f->hi}});
            const auto r = ratio_monotone(f->u, f->v, n, f->lo, f->hi);
            out.result = to_json(r);
            out.failed = !r.monotone;
            return out;
        }
        std::vector<StreamRow> stream;
        out.inputs["stream"] = f->stream;
        if (f->stream == "genuine") {
            out.inputs.update({{"u", f->u}, {"v", f->v}, {"shift", n.value()}, {"k", f->k}, {"x_limit", f->x_limit},
                               {"length", f->length}});
            stream = genuine_stream(f->u, f->v, n, f->k, f->x_limit, f->length);
        } else {
            out.inputs.update({{"seed", f->seed}, {"length", f->length}, {"lo", f->lo}, {"hi", f->hi}});
            const auto kind = f->stream == "uniform" ? StreamKind::Uniform : StreamKind::Monotone;
            stream = synthetic_stream(kind, f->seed, f->length, f->lo, f->hi);
        }
        try {
            const auto r = greedy_distinct_rows(stream);
            out.result = to_json(r);
            bool ledgers_ok = true;
            for (const auto& l : r.ledgers) {
                ledgers_ok &= l.factor_count <= kMaxLedgerFactors && l.quotients_above_one <= kMaxLedgerQuotients;
            }
            out.failed = !r.four_factors_distinct() || !ledgers_ok;
        } catch (const StreamExhausted& e) {
            out.result = to_json(e.progress());
        }
        return out;
    };
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& args)
{
    CLI::App app{"Diophantine tuple toolkit", "dtup"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Context ctx;
    std::string config_file;
    std::optional<std::int64_t> timeout;
    std::optional<unsigned> workers;
    std::optional<std::string> cache_dir;
    std::optional<double> tolerance;
    std::optional<std::string> output;
    bool no_cache = false;
    app.add_option("--config", config_file, "key=value configuration file");
    app.add_option("--timeout", timeout, "search timeout in seconds");
    app.add_option("--workers", workers, "worker threads");
    app.add_option("--cache-dir", cache_dir, "result cache directory");
    app.add_option("--tolerance", tolerance, "absolute tolerance for floating-point bounds");
    app.add_option("--output", output, "output file, - for standard output");
    app.add_flag("--no-cache", no_cache, "bypass the result cache");

    std::map<std::string, Handler> handlers;
    handlers["verify"] = add_verify(app);
    handlers["clique"] = add_clique(app);
    handlers["fvalue"] = add_fvalue(app);
    handlers["cycles"] = add_cycles(app);
    handlers["ffmodel"] = add_ffmodel(app);
    handlers["sieve"] = add_sieve(app);
    handlers["theta"] = add_theta(app);
    handlers["bounds"] = add_bounds(app);
    handlers["powersums"] = add_powersums(app);
    handlers["construct"] = add_construct(app);

    CommandOutcome outcome;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        outcome.exit_code = code == 0 ? kOk : kUsage;
        outcome.message = code == 0 ? out.str() : err.str();
        return outcome;
    }

    std::string name;
    for (const auto* sub : app.get_subcommands()) name = sub->get_name();

    try {
        if (!config_file.empty()) ctx.config = load_config_file(config_file, ctx.config);
        apply_environment(ctx.config);
        if (timeout) ctx.config.timeout_seconds = *timeout;
        if (workers) ctx.config.worker_count = *workers;
        if (cache_dir) ctx.config.cache_dir = *cache_dir;
        if (tolerance) ctx.config.tolerance = *tolerance;
        if (output) ctx.config.output = *output;
        ctx.config.validate();
    } catch (const std::exception& e) {
        outcome.exit_code = kUsage;
        outcome.message = e.what();
        return outcome;
    }

    std::optional<ResultCache> cache;
    if (!no_cache && !ctx.config.cache_dir.empty()) {
        try {
            cache.emplace(ctx.config.cache_dir);
        } catch (const std::filesystem::filesystem_error& e) {
            outcome.message += std::string("cache disabled: ") + e.what() + "\n";
        }
    }
    if (cache) {
        ctx.lookup = [&](const Json& inputs) { return cache->lookup(cache_key(name, inputs)); };
    }
    outcome.output = ctx.config.output;

    const auto start = Clock::now();
    Output out;
    try {
        out = handlers.at(name)(ctx);
    } catch (const std::invalid_argument& e) {
        outcome.exit_code = kUsage;
        outcome.message = e.what();
        return outcome;
    } catch (const std::out_of_range& e) {
        outcome.exit_code = kUsage;
        outcome.message = e.what();
        return outcome;
    } catch (const std::length_error& e) {
        outcome.exit_code = kUsage;
        outcome.message = e.what();
        return outcome;
    }

    if (cache) {
        for (const auto& w : cache->warnings()) outcome.message += w + "\n";
    }
    if (out.cached) {
        outcome.envelope = *out.cached;
        const bool exhaustive = outcome.envelope.value("exhaustive", true);
        outcome.exit_code = exhaustive ? kOk : kTimeout;
        const Json& result = outcome.envelope["result"];
        if (exhaustive && result.contains("report") && result["report"].value("verdict", "") == to_string(Verdict::Fails)) {
            outcome.exit_code = kVerdictFailure;
        }
        return outcome;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    Json envelope{{"command", name},
                  {"inputs", out.inputs},
                  {"result", out.result},
                  {"exhaustive", out.exhaustive},
                  {"elapsed_ms", elapsed},
                  {"version", kVersion}};
    if (cache && out.cacheable && out.exhaustive) cache->store(cache_key(name, out.inputs), envelope);
    outcome.envelope = std::move(envelope);
    outcome.exit_code = !out.exhaustive ? kTimeout : (out.failed ? kVerdictFailure : kOk);
    return outcome;
}

int main_entry(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = run_command(args);
    if (!outcome.message.empty()) (outcome.envelope.is_null() && outcome.exit_code == kOk ? std::cout : std::cerr) << outcome.message << "\n";
    if (outcome.envelope.is_null()) return outcome.exit_code;

    const std::string& target = outcome.output;
    const std::string text = outcome.envelope.dump(2) + "\n";
    if (target == "-") {
        std::cout << text;
    } else {
        std::ofstream out(target, std::ios::trunc);
        out << text;
        if (!out) {
            std::cerr << "cannot write " << target << "\n";
            return kUsage;
        }
    }
    return outcome.exit_code;
}

}  // namespace dtup::cli
