// incidence-lab: experiments on exact point-plane incidences over F_p and
// their image as line-line intersections in star space.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "inclab/constructions.hpp"
#include "inclab/counting.hpp"
#include "inclab/io.hpp"
#include "inclab/surfaces.hpp"
#include "inclab/transform.hpp"

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inclab::PrimeField field_from_flag(std::int64_t p) {
    if (p < 5 || p > INT32_MAX) throw UsageError("--field must be a prime in [5, 2^31)");
    try {
        return inclab::PrimeField(std::uint32_t(p));
    } catch (const inclab::NonPrimeField& e) {
        throw UsageError(e.what());
    }
}

unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("INCIDENCE_LAB_THREADS");
    if (!env) return hw;
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("INCIDENCE_LAB_THREADS must be an integer >= 1");
    unsigned long v = std::strtoul(s.c_str(), nullptr, 10);
    if (v < 1) throw UsageError("INCIDENCE_LAB_THREADS must be an integer >= 1");
    return unsigned(std::min<unsigned long>(v, 1024));
}

// Round to 6 significant digits so reports are portable across platforms.
double sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

ordered_json report_json(std::uint32_t field, std::uint64_t seed, std::uint64_t points,
                         std::uint64_t planes, const inclab::IncidenceReport& rep) {
    ordered_json j;
    j["field"] = field;
    j["seed"] = seed;
    j["sizes"] = {{"points", points}, {"planes", planes}};
    j["incidences"] = rep.incidences;
    if (rep.intersections)
        j["intersections"] = *rep.intersections;
    else
        j["intersections"] = nullptr;
    j["max_collinear"] = rep.max_collinear;
    j["best_s"] = rep.best_s;
    j["best_t"] = rep.best_t;
    j["rhs"] = sig6(rep.rhs);
    j["ratio"] = sig6(rep.ratio);
    j["warnings"] = rep.warnings;
    return j;
}

std::string report_csv(std::uint32_t field, std::uint64_t seed, std::uint64_t points,
                       std::uint64_t planes, const inclab::IncidenceReport& rep) {
    std::string warn;
    for (const std::string& w : rep.warnings) {
        if (!warn.empty()) warn += ';';
        warn += w;
    }
    std::string out =
        "field,seed,points,planes,incidences,intersections,max_collinear,best_s,best_t,rhs,"
        "ratio,warnings\n";
    out += std::to_string(field) + ',' + std::to_string(seed) + ',' + std::to_string(points) +
           ',' + std::to_string(planes) + ',' + std::to_string(rep.incidences) + ',' +
           (rep.intersections ? std::to_string(*rep.intersections) : std::string()) + ',' +
           std::to_string(rep.max_collinear) + ',' + std::to_string(rep.best_s) + ',' +
           std::to_string(rep.best_t) + ',' + fmt6(rep.rhs) + ',' + fmt6(rep.ratio) + ",\"" +
           warn + "\"\n";
    return out;
}

void emit_report(const std::string& format, std::uint32_t field, std::uint64_t seed,
                 std::uint64_t points, std::uint64_t planes, const inclab::IncidenceReport& rep) {
    if (format == "csv")
        std::cout << report_csv(field, seed, points, planes, rep);
    else
        std::cout << report_json(field, seed, points, planes, rep).dump() << "\n";
}

int run_verify_lemma(std::int64_t field_char, std::uint64_t trials, std::uint64_t seed) {
    inclab::PrimeField field = field_from_flag(field_char);
    unsigned threads = std::max(1u, std::min<unsigned>(thread_cap(), trials ? unsigned(std::min<std::uint64_t>(trials, 64)) : 1));

    std::vector<std::uint64_t> failures(threads, 0);
    auto worker = [&](unsigned tid) {
        std::uint64_t local = 0;
        for (std::uint64_t i = tid; i < trials; i += threads) {
            inclab::SplitMix64 rng = inclab::substream(seed, i);
            inclab::Point3 p = {field.sample_nonzero(rng), field.sample(rng), field.sample(rng)};
            inclab::Fe a = field.sample(rng), b = field.sample(rng);
            inclab::Fe c = field.sample_nonzero(rng), d = field.sample(rng);
            inclab::Plane3 q(a, b, c, d);
            bool incident = inclab::point_on_plane(p, q);
            bool meets =
                inclab::line_line_intersection(inclab::phi(p), inclab::psi(q)).has_value();
            if (incident != meets) ++local;
        }
        failures[tid] = local;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (std::thread& t : pool) t.join();

    std::uint64_t total = 0;
    for (std::uint64_t f : failures) total += f;
    ordered_json j;
    j["field"] = field.modulus();
    j["seed"] = seed;
    j["trials"] = trials;
    j["failures"] = total;
    j["ok"] = (total == 0);
    std::cout << j.dump() << "\n";
    return total == 0 ? 0 : 5;
}

int run_transform(const std::string& input, std::uint64_t seed, int retries) {
    inclab::Instance inst = inclab::parse_instance_file(input);
    inclab::SplitMix64 rng(seed);
    inclab::GenericInstance generic =
        inclab::genericize(inst.points(), inst.planes(), rng, retries);
    std::cout << "F " << inst.field().modulus() << "\n";
    std::cout << "# phi images of the " << generic.points.size() << " points\n";
    for (const inclab::Point3& p : generic.points)
        std::cout << inclab::format_line(inclab::phi(p)) << "\n";
    std::cout << "# psi images of the " << generic.planes.size() << " planes\n";
    for (const inclab::Plane3& q : generic.planes)
        std::cout << inclab::format_line(inclab::psi(q)) << "\n";
    return 0;
}

int run_experiment(const std::string& kind, std::int64_t field_char, std::uint64_t seed,
                   std::uint64_t k, std::uint64_t n, std::uint64_t a, std::uint64_t b,
                   std::uint64_t points, std::uint64_t planes, const std::string& format,
                   int retries) {
    inclab::PrimeField field = field_from_flag(field_char);
    inclab::SplitMix64 rng(inclab::mix64(seed));

    if (kind == "regulus") {
        auto [L, M] = inclab::regulus_instance(a, b, field, seed);
        std::uint64_t crossings = inclab::count_line_intersections(L, M);
        auto profile = inclab::quadric_richness(L, M);
        inclab::Thresholds th = inclab::best_thresholds_pairs(profile, L.size(), M.size());
        ordered_json j;
        j["field"] = field.modulus();
        j["seed"] = seed;
        j["sizes"] = {{"l_lines", L.size()}, {"m_lines", M.size()}};
        j["intersections"] = crossings;
        j["best_s"] = th.s;
        j["best_t"] = th.t;
        j["rhs"] = sig6(th.rhs);
        j["ratio"] = sig6(th.rhs > 0 ? double(crossings) / th.rhs : 0.0);
        std::cout << j.dump() << "\n";
        return 0;
    }

    inclab::Instance inst = [&] {
        if (kind == "rich-line") return inclab::rich_line_instance(k, n, field, seed);
        if (kind == "random") return inclab::random_instance(points, planes, field, seed);
        if (kind == "random-no-rich-lines")
            return inclab::random_no_rich_lines_instance(points, planes, field, seed);
        throw UsageError("unknown construction kind '" + kind + "'");
    }();
    inclab::IncidenceReport rep = inclab::report(inst, rng, retries);
    emit_report(format, field.modulus(), seed, inst.points().size(), inst.planes().size(), rep);
    return 0;
}

int run_extremal(const std::string& kind, std::int64_t field_char, std::uint64_t seed,
                 std::uint64_t k, std::uint64_t n, std::uint64_t a, std::uint64_t b) {
    inclab::PrimeField field = field_from_flag(field_char);
    ordered_json j;
    bool ok;
    if (kind == "rich-line") {
        inclab::Instance inst = inclab::rich_line_instance(k, n, field, seed);
        std::uint64_t got = inclab::count_incidences(inst);
        std::uint64_t expected = (k - 1) * n;
        ok = (got == expected);
        j["incidences"] = got;
        j["expected"] = expected;
        j["ok"] = ok;
    } else if (kind == "regulus") {
        auto [L, M] = inclab::regulus_instance(a, b, field, seed);
        std::uint64_t got = inclab::count_line_intersections(L, M);
        std::uint64_t expected = a * b;
        ok = (got == expected);
        j["intersections"] = got;
        j["expected"] = expected;
        j["ok"] = ok;
    } else {
        throw UsageError("extremal kind must be rich-line or regulus");
    }
    std::cout << j.dump() << "\n";
    return ok ? 0 : 5;
}

int run_bound(const std::string& input, std::uint64_t seed, const std::string& format) {
    inclab::Instance inst = inclab::parse_instance_file(input);
    inclab::IncidenceReport rep = inclab::bound_report(inst);
    emit_report(format, inst.field().modulus(), seed, inst.points().size(),
                inst.planes().size(), rep);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact point-plane incidence experiments over prime fields"};
    app.require_subcommand(1);

    std::int64_t field_char = 101;
    std::uint64_t seed = 0;
    std::uint64_t trials = 10000;
    std::uint64_t k = 3, n = 1, a = 1, b = 1, points = 0, planes = 0;
    std::string kind, input, format = "json";
    int retries = 100;

    CLI::App* verify = app.add_subcommand("verify-lemma",
                                          "check incidence <=> intersection on random pairs");
    verify->add_option("--field", field_char, "prime field characteristic");
    verify->add_option("--trials", trials, "number of random pairs");
    verify->add_option("--seed", seed, "RNG seed");

    CLI::App* transform = app.add_subcommand("transform",
                                             "genericize an instance and emit its phi/psi lines");
    transform->add_option("--input", input, "instance file")->required();
    transform->add_option("--seed", seed, "RNG seed");
    transform->add_option("--retries", retries, "generic-position retry budget");

    CLI::App* experiment = app.add_subcommand("experiment",
                                              "generate a construction and report its counts");
    experiment->add_option("--kind", kind, "rich-line | regulus | random | random-no-rich-lines")
        ->required();
    experiment->add_option("--field", field_char, "prime field characteristic");
    experiment->add_option("--seed", seed, "RNG seed");
    experiment->add_option("--k", k, "rich-line: forbidden collinearity (k-1 points used)");
    experiment->add_option("--n", n, "rich-line: number of planes");
    experiment->add_option("--a", a, "regulus: lines in the first ruling");
    experiment->add_option("--b", b, "regulus: lines in the second ruling");
    experiment->add_option("--points", points, "random: number of points");
    experiment->add_option("--planes", planes, "random: number of planes");
    experiment->add_option("--format", format, "json | csv");
    experiment->add_option("--retries", retries, "generic-position retry budget");

    CLI::App* extremal = app.add_subcommand("extremal",
                                            "build an extremal construction and assert its count");
    extremal->add_option("--kind", kind, "rich-line | regulus")->required();
    extremal->add_option("--field", field_char, "prime field characteristic");
    extremal->add_option("--seed", seed, "RNG seed");
    extremal->add_option("--k", k, "rich-line: forbidden collinearity");
    extremal->add_option("--n", n, "rich-line: number of planes");
    extremal->add_option("--a", a, "regulus: lines in the first ruling");
    extremal->add_option("--b", b, "regulus: lines in the second ruling");

    CLI::App* bound = app.add_subcommand("bound",
                                         "evaluate the incidence bound on an instance file");
    bound->add_option("--input", input, "instance file")->required();
    bound->add_option("--seed", seed, "reported seed (no randomness used)");
    bound->add_option("--format", format, "json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
        if (verify->parsed()) return run_verify_lemma(field_char, trials, seed);
        if (transform->parsed()) return run_transform(input, seed, retries);
        if (experiment->parsed())
            return run_experiment(kind, field_char, seed, k, n, a, b, points, planes, format,
                                  retries);
        if (extremal->parsed()) return run_extremal(kind, field_char, seed, k, n, a, b);
        if (bound->parsed()) return run_bound(input, seed, format);
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const inclab::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const inclab::GenericPositionFailure& e) {
        std::cerr << "generic position failure: " << e.what() << "\n";
        return 4;
    } catch (const inclab::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const inclab::InternalCheckFailure& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
