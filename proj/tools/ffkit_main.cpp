#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffkit/elliptic.hpp"
#include "ffkit/fermat.hpp"
#include "ffkit/galois.hpp"
#include "ffkit/metricgeom.hpp"
#include "ffkit/modarith.hpp"
#include "ffkit/polyring.hpp"
#include "ffkit/report.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::string out = ".";
    std::string format = "json";
    int jobs = 1;
    bool diff = false;
};

std::filesystem::path modulus_cache_path(const GlobalOptions& g) {
    if (const char* env = std::getenv("FFKIT_MODULUS_CACHE"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::filesystem::path(g.out) / "modulus_cache.json";
}

ffkit::FieldPtr make_field_cached(const GlobalOptions& g, std::int64_t p, std::size_t n) {
    ffkit::ModulusCache cache(modulus_cache_path(g));
    ffkit::FieldPtr field = ffkit::Field::make(p, n, &cache);
    cache.save();
    return field;
}

void finish(const GlobalOptions& g, ffkit::ReportEnvelope& envelope) {
    envelope.include_timestamp = !g.diff;
    envelope.config["format"] = g.format;
    auto written = ffkit::emit_report(envelope, g.out,
                                      ffkit::report_format_from_name(g.format));
    for (const auto& path : written) std::cout << "wrote " << path.string() << "\n";
}

std::vector<std::int64_t> parse_coeffs(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            out.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--coeffs", "expected integers A,B,C,D");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != 4) {
        throw CLI::ValidationError("--coeffs", "expected exactly four integers A,B,C,D");
    }
    return out;
}

ffkit::Metric parse_metric(const std::string& name) {
    if (name == "euclidean") return ffkit::Metric::euclidean();
    if (name == "taxicab") return ffkit::Metric::taxicab();
    if (name == "chebyshev") return ffkit::Metric::chebyshev();
    if (name.rfind("pnorm:", 0) == 0) {
        return ffkit::Metric::pnorm(ffkit::Rational(name.substr(6)));
    }
    throw CLI::ValidationError("--metric",
                               "expected euclidean|taxicab|chebyshev|pnorm:<r>, got " + name);
}

std::vector<ffkit::PlanePoint> parse_points(const std::string& text) {
    std::vector<ffkit::PlanePoint> pts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string part = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
        std::size_t comma = part.find(',');
        if (comma == std::string::npos) {
            throw CLI::ValidationError("--points", "expected x,y;x,y;x,y");
        }
        try {
            pts.push_back({ffkit::Rational(part.substr(0, comma)),
                           ffkit::Rational(part.substr(comma + 1))});
        } catch (const std::exception&) {
            throw CLI::ValidationError("--points", "coordinates must be rationals like 3 or 3/4");
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (pts.size() != 3) {
        throw CLI::ValidationError("--points", "expected exactly three points");
    }
    return pts;
}

std::string rational_text(const ffkit::Rational& r) { return r.str(); }

// ---------------------------------------------------------------------------

void run_field_table(const GlobalOptions& g, std::int64_t p, std::size_t n) {
    // Bound check before any construction or cache write.
    std::int64_t q_bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (p <= 0 || q_bound > 256 / p) {
            q_bound = 257;
            break;
        }
        q_bound *= p;
    }
    if (q_bound > 256) {
        throw ffkit::BoundError("FieldTooLarge", "tables are emitted in full; q <= 256 required");
    }
    ffkit::FieldPtr field = make_field_cached(g, p, n);
    const std::int64_t q = field->q();
    std::vector<ffkit::GFElement> elems;
    for (std::int64_t i = 0; i < q; ++i) elems.push_back(field->element(i));

    ffkit::ReportEnvelope env;
    env.command = "field table";
    env.slug = "field_table";
    env.config = {{"p", p}, {"n", n}};
    env.csv_columns = {"op", "row", "col", "result", "result_text"};

    bool latin_add = true, latin_mul = true;
    for (const char* op : {"add", "mul"}) {
        bool mul = (op[0] == 'm');
        // Multiplication restricted to nonzero rows/cols for the Latin check.
        std::vector<char> seen;
        for (std::int64_t i = 0; i < q; ++i) {
            seen.assign(static_cast<std::size_t>(q), 0);
            for (std::int64_t j = 0; j < q; ++j) {
                ffkit::GFElement r = mul ? elems[i] * elems[j] : elems[i] + elems[j];
                std::int64_t k = field->index(r);
                env.rows.push_back({{"op", op},
                                    {"row", i},
                                    {"col", j},
                                    {"result", k},
                                    {"result_text", ffkit::element_to_text(r)}});
                if (!mul || (i != 0 && j != 0)) {
                    if (seen[static_cast<std::size_t>(k)]) {
                        (mul ? latin_mul : latin_add) = false;
                    }
                    seen[static_cast<std::size_t>(k)] = 1;
                }
            }
        }
    }
    json legend = json::array();
    for (const auto& e : elems) legend.push_back(ffkit::element_to_text(e));
    env.summary = {{"q", q},
                   {"modulus", ffkit::poly_to_text(field->modulus())},
                   {"elements", legend},
                   {"latin_square_add", latin_add},
                   {"latin_square_mul", latin_mul}};

    std::cout << "GF(" << q << ") with modulus " << ffkit::poly_to_text(field->modulus()) << "\n";
    if (q <= 32) {
        for (const char* op : {"add", "mul"}) {
            bool mul = (op[0] == 'm');
            std::cout << (mul ? "multiplication" : "addition") << " table (element indexes):\n";
            for (std::int64_t i = 0; i < q; ++i) {
                for (std::int64_t j = 0; j < q; ++j) {
                    ffkit::GFElement r = mul ? elems[i] * elems[j] : elems[i] + elems[j];
                    std::cout << field->index(r) << (j + 1 == q ? "\n" : " ");
                }
            }
        }
    }
    std::cout << "latin square (add): " << (latin_add ? "yes" : "no")
              << ", latin square (mul, nonzero): " << (latin_mul ? "yes" : "no") << "\n";
    finish(g, env);
}

void run_field_info(const GlobalOptions& g, std::int64_t p, std::size_t n) {
    ffkit::FieldPtr field = make_field_cached(g, p, n);
    ffkit::GFElement prim = ffkit::primitive_element(field);
    std::int64_t order = ffkit::element_order(prim);
    json subfields = json::array();
    for (std::size_t m = 1; m <= n; ++m) {
        if (n % m == 0) subfields.push_back({{"degree", m}, {"order", [&] {
                                                 std::int64_t pm = 1;
                                                 for (std::size_t i = 0; i < m; ++i) pm *= p;
                                                 return pm;
                                             }()}});
    }
    bool splits = ffkit::splitting_check(field);

    ffkit::ReportEnvelope env;
    env.command = "field info";
    env.slug = "field_info";
    env.config = {{"p", p}, {"n", n}};
    env.summary = {{"p", p},
                   {"n", n},
                   {"q", field->q()},
                   {"modulus", ffkit::poly_to_text(field->modulus())},
                   {"primitive_element", ffkit::element_to_text(prim)},
                   {"primitive_order", order},
                   {"subfields", subfields},
                   {"splitting_field_of_x_q_minus_x", splits}};
    env.csv_columns = {"p", "n", "q", "modulus", "primitive_element", "primitive_order"};
    env.rows.push_back({{"p", p},
                        {"n", n},
                        {"q", field->q()},
                        {"modulus", ffkit::poly_to_text(field->modulus())},
                        {"primitive_element", ffkit::element_to_text(prim)},
                        {"primitive_order", order}});

    std::cout << "GF(" << field->q() << ") = F_" << p << "[x]/(" << ffkit::poly_to_text(field->modulus())
              << ")\nprimitive element: " << ffkit::element_to_text(prim) << " (order " << order
              << ")\nsubfield degrees:";
    for (std::size_t m = 1; m <= n; ++m)
        if (n % m == 0) std::cout << " " << m;
    std::cout << "\nsplitting field check: " << (splits ? "pass" : "FAIL") << "\n";
    finish(g, env);
}

void run_fermat_survey(const GlobalOptions& g, std::int64_t p_max, std::size_t ext,
                       std::optional<std::int64_t> n_max) {
    auto records = ffkit::survey(p_max, ext, n_max, g.jobs);

    ffkit::ReportEnvelope env;
    env.command = "fermat survey";
    env.slug = "fermat_survey";
    env.config = {{"p_max", p_max}, {"ext", ext}};
    if (n_max) env.config["n_max"] = *n_max;
    env.csv_columns = {"p", "ext_deg", "q", "n", "gcd_class", "nontrivial_count", "flt_holds"};
    for (const auto& rec : records) {
        env.rows.push_back({{"p", rec.p},
                            {"ext_deg", rec.ext_deg},
                            {"q", rec.q},
                            {"n", rec.n},
                            {"gcd_class", rec.gcd_class},
                            {"nontrivial_count", rec.nontrivial_count},
                            {"flt_holds", rec.flt_holds}});
    }

    json verdict_summary = json::object();
    if (ext == 1 && !n_max) {
        std::vector<std::int64_t> primes;
        for (const auto& rec : records) {
            if (primes.empty() || primes.back() != rec.p) primes.push_back(rec.p);
        }
        for (std::int64_t p : primes) {
            ffkit::ClaimVerdict v = ffkit::claim_eval(records, p);
            json doc = {{"schema", ffkit::kSchemaVersion},
                        {"p", v.p},
                        {"predicted_set", v.predicted_set},
                        {"observed_free_set", v.observed_free_set},
                        {"counterexamples", v.counterexamples},
                        {"predicted_but_solvable", v.predicted_but_solvable},
                        {"holds_only_if", v.holds_only_if},
                        {"holds_only_if_literal", v.holds_only_if_literal}};
            env.documents.emplace_back("fermat_survey.claim_p" + std::to_string(p), doc);
            verdict_summary[std::to_string(p)] = {{"holds_only_if", v.holds_only_if},
                                                  {"counterexamples", v.counterexamples}};
            std::cout << "p = " << p << ": free exponents {";
            for (std::size_t i = 0; i < v.observed_free_set.size(); ++i) {
                std::cout << (i ? ", " : "") << v.observed_free_set[i];
            }
            std::cout << "}, claim holds (gcd-class): " << (v.holds_only_if ? "yes" : "NO");
            if (!v.counterexamples.empty()) {
                std::cout << ", counterexamples:";
                for (auto n : v.counterexamples) std::cout << " " << n;
            }
            std::cout << "\n";
        }
    }
    env.summary = {{"records", records.size()}, {"verdicts", verdict_summary}};
    finish(g, env);
}

void run_exponent_core(const GlobalOptions& g, std::int64_t n) {
    std::int64_t core = ffkit::core_exponent(n);
    ffkit::ReportEnvelope env;
    env.command = "exponent core";
    env.slug = "exponent_core";
    env.config = {{"n", n}};
    env.summary = {{"n", n}, {"core", core}};
    env.csv_columns = {"n", "core"};
    env.rows.push_back({{"n", n}, {"core", core}});
    std::cout << "settling the equation for exponent " << core << " settles it for " << n << "\n";
    finish(g, env);
}

void run_curve_count(const GlobalOptions& g, const std::string& coeffs_text, std::int64_t p,
                     std::size_t ext) {
    auto cf = parse_coeffs(coeffs_text);
    ffkit::FieldPtr field = make_field_cached(g, p, ext);
    ffkit::Curve curve = ffkit::Curve::make(field, cf[0], cf[1], cf[2], cf[3]);
    std::int64_t count = ffkit::count_points(curve);
    std::int64_t trace = field->q() + 1 - count;
    std::optional<std::pair<std::int64_t, std::int64_t>> structure;
    if (count <= 10'000) structure = ffkit::group_structure(curve);

    ffkit::ReportEnvelope env;
    env.command = "curve count";
    env.slug = "curve_count";
    env.config = {{"coeffs", coeffs_text}, {"p", p}, {"ext", ext}};
    env.csv_columns = {"p", "ext", "q", "point_count", "trace", "d1", "d2"};
    json row = {{"p", p}, {"ext", ext}, {"q", field->q()}, {"point_count", count}, {"trace", trace}};
    if (structure) {
        row["d1"] = structure->first;
        row["d2"] = structure->second;
    }
    env.rows.push_back(row);
    env.summary = row;

    std::cout << "#E(GF(" << field->q() << ")) = " << count << ", trace = " << trace;
    if (structure) {
        std::cout << ", group structure Z/" << structure->first << " x Z/" << structure->second;
    }
    std::cout << "\n";
    finish(g, env);
}

json reduction_row(const ffkit::ReductionReport& r) {
    json row = {{"p", r.p},
                {"type", ffkit::reduction_kind_name(r.type)},
                {"conductor_exponent", r.conductor_exponent}};
    if (r.point_count) row["point_count"] = *r.point_count;
    if (r.a_p) row["a_p"] = *r.a_p;
    return row;
}

void run_curve_reduce(const GlobalOptions& g, const std::string& coeffs_text,
                      std::optional<std::int64_t> p, std::optional<std::int64_t> p_max) {
    auto cf = parse_coeffs(coeffs_text);
    ffkit::IntCurve curve = ffkit::IntCurve::make(cf[0], cf[1], cf[2], cf[3]);

    ffkit::ReportEnvelope env;
    env.command = "curve reduce";
    env.slug = "curve_reduce";
    env.config = {{"coeffs", coeffs_text}};
    env.csv_columns = {"p", "type", "conductor_exponent", "point_count", "a_p"};
    json summary = {{"model_discriminant", ffkit::int128_to_string(curve.discriminant())}};

    if (p && p_max) {
        throw CLI::ValidationError("--p/--p-max", "give exactly one of --p or --p-max");
    }
    if (p) {
        env.config["p"] = *p;
        ffkit::ReductionReport r = ffkit::reduction_type(curve, *p);
        env.rows.push_back(reduction_row(r));
        summary["type"] = ffkit::reduction_kind_name(r.type);
        std::cout << "p = " << r.p << ": " << ffkit::reduction_kind_name(r.type)
                  << " reduction, conductor exponent " << r.conductor_exponent;
        if (r.a_p) std::cout << ", #E = " << *r.point_count << ", a_p = " << *r.a_p;
        std::cout << "\n";
    } else if (p_max) {
        env.config["p_max"] = *p_max;
        ffkit::SemistabilityReport rep = ffkit::semistability(curve, *p_max, g.jobs);
        for (const auto& r : rep.bad_primes) env.rows.push_back(reduction_row(r));
        summary["semistable_over_range"] = rep.semistable;
        summary["conductor_part"] = rep.conductor_part;
        std::cout << "bad primes in [5, " << *p_max << "]: " << rep.bad_primes.size()
                  << ", semistable over range: " << (rep.semistable ? "yes" : "no")
                  << ", conductor part: " << rep.conductor_part << "\n";
    } else {
        throw CLI::ValidationError("--p/--p-max", "give one of --p or --p-max");
    }
    env.summary = summary;
    finish(g, env);
}

void run_curve_torsion(const GlobalOptions& g, const std::string& coeffs_text, std::int64_t p,
                       std::int64_t m, std::optional<std::size_t> ext, std::size_t max_ext) {
    auto cf = parse_coeffs(coeffs_text);
    ffkit::FieldPtr field = make_field_cached(g, p, 1);
    ffkit::Curve curve = ffkit::Curve::make(field, cf[0], cf[1], cf[2], cf[3]);

    ffkit::ReportEnvelope env;
    env.command = "curve torsion";
    env.slug = "curve_torsion";
    env.config = {{"coeffs", coeffs_text}, {"p", p}, {"m", m}};
    env.csv_columns = {"m", "k", "q", "count"};

    auto q_of = [&](std::size_t k) {
        std::int64_t q = 1;
        for (std::size_t i = 0; i < k; ++i) q *= p;
        return q;
    };
    if (ext) {
        env.config["ext"] = *ext;
        std::int64_t count = ffkit::division_points(curve, m, *ext);
        env.rows.push_back({{"m", m}, {"k", *ext}, {"q", q_of(*ext)}, {"count", count}});
        env.summary = {{"m", m}, {"k", *ext}, {"count", count}};
        std::cout << "|E[" << m << "](GF(" << q_of(*ext) << "))| = " << count << "\n";
    } else {
        env.config["max_ext"] = max_ext;
        ffkit::TorsionScan scan = ffkit::torsion_scan(curve, m, max_ext);
        for (auto [k, count] : scan.counts) {
            env.rows.push_back({{"m", m}, {"k", k}, {"q", q_of(k)}, {"count", count}});
        }
        env.summary = {{"m", m}, {"attained_k", scan.attained_k}, {"order", m * m}};
        std::cout << "E[" << m << "] reaches order " << m * m << " over GF(" << p << "^"
                  << scan.attained_k << ")\n";
    }
    finish(g, env);
}

void run_curve_frey(const GlobalOptions& g, std::int64_t a, std::int64_t b, std::int64_t n,
                    std::int64_t p_max) {
    ffkit::IntCurve curve = ffkit::IntCurve::frey(a, b, n);
    ffkit::SemistabilityReport rep = ffkit::semistability(curve, p_max, g.jobs);

    ffkit::ReportEnvelope env;
    env.command = "curve frey";
    env.slug = "curve_frey";
    env.config = {{"a", a}, {"b", b}, {"n", n}, {"p_max", p_max}};
    env.csv_columns = {"p", "type", "conductor_exponent", "point_count", "a_p"};
    for (const auto& r : rep.bad_primes) env.rows.push_back(reduction_row(r));
    env.summary = {{"curve_b", curve.b()},
                   {"curve_c", curve.c()},
                   {"curve_d", curve.d()},
                   {"model_discriminant", ffkit::int128_to_string(curve.discriminant())},
                   {"semistable_over_range", rep.semistable},
                   {"conductor_part", rep.conductor_part}};

    std::cout << "Frey curve y^2 = x^3 + (" << curve.b() << ")x^2 + (" << curve.c() << ")x + ("
              << curve.d() << "), model discriminant "
              << ffkit::int128_to_string(curve.discriminant()) << "\n"
              << "semistable over [5, " << p_max << "]: " << (rep.semistable ? "yes" : "no")
              << ", conductor part: " << rep.conductor_part << "\n";
    finish(g, env);
}

void run_curve_lseries(const GlobalOptions& g, const std::string& coeffs_text, std::int64_t p_max) {
    auto cf = parse_coeffs(coeffs_text);
    ffkit::IntCurve curve = ffkit::IntCurve::make(cf[0], cf[1], cf[2], cf[3]);
    auto entries = ffkit::ap_series(curve, p_max, g.jobs);

    ffkit::ReportEnvelope env;
    env.command = "curve lseries";
    env.slug = "curve_lseries";
    env.config = {{"coeffs", coeffs_text}, {"p_max", p_max}};
    env.csv_columns = {"p", "a_p", "bad_reduction"};
    for (const auto& e : entries) {
        json row = {{"p", e.p}};
        if (e.a_p) row["a_p"] = *e.a_p;
        if (e.bad_reduction) row["bad_reduction"] = ffkit::reduction_kind_name(*e.bad_reduction);
        env.rows.push_back(row);
    }
    env.summary = {{"good_primes", static_cast<int>(std::count_if(
                                       entries.begin(), entries.end(),
                                       [](const auto& e) { return e.a_p.has_value(); }))},
                   {"bad_primes", static_cast<int>(std::count_if(
                                      entries.begin(), entries.end(),
                                      [](const auto& e) { return e.bad_reduction.has_value(); }))}};

    std::cout << "a_p for good primes 5 <= p <= " << p_max << ":";
    for (const auto& e : entries) {
        if (e.a_p) std::cout << " (" << e.p << ", " << *e.a_p << ")";
    }
    std::cout << "\n";
    finish(g, env);
}

void run_metric_check(const GlobalOptions& g, const std::string& metric_name,
                      std::optional<std::string> points_text) {
    ffkit::Metric metric = parse_metric(metric_name);
    std::vector<ffkit::PlanePoint> pts = points_text
                                             ? parse_points(*points_text)
                                             : std::vector<ffkit::PlanePoint>{
                                                   {0, 0}, {1, 0}, {0, 1}};
    auto check = ffkit::pythagoras_identity(metric, pts[0], pts[1], pts[2]);

    ffkit::ReportEnvelope env;
    env.command = "metric check";
    env.slug = "metric_check";
    env.config = {{"metric", metric_name}};
    if (points_text) env.config["points"] = *points_text;
    env.csv_columns = {"metric", "lhs", "rhs", "holds"};
    env.rows.push_back({{"metric", metric.name()},
                        {"lhs", rational_text(check.lhs)},
                        {"rhs", rational_text(check.rhs)},
                        {"holds", check.holds}});
    env.summary = env.rows.front();

    std::cout << metric.name() << ": d(A,B)^2 + d(A,C)^2 = " << rational_text(check.lhs)
              << ", d(B,C)^2 = " << rational_text(check.rhs) << " -> identity "
              << (check.holds ? "holds" : "fails") << "\n";
    finish(g, env);
}

void run_metric_search(const GlobalOptions& g, const std::string& metric_name, std::int64_t n,
                       std::int64_t bound) {
    ffkit::Metric metric = parse_metric(metric_name);
    auto triples = ffkit::fermat_triple_search(metric, n, bound, g.jobs);

    ffkit::ReportEnvelope env;
    env.command = "metric search";
    env.slug = "metric_search";
    env.config = {{"metric", metric_name}, {"n", n}, {"bound", bound}};
    env.csv_columns = {"metric", "n", "ax", "ay", "bx", "by", "cx", "cy",
                       "d_ab", "d_ac", "d_bc", "measure"};
    for (const auto& t : triples) {
        env.rows.push_back({{"metric", metric.name()},
                            {"n", n},
                            {"ax", t.ax},
                            {"ay", t.ay},
                            {"bx", t.bx},
                            {"by", t.by},
                            {"cx", t.cx},
                            {"cy", t.cy},
                            {"d_ab", t.d_ab.str()},
                            {"d_ac", t.d_ac.str()},
                            {"d_bc", t.d_bc.str()},
                            {"measure", t.squared ? "squared" : "exact"}});
    }
    env.summary = {{"solutions", triples.size()}};

    std::cout << metric.name() << ", n = " << n << ", bound " << bound << ": "
              << triples.size() << " triple(s)\n";
    for (std::size_t i = 0; i < triples.size() && i < 5; ++i) {
        const auto& t = triples[i];
        std::cout << "  A=(" << t.ax << "," << t.ay << ") B=(" << t.bx << "," << t.by << ") C=("
                  << t.cx << "," << t.cy << ")\n";
    }
    finish(g, env);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact experiments with finite fields, the Fermat equation, elliptic curves "
                 "and plane metrics"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--out", g.out, "output directory for reports")->capture_default_str();
    app.add_option("--format", g.format, "report row format: json | csv")->capture_default_str();
    app.add_option("--jobs", g.jobs, "parallelism degree (never changes output bytes)")
        ->capture_default_str();
    app.add_flag("--diff", g.diff, "diff mode: omit the timestamp header field");

    std::function<void()> runner;

    // field
    auto* field = app.add_subcommand("field", "finite field construction and tables");
    {
        auto* table = field->add_subcommand("table", "addition and multiplication tables");
        auto p = std::make_shared<std::int64_t>(0);
        auto n = std::make_shared<std::size_t>(1);
        table->add_option("--p", *p, "characteristic (prime)")->required();
        table->add_option("--n", *n, "extension degree")->capture_default_str();
        table->callback([&runner, &g, p, n] { runner = [&g, p, n] { run_field_table(g, *p, *n); }; });

        auto* info = field->add_subcommand("info", "modulus, primitive element, subfields");
        auto p2 = std::make_shared<std::int64_t>(0);
        auto n2 = std::make_shared<std::size_t>(1);
        info->add_option("--p", *p2, "characteristic (prime)")->required();
        info->add_option("--n", *n2, "extension degree")->capture_default_str();
        info->callback(
            [&runner, &g, p2, n2] { runner = [&g, p2, n2] { run_field_info(g, *p2, *n2); }; });
    }

    // fermat
    auto* fermat = app.add_subcommand("fermat", "Fermat-equation surveys over finite fields");
    {
        auto* sv = fermat->add_subcommand("survey", "count x^n + y^n = z^n solutions per (p, n)");
        auto p_max = std::make_shared<std::int64_t>(0);
        auto ext = std::make_shared<std::size_t>(1);
        auto n_max = std::make_shared<std::int64_t>(-1);
        sv->add_option("--p-max", *p_max, "largest prime to survey")->required();
        sv->add_option("--ext", *ext, "extension degree of each field")->capture_default_str();
        sv->add_option("--n-max", *n_max, "cap on the exponent range (default q-1)");
        sv->callback([&runner, &g, p_max, ext, n_max] {
            runner = [&g, p_max, ext, n_max] {
                run_fermat_survey(g, *p_max, *ext,
                                  *n_max >= 1 ? std::optional<std::int64_t>(*n_max) : std::nullopt);
            };
        });
    }

    // exponent
    auto* exponent = app.add_subcommand("exponent", "exponent-reduction utilities");
    {
        auto* core = exponent->add_subcommand("core", "smallest exponent settling n");
        auto n = std::make_shared<std::int64_t>(0);
        core->add_option("--n", *n, "exponent n >= 3")->required();
        core->callback([&runner, &g, n] { runner = [&g, n] { run_exponent_core(g, *n); }; });
    }

    // curve
    auto* curve = app.add_subcommand("curve", "elliptic curves over finite fields and Z");
    {
        auto* count = curve->add_subcommand("count", "point count over GF(p^k)");
        auto coeffs = std::make_shared<std::string>();
        auto p = std::make_shared<std::int64_t>(0);
        auto ext = std::make_shared<std::size_t>(1);
        count->add_option("--coeffs", *coeffs, "curve A,B,C,D for y^2 = Ax^3+Bx^2+Cx+D")->required();
        count->add_option("--p", *p, "characteristic (prime >= 5)")->required();
        count->add_option("--ext", *ext, "extension degree")->capture_default_str();
        count->callback([&runner, &g, coeffs, p, ext] {
            runner = [&g, coeffs, p, ext] { run_curve_count(g, *coeffs, *p, *ext); };
        });

        auto* reduce = curve->add_subcommand("reduce", "reduction type at p or over 5..p-max");
        auto coeffs2 = std::make_shared<std::string>();
        auto pr = std::make_shared<std::int64_t>(-1);
        auto prmax = std::make_shared<std::int64_t>(-1);
        reduce->add_option("--coeffs", *coeffs2, "integer curve A,B,C,D")->required();
        reduce->add_option("--p", *pr, "single prime >= 5");
        reduce->add_option("--p-max", *prmax, "survey primes 5..p-max");
        reduce->callback([&runner, &g, coeffs2, pr, prmax] {
            runner = [&g, coeffs2, pr, prmax] {
                run_curve_reduce(g, *coeffs2,
                                 *pr >= 0 ? std::optional<std::int64_t>(*pr) : std::nullopt,
                                 *prmax >= 0 ? std::optional<std::int64_t>(*prmax) : std::nullopt);
            };
        });

        auto* torsion = curve->add_subcommand("torsion", "m-division points over extensions");
        auto coeffs3 = std::make_shared<std::string>();
        auto pt = std::make_shared<std::int64_t>(0);
        auto m = std::make_shared<std::int64_t>(0);
        auto extk = std::make_shared<std::int64_t>(-1);
        auto maxext = std::make_shared<std::size_t>(12);
        torsion->add_option("--coeffs", *coeffs3, "curve A,B,C,D over F_p")->required();
        torsion->add_option("--p", *pt, "characteristic (prime >= 5)")->required();
        torsion->add_option("--m", *m, "division order m")->required();
        torsion->add_option("--ext", *extk, "count over GF(p^ext) only");
        torsion->add_option("--max-ext", *maxext, "scan bound when --ext is absent")
            ->capture_default_str();
        torsion->callback([&runner, &g, coeffs3, pt, m, extk, maxext] {
            runner = [&g, coeffs3, pt, m, extk, maxext] {
                run_curve_torsion(g, *coeffs3, *pt, *m,
                                  *extk >= 1 ? std::optional<std::size_t>(
                                                   static_cast<std::size_t>(*extk))
                                             : std::nullopt,
                                  *maxext);
            };
        });

        auto* frey = curve->add_subcommand("frey", "Frey curve of (a, b, n) and its reduction");
        auto a = std::make_shared<std::int64_t>(0);
        auto b = std::make_shared<std::int64_t>(0);
        auto n = std::make_shared<std::int64_t>(1);
        auto pmax = std::make_shared<std::int64_t>(100);
        frey->add_option("--a", *a, "first parameter (nonzero)")->required();
        frey->add_option("--b", *b, "second parameter (nonzero)")->required();
        frey->add_option("--n", *n, "exponent")->capture_default_str();
        frey->add_option("--p-max", *pmax, "semistability survey bound")->capture_default_str();
        frey->callback([&runner, &g, a, b, n, pmax] {
            runner = [&g, a, b, n, pmax] { run_curve_frey(g, *a, *b, *n, *pmax); };
        });

        auto* lseries = curve->add_subcommand("lseries", "Dirichlet coefficients a_p");
        auto coeffs4 = std::make_shared<std::string>();
        auto pmax2 = std::make_shared<std::int64_t>(0);
        lseries->add_option("--coeffs", *coeffs4, "integer curve A,B,C,D")->required();
        lseries->add_option("--p-max", *pmax2, "largest prime")->required();
        lseries->callback([&runner, &g, coeffs4, pmax2] {
            runner = [&g, coeffs4, pmax2] { run_curve_lseries(g, *coeffs4, *pmax2); };
        });
    }

    // metric
    auto* metric = app.add_subcommand("metric", "plane-metric identity checks and searches");
    {
        auto* check = metric->add_subcommand("check", "Pythagorean identity on a triple");
        auto name = std::make_shared<std::string>();
        auto points = std::make_shared<std::string>();
        check->add_option("--metric", *name, "euclidean|taxicab|chebyshev|pnorm:<r>")->required();
        check->add_option("--points", *points, "A;B;C as x,y;x,y;x,y (default unit triple)");
        check->callback([&runner, &g, name, points] {
            runner = [&g, name, points] {
                run_metric_check(g, *name,
                                 points->empty() ? std::nullopt
                                                 : std::optional<std::string>(*points));
            };
        });

        auto* search = metric->add_subcommand("search", "grid triples with d^n + d^n = d^n");
        auto name2 = std::make_shared<std::string>();
        auto n = std::make_shared<std::int64_t>(2);
        auto bound = std::make_shared<std::int64_t>(5);
        search->add_option("--metric", *name2, "euclidean|taxicab|chebyshev")->required();
        search->add_option("--n", *n, "exponent n >= 2")->capture_default_str();
        search->add_option("--bound", *bound, "grid radius")->capture_default_str();
        search->callback([&runner, &g, name2, n, bound] {
            runner = [&g, name2, n, bound] { run_metric_search(g, *name2, *n, *bound); };
        });
    }

    // Let --out/--format/--jobs/--diff appear after the subcommand too.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        node->fallthrough();
        for (CLI::App* sub : node->get_subcommands(nullptr)) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (runner) runner();
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ffkit::BoundError& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 4;
    } catch (const ffkit::Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
