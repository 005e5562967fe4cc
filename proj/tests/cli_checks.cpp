// CLI behavior checks: exit codes, report schema, bound validation, and the
// modulus cache environment variable. argv[1] is the ffkit binary path.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

int run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + "\"" + g_cli + "\" " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("ffkit_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: ffkit_cli_checks <path-to-ffkit-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    // exit 0 on success
    fs::path out = fresh_dir("basic");
    check(run("exponent core --n 9 --out \"" + out.string() + "\"") == 0, "success exits 0");

    // exit 2 on usage errors
    check(run("exponent core --out \"" + out.string() + "\"") == 2, "missing flag exits 2");
    check(run("nonsense") == 2, "unknown subcommand exits 2");
    check(run("curve count --p 5 --coeffs 1,2 --out \"" + out.string() + "\"") == 2,
          "malformed coeffs exits 2");
    check(run("metric check --metric euclid5 --out \"" + out.string() + "\"") == 2,
          "unknown metric exits 2");

    // exit 3 on domain errors
    check(run("curve count --p 5 --coeffs 1,0,0,0 --out \"" + out.string() + "\"") == 3,
          "singular curve exits 3");
    check(run("curve count --p 3 --coeffs 1,0,0,1 --out \"" + out.string() + "\"") == 3,
          "small characteristic exits 3");
    check(run("exponent core --n 2 --out \"" + out.string() + "\"") == 3,
          "no core exponent exits 3");
    check(run("field table --p 6 --n 1 --out \"" + out.string() + "\"") == 3,
          "composite characteristic exits 3");
    check(run("metric search --metric euclidean --n 3 --bound 4 --out \"" + out.string() + "\"") ==
              3,
          "odd euclidean exponent exits 3");

    // exit 4 on bound violations, before any partial output
    fs::path bounds = fresh_dir("bounds");
    check(run("fermat survey --p-max 1000 --out \"" + bounds.string() + "\"") == 4,
          "survey beyond the exhaustive bound exits 4");
    check(run("field table --p 521 --n 1 --out \"" + bounds.string() + "\"") == 4,
          "oversized table exits 4");
    check(run("metric search --metric taxicab --n 2 --bound 500 --out \"" + bounds.string() +
              "\"") == 4,
          "oversized grid exits 4");
    check(fs::exists(bounds) && fs::is_empty(bounds), "no partial reports on bound violations");

    // report schema: versioned, config echoed, rows in fixed order
    fs::path rep = fresh_dir("schema");
    check(run("fermat survey --p-max 7 --diff --out \"" + rep.string() + "\"") == 0,
          "survey runs");
    auto doc = nlohmann::json::parse(slurp(rep / "fermat_survey.report.json"));
    check(doc["schema"] == 1, "schema field is 1");
    check(doc["tool"] == "ffkit", "tool field present");
    check(doc["config"]["p_max"] == 7, "config echoes p_max");
    check(!doc.contains("timestamp"), "diff mode omits the timestamp");
    check(doc["rows"].size() == 13, "survey p-max 7 has 13 rows");
    bool sorted = true;
    std::pair<std::int64_t, std::int64_t> prev{-1, -1};
    for (const auto& row : doc["rows"]) {
        std::pair<std::int64_t, std::int64_t> cur{row["p"], row["n"]};
        if (cur < prev) sorted = false;
        prev = cur;
    }
    check(sorted, "rows sorted by (p, n)");
    check(fs::exists(rep / "fermat_survey.claim_p7.json"), "claim verdict document per prime");
    auto claim = nlohmann::json::parse(slurp(rep / "fermat_survey.claim_p7.json"));
    check(claim["observed_free_set"] == nlohmann::json::array({3, 6}), "p=7 free set {3, 6}");
    check(claim["holds_only_if"] == true, "p=7 claim verdict holds");

    // timestamp present outside diff mode
    check(run("fermat survey --p-max 7 --out \"" + rep.string() + "\"") == 0, "non-diff rerun");
    auto doc2 = nlohmann::json::parse(slurp(rep / "fermat_survey.report.json"));
    check(doc2.contains("timestamp"), "timestamp present outside diff mode");

    // csv format has the frozen column header
    fs::path csvdir = fresh_dir("csv");
    check(run("fermat survey --p-max 7 --format csv --diff --out \"" + csvdir.string() + "\"") ==
              0,
          "csv survey runs");
    std::string csv = slurp(csvdir / "fermat_survey.rows.csv");
    check(csv.rfind("p,ext_deg,q,n,gcd_class,nontrivial_count,flt_holds\n", 0) == 0,
          "csv column order frozen");

    // modulus cache honors the environment variable
    fs::path cachedir = fresh_dir("cache");
    fs::path cachefile = cachedir / "custom_cache.json";
    check(run("field info --p 3 --n 2 --diff --out \"" + cachedir.string() + "\"",
              "FFKIT_MODULUS_CACHE=\"" + cachefile.string() + "\" ") == 0,
          "field info with env cache path");
    check(fs::exists(cachefile), "cache written at FFKIT_MODULUS_CACHE");
    auto cache = nlohmann::json::parse(slurp(cachefile));
    check(cache["3:2"] == "1 + 1*x^2", "cache entry for GF(9)");

    // latin-square summary on the table subcommand
    fs::path tab = fresh_dir("table");
    check(run("field table --p 3 --n 2 --diff --out \"" + tab.string() + "\"") == 0,
          "field table runs");
    auto tdoc = nlohmann::json::parse(slurp(tab / "field_table.report.json"));
    check(tdoc["summary"]["latin_square_add"] == true, "addition table is a latin square");
    check(tdoc["summary"]["latin_square_mul"] == true,
          "nonzero multiplication table is a latin square");
    check(tdoc["rows"].size() == 2 * 9 * 9, "one row per table cell");

    for (const fs::path& d : {out, bounds, rep, csvdir, cachedir, tab}) fs::remove_all(d);

    std::printf("%s\n", g_failures == 0 ? "ALL CLI CHECKS PASSED" : "CLI CHECK FAILURES");
    return g_failures == 0 ? 0 : 1;
}
