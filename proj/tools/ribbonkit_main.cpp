// ribbonkit CLI: batch frontend over the libribbonkit C API.
//
// Exit codes: 0 success / verification PASS, 1 verification FAIL,
// 2 usage or parse error.

#include <ribbonkit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct CompositionDeleter {
    void operator()(rk_composition* p) const { rk_composition_free(p); }
};
struct SymvecDeleter {
    void operator()(rk_symvec* p) const { rk_symvec_free(p); }
};
struct TableauListDeleter {
    void operator()(rk_tableau_list* p) const { rk_tableau_list_free(p); }
};
struct SearchDeleter {
    void operator()(rk_search_result* p) const { rk_search_result_free(p); }
};
struct StringDeleter {
    void operator()(char* p) const { rk_string_free(p); }
};

using CompositionPtr = std::unique_ptr<rk_composition, CompositionDeleter>;
using SymvecPtr = std::unique_ptr<rk_symvec, SymvecDeleter>;
using TableauListPtr = std::unique_ptr<rk_tableau_list, TableauListDeleter>;
using SearchPtr = std::unique_ptr<rk_search_result, SearchDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail_usage() {
    std::cerr << "error: " << rk_last_error_message() << "\n";
    std::exit(2);
}

CompositionPtr parse_composition(const std::string& text) {
    CompositionPtr c(rk_composition_parse(text.c_str()));
    if (!c) fail_usage();
    return c;
}

std::string format_symvec(const rk_symvec* v, bool json) {
    StringPtr s(rk_symvec_format(v, json ? RK_FORMAT_JSON : RK_FORMAT_TEXT));
    if (!s) fail_usage();
    return s.get();
}

std::string format_composition(const rk_composition* c, bool json) {
    StringPtr s(rk_composition_format(c, json ? RK_FORMAT_JSON : RK_FORMAT_TEXT));
    if (!s) fail_usage();
    return s.get();
}

int default_threads() {
    if (const char* env = std::getenv("RIBBONKIT_THREADS")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end && *end == '\0' && value > 0) return static_cast<int>(value);
    }
    return 0;  // library default: available parallelism
}

int run_expand(const std::string& ribbon, const std::string& basis, bool json) {
    CompositionPtr c = parse_composition(ribbon);
    SymvecPtr v(basis == "h" ? rk_ribbon_to_h(c.get()) : rk_ribbon_to_schur(c.get()));
    if (!v) fail_usage();
    std::cout << format_symvec(v.get(), json) << "\n";
    return 0;
}

int run_diff(const std::string& a, const std::string& b, bool json) {
    CompositionPtr ca = parse_composition(a);
    CompositionPtr cb = parse_composition(b);
    SymvecPtr va(rk_ribbon_to_schur(ca.get()));
    SymvecPtr vb(rk_ribbon_to_schur(cb.get()));
    if (!va || !vb) fail_usage();
    SymvecPtr diff(rk_symvec_subtract(va.get(), vb.get()));
    if (!diff) fail_usage();

    rk_composition* nu_raw = nullptr;
    int single = rk_symvec_single_positive_schur(diff.get(), &nu_raw);
    if (single < 0) fail_usage();
    CompositionPtr nu(nu_raw);

    if (json) {
        nlohmann::json doc;
        doc["difference"] = nlohmann::json::parse(format_symvec(diff.get(), true));
        doc["near_equal"] = single == 1;
        doc["nu"] = single == 1 ? nlohmann::json::parse(format_composition(nu.get(), true))
                                : nlohmann::json();
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << format_symvec(diff.get(), false) << "\n";
        if (single == 1) std::cout << "NEAR-EQUAL nu=[" << format_composition(nu.get(), false) << "]\n";
    }
    return 0;
}

int run_stats(const std::string& ribbon, bool json) {
    CompositionPtr c = parse_composition(ribbon);
    StringPtr report(rk_stats_report(c.get(), json ? RK_FORMAT_JSON : RK_FORMAT_TEXT));
    if (!report) fail_usage();
    std::cout << report.get();
    if (json) std::cout << "\n";
    return 0;
}

int run_lr(const std::string& ribbon, const std::string& content, bool json) {
    CompositionPtr shape = parse_composition(ribbon);
    if (!content.empty()) {
        CompositionPtr target = parse_composition(content);
        int64_t coeff = rk_lr_coefficient(shape.get(), target.get());
        if (coeff < 0) fail_usage();
        if (json) {
            nlohmann::json doc{{"shape", nlohmann::json::parse(format_composition(shape.get(), true))},
                               {"content", nlohmann::json::parse(format_composition(target.get(), true))},
                               {"coefficient", coeff}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "coefficient = " << coeff << "\n";
        }
        return 0;
    }
    TableauListPtr list(rk_lr_enumerate(shape.get()));
    if (!list) fail_usage();
    StringPtr text(rk_tableau_list_format(list.get(), json ? RK_FORMAT_JSON : RK_FORMAT_TEXT));
    if (!text) fail_usage();
    std::cout << text.get();
    if (json) std::cout << "\n";
    return 0;
}

int run_identity(const std::string& ribbon, int64_t j, int64_t t, bool json) {
    CompositionPtr base = parse_composition(ribbon);
    int agree = 0;
    StringPtr report(rk_identity_report(base.get(), j, t,
                                        json ? RK_FORMAT_JSON : RK_FORMAT_TEXT, &agree));
    if (!report) fail_usage();
    std::cout << report.get();
    if (json) std::cout << "\n";
    return 0;
}

int run_search(int64_t size, int64_t length, bool json, int threads) {
    SearchPtr result(rk_search(size, length, threads));
    if (!result) fail_usage();
    StringPtr records(rk_search_result_records(result.get()));
    if (!records) fail_usage();
    std::cout << records.get();
    StringPtr summary(
        rk_search_result_summary(result.get(), json ? RK_FORMAT_JSON : RK_FORMAT_TEXT));
    if (!summary) fail_usage();
    // JSON mode keeps stdout a pure record stream; the footer goes to stderr.
    if (json)
        std::cerr << summary.get() << "\n";
    else
        std::cout << "# " << summary.get() << "\n";
    return 0;
}

int run_verify(int64_t max_size, int64_t family_cap, bool json, int threads, bool self_test) {
    char* report_raw = nullptr;
    int verdict = self_test
                      ? rk_verify_self_test(threads, &report_raw)
                      : rk_verify(max_size, family_cap, threads,
                                  json ? RK_FORMAT_JSON : RK_FORMAT_TEXT, &report_raw);
    StringPtr report(report_raw);
    if (verdict < 0) fail_usage();
    if (report) {
        std::cout << report.get();
        if (json && !self_test) std::cout << "\n";
    }
    return verdict == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for ribbon Schur functions"};
    app.set_version_flag("--version", rk_version());
    app.require_subcommand(1);

    std::string ribbon, basis = "schur", a, b, content;
    int64_t j = 0, t = 0, size = 0, length = 0;
    int64_t max_size = 12, family_cap = 14;
    bool json = false, self_test = false;
    int threads = default_threads();

    auto* expand = app.add_subcommand("expand", "expand a ribbon in the Schur or h basis");
    expand->add_option("--ribbon", ribbon, "composition, e.g. 3,1,3")->required();
    expand->add_option("--basis", basis, "schur or h")
        ->check(CLI::IsMember({"schur", "h"}));
    expand->add_flag("--json", json, "emit JSON");

    auto* diff = app.add_subcommand("diff", "Schur-basis difference of two ribbons");
    diff->add_option("--a", a, "first composition")->required();
    diff->add_option("--b", b, "second composition")->required();
    diff->add_flag("--json", json, "emit JSON");

    auto* stats = app.add_subcommand("stats", "composition statistics and transpose");
    stats->add_option("--ribbon", ribbon, "composition")->required();
    stats->add_flag("--json", json, "emit JSON");

    auto* lr = app.add_subcommand("lr", "enumerate LR tableaux of a ribbon");
    lr->add_option("--ribbon", ribbon, "composition")->required();
    lr->add_option("--content", content, "count tableaux of this content only");
    lr->add_flag("--json", json, "emit JSON");

    auto* identity = app.add_subcommand("identity", "ribbon difference identity for a move");
    identity->add_option("--ribbon", ribbon, "base composition")->required();
    identity->add_option("--j", j, "target row (1-based)")->required();
    identity->add_option("--t", t, "amount to move")->required();
    identity->add_flag("--json", json, "emit JSON");

    auto* search = app.add_subcommand("search", "find near-equalities r_a - r_b = s_nu");
    search->add_option("--size", size, "composition size N")->required();
    search->add_option("--length", length, "restrict to one length R");
    search->add_flag("--json", json, "pure JSON-lines on stdout");
    search->add_option("--threads", threads, "worker count (default: all cores)");

    auto* verify = app.add_subcommand("verify", "verify family templates and the classification");
    verify->add_option("--max-size", max_size, "search sizes 2..N (default 12)");
    verify->add_option("--families-size-cap", family_cap,
                       "instantiate templates up to this size (default 14)");
    verify->add_flag("--json", json, "emit JSON");
    verify->add_option("--threads", threads, "worker count (default: all cores)");
    verify->add_flag("--self-test", self_test, "corrupt one template; expect FAIL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (expand->parsed()) return run_expand(ribbon, basis, json);
    if (diff->parsed()) return run_diff(a, b, json);
    if (stats->parsed()) return run_stats(ribbon, json);
    if (lr->parsed()) return run_lr(ribbon, content, json);
    if (identity->parsed()) return run_identity(ribbon, j, t, json);
    if (search->parsed()) return run_search(size, length, json, threads);
    if (verify->parsed()) return run_verify(max_size, family_cap, json, threads, self_test);
    return 2;
}
