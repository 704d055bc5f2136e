#include "ribbonkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "json_io.hpp"

using namespace ribbonkit;

struct rk_composition {
    Composition value;
};

struct rk_symvec {
    SymVector value;
};

struct rk_tableau_list {
    std::vector<RibbonTableau> value;
};

struct rk_search_result {
    std::vector<NearEqualityRecord> records;
};

namespace {

thread_local rk_status g_last_error = RK_OK;
thread_local std::string g_last_message;

void set_error(rk_status code, const std::string& message) {
    g_last_error = code;
    g_last_message = message;
}

void clear_error() {
    g_last_error = RK_OK;
    g_last_message.clear();
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
        set_error(RK_ERR_INTERNAL, "out of memory");
        return nullptr;
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs body, translating exceptions into the thread-local error state.
/// Fallback is returned on failure.
template <typename Fallback, typename Body>
auto guarded(Fallback fallback, Body&& body) -> decltype(body()) {
    clear_error();
    try {
        return body();
    } catch (const ParseError& e) {
        set_error(RK_ERR_PARSE, e.what());
    } catch (const OverflowError& e) {
        set_error(RK_ERR_OVERFLOW, e.what());
    } catch (const MismatchError& e) {
        set_error(RK_ERR_MISMATCH, e.what());
    } catch (const DomainError& e) {
        set_error(RK_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        set_error(RK_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        set_error(RK_ERR_INTERNAL, e.what());
    }
    return fallback;
}

bool require_handle(const void* handle, const char* what) {
    if (handle) return true;
    set_error(RK_ERR_DOMAIN, std::string("null ") + what + " handle");
    return false;
}

std::string bracketed(const std::vector<Int>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    out += ']';
    return out;
}

std::string stats_report_text(const Composition& c) {
    std::ostringstream out;
    if (c.is_all_ones()) {
        out << "stats: undefined for all-ones composition\n";
    } else {
        CompositionStats s = compute_stats(c);
        out << "k=" << s.k << " δ=" << s.delta << " z=" << bracketed(s.z)
            << " p=" << bracketed(s.p) << " p′=" << bracketed(s.p_prime)
            << " q=" << bracketed(s.q) << " q′=" << bracketed(s.q_prime)
            << " ε=" << bracketed(s.epsilon) << " S′=" << s.s_prime << "\n";
    }
    out << "transpose=" << bracketed(transpose(c).parts()) << "\n";
    if (c.length() >= 2) {
        out << "adjacent-pairs={";
        auto pairs = adjacent_pairs(c);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i) out << ",";
            out << "{" << pairs[i][0] << "," << pairs[i][1] << "}";
        }
        out << "}\n";
    }
    return out.str();
}

std::string tableau_list_text(const std::vector<RibbonTableau>& list) {
    std::ostringstream out;
    out << "count=" << list.size() << "\n";
    for (const auto& t : list) {
        out << "content=" << bracketed(t.content()) << " rows=[";
        const auto& rows = t.rows();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out << ",";
            out << "[";
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j) out << ",";
                out << rows[i][j];
            }
            out << "]";
        }
        out << "]\n";
    }
    return out.str();
}

std::string identity_report_text(const IdentityReport& r) {
    std::ostringstream out;
    out << "alpha=" << bracketed(r.move.base.parts()) << " i=" << r.move.source_row
        << " j=" << r.move.target_row << " t=" << r.move.amount
        << " beta=" << bracketed(r.moved.parts()) << "\n";
    auto contents = [&](const std::vector<RibbonTableau>& set) {
        std::string line;
        for (const auto& t : set) {
            line += ' ';
            line += bracketed(t.content());
        }
        return line;
    };
    out << "|A|=" << r.a_set.size() << " contents:" << contents(r.a_set) << "\n";
    out << "|B|=" << r.b_set.size() << " contents:" << contents(r.b_set) << "\n";
    out << "identity difference = " << r.difference.to_string() << "\n";
    out << "direct subtraction  = " << r.direct.to_string() << "\n";
    out << (r.agree ? "AGREE" : "DISAGREE") << "\n";
    return out.str();
}

struct SummaryCounts {
    std::size_t unclassified = 0;
    std::map<int, std::size_t> by_family;
};

SummaryCounts summarize(const std::vector<NearEqualityRecord>& records) {
    SummaryCounts counts;
    for (const auto& record : records) {
        if (record.families.empty()) ++counts.unclassified;
        for (const auto& match : record.families) ++counts.by_family[match.id];
    }
    return counts;
}

std::string conditions_report_text(const NecessaryConditionsReport& r) {
    std::ostringstream out;
    for (const auto& check : r.checks) {
        out << check.name << ": ";
        if (!check.applicable)
            out << "n/a";
        else
            out << (check.satisfied ? "ok" : "VIOLATED");
        if (!check.detail.empty()) out << " (" << check.detail << ")";
        out << "\n";
    }
    out << (r.all_satisfied() ? "all conditions hold" : "CONDITION VIOLATED") << "\n";
    return out.str();
}

std::string verify_report_text(const FamilyVerifyReport& fam, const ConjectureReport& conj) {
    std::ostringstream out;
    out << "families: " << (fam.pass ? "PASS" : "FAIL")
        << " (instantiations=" << fam.instantiations << ", size_cap=" << fam.size_cap << ", "
        << fam.seconds << "s)\n";
    for (const auto& failure : fam.failures)
        out << "  family " << failure.id << " FAILED: " << failure.detail << "\n";
    out << "conjecture: " << (conj.pass ? "PASS" : "FAIL") << " (max_size=" << conj.max_size
        << ", records=" << conj.record_count << ", unclassified=" << conj.unclassified << ", "
        << conj.seconds << "s)\n";
    for (const auto& record : conj.counterexamples)
        out << "  counterexample: " << to_json(record).dump() << "\n";
    out << "VERDICT: " << (fam.pass && conj.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace

extern "C" {

const char* rk_version(void) { return "ribbonkit 1.0.0"; }

rk_status rk_last_error(void) { return g_last_error; }

const char* rk_last_error_message(void) { return g_last_message.c_str(); }

void rk_string_free(char* s) { std::free(s); }

rk_composition* rk_composition_parse(const char* text) {
    return guarded(static_cast<rk_composition*>(nullptr), [&]() -> rk_composition* {
        if (!text) throw ParseError("null composition text");
        return new rk_composition{Composition::parse(text)};
    });
}

rk_composition* rk_composition_create(const int64_t* parts, size_t count) {
    return guarded(static_cast<rk_composition*>(nullptr), [&]() -> rk_composition* {
        if (!parts && count > 0) throw DomainError("null parts array");
        return new rk_composition{Composition(std::vector<Int>(parts, parts + count))};
    });
}

void rk_composition_free(rk_composition* c) { delete c; }

size_t rk_composition_length(const rk_composition* c) {
    if (!require_handle(c, "composition")) return 0;
    clear_error();
    return static_cast<size_t>(c->value.length());
}

int64_t rk_composition_size(const rk_composition* c) {
    if (!require_handle(c, "composition")) return -1;
    clear_error();
    return c->value.size();
}

int64_t rk_composition_part(const rk_composition* c, size_t index) {
    if (!require_handle(c, "composition")) return -1;
    return guarded(static_cast<int64_t>(-1), [&]() -> int64_t {
        if (index >= c->value.parts().size()) throw DomainError("part index out of range");
        return c->value.parts()[index];
    });
}

int rk_composition_is_partition(const rk_composition* c) {
    if (!require_handle(c, "composition")) return -1;
    clear_error();
    return c->value.is_weakly_decreasing() ? 1 : 0;
}

char* rk_composition_format(const rk_composition* c, rk_format format) {
    if (!require_handle(c, "composition")) return nullptr;
    return guarded(static_cast<char*>(nullptr), [&] {
        return dup_string(format == RK_FORMAT_JSON ? to_json(c->value).dump()
                                                   : c->value.to_string());
    });
}

rk_composition* rk_composition_reverse(const rk_composition* c) {
    if (!require_handle(c, "composition")) return nullptr;
    return guarded(static_cast<rk_composition*>(nullptr),
                   [&] { return new rk_composition{reverse(c->value)}; });
}

rk_composition* rk_composition_canonical(const rk_composition* c) {
    if (!require_handle(c, "composition")) return nullptr;
    return guarded(static_cast<rk_composition*>(nullptr),
                   [&] { return new rk_composition{canonical(c->value)}; });
}

rk_composition* rk_composition_transpose(const rk_composition* c) {
    if (!require_handle(c, "composition")) return nullptr;
    return guarded(static_cast<rk_composition*>(nullptr),
                   [&] { return new rk_composition{transpose(c->value)}; });
}

char* rk_stats_report(const rk_composition* c, rk_format format) {
    if (!require_handle(c, "composition")) return nullptr;
    return guarded(static_cast<char*>(nullptr), [&] {
        return dup_string(format == RK_FORMAT_JSON ? stats_json(c->value).dump()
                                                   : stats_report_text(c->value));
    });
}

void rk_symvec_free(rk_symvec* v) { delete v; }

rk_symvec* rk_ribbon_to_schur(const rk_composition* c) {
    if (!require_handle(c, "composition")) return nullptr;
    return guarded(static_cast<rk_symvec*>(nullptr),
                   [&] { return new rk_symvec{ribbon_to_schur(c->value)}; });
}

rk_symvec* rk_ribbon_to_h(const rk_composition* c) {
    if (!require_handle(c, "composition")) return nullptr;
    return guarded(static_cast<rk_symvec*>(nullptr),
                   [&] { return new rk_symvec{ribbon_to_h(c->value)}; });
}

rk_symvec* rk_schur_to_h(const rk_composition* partition) {
    if (!require_handle(partition, "composition")) return nullptr;
    return guarded(static_cast<rk_symvec*>(nullptr), [&] {
        return new rk_symvec{schur_to_h(Partition::from_composition(partition->value))};
    });
}

rk_symvec* rk_symvec_subtract(const rk_symvec* a, const rk_symvec* b) {
    if (!require_handle(a, "symvec") || !require_handle(b, "symvec")) return nullptr;
    return guarded(static_cast<rk_symvec*>(nullptr),
                   [&] { return new rk_symvec{subtract(a->value, b->value)}; });
}

rk_symvec* rk_symvec_omega(const rk_symvec* v) {
    if (!require_handle(v, "symvec")) return nullptr;
    return guarded(static_cast<rk_symvec*>(nullptr),
                   [&] { return new rk_symvec{omega_schur(v->value)}; });
}

int rk_symvec_basis(const rk_symvec* v) {
    if (!require_handle(v, "symvec")) return -1;
    clear_error();
    return v->value.basis() == Basis::schur ? RK_BASIS_SCHUR : RK_BASIS_H;
}

int rk_symvec_is_zero(const rk_symvec* v) {
    if (!require_handle(v, "symvec")) return -1;
    clear_error();
    return v->value.zero() ? 1 : 0;
}

size_t rk_symvec_term_count(const rk_symvec* v) {
    if (!require_handle(v, "symvec")) return 0;
    clear_error();
    return v->value.terms().size();
}

char* rk_symvec_format(const rk_symvec* v, rk_format format) {
    if (!require_handle(v, "symvec")) return nullptr;
    return guarded(static_cast<char*>(nullptr), [&] {
        return dup_string(format == RK_FORMAT_JSON ? to_json(v->value).dump()
                                                   : v->value.to_string());
    });
}

int rk_symvec_single_positive_schur(const rk_symvec* v, rk_composition** nu_out) {
    if (!require_handle(v, "symvec")) return -1;
    return guarded(-1, [&]() -> int {
        auto nu = single_positive_schur(v->value);
        if (!nu) return 0;
        if (nu_out) *nu_out = new rk_composition{Composition(nu->parts())};
        return 1;
    });
}

int rk_symvec_lex_minimal(const rk_symvec* v, rk_composition** partition_out,
                          int64_t* coeff_out) {
    if (!require_handle(v, "symvec")) return -1;
    return guarded(-1, [&]() -> int {
        auto [p, coeff] = lex_minimal_support(v->value);
        if (partition_out) *partition_out = new rk_composition{Composition(p.parts())};
        if (coeff_out) *coeff_out = coeff;
        return 0;
    });
}

rk_tableau_list* rk_lr_enumerate(const rk_composition* shape) {
    if (!require_handle(shape, "composition")) return nullptr;
    return guarded(static_cast<rk_tableau_list*>(nullptr),
                   [&] { return new rk_tableau_list{enumerate_lr(shape->value)}; });
}

void rk_tableau_list_free(rk_tableau_list* list) { delete list; }

size_t rk_tableau_list_count(const rk_tableau_list* list) {
    if (!require_handle(list, "tableau list")) return 0;
    clear_error();
    return list->value.size();
}

char* rk_tableau_list_format(const rk_tableau_list* list, rk_format format) {
    if (!require_handle(list, "tableau list")) return nullptr;
    return guarded(static_cast<char*>(nullptr), [&] {
        if (format == RK_FORMAT_JSON) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& t : list->value) arr.push_back(to_json(t));
            return dup_string(arr.dump());
        }
        return dup_string(tableau_list_text(list->value));
    });
}

int64_t rk_lr_coefficient(const rk_composition* shape, const rk_composition* content) {
    if (!require_handle(shape, "composition") || !require_handle(content, "composition"))
        return -1;
    return guarded(static_cast<int64_t>(-1), [&] {
        return lr_coefficient(shape->value, Partition::from_composition(content->value));
    });
}

char* rk_identity_report(const rk_composition* base, int64_t j, int64_t t, rk_format format,
                         int* agree_out) {
    if (!require_handle(base, "composition")) return nullptr;
    return guarded(static_cast<char*>(nullptr), [&]() -> char* {
        if (j < 1 || j > base->value.length()) throw DomainError("row index j out of range");
        IdentityReport report = run_identity(base->value, static_cast<int>(j), t);
        if (agree_out) *agree_out = report.agree ? 1 : 0;
        return dup_string(format == RK_FORMAT_JSON ? to_json(report).dump()
                                                   : identity_report_text(report));
    });
}

rk_search_result* rk_search(int64_t size, int64_t length, int threads) {
    return guarded(static_cast<rk_search_result*>(nullptr), [&]() -> rk_search_result* {
        SearchOptions opts;
        if (length > 0) {
            if (length > size) throw DomainError("length exceeds the composition size");
            opts.length = static_cast<int>(length);
        }
        opts.threads = threads;
        return new rk_search_result{search_near_equalities(size, opts)};
    });
}

void rk_search_result_free(rk_search_result* result) { delete result; }

size_t rk_search_result_count(const rk_search_result* result) {
    if (!require_handle(result, "search result")) return 0;
    clear_error();
    return result->records.size();
}

char* rk_search_result_records(const rk_search_result* result) {
    if (!require_handle(result, "search result")) return nullptr;
    return guarded(static_cast<char*>(nullptr),
                   [&] { return dup_string(records_jsonl(result->records)); });
}

char* rk_search_result_summary(const rk_search_result* result, rk_format format) {
    if (!require_handle(result, "search result")) return nullptr;
    return guarded(static_cast<char*>(nullptr), [&] {
        SummaryCounts counts = summarize(result->records);
        if (format == RK_FORMAT_JSON) {
            nlohmann::json by_family = nlohmann::json::object();
            for (const auto& [id, count] : counts.by_family)
                by_family[std::to_string(id)] = count;
            nlohmann::json doc{{"records", result->records.size()},
                               {"unclassified", counts.unclassified},
                               {"family_counts", by_family}};
            return dup_string(doc.dump());
        }
        std::ostringstream out;
        out << "records=" << result->records.size()
            << " unclassified=" << counts.unclassified << " families:";
        if (counts.by_family.empty()) out << " none";
        for (const auto& [id, count] : counts.by_family) out << " " << id << "=" << count;
        return dup_string(out.str());
    });
}

char* rk_check_conditions(const rk_composition* a, const rk_composition* b,
                          const rk_composition* nu, rk_format format) {
    if (!require_handle(a, "composition") || !require_handle(b, "composition")) return nullptr;
    return guarded(static_cast<char*>(nullptr), [&] {
        std::optional<Partition> nu_partition;
        if (nu) nu_partition = Partition::from_composition(nu->value);
        NecessaryConditionsReport report = check_necessary_conditions(
            a->value, b->value, nu_partition ? &*nu_partition : nullptr);
        return dup_string(format == RK_FORMAT_JSON ? to_json(report).dump()
                                                   : conditions_report_text(report));
    });
}

int rk_verify(int64_t max_size, int64_t family_size_cap, int threads, rk_format format,
              char** report_out) {
    return guarded(-1, [&]() -> int {
        FamilyVerifyReport fam = verify_families(family_size_cap, threads);
        SearchOptions opts;
        opts.threads = threads;
        ConjectureReport conj = verify_conjecture(max_size, opts);
        bool pass = fam.pass && conj.pass;
        if (report_out) {
            std::string text;
            if (format == RK_FORMAT_JSON) {
                nlohmann::json doc{{"families", to_json(fam)},
                                   {"conjecture", to_json(conj)},
                                   {"verdict", pass ? "PASS" : "FAIL"}};
                text = doc.dump();
            } else {
                text = verify_report_text(fam, conj);
            }
            *report_out = dup_string(text);
            if (!*report_out) return -1;
        }
        return pass ? 0 : 1;
    });
}

int rk_verify_self_test(int threads, char** report_out) {
    return guarded(-1, [&]() -> int {
        SearchOptions opts;
        opts.threads = threads;
        opts.disabled_families = 1u;  // drop family 1 from the classifier
        ConjectureReport corrupted = verify_conjecture(7, opts);
        bool detected = !corrupted.pass;
        if (report_out) {
            std::ostringstream out;
            out << "self-test: classifier corrupted (family 1 disabled), max_size=7\n";
            out << "expected FAIL, observed " << (corrupted.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& record : corrupted.counterexamples)
                out << "  dropped record: " << to_json(record).dump() << "\n";
            out << (detected ? "self-test OK: corruption detected"
                             : "self-test FAILED: corruption not detected")
                << "\n";
            *report_out = dup_string(out.str());
            if (!*report_out) return -1;
        }
        return detected ? 0 : 1;
    });
}

} /* extern "C" */
