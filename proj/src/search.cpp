#include "search.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

namespace ribbonkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct BucketHit {
    std::size_t heavy = 0;
    std::size_t light = 0;
    Partition nu;
};

}  // namespace

std::vector<NearEqualityRecord> search_near_equalities(Int n, const SearchOptions& opts) {
    if (n < 2) throw DomainError("search requires size >= 2");
    if (n > 24) throw DomainError("search size above desk scale");

    std::vector<NearEqualityRecord> records;
    std::vector<int> lengths;
    if (opts.length) {
        lengths.push_back(*opts.length);
    } else {
        for (int r = 1; static_cast<Int>(r) <= n; ++r) lengths.push_back(r);
    }

    for (int r : lengths) {
        // canonical representatives of the (N, R) bucket, lex ascending
        std::vector<Composition> reps;
        enumerate_compositions(n, r, [&](const Composition& c) {
            if (lex_compare(c, reverse(c)) <= 0) reps.push_back(c);
        });
        if (reps.size() < 2) continue;

        std::vector<SymVector> expansions(reps.size(), SymVector(Basis::schur));
        std::vector<Int> mass(reps.size(), 0);
        parallel_for(reps.size(), opts.threads, [&](std::size_t i) {
            expansions[i] = ribbon_to_schur(reps[i]);
            mass[i] = expansions[i].coefficient_sum();
        });

        // |LR_alpha| = |LR_beta| + 1 is necessary: ribbon Schur coefficients
        // are nonnegative, so a single +1 Schur difference shifts the total
        // mass by exactly 1.
        std::vector<BucketHit> hits;
        std::mutex hits_mutex;
        parallel_for(reps.size(), opts.threads, [&](std::size_t i) {
            std::vector<BucketHit> local;
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                std::size_t heavy, light;
                if (mass[i] == mass[j] + 1) {
                    heavy = i;
                    light = j;
                } else if (mass[j] == mass[i] + 1) {
                    heavy = j;
                    light = i;
                } else {
                    continue;
                }
                SymVector diff = subtract(expansions[heavy], expansions[light]);
                if (auto nu = single_positive_schur(diff)) {
                    local.push_back({heavy, light, *nu});
                }
            }
            if (!local.empty()) {
                std::lock_guard<std::mutex> lock(hits_mutex);
                hits.insert(hits.end(), local.begin(), local.end());
            }
        });

        for (const auto& hit : hits) {
            records.push_back(
                {reps[hit.heavy], reps[hit.light], hit.nu, std::vector<FamilyMatch>{}});
        }
    }

    std::sort(records.begin(), records.end(),
              [](const NearEqualityRecord& x, const NearEqualityRecord& y) {
                  if (x.alpha.length() != y.alpha.length())
                      return x.alpha.length() < y.alpha.length();
                  int cmp = lex_compare(x.alpha, y.alpha);
                  if (cmp != 0) return cmp < 0;
                  return lex_compare(x.beta, y.beta) < 0;
              });

    if (opts.classify) {
        parallel_for(records.size(), opts.threads, [&](std::size_t i) {
            records[i].families = classify_triple(records[i].alpha, records[i].beta,
                                                  records[i].nu, opts.disabled_families);
        });
    }
    return records;
}

bool NecessaryConditionsReport::all_satisfied() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ConditionCheck& c) { return c.satisfied; });
}

namespace {

std::string pair_text(Int x, Int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

NecessaryConditionsReport check_necessary_conditions(const Composition& alpha,
                                                     const Composition& beta,
                                                     const Partition* nu) {
    NecessaryConditionsReport report;
    bool lambda_equal = sort_to_partition(alpha) == sort_to_partition(beta);
    bool distinct = !(alpha == beta);
    bool stats_defined = !alpha.is_all_ones() && !beta.is_all_ones();

    {
        ConditionCheck check{"delta", lambda_equal && distinct, true, ""};
        if (check.applicable) {
            auto end_ones = [](const Composition& c) {
                return (c.parts().front() == 1 ? 1 : 0) + (c.parts().back() == 1 ? 1 : 0);
            };
            int da = end_ones(alpha), db = end_ones(beta);
            check.satisfied = da >= db;
            check.detail = "delta_alpha=" + std::to_string(da) +
                           " delta_beta=" + std::to_string(db);

            ConditionCheck qcheck{"q-prime", da == db && stats_defined, true, ""};
            if (qcheck.applicable) {
                CompositionStats sa = compute_stats(alpha);
                CompositionStats sb = compute_stats(beta);
                qcheck.satisfied =
                    lex_compare(std::span<const Int>(sa.q_prime),
                                std::span<const Int>(sb.q_prime)) <= 0;
                qcheck.detail = "q'(alpha) vs q'(beta)";
            }
            report.checks.push_back(check);
            report.checks.push_back(qcheck);
        } else {
            report.checks.push_back(check);
            report.checks.push_back({"q-prime", false, true, ""});
        }
    }

    {
        ConditionCheck check{"ends-lex", lambda_equal && distinct, true, ""};
        if (check.applicable) {
            auto oriented = [](const Composition& c) {
                Int first = c.parts().front(), last = c.parts().back();
                if (first <= last) return std::pair<Int, Int>{first, last};
                return std::pair<Int, Int>{last, first};
            };
            auto [a1, ar] = oriented(alpha);
            auto [b1, br] = oriented(beta);
            check.satisfied = a1 < b1 || (a1 == b1 && ar <= br);
            check.detail = pair_text(a1, ar) + " <=lex " + pair_text(b1, br);
        }
        report.checks.push_back(check);
    }

    {
        ConditionCheck check{"no-hook", nu != nullptr, true, ""};
        if (check.applicable) {
            bool hook = nu->length() < 2 || nu->part(1) <= 1;
            check.satisfied = !hook;
            check.detail = "nu=" + nu->to_string();
        }
        report.checks.push_back(check);
    }

    {
        bool is_ab1d = nu != nullptr && nu->length() >= 2 && nu->part(1) >= 2 &&
                       (nu->length() < 3 || nu->part(2) <= 1);
        ConditionCheck check{"distinct-ends", is_ab1d, true, ""};
        if (check.applicable) {
            check.satisfied = ends(alpha) != ends(beta);
            check.detail = "e(alpha) vs e(beta)";
        }
        report.checks.push_back(check);
    }

    return report;
}

FamilyVerifyReport verify_families(Int size_cap, int threads) {
    auto start = Clock::now();
    FamilyVerifyReport report;
    report.size_cap = size_cap;

    struct Job {
        int id;
        FamilyParams params;
        FamilyInstance instance;
    };
    std::vector<Job> jobs;
    for (int id = 1; id <= kFamilyCount; ++id) {
        for_each_family_instance(id, size_cap,
                                 [&](const FamilyParams& params, const FamilyInstance& inst) {
                                     jobs.push_back({id, params, inst});
                                 });
    }
    report.instantiations = jobs.size();

    ExpansionCache cache;
    std::vector<std::string> failures(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const Job& job = jobs[i];
        SymVector diff = subtract(cache.schur(job.instance.alpha), cache.schur(job.instance.beta));
        auto nu = single_positive_schur(diff);
        if (!nu || !(*nu == job.instance.nu)) {
            failures[i] = "alpha=[" + job.instance.alpha.to_string() + "] beta=[" +
                          job.instance.beta.to_string() + "] expected nu=[" +
                          job.instance.nu.to_string() + "] got " + diff.to_string();
        }
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!failures[i].empty())
            report.failures.push_back({jobs[i].id, jobs[i].params, failures[i]});
    }
    report.pass = report.failures.empty() && report.instantiations > 0;
    report.seconds = seconds_since(start);
    return report;
}

ConjectureReport verify_conjecture(Int max_size, const SearchOptions& opts) {
    if (max_size < 2) throw DomainError("verification requires max size >= 2");
    auto start = Clock::now();
    ConjectureReport report;
    report.max_size = max_size;

    for (Int n = 2; n <= max_size; ++n) {
        SearchOptions search_opts = opts;
        search_opts.length.reset();
        search_opts.classify = true;
        for (auto& record : search_near_equalities(n, search_opts)) {
            ++report.record_count;
            for (const auto& match : record.families) ++report.family_counts[match.id];
            bool classified = !record.families.empty();
            bool nu3_ok = record.nu.length() < 3 || record.nu.part(2) <= 2;
            if (!classified) ++report.unclassified;
            if (!classified || !nu3_ok) report.counterexamples.push_back(std::move(record));
        }
    }
    report.pass = report.counterexamples.empty();
    report.seconds = seconds_since(start);
    return report;
}

}  // namespace ribbonkit
