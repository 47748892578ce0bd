#include "domchrom/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "domchrom/error.hpp"
#include "domchrom/graph6.hpp"
#include "domchrom/structure.hpp"

namespace domchrom {

std::string record_mode_name(RecordMode mode) {
    switch (mode) {
        case RecordMode::all: return "all";
        case RecordMode::findings: return "findings";
        case RecordMode::none: return "none";
    }
    return "?";
}

RecordMode parse_record_mode(const std::string& name) {
    for (RecordMode m : {RecordMode::all, RecordMode::findings, RecordMode::none})
        if (record_mode_name(m) == name) return m;
    throw ArgumentError("unknown record mode '" + name + "'");
}

std::string bound_side_name(BoundSide side) { return side == BoundSide::lower ? "lower" : "upper"; }

BoundSide parse_bound_side(const std::string& name) {
    if (name == "lower") return BoundSide::lower;
    if (name == "upper") return BoundSide::upper;
    throw ArgumentError("bound must be 'lower' or 'upper', got '" + name + "'");
}

void TheoremSummary::add(const VerificationRecord& rec) {
    if (rec.skipped) {
        ++skipped;
        ++skip_reasons[skip_reason_name(*rec.skipped)];
        return;
    }
    ++checked;
    if (rec.violated()) ++violations;
    if (rec.tight()) ++tight;
}

void TheoremSummary::merge(const TheoremSummary& other) {
    checked += other.checked;
    violations += other.violations;
    tight += other.tight;
    skipped += other.skipped;
    for (const auto& [reason, n] : other.skip_reasons) skip_reasons[reason] += n;
}

std::vector<Graph> default_subdivision_bases() {
    return {make_family({Family::path, 3}), make_family({Family::complete, 3}), make_family({Family::star, 3}),
            make_family({Family::cycle, 4}), make_family({Family::complete, 4}), make_family({Family::star, 2})};
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Masks per enumeration work unit.
constexpr std::uint64_t kChunk = 1U << 12;

struct EnumRange {
    int n;
    std::uint64_t first;
    std::uint64_t last;
};

std::vector<EnumRange> enumeration_ranges(int n_min, int n_max) {
    std::vector<EnumRange> out;
    for (int n = std::max(n_min, 1); n <= n_max; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t first = 0; first < total; first += kChunk) out.push_back({n, first, std::min(total, first + kChunk)});
    }
    return out;
}

/// Runs task(i, verifier) for i in [0, count) on `workers` threads, one Verifier each.
/// The first exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, int workers, const VerifierOptions& opts,
                  const std::function<void(std::size_t, Verifier&)>& task) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        Verifier verifier(opts);
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                task(i, verifier);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
                return;
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

struct UnitResult {
    std::map<TheoremId, TheoremSummary> summary;
    std::vector<VerificationRecord> kept;
    long graphs = 0;
};

bool keep(RecordMode mode, const VerificationRecord& rec) {
    switch (mode) {
        case RecordMode::all: return true;
        case RecordMode::findings: return rec.violated() || rec.skipped == SkipReason::formula_domain;
        case RecordMode::none: return false;
    }
    return false;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
    const auto start = Clock::now();
    if (config.n_max > kMaxEnumerationOrder && config.graphs.empty() && !config.corpus) {
        throw BudgetError("enumeration n_max " + std::to_string(config.n_max) + " above " +
                          std::to_string(kMaxEnumerationOrder));
    }
    const std::vector<TheoremId> theorems = config.theorems.empty() ? all_theorems() : config.theorems;
    auto selected = [&](TheoremId id) { return std::ranges::find(theorems, id) != theorems.end(); };

    std::vector<TheoremId> per_graph;
    for (TheoremId id : theorems)
        if (is_per_graph(id)) per_graph.push_back(id);

    // Per-graph inputs: explicit graphs, a corpus, or the labeled enumeration.
    std::vector<Graph> listed = config.graphs;
    if (listed.empty() && config.corpus) listed = read_graph6_file(*config.corpus);
    const bool enumerate = listed.empty() && !config.corpus;

    std::vector<Graph> bases = config.subdivision_bases;
    if (bases.empty()) bases = config.graphs.empty() ? default_subdivision_bases() : config.graphs;

    using Task = std::function<void(Verifier&, UnitResult&)>;
    std::vector<Task> units;

    auto run_graph = [&](Verifier& v, UnitResult& out, const Graph& g) {
        ++out.graphs;
        for (TheoremId id : per_graph) {
            for (auto& rec : v.check(id, g)) {
                out.summary[id].add(rec);
                if (keep(config.records, rec)) out.kept.push_back(std::move(rec));
            }
        }
    };
    auto collect = [&](UnitResult& out, std::vector<VerificationRecord> recs) {
        for (auto& rec : recs) {
            out.summary[rec.theorem].add(rec);
            if (keep(config.records, rec)) out.kept.push_back(std::move(rec));
        }
    };

    if (!per_graph.empty()) {
        if (enumerate) {
            for (const EnumRange& r : enumeration_ranges(config.n_min, config.n_max)) {
                units.push_back([&, r](Verifier& v, UnitResult& out) {
                    ConnectedGraphEnumerator stream(r.n, r.first, r.last);
                    while (auto g = stream.next()) run_graph(v, out, *g);
                });
            }
        } else {
            for (std::size_t i = 0; i < listed.size(); ++i) {
                units.push_back([&, i](Verifier& v, UnitResult& out) { run_graph(v, out, listed[i]); });
            }
        }
    }
    if (selected(TheoremId::subdivision_frac) || selected(TheoremId::subdivision_dfrac)) {
        for (std::size_t b = 0; b < bases.size(); ++b) {
            for (int k = config.k_min; k <= config.k_max; ++k) {
                units.push_back([&, b, k](Verifier& v, UnitResult& out) {
                    auto recs = v.check_subdivision(bases[b], k);
                    std::erase_if(recs, [&](const VerificationRecord& r) { return !selected(r.theorem); });
                    collect(out, std::move(recs));
                });
            }
        }
    }
    if (selected(TheoremId::wheel_gap)) {
        units.push_back([&](Verifier& v, UnitResult& out) { collect(out, v.check_wheel_gap(config.wheel_max)); });
    }
    if (selected(TheoremId::odot_ratio)) {
        units.push_back([&](Verifier& v, UnitResult& out) { collect(out, v.check_odot_ratio(std::max(config.n_max, 4))); });
    }
    if (selected(TheoremId::path_cycle_formula)) {
        units.push_back([&](Verifier& v, UnitResult& out) {
            collect(out, v.check_path_cycle_formula(config.formula_lo, config.formula_hi));
        });
    }

    std::vector<UnitResult> results(units.size());
    parallel_for(units.size(), config.workers, config.verifier,
                 [&](std::size_t i, Verifier& v) { units[i](v, results[i]); });

    SuiteReport report;
    report.config = config;
    for (TheoremId id : theorems) report.per_theorem[id];
    for (auto& r : results) {
        report.graphs_scanned += r.graphs;
        for (const auto& [id, s] : r.summary) report.per_theorem[id].merge(s);
        std::ranges::move(r.kept, std::back_inserter(report.records));
    }
    for (const auto& [id, s] : report.per_theorem) report.totals.merge(s);
    std::ranges::stable_sort(report.records, record_less);
    report.elapsed_ms = millis_since(start);
    return report;
}

ConjectureReport search_conjecture(int n_max, int workers, const VerifierOptions& opts) {
    if (n_max < 3 || n_max > kMaxEnumerationOrder) {
        throw BudgetError("conjecture search supports 3 <= n_max <= " + std::to_string(kMaxEnumerationOrder));
    }
    const auto start = Clock::now();
    const auto ranges = enumeration_ranges(1, n_max);

    struct Partial {
        long graphs = 0, checked = 0, skipped = 0, tight = 0;
        std::vector<VerificationRecord> found;
    };
    std::vector<Partial> parts(ranges.size());
    parallel_for(ranges.size(), workers, opts, [&](std::size_t i, Verifier& v) {
        ConnectedGraphEnumerator stream(ranges[i].n, ranges[i].first, ranges[i].last);
        Partial& p = parts[i];
        while (auto g = stream.next()) {
            ++p.graphs;
            for (auto& rec : v.check(TheoremId::contraction_conjecture, *g)) {
                if (rec.skipped) {
                    ++p.skipped;
                    continue;
                }
                ++p.checked;
                if (rec.tight()) ++p.tight;
                if (rec.violated()) p.found.push_back(std::move(rec));
            }
        }
    });

    ConjectureReport report;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) report.scanned_per_n[n] = 0;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        const Partial& p = parts[i];
        report.scanned_per_n[ranges[i].n] += p.graphs;
        report.graphs_scanned += p.graphs;
        report.pairs_checked += p.checked;
        report.pairs_skipped += p.skipped;
        report.tight += p.tight;
        report.counterexamples.insert(report.counterexamples.end(), p.found.begin(), p.found.end());
    }
    std::ranges::stable_sort(report.counterexamples, record_less);
    report.elapsed_ms = millis_since(start);
    return report;
}

SharpnessReport find_sharpness_witnesses(TheoremId theorem, BoundSide side, int n_max, long max_witnesses,
                                         const VerifierOptions& opts) {
    const bool supported = is_per_graph(theorem) && theorem != TheoremId::wheel_equality &&
                           !(theorem == TheoremId::contraction_conjecture && side == BoundSide::upper);
    if (!supported) {
        throw ArgumentError("no " + bound_side_name(side) + " bound to test for sharpness in " + theorem_name(theorem));
    }
    if (n_max < 1 || n_max > kMaxEnumerationOrder) {
        throw BudgetError("sharpness search supports 1 <= n_max <= " + std::to_string(kMaxEnumerationOrder));
    }
    const auto start = Clock::now();
    const std::string bound = bound_side_name(side);
    SharpnessReport report;
    report.theorem = theorem;
    report.side = side;
    report.n_max = n_max;
    Verifier verifier(opts);
    for (int n = 1; n <= n_max; ++n) {
        auto stream = enumerate_connected_graphs(n);
        while (auto g = stream.next()) {
            ++report.graphs_scanned;
            for (auto& rec : verifier.check(theorem, *g)) {
                const BoundCheck* b = rec.bound(bound);
                if (rec.skipped || b == nullptr || !b->tight()) continue;
                report.witnesses.push_back(std::move(rec));
                if (max_witnesses > 0 && static_cast<long>(report.witnesses.size()) >= max_witnesses) {
                    report.elapsed_ms = millis_since(start);
                    return report;
                }
            }
        }
    }
    report.elapsed_ms = millis_since(start);
    return report;
}

}  // namespace domchrom
