#include "talc/paths/monotonicity.hpp"

#include "talc/util/parallel.hpp"

namespace talc {

WeightMonotonicityReport verify_weight_monotone(long k, long n, const WeightSpec& w,
                                                Cell anchor, unsigned jobs,
                                                std::size_t max_violations) {
    WeightMonotonicityReport report;
    report.n = n;
    report.k = k;
    const auto ps = enumerate_paths(anchor, Cell{k + 1, n});
    const auto qs = enumerate_paths(anchor, Cell{k - 1, n});
    std::vector<Rat> p_wt(ps.size()), q_wt(qs.size());
    for (std::size_t i = 0; i < ps.size(); ++i) p_wt[i] = path_weight(ps[i], w);
    for (std::size_t i = 0; i < qs.size(); ++i) q_wt[i] = path_weight(qs[i], w);

    struct Chunk {
        Rat sum_before;
        std::size_t violations = 0;
        std::vector<PairViolation> examples;
    };
    const std::size_t total = ps.size() * qs.size();
    report.pair_count = total;
    auto results = parallel_chunks<Chunk>(total, jobs, [&](std::size_t lo, std::size_t hi) {
        Chunk chunk;
        chunk.sum_before = 0;
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::size_t pi = idx / qs.size(), qi = idx % qs.size();
            const Rat before = p_wt[pi] * q_wt[qi];
            chunk.sum_before += before;
            const InjectionResult r = inject(ps[pi], qs[qi]);
            const Rat after = path_weight(r.p_prime, w) * path_weight(r.q_prime, w);
            if (before > after) {
                ++chunk.violations;
                if (chunk.examples.size() < max_violations)
                    chunk.examples.push_back({ps[pi], qs[qi], r.p_prime, r.q_prime, before, after});
            }
        }
        return chunk;
    });
    report.sum_before = 0;
    for (const auto& chunk : results) {
        report.sum_before += chunk.sum_before;
        report.violation_count += chunk.violations;
        for (const auto& v : chunk.examples)
            if (report.violations.size() < max_violations) report.violations.push_back(v);
    }
    const Rat tk = path_sum(Cell{k, n}, w, anchor);
    report.sum_after = tk * tk;
    report.aggregate_holds = report.sum_before <= report.sum_after;
    return report;
}

}  // namespace talc
