// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mopdom/bound.hpp"
#include "mopdom/generate.hpp"
#include "mopdom/io.hpp"
#include "mopdom/mop.hpp"
#include "mopdom/solvers.hpp"

using namespace mopdom;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

unsigned pool_size() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 4 : h;
}

void parallel_for(size_t count, const std::function<void(size_t)>& body) {
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> threads;
    unsigned p = std::min<size_t>(pool_size(), count ? count : 1);
    for (unsigned t = 0; t < p; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

std::vector<Mop> canonical_reps(int n) {
    std::map<CanonicalCode, Mop> reps;
    enumerate_triangulations(n, [&](const Mop& m) {
        reps.emplace(canonical_form(m), m);
    });
    std::vector<Mop> out;
    out.reserve(reps.size());
    for (auto& [c, m] : reps) out.push_back(std::move(m));
    return out;
}

}  // namespace

int main() {
    // shared corpora
    std::vector<std::vector<Mop>> byn(14);
    for (int n = 3; n <= 12; ++n) byn[n] = all_triangulations(n);
    auto c13 = canonical_reps(13);

    // 1. exact value never exceeds the size bound, n in [7,12]
    {
        std::atomic<long> bad{0}, total{0};
        for (int n = 7; n <= 12; ++n)
            parallel_for(byn[n].size(), [&, n](size_t i) {
                const Mop& m = byn[n][i];
                ++total;
                if (exact_gamma2d(m).value > disjunctive_bound(n, degree_two_count(m)))
                    ++bad;
            });
        report("exact-within-bound", bad == 0 && total == 23691,
               "instances=" + std::to_string(total.load()) +
                   " violations=" + std::to_string(bad.load()));
    }

    // 2. constructor verified and within the bound on the same corpus plus
    //    every canonical class at n = 13; fallback rate at most 5%
    {
        std::atomic<long> bad{0}, fallback{0}, total{0};
        auto check = [&](const Mop& m) {
            ++total;
            auto t = construct_bounded_2dd(m);
            bool ok = t.final_set.verified && is_2dd_set(m, t.final_set.vertices) &&
                      (int)t.final_set.vertices.size() <= t.bound_value;
            if (!ok) ++bad;
            if (t.used_fallback) ++fallback;
        };
        for (int n = 7; n <= 12; ++n)
            parallel_for(byn[n].size(), [&](size_t i) { check(byn[n][i]); });
        parallel_for(c13.size(), [&](size_t i) { check(c13[i]); });
        double rate = total ? 100.0 * fallback / total : 100.0;
        report("constructor-exhaustive", bad == 0 && rate <= 5.0,
               "instances=" + std::to_string(total.load()) +
                   " fallback=" + std::to_string(fallback.load()));
    }

    // 3. 1000 random instances at each of n = 20, 50, 100 in under 2 minutes;
    //    a 100-instance subsample at n = 20 cross-checked against the exact solver
    {
        auto start = std::chrono::steady_clock::now();
        std::atomic<long> bad{0}, xbad{0};
        for (int n : {20, 50, 100})
            parallel_for(1000, [&, n](size_t i) {
                auto m = random_mop(n, 1000 * (uint64_t)n + i);
                auto t = construct_bounded_2dd(m);
                if (!(t.final_set.verified && is_2dd_set(m, t.final_set.vertices) &&
                      (int)t.final_set.vertices.size() <= t.bound_value))
                    ++bad;
                if (n == 20 && i < 100) {
                    auto ex = exact_gamma2d(m);
                    if (ex.value > (int)t.final_set.vertices.size()) ++xbad;
                }
            });
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        report("constructor-random", bad == 0 && xbad == 0 && secs < 120.0,
               "violations=" + std::to_string(bad.load()) +
                   " cross=" + std::to_string(xbad.load()) + " secs=" +
                   std::to_string((long)secs));
    }

    // 4. degree-2 count equals internal triangle count plus two, n in [4,12]
    {
        std::atomic<long> bad{0};
        for (int n = 4; n <= 12; ++n)
            parallel_for(byn[n].size(), [&](size_t i) {
                const Mop& m = byn[n][i];
                if (degree_two_count(m) != internal_triangle_count(m) + 2) ++bad;
            });
        report("degree-two-identity", bad == 0);
    }

    // 5. contracting any outer edge yields a valid instance, n in [4,10]
    {
        std::atomic<long> bad{0};
        for (int n = 4; n <= 10; ++n)
            parallel_for(byn[n].size(), [&, n](size_t i) {
                const Mop& m = byn[n][i];
                for (int v = 0; v < n; ++v)
                    if (!validate(contract_outer_edge(m, {v, (v + 1) % n}).result).ok())
                        ++bad;
            });
        report("contraction-closure", bad == 0);
    }

    // 6. {i, i+4} is a 2DD-set for every i and every instance with n in [5,8]
    {
        std::atomic<long> bad{0};
        for (int n = 5; n <= 8; ++n)
            parallel_for(byn[n].size(), [&, n](size_t i) {
                CoverageChecker cc(byn[n][i]);
                for (int v = 0; v < n; ++v) {
                    std::vector<int> s{std::min(v, (v + 4) % n), std::max(v, (v + 4) % n)};
                    if (!cc.is_2dd(s)) ++bad;
                }
            });
        report("pair-covers-small", bad == 0);
    }

    // 7. every pentagon triangulation has a degree-4 vertex
    {
        bool ok = true;
        for (const auto& m : byn[5]) {
            bool found = false;
            for (int v = 0; v < 5; ++v)
                if (degree(m, v) == 4) found = true;
            ok = ok && found;
        }
        report("pentagon-hub", ok);
    }

    // 8. a partition diagonal with side length 4..6 exists for n in [6,12]
    {
        std::atomic<long> bad{0};
        for (int n = 6; n <= 12; ++n)
            parallel_for(byn[n].size(), [&](size_t i) {
                try {
                    auto [d, side] = find_partition_diagonal(byn[n][i]);
                    (void)d;
                    if (side < 4 || side > 6) ++bad;
                } catch (...) {
                    ++bad;
                }
            });
        report("partition-diagonal", bad == 0);
    }

    // 9. domination chain and the classical upper bounds, n in [7,12]
    {
        std::atomic<long> bad{0};
        for (int n = 7; n <= 12; ++n)
            parallel_for(byn[n].size(), [&, n](size_t i) {
                const Mop& m = byn[n][i];
                int g = exact_gamma(m);
                int k = degree_two_count(m);
                if (exact_gamma2d(m).value > g || g > (n + k) / 4 || g > n / 3) ++bad;
            });
        report("domination-chain", bad == 0);
    }

    // 10. tight instances: the exact value meets the bound on known counts
    {
        std::map<int, long> tight;
        for (int n = 7; n <= 12; ++n) {
            std::atomic<long> cnt{0};
            parallel_for(byn[n].size(), [&, n](size_t i) {
                const Mop& m = byn[n][i];
                int b = disjunctive_bound(n, degree_two_count(m));
                if (exact_gamma2d(m, b + 1).value == b) ++cnt;
            });
            tight[n] = cnt;
        }
        {
            // n = 13 over canonical classes only, to keep the pass cheap
            std::atomic<long> cnt{0};
            parallel_for(c13.size(), [&](size_t i) {
                const Mop& m = c13[i];
                int b = disjunctive_bound(13, degree_two_count(m));
                if (exact_gamma2d(m, b + 1).value == b) ++cnt;
            });
            tight[13] = cnt;
        }
        bool ok = tight[7] == 35 && tight[8] == 124 && tight[9] == 420;
        std::string d;
        for (auto [n, c] : tight) d += std::to_string(n) + ":" + std::to_string(c) + " ";
        report("sharpness-search", ok, d);
    }

    // 11. enumeration counts are Catalan(n-2) and sampling is near-uniform
    {
        bool counts_ok = true;
        long expect = 1;
        std::vector<long> cat{1, 1};
        for (int i = 2; i <= 10; ++i) cat.push_back(cat.back() * 2 * (2 * i - 1) / (i + 1));
        for (int n = 3; n <= 12; ++n)
            counts_ok = counts_ok && (long)byn[n].size() == cat[n - 2];
        (void)expect;

        std::map<std::vector<std::pair<int, int>>, long> hist;
        for (const auto& m : byn[5]) hist[m.diagonals] = 0;
        for (uint64_t s = 0; s < 100000; ++s) hist[random_mop(5, s).diagonals]++;
        bool chi_ok = hist.size() == 5;
        // each count should sit within 3 sigma of 20000 (sigma ~ 126.5)
        for (auto& [d, c] : hist)
            if (std::llabs(c - 20000) > 380) chi_ok = false;
        report("enumeration-and-sampling", counts_ok && chi_ok);
    }

    return g_failures == 0 ? 0 : 1;
}
