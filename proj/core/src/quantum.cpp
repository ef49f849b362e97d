#include "qcyc/quantum.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <tuple>

namespace qcyc {

QuantumParams css_params(const CodeSpec& spec, int budget) {
    ContainmentEvidence ev = is_dual_containing(spec);
    if (!ev.verdict())
        throw std::domain_error("css_params: CSS hypothesis violated, C^perp is not contained in C for " +
                                spec.text());
    int m = code_size_log2(spec);
    LeeDistance d = min_lee_distance(span_basis(spec), budget);
    return {3 * spec.n, 2 * m - 3 * spec.n, d};
}

std::vector<SearchRecord> search_quantum(int n, int budget, int max_n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("search_quantum: n must be odd and positive");
    if (n > max_n)
        throw std::invalid_argument("search_quantum: n exceeds configured maximum " + std::to_string(max_n));

    const std::vector<BinPoly> divisors = divisors_xn1(n);

    // Distinct codes keyed by their canonical basis rows.
    std::map<std::vector<RWord>, SearchRecord> found;

    for (const BinPoly& g1 : divisors) {
        for (const BinPoly& a1 : divisors) {
            if (!a1.divides(g1)) continue;
            for (const BinPoly& g2 : divisors) {
                auto t0 = std::chrono::steady_clock::now();
                CodeSpec spec{n, g1, a1, g2};
                ContainmentEvidence ev = is_dual_containing(spec);
                if (!ev.verdict()) continue;

                CodeBasis basis = span_basis(spec);
                int m = basis.dim();
                LeeDistance d = min_lee_distance(basis, budget);
                auto t1 = std::chrono::steady_clock::now();

                SearchRecord rec{spec, m, ev,
                                 QuantumParams{3 * n, 2 * m - 3 * n, d},
                                 std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()};
                auto [it, inserted] = found.try_emplace(basis.rows(), rec);
                if (!inserted && spec.text() < it->second.spec.text())
                    it->second = rec;
            }
        }
    }

    std::vector<SearchRecord> out;
    out.reserve(found.size());
    for (auto& [rows, rec] : found) out.push_back(std::move(rec));
    std::sort(out.begin(), out.end(), [](const SearchRecord& x, const SearchRecord& y) {
        return std::tuple(-x.params.dimension, -x.params.distance.value, x.spec.text()) <
               std::tuple(-y.params.dimension, -y.params.distance.value, y.spec.text());
    });
    return out;
}

} // namespace qcyc
