// CSS quantum code parameters from dual-containing cyclic codes over R, and
// the exhaustive search over generator triples at a fixed odd length.

#ifndef QCYC_QUANTUM_HPP
#define QCYC_QUANTUM_HPP

#include <cstdint>

#include "qcyc/cyclic_code.hpp"

namespace qcyc {

struct QuantumParams {
    int length = 0;     // 3n physical qubits
    int dimension = 0;  // 2 log2|C| - 3n logical qubits
    LeeDistance distance;
    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

// Requires is_dual_containing(spec) to hold; throws std::domain_error when
// the CSS hypothesis is violated.
QuantumParams css_params(const CodeSpec& spec, int budget = 24);

struct SearchRecord {
    CodeSpec spec;
    int size_log2 = 0;
    ContainmentEvidence evidence{};
    QuantumParams params;
    std::int64_t micros = 0; // evaluation time, not part of any emitted format
};

// All dual-containing codes at odd length n, one record per distinct code
// (duplicate spans deduplicated, least spec text kept), sorted by dimension
// descending, then distance descending, then spec text ascending.
std::vector<SearchRecord> search_quantum(int n, int budget = 24, int max_n = 63);

} // namespace qcyc

#endif
