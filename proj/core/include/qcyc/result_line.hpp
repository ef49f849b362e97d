// One line-delimited record per evaluated code: the CLI's exchange format.
// JSON lines parse back losslessly; a CSV flattening carries the same fields.

#ifndef QCYC_RESULT_LINE_HPP
#define QCYC_RESULT_LINE_HPP

#include <optional>
#include <string>

#include "qcyc/quantum.hpp"

namespace qcyc {

struct ResultLine {
    int n = 0;
    std::string g1, a1, g2;
    int code_size_log2 = 0;
    LeeDistance lee_distance;
    bool containing = false;
    bool method_crt_lemma = false;
    bool method_componentwise = false;
    bool method_direct = false;
    bool methods_agree = false;
    std::optional<QuantumParams> quantum; // present iff containing

    static ResultLine evaluate(const CodeSpec& spec, int budget = 24);
    static ResultLine from_record(const SearchRecord& rec);

    std::string to_jsonl() const;
    static ResultLine parse_jsonl(const std::string& line);

    static std::string csv_header();
    std::string to_csv_row() const;

    friend bool operator==(const ResultLine&, const ResultLine&) = default;
};

} // namespace qcyc

#endif
