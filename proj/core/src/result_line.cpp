#include "qcyc/result_line.hpp"

#include <json.hpp>

namespace qcyc {

using ordered_json = nlohmann::ordered_json;

ResultLine ResultLine::evaluate(const CodeSpec& spec, int budget) {
    validate_spec(spec);
    ResultLine line;
    line.n = spec.n;
    line.g1 = spec.g1.str();
    line.a1 = spec.a1.str();
    line.g2 = spec.g2.str();
    line.code_size_log2 = qcyc::code_size_log2(spec);
    line.lee_distance = min_lee_distance(span_basis(spec), budget);

    ContainmentEvidence ev = is_dual_containing(spec);
    line.containing = ev.verdict();
    line.method_crt_lemma = ev.method_crt_lemma();
    line.method_componentwise = ev.method_componentwise();
    line.method_direct = ev.method_direct();
    line.methods_agree = ev.agree();
    if (line.containing)
        line.quantum = QuantumParams{3 * spec.n, 2 * line.code_size_log2 - 3 * spec.n, line.lee_distance};
    return line;
}

ResultLine ResultLine::from_record(const SearchRecord& rec) {
    ResultLine line;
    line.n = rec.spec.n;
    line.g1 = rec.spec.g1.str();
    line.a1 = rec.spec.a1.str();
    line.g2 = rec.spec.g2.str();
    line.code_size_log2 = rec.size_log2;
    line.lee_distance = rec.params.distance;
    line.containing = rec.evidence.verdict();
    line.method_crt_lemma = rec.evidence.method_crt_lemma();
    line.method_componentwise = rec.evidence.method_componentwise();
    line.method_direct = rec.evidence.method_direct();
    line.methods_agree = rec.evidence.agree();
    if (line.containing) line.quantum = rec.params;
    return line;
}

std::string ResultLine::to_jsonl() const {
    ordered_json j;
    j["n"] = n;
    j["g1"] = g1;
    j["a1"] = a1;
    j["g2"] = g2;
    j["code_size_log2"] = code_size_log2;
    j["lee_distance"] = {{"value", lee_distance.value}, {"exact", lee_distance.exact}};
    j["dual_containing"] = {
        {"verdict", containing},
        {"methods",
         {{"crt_lemma", method_crt_lemma},
          {"componentwise", method_componentwise},
          {"direct", method_direct}}},
        {"agree", methods_agree}};
    if (quantum) {
        j["quantum"] = {{"length", quantum->length},
                        {"dimension", quantum->dimension},
                        {"distance", quantum->distance.value},
                        {"exact", quantum->distance.exact}};
    }
    return j.dump();
}

ResultLine ResultLine::parse_jsonl(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ResultLine line;
    line.n = j.at("n").get<int>();
    line.g1 = j.at("g1").get<std::string>();
    line.a1 = j.at("a1").get<std::string>();
    line.g2 = j.at("g2").get<std::string>();
    line.code_size_log2 = j.at("code_size_log2").get<int>();
    line.lee_distance = {j.at("lee_distance").at("value").get<int>(),
                         j.at("lee_distance").at("exact").get<bool>()};
    const auto& dc = j.at("dual_containing");
    line.containing = dc.at("verdict").get<bool>();
    line.method_crt_lemma = dc.at("methods").at("crt_lemma").get<bool>();
    line.method_componentwise = dc.at("methods").at("componentwise").get<bool>();
    line.method_direct = dc.at("methods").at("direct").get<bool>();
    line.methods_agree = dc.at("agree").get<bool>();
    if (j.contains("quantum")) {
        const auto& q = j.at("quantum");
        line.quantum = QuantumParams{
            q.at("length").get<int>(), q.at("dimension").get<int>(),
            {q.at("distance").get<int>(), q.at("exact").get<bool>()}};
    }
    return line;
}

std::string ResultLine::csv_header() {
    return "n,g1,a1,g2,code_size_log2,lee_distance,lee_exact,dual_containing,"
           "method_crt_lemma,method_componentwise,method_direct,methods_agree,"
           "q_length,q_dimension,q_distance,q_exact";
}

std::string ResultLine::to_csv_row() const {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string row = std::to_string(n) + "," + g1 + "," + a1 + "," + g2 + "," +
                      std::to_string(code_size_log2) + "," + std::to_string(lee_distance.value) +
                      "," + b(lee_distance.exact) + "," + b(containing) + "," +
                      b(method_crt_lemma) + "," + b(method_componentwise) + "," +
                      b(method_direct) + "," + b(methods_agree) + ",";
    if (quantum) {
        row += std::to_string(quantum->length) + "," + std::to_string(quantum->dimension) + "," +
               std::to_string(quantum->distance.value) + "," + b(quantum->distance.exact);
    } else {
        row += ",,,";
    }
    return row;
}

} // namespace qcyc
