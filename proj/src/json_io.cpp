#include "ordmatch/json_io.hpp"

namespace ordmatch {

Matching matching_from_text(const std::string& text) {
    size_t k = text.find_first_not_of(" \t\r\n");
    if (k == std::string::npos) throw std::invalid_argument("empty matching input");
    if (text[k] != '{') {
        std::string trimmed = text;
        while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                                    trimmed.back() == ' '))
            trimmed.pop_back();
        return parse_word(trimmed.substr(k));
    }
    Json j = Json::parse(text);
    if (j.contains("word")) return parse_word(j["word"].get<std::string>());
    if (!j.contains("r") || !j.contains("edges"))
        throw std::invalid_argument("matching JSON needs \"r\" and \"edges\" (or \"word\")");
    return Matching::from_edges(j["r"].get<int>(), j["edges"].get<std::vector<Edge>>());
}

Json to_json(const Matching& m) {
    return Json{{"r", m.uniformity()}, {"n", m.size()}, {"word", m.word()},
                {"edges", m.edges()}};
}

Json to_json(const CliqueCertificate& cert) {
    std::vector<int> one_based;
    for (int i : cert.edge_indices) one_based.push_back(i + 1);
    return Json{{"pattern", cert.pattern.word()}, {"edges", one_based},
                {"size", cert.size()}};
}

Json to_json(const ExtractionResult& res) {
    Json j = to_json(res.certificate);
    j["index"] = res.pattern_index;
    j["guarantee"] = rational_to_string(res.guarantee);
    return j;
}

Json to_json(const ExperimentReport& rep) {
    return Json{{"r", rep.r},
                {"pattern", rep.pattern.word()},
                {"method", rep.method},
                {"seed", rep.seed},
                {"trials", rep.trials},
                {"n_grid", rep.n_grid},
                {"sizes", rep.sizes},
                {"mean", rep.mean},
                {"stddev", rep.stddev},
                {"slope", rep.slope},
                {"slope_stderr", rep.slope_stderr},
                {"upper_violations", rep.upper_violations}};
}

}  // namespace ordmatch
