#include "kgrass/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace kgrass {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const AmbientBox& b) { return json{{"rows", b.rows}, {"cols", b.cols}}; }

json to_json(const SetValuedFilling& t) {
    json boxes = json::array();
    for (int i = 1; i <= t.shape.length(); ++i)
        for (int j = 1; j <= t.shape.part(i); ++j)
            boxes.push_back(json{{"r", i}, {"c", j}, {"set", t.at(i, j).values()}});
    return json{{"shape", to_json(t.shape)}, {"context", to_json(t.context)}, {"boxes", boxes}};
}

json coeffs_to_json(const std::map<Partition, long long>& coeffs) {
    std::vector<std::pair<Partition, long long>> sorted(coeffs.begin(), coeffs.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first.parts() < b.first.parts();
    });
    json terms = json::array();
    for (const auto& [nu, c] : sorted)
        terms.push_back(json{{"nu", to_json(nu)}, {"coeff", c}});
    return json{{"terms", terms}};
}

json to_json(const GBasisExpansion& e) { return coeffs_to_json(e.coeffs); }

json to_json(const ContentPoset& p, const MobiusAssignment* m) {
    json vertices = json::array();
    for (size_t i = 0; i < p.vertices().size(); ++i) {
        json v{{"content", p.vertices()[i].content},
               {"count", p.vertices()[i].tableau_count},
               {"extra", p.vertices()[i].extra}};
        if (m) v["mobius"] = m->values[i];
        vertices.push_back(v);
    }
    json covers = json::array();
    for (auto [lo, hi] : p.covers()) covers.push_back(json::array({lo, hi}));
    return json{{"vertices", vertices}, {"covers", covers}};
}

json to_json(const Matching& m) {
    json fixed = json::array();
    for (int f : m.fixed_points) fixed.push_back(to_json(m.tableaux[f]));
    json pairs = json::array();
    for (auto [a, b] : m.pairs)
        pairs.push_back(json::array({to_json(m.tableaux[a]), to_json(m.tableaux[b])}));
    json out{{"fixed", fixed}, {"pairs", pairs}};
    if (m.swapped) out["swapped"] = true;
    return out;
}

json to_json(const DemolitionTranscript& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        std::string kind = s.kind == DemolitionKind::Row
                               ? "row"
                               : (s.kind == DemolitionKind::Column ? "column" : "toprow");
        steps.push_back(json{{"kind", kind},
                             {"index", s.index},
                             {"after",
                              json{{"lambda", to_json(s.after.lambda)},
                                   {"mu", to_json(s.after.mu)},
                                   {"box", to_json(s.after.box)}}}});
    }
    return json{{"steps", steps}};
}

Partition parse_partition(const std::string& s) {
    if (s == "-" || s.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw PreconditionError("bad partition part: " + item);
        parts.push_back(v);
    }
    return Partition(parts);
}

AmbientBox parse_box(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw PreconditionError("box must look like RxC: " + s);
    int rows = std::stoi(s.substr(0, x));
    int cols = std::stoi(s.substr(x + 1));
    if (rows < 1 || cols < 1) throw PreconditionError("box sides must be positive: " + s);
    return {rows, cols};
}

} // namespace kgrass
