#include "kgrass/filling_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "kgrass/grothendieck.hpp"

namespace kgrass {

namespace {

int total(const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); }

// a ⊇ b componentwise.
bool contains_counts(const std::vector<int>& a, const std::vector<int>& b) {
    if (b.size() > a.size()) return false;
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

} // namespace

ContentPoset ContentPoset::build(const Partition& lambda, const Partition& mu,
                                 const AmbientBox& box) {
    return from_tableaux(lambda, mu, box, enumerate_buch_tableaux(lambda, mu, box));
}

ContentPoset ContentPoset::from_tableaux(const Partition& lambda, const Partition& mu,
                                         const AmbientBox& box,
                                         const std::vector<SetValuedFilling>& tableaux) {
    if (tableaux.empty())
        throw EmptyProduct("empty product " + lambda.to_string() + " x " + mu.to_string() +
                           " in " + box.to_string());
    ContentPoset p;
    p.lambda_ = lambda;
    p.mu_ = mu;
    p.box_ = box;
    std::map<std::vector<int>, long long> counts;
    for (const auto& t : tableaux) counts[content_of(t, false).counts] += 1;
    int mu_size = mu.size();
    for (const auto& [content, n] : counts)
        p.vertices_.push_back({content, n, total(content) - mu_size});
    std::sort(p.vertices_.begin(), p.vertices_.end(),
              [](const PosetVertex& a, const PosetVertex& b) {
                  if (a.extra != b.extra) return a.extra < b.extra;
                  return a.content < b.content;
              });
    return p;
}

bool ContentPoset::leq(int i, int j) const {
    return contains_counts(vertices_[i].content, vertices_[j].content);
}

std::vector<std::pair<int, int>> ContentPoset::covers() const {
    std::vector<std::pair<int, int>> out;
    int n = static_cast<int>(vertices_.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool direct = true;
            for (int k = 0; k < n && direct; ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
            if (direct) out.emplace_back(i, j);
        }
    }
    return out;
}

int ContentPoset::find(const std::vector<int>& content) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].content == content) return static_cast<int>(i);
    return -1;
}

MobiusAssignment mobius(const ContentPoset& p) {
    int n = static_cast<int>(p.vertices().size());
    MobiusAssignment m;
    m.values.assign(n, 0);
    // Vertices are sorted by |content|; everything above vertex i (smaller
    // content) has smaller |content|, so a single forward pass suffices.
    for (int i = 0; i < n; ++i) {
        long long sum = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && p.leq(i, j)) sum += m.values[j];
        m.values[i] = 1 - sum;
    }
    for (int i = 0; i < n; ++i) {
        long long sum = 0;
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) sum += m.values[j];
        if (sum != 1) throw Error("Moebius defining identity failed");
    }
    return m;
}

MainTheoremReport check_main_theorem(const Partition& lambda, const Partition& mu,
                                     const AmbientBox& box) {
    MainTheoremReport rep;
    ContentPoset p = ContentPoset::build(lambda, mu, box);
    MobiusAssignment m = mobius(p);
    GBasisExpansion ex = buch_product(lambda, mu, box);

    rep.precondition_met = true;
    for (const auto& v : p.vertices())
        if (v.extra == 0 && v.tableau_count != 1) rep.precondition_met = false;

    rep.all_pass = true;
    for (size_t i = 0; i < p.vertices().size(); ++i) {
        MainTheoremEntry e;
        e.content = p.vertices()[i].content;
        e.nu = content_sum(lambda.counts(), e.content);
        e.mobius_value = m.values[i];
        auto it = ex.coeffs.find(e.nu);
        e.buch_coefficient = it == ex.coeffs.end() ? 0 : it->second;
        e.pass = e.mobius_value == e.buch_coefficient;
        if (!e.pass) rep.all_pass = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::string dot_export(const ContentPoset& p, const MobiusAssignment* m) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < p.vertices().size(); ++i) {
        const auto& v = p.vertices()[i];
        os << "  n" << i << " [label=\"[";
        for (size_t j = 0; j < v.content.size(); ++j) {
            if (j) os << ",";
            os << v.content[j];
        }
        os << "] #" << v.tableau_count;
        if (m) os << " mu=" << m->values[i];
        os << "\"];\n";
    }
    for (auto [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace kgrass
