#include "kgrass/svt.hpp"

#include <algorithm>

namespace kgrass {

bool ValueSet::operator<(const ValueSet& o) const {
    uint32_t a = bits_, b = o.bits_;
    while (a && b) {
        int va = __builtin_ctz(a), vb = __builtin_ctz(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::string ValueSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : values()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

int SetValuedFilling::weight() const {
    int w = 0;
    for (const auto& row : rows)
        for (const auto& s : row) w += s.size();
    return w;
}

bool SetValuedFilling::is_semistandard() const {
    for (int i = 1; i <= shape.length(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            const ValueSet& s = at(i, j);
            if (s.empty()) return false;
            if (j < shape.part(i) && s.max() > at(i, j + 1).min()) return false;
            if (i > 1 && at(i - 1, j).max() >= s.min()) return false;
        }
    }
    return true;
}

bool SetValuedFilling::single_valued() const {
    for (const auto& row : rows)
        for (const auto& s : row)
            if (s.size() != 1) return false;
    return true;
}

std::string SetValuedFilling::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += " / ";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) s += ",";
            std::string cell;
            for (int v : rows[i][j].values()) cell += std::to_string(v);
            s += cell;
        }
    }
    return s + "]";
}

SetValuedFilling superstandard(const Partition& lambda) {
    SetValuedFilling t;
    t.shape = lambda;
    t.rows.resize(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i)
        t.rows[i - 1].assign(lambda.part(i), ValueSet{i});
    return t;
}

ReadingWord reading_word(const SetValuedFilling& t, bool include_context) {
    ReadingWord w;
    if (include_context) {
        for (int i = 1; i <= t.context.length(); ++i)
            for (int j = 0; j < t.context.part(i); ++j) w.push_back(i);
    }
    for (int i = 1; i <= t.shape.length(); ++i) {
        for (int j = t.shape.part(i); j >= 1; --j) {
            auto vals = t.at(i, j).values();
            for (auto it = vals.rbegin(); it != vals.rend(); ++it) w.push_back(*it);
        }
    }
    return w;
}

bool is_reverse_lattice(const ReadingWord& w) {
    std::vector<int> counts;
    for (int v : w) {
        if (v < 1) return false;
        if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
        counts[v - 1]++;
        if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
    }
    return true;
}

Content content_of(const SetValuedFilling& t, bool include_context) {
    Content c;
    c.weight = t.weight();
    auto bump = [&c](int v) {
        if (static_cast<int>(c.counts.size()) < v) c.counts.resize(v, 0);
        c.counts[v - 1]++;
    };
    if (include_context)
        for (int i = 1; i <= t.context.length(); ++i)
            for (int j = 0; j < t.context.part(i); ++j) bump(i);
    for (const auto& row : t.rows)
        for (const auto& s : row)
            for (int v : s.values()) bump(v);
    return c;
}

namespace {

struct Enumerator {
    const Partition& lambda;
    const Partition& mu;
    AmbientBox box;
    std::vector<int> counts;       // prefix multiplicities, context included
    SetValuedFilling current;
    std::vector<SetValuedFilling>* out;

    // Reading order: rows top to bottom, boxes right to left within a row.
    void run() {
        current.shape = mu;
        current.context = lambda;
        current.rows.resize(mu.length());
        for (int i = 1; i <= mu.length(); ++i) current.rows[i - 1].resize(mu.part(i));
        fill_box(1, mu.first() == 0 ? 0 : mu.part(1));
    }

    void next_of(int i, int j, int& ni, int& nj) const {
        if (j > 1) {
            ni = i;
            nj = j - 1;
        } else {
            ni = i + 1;
            nj = ni <= mu.length() ? mu.part(ni) : 0;
        }
    }

    void fill_box(int i, int j) {
        if (i > mu.length() || mu.length() == 0) {
            out->push_back(current);
            return;
        }
        // Element bounds from semistandard neighbors.
        int lo = 1;
        if (i > 1) lo = current.at(i - 1, j).max() + 1;
        int hi = box.rows;
        if (j < mu.part(i)) hi = std::min(hi, current.at(i, j + 1).min());
        if (lo > hi) return;

        int ni, nj;
        next_of(i, j, ni, nj);

        // DFS over nonempty subsets of [lo..hi], elements added in
        // decreasing order so prefix reverse-lattice pruning is exact.
        ValueSet chosen;
        std::function<void(int)> pick = [&](int v) {
            if (!chosen.empty()) {
                current.at(i, j) = chosen;
                fill_box(ni, nj);
            }
            for (int u = v; u >= lo; --u) {
                // Reading the word right-to-left within the box means u is
                // appended after all previously chosen (larger) elements.
                if (u > 1 && counts[u - 1] + 1 > counts[u - 2]) continue;
                if (counts[u - 1] + 1 > box.cols) continue; // ν_u ≤ n-k
                counts[u - 1]++;
                chosen.insert(u);
                pick(u - 1);
                chosen.erase(u);
                counts[u - 1]--;
            }
        };
        pick(hi);
        current.at(i, j) = ValueSet{};
    }
};

} // namespace

std::vector<SetValuedFilling> enumerate_buch_tableaux(const Partition& lambda,
                                                      const Partition& mu,
                                                      const AmbientBox& box) {
    if (!fits_in_box(lambda, box))
        throw PreconditionError("lambda " + lambda.to_string() + " does not fit in " +
                                box.to_string());
    if (!fits_in_box(mu, box))
        throw PreconditionError("mu " + mu.to_string() + " does not fit in " + box.to_string());

    std::vector<SetValuedFilling> out;
    Enumerator e{lambda, mu, box, {}, {}, &out};
    e.counts.assign(box.rows, 0);
    for (int i = 1; i <= lambda.length(); ++i) e.counts[i - 1] = lambda.part(i);
    e.run();

    std::sort(out.begin(), out.end(), [](const SetValuedFilling& a, const SetValuedFilling& b) {
        ReadingWord wa = reading_word(a, false), wb = reading_word(b, false);
        if (wa != wb) return wa < wb;
        return a.rows < b.rows;
    });
    return out;
}

SetValuedFilling lex_min_tableau(const Partition& lambda, const Partition& mu,
                                 const AmbientBox& box) {
    auto all = enumerate_buch_tableaux(lambda, mu, box);
    if (all.empty())
        throw EmptyProduct("no Buch tableaux for " + lambda.to_string() + " x " +
                           mu.to_string() + " in " + box.to_string());
    const SetValuedFilling& m = all.front();
    if (!m.single_valued())
        throw Error("lex-min tableau is not single-valued for " + lambda.to_string() + " x " +
                    mu.to_string() + " in " + box.to_string());
    return m;
}

} // namespace kgrass
