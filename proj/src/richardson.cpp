#include "kgrass/richardson.hpp"

#include <algorithm>

#include "kgrass/grothendieck.hpp"

namespace kgrass {

std::string RichardsonQuadruple::to_string() const {
    return "(" + lambda.to_string() + ", " + mu.to_string() + ", " + box.to_string() + ")";
}

BasicCheck is_basic(const RichardsonQuadruple& r) {
    BasicCheck out;
    int k = r.box.rows, w = r.box.cols;
    for (int row = 1; row <= k; ++row) {
        int v = r.lambda.part(row) + r.mu.part(k - row + 1);
        if (v == w) out.full_rows.push_back(row);
        if (v > w) out.zero_product = true;
    }
    Partition lt = r.lambda.conjugate(), mt = r.mu.conjugate();
    for (int col = 1; col <= w; ++col) {
        int v = lt.part(col) + mt.part(w - col + 1);
        if (v == k) out.full_cols.push_back(col);
        if (v > k) out.zero_product = true;
    }
    out.basic = out.full_rows.empty() && out.full_cols.empty() && !out.zero_product;
    return out;
}

std::vector<int> accessible_word(const Partition& lambda, const AmbientBox& box) {
    if (!fits_in_box(lambda, box))
        throw PreconditionError("lambda does not fit in box");
    Partition lt = lambda.conjugate();
    std::vector<int> w;
    for (int j = 1; j <= box.cols; ++j) w.push_back(1 + lt.part(box.cols - j + 1));
    return w;
}

namespace {

Partition remove_column(const Partition& p, int col) {
    std::vector<int> parts;
    for (int v : p.parts()) parts.push_back(v >= col ? v - 1 : v);
    return Partition(parts);
}

} // namespace

DemolitionResult demolish_column(const RichardsonQuadruple& r, int c) {
    int k = r.box.rows, w = r.box.cols;
    Partition lt = r.lambda.conjugate(), mt = r.mu.conjugate();
    int l = lt.part(c);              // rows of λ in box column c
    int mu_col = w - c + 1;          // μ's own column meeting box column c
    if (mu_col < 1 || l + mt.part(mu_col) != k)
        throw NotFull("column " + std::to_string(c) + " of " + r.to_string() +
                      " is not full");

    RichardsonQuadruple after{remove_column(r.lambda, c), remove_column(r.mu, mu_col),
                              {k, w - 1}};
    int height = mt.part(mu_col); // = k - l

    FillingBijection wit;
    Partition mu0 = r.mu, lam0 = r.lambda;
    Partition mu2 = after.mu, lam2 = after.lambda;
    wit.forward = [mu2, lam2, mu_col, l, height](const SetValuedFilling& t) {
        for (int i = 1; i <= height; ++i)
            if (t.at(i, mu_col) != ValueSet{l + i})
                throw Error("forced-column fact violated at (" + std::to_string(i) + "," +
                            std::to_string(mu_col) + ")");
        SetValuedFilling out;
        out.shape = mu2;
        out.context = lam2;
        out.rows.resize(mu2.length());
        for (int i = 1; i <= mu2.length(); ++i)
            for (int j = 1; j <= mu2.part(i); ++j)
                out.rows[i - 1].push_back(t.at(i, j < mu_col ? j : j + 1));
        return out;
    };
    wit.backward = [mu0, lam0, mu_col, l](const SetValuedFilling& t) {
        SetValuedFilling out;
        out.shape = mu0;
        out.context = lam0;
        out.rows.resize(mu0.length());
        for (int i = 1; i <= mu0.length(); ++i) {
            for (int j = 1; j <= mu0.part(i); ++j) {
                if (j == mu_col)
                    out.rows[i - 1].push_back(ValueSet{l + i});
                else
                    out.rows[i - 1].push_back(t.at(i, j < mu_col ? j : j - 1));
            }
        }
        return out;
    };
    return {after, std::move(wit)};
}

DemolitionResult demolish_row(const RichardsonQuadruple& r, int row) {
    int k = r.box.rows, w = r.box.cols;
    if (r.lambda.part(row) + r.mu.part(k - row + 1) != w)
        throw NotFull("row " + std::to_string(row) + " of " + r.to_string() + " is not full");

    int q = r.mu.part(k - row + 1); // boxes removed from row 1 of μ
    std::vector<int> wa = accessible_word(r.lambda, r.box);

    // μ loses the top box of columns 1..q; since q is a part of μ the
    // decremented conjugate stays weakly decreasing.
    Partition mt = r.mu.conjugate();
    std::vector<int> mt2 = mt.parts();
    for (int j = 1; j <= q; ++j) mt2[j - 1] -= 1;
    Partition mu2 = Partition(mt2).conjugate();

    // Context absorbs the removed forced entries, then the full top row of
    // the context goes away with every remaining entry decremented.
    std::vector<int> lam_counts = r.lambda.counts();
    for (int j = 1; j <= q; ++j) {
        int v = wa[j - 1];
        if (static_cast<int>(lam_counts.size()) < v) lam_counts.resize(v, 0);
        lam_counts[v - 1] += 1;
    }
    Partition lam_mid = content_sum(lam_counts, {});
    if (lam_mid.first() != w)
        throw Error("row demolition did not produce a full context top row");
    std::vector<int> tail(lam_mid.parts().begin() + (lam_mid.empty() ? 0 : 1),
                          lam_mid.parts().end());
    Partition lam2{tail};
    RichardsonQuadruple after{lam2, mu2, {k - 1, w}};

    FillingBijection wit;
    Partition mu0 = r.mu;
    std::vector<int> wa_q(wa.begin(), wa.begin() + q);
    wit.forward = [mu0, mu2, lam2, q, wa_q](const SetValuedFilling& t) {
        for (int j = 1; j <= q; ++j)
            if (t.at(1, j) != ValueSet{wa_q[j - 1]})
                throw Error("forced top-row entry violated at (1," + std::to_string(j) + ")");
        SetValuedFilling out;
        out.shape = mu2;
        out.context = lam2;
        out.rows.resize(mu2.length());
        for (int i = 1; i <= mu2.length(); ++i) {
            for (int j = 1; j <= mu2.part(i); ++j) {
                // Columns 1..q shifted up by one, all entries decremented.
                ValueSet src = (j <= q) ? t.at(i + 1, j) : t.at(i, j);
                ValueSet dst;
                for (int v : src.values()) dst.insert(v - 1);
                out.rows[i - 1].push_back(dst);
            }
        }
        return out;
    };
    Partition lam0 = r.lambda;
    wit.backward = [mu0, lam0, q, wa_q](const SetValuedFilling& t) {
        SetValuedFilling out;
        out.shape = mu0;
        out.context = lam0;
        out.rows.resize(mu0.length());
        for (int i = 1; i <= mu0.length(); ++i) {
            for (int j = 1; j <= mu0.part(i); ++j) {
                if (i == 1 && j <= q) {
                    out.rows[0].push_back(ValueSet{wa_q[j - 1]});
                    continue;
                }
                ValueSet src = (j <= q) ? t.at(i - 1, j) : t.at(i, j);
                ValueSet dst;
                for (int v : src.values()) dst.insert(v + 1);
                out.rows[i - 1].push_back(dst);
            }
        }
        return out;
    };
    return {after, std::move(wit)};
}

BasicDemolition basic_demolition(const RichardsonQuadruple& r) {
    BasicDemolition out;
    out.basic = r;
    out.witness.forward = [](const SetValuedFilling& t) { return t; };
    out.witness.backward = [](const SetValuedFilling& t) { return t; };

    BasicCheck bc = is_basic(r);
    if (bc.zero_product) {
        out.zero_product = true;
        return out;
    }
    while (!bc.basic) {
        RichardsonQuadruple cur = out.basic;
        DemolitionResult step = !bc.full_rows.empty()
                                    ? demolish_row(cur, bc.full_rows.front())
                                    : demolish_column(cur, bc.full_cols.front());
        DemolitionKind kind;
        int index;
        if (!bc.full_rows.empty()) {
            index = bc.full_rows.front();
            kind = cur.mu.part(cur.box.rows - index + 1) == 0 ? DemolitionKind::TopRow
                                                              : DemolitionKind::Row;
        } else {
            index = bc.full_cols.front();
            kind = DemolitionKind::Column;
        }
        out.transcript.steps.push_back({kind, index, cur, step.after});
        auto f_old = out.witness.forward, b_old = out.witness.backward;
        auto f_new = step.witness.forward, b_new = step.witness.backward;
        out.witness.forward = [f_old, f_new](const SetValuedFilling& t) {
            return f_new(f_old(t));
        };
        out.witness.backward = [b_old, b_new](const SetValuedFilling& t) {
            return b_old(b_new(t));
        };
        out.basic = step.after;
        bc = is_basic(out.basic);
        if (bc.zero_product)
            throw Error("demolition produced an overlapping quadruple");
    }
    return out;
}

std::string to_string(StembridgeCase c) {
    switch (c) {
        case StembridgeCase::C1: return "1";
        case StembridgeCase::C2a: return "2a";
        case StembridgeCase::C2b: return "2b";
        case StembridgeCase::C3a: return "3a";
        case StembridgeCase::C3b: return "3b";
        case StembridgeCase::C3c: return "3c";
        case StembridgeCase::C3d: return "3d";
        case StembridgeCase::C4a: return "4a";
        case StembridgeCase::C4b: return "4b";
    }
    return "?";
}

namespace {

void match_oriented(const Partition& lam, const Partition& mu, bool swapped,
                    std::set<CaseMatch>& out) {
    ShapeClass sl = classify_shape(lam), sm = classify_shape(mu);
    bool lam_rect = is_rectangle(lam), mu_rect = is_rectangle(mu);

    if (lam_rect && mu_rect) out.insert({StembridgeCase::C1, swapped});
    if (sm.kind == ShapeClass::Kind::Rectangle && sm.rect_rows == 1)
        out.insert({StembridgeCase::C2a, swapped});
    if (sm.kind == ShapeClass::Kind::Rectangle && sm.rect_cols == 1)
        out.insert({StembridgeCase::C2b, swapped});
    if (lam_rect && sm.kind == ShapeClass::Kind::FatHook) {
        if (sm.near_rectangle.count(NearRect::Left))
            out.insert({StembridgeCase::C3a, swapped});
        if (sm.near_rectangle.count(NearRect::Bottom))
            out.insert({StembridgeCase::C3b, swapped});
        if (sm.near_rectangle.count(NearRect::Top))
            out.insert({StembridgeCase::C3c, swapped});
        if (sm.near_rectangle.count(NearRect::Right))
            out.insert({StembridgeCase::C3d, swapped});
    }
    if (sm.kind == ShapeClass::Kind::FatHook && sl.kind == ShapeClass::Kind::Rectangle) {
        if (sl.rect_rows == 2) out.insert({StembridgeCase::C4a, swapped});
        if (sl.rect_cols == 2) out.insert({StembridgeCase::C4b, swapped});
    }
}

} // namespace

std::set<CaseMatch> classify_stembridge_pair(const Partition& a, const Partition& b) {
    std::set<CaseMatch> out;
    match_oriented(a, b, false, out);
    match_oriented(b, a, true, out);
    return out;
}

MultiplicityFreeVerdict is_multiplicity_free(const RichardsonQuadruple& r,
                                             bool brute_force_check) {
    MultiplicityFreeVerdict out;
    BasicDemolition bd = basic_demolition(r);
    out.basic = bd.basic;
    if (bd.zero_product) {
        out.zero_product = true;
        out.verdict = true;
        out.evidence = "zero product";
    } else {
        out.cases = classify_stembridge_pair(bd.basic.lambda, bd.basic.mu);
        out.verdict = !out.cases.empty();
        if (out.verdict) {
            out.evidence = "basic " + bd.basic.to_string() + " matches case(s)";
            for (const auto& c : out.cases) {
                out.evidence += " " + to_string(c.tag);
                if (c.swapped) out.evidence += "(swapped)";
            }
        } else {
            out.evidence = "basic " + bd.basic.to_string() + " matches no Stembridge case";
        }
    }
    if (brute_force_check) {
        bool brute = true;
        for (const auto& [nu, c] : lr_product(r.lambda, r.mu, r.box))
            if (c > 1) brute = false;
        if (brute != out.verdict)
            throw Error("classifier disagrees with brute force on " + r.to_string());
    }
    return out;
}

bool is_k_multiplicity_free(const RichardsonQuadruple& r, bool cross_check) {
    bool shape = (is_rectangle(r.lambda) && is_rectangle(r.mu)) || r.lambda.size() <= 1 ||
                 r.mu.size() <= 1;
    if (cross_check) {
        // Evaluate in a box large enough to show every term of the product.
        AmbientBox big{std::max(1, r.lambda.length() + r.mu.length()),
                       std::max(1, r.lambda.first() + r.mu.first())};
        bool brute = true;
        for (const auto& [nu, c] : buch_product(r.lambda, r.mu, big).coeffs)
            if (c > 1 || c < -1) brute = false;
        if (brute != shape)
            throw Error("K-multiplicity-freeness criterion disagrees with brute force on " +
                        r.to_string());
    }
    return shape;
}

} // namespace kgrass
