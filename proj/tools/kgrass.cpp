// kgrass: K-theoretic Littlewood-Richardson coefficients on a Grassmannian,
// content-poset Moebius values, sign-reversing matchings, and the
// verification campaign that confronts them with each other.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

#include "kgrass/json_io.hpp"

using namespace kgrass;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitEmptyProduct = 4;

struct ShapeArgs {
    std::string lambda_s, mu_s, box_s = "8x8";
    Partition lambda, mu;
    AmbientBox box;

    void add_to(CLI::App* cmd, bool box_required = false) {
        cmd->add_option("--lambda", lambda_s, "northeast partition, e.g. 2,2 or - for empty")
            ->required();
        cmd->add_option("--mu", mu_s, "southwest partition")->required();
        auto* b = cmd->add_option("--box", box_s, "ambient box RxC");
        if (box_required) b->required();
    }

    void parse() {
        lambda = parse_partition(lambda_s);
        mu = parse_partition(mu_s);
        box = parse_box(box_s);
    }

    // Large enough to show every term of the product.
    AmbientBox sufficient_box() const {
        return {std::max(1, lambda.length() + mu.length()),
                std::max(1, lambda.first() + mu.first())};
    }
};

int worker_count(int requested) {
    if (const char* env = std::getenv("KGRASS_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int cmd_expand(const ShapeArgs& args, bool cohomology) {
    if (!fits_in_box(args.lambda, args.box) || !fits_in_box(args.mu, args.box)) {
        std::cerr << "error: shapes exceed the ambient box\n";
        return kExitDomain;
    }
    json out = cohomology ? coeffs_to_json(lr_product(args.lambda, args.mu, args.box))
                          : to_json(buch_product(args.lambda, args.mu, args.box));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_poset(const ShapeArgs& args, const std::string& format, bool with_mobius) {
    if (!fits_in_box(args.lambda, args.box) || !fits_in_box(args.mu, args.box)) {
        std::cerr << "error: shapes exceed the ambient box\n";
        return kExitDomain;
    }
    ContentPoset p = ContentPoset::build(args.lambda, args.mu, args.box);
    MobiusAssignment m;
    if (with_mobius) m = mobius(p);
    if (format == "dot")
        std::cout << dot_export(p, with_mobius ? &m : nullptr);
    else
        std::cout << to_json(p, with_mobius ? &m : nullptr).dump(2) << "\n";
    return kExitOk;
}

int cmd_classify(const ShapeArgs& args) {
    RichardsonQuadruple r{args.lambda, args.mu, args.box};
    auto mf = is_multiplicity_free(r);
    json cases = json::array();
    for (const auto& c : mf.cases) {
        json e{{"case", to_string(c.tag)}};
        if (c.swapped) e["swapped"] = true;
        cases.push_back(e);
    }
    auto bd = basic_demolition(r);
    json out{{"lambda", to_json(args.lambda)},
             {"mu", to_json(args.mu)},
             {"box", to_json(args.box)},
             {"hMultiplicityFree", mf.verdict},
             {"kMultiplicityFree", is_k_multiplicity_free(r)},
             {"zeroProduct", mf.zero_product},
             {"stembridgeCases", cases},
             {"basic",
              json{{"lambda", to_json(bd.basic.lambda)},
                   {"mu", to_json(bd.basic.mu)},
                   {"box", to_json(bd.basic.box)}}},
             {"basicDemolition", to_json(bd.transcript)},
             {"evidence", mf.evidence}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_demolish(const ShapeArgs& args) {
    RichardsonQuadruple r{args.lambda, args.mu, args.box};
    auto bd = basic_demolition(r);
    json out = to_json(bd.transcript);
    out["zeroProduct"] = bd.zero_product;
    out["basic"] = json{{"lambda", to_json(bd.basic.lambda)},
                        {"mu", to_json(bd.basic.mu)},
                        {"box", to_json(bd.basic.box)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_oracle(const ShapeArgs& args) {
    GBasisExpansion tabl = buch_product(args.lambda, args.mu, args.box);
    int m = std::max(1, args.lambda.length() + args.mu.length());
    auto poly = to_g_basis(expand_g(args.lambda, m) * expand_g(args.mu, m));
    std::map<Partition, long long> boxed;
    for (const auto& [nu, c] : poly)
        if (fits_in_box(nu, args.box)) boxed[nu] = c;
    bool agree = boxed == tabl.coeffs;
    json out{{"tableauRule", to_json(tabl)},
             {"polynomialOracle", coeffs_to_json(boxed)},
             {"agree", agree}};
    std::cout << out.dump(2) << "\n";
    return agree ? kExitOk : kExitVerifyFailure;
}

struct CampaignSpec {
    int max_partition_size = 4;
    AmbientBox box_limits{4, 4};
    std::string case_filter; // optional Stembridge tag filter
    int parallelism = 0;
    std::string sabotage; // test hook: instance key whose matching is corrupted
};

struct Instance {
    Partition lambda, mu;
    AmbientBox box;
    std::string key() const {
        return lambda.to_string() + "x" + mu.to_string() + "@" + box.to_string();
    }
};

json run_instance(const Instance& inst, const CampaignSpec& spec, bool& failed) {
    json out{{"instance", inst.key()}};
    std::vector<std::string> failures;

    Matching m = build_matching(inst.lambda, inst.mu, inst.box);
    if (!spec.sabotage.empty() && spec.sabotage == inst.key() && !m.pairs.empty()) {
        m.fixed_points.push_back(m.pairs.back().first);
        m.fixed_points.push_back(m.pairs.back().second);
        m.pairs.pop_back();
    }
    auto all = enumerate_buch_tableaux(m.lambda, m.mu, m.box);
    VerifyReport rep = verify_matching(m, all);
    if (!rep.all_pass)
        for (const auto& c : rep.checks)
            if (!c.pass) failures.push_back("matching:" + c.name + " " + c.detail);

    MainTheoremReport mt = check_main_theorem(inst.lambda, inst.mu, inst.box);
    if (!mt.precondition_met) failures.push_back("mainthm: precondition unmet");
    if (!mt.all_pass) failures.push_back("mainthm: Moebius/Buch mismatch");

    // Polynomial oracle on the tractable subrange.
    int vars = inst.lambda.length() + inst.mu.length();
    if (inst.lambda.size() <= 4 && inst.mu.size() <= 4 && vars >= 1 && vars <= 8) {
        auto poly = to_g_basis(expand_g(inst.lambda, vars) * expand_g(inst.mu, vars));
        std::map<Partition, long long> boxed;
        for (const auto& [nu, c] : poly)
            if (fits_in_box(nu, inst.box)) boxed[nu] = c;
        if (boxed != buch_product(inst.lambda, inst.mu, inst.box).coeffs)
            failures.push_back("oracle: polynomial route disagrees");
        out["oracle"] = "checked";
    } else {
        out["oracle"] = "skipped (outside tractable range)";
    }

    out["pairs"] = m.pairs.size();
    out["tableaux"] = all.size();
    out["failures"] = failures;
    failed = !failures.empty();
    return out;
}

std::vector<Partition> partitions_in(int max_size, const AmbientBox& box) {
    std::vector<Partition> out{Partition{}};
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int max_part, int left) {
        for (int p = std::min(max_part, left); p >= 1; --p) {
            if (static_cast<int>(cur.size()) >= box.rows) break;
            cur.push_back(p);
            out.emplace_back(cur);
            rec(p, left - p);
            cur.pop_back();
        }
    };
    rec(std::min(max_size, box.cols), max_size);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int cmd_verify(const CampaignSpec& spec) {
    std::vector<Instance> instances;
    for (int k = 1; k <= spec.box_limits.rows; ++k) {
        for (int c = 1; c <= spec.box_limits.cols; ++c) {
            AmbientBox box{k, c};
            auto shapes = partitions_in(spec.max_partition_size, box);
            for (const auto& lam : shapes) {
                for (const auto& mu : shapes) {
                    RichardsonQuadruple r{lam, mu, box};
                    auto mf = is_multiplicity_free(r);
                    if (!mf.verdict || mf.zero_product) continue;
                    if (enumerate_buch_tableaux(lam, mu, box).empty()) continue;
                    if (!spec.case_filter.empty()) {
                        bool hit = false;
                        for (const auto& cm : mf.cases)
                            if (to_string(cm.tag) == spec.case_filter) hit = true;
                        if (!hit) continue;
                    }
                    instances.push_back({lam, mu, box});
                }
            }
        }
    }

    int workers = worker_count(spec.parallelism);
    std::vector<json> results(instances.size());
    std::vector<char> failed(instances.size(), 0);
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::vector<std::string> errors;
    auto body = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            try {
                bool f = false;
                results[i] = run_instance(instances[i], spec, f);
                failed[i] = f ? 1 : 0;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(err_mutex);
                errors.push_back(instances[i].key() + ": " + e.what());
                failed[i] = 1;
                results[i] = json{{"instance", instances[i].key()},
                                  {"failures", json::array({e.what()})}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();

    size_t nfailed = 0;
    json failures = json::array();
    for (size_t i = 0; i < instances.size(); ++i) {
        if (failed[i]) {
            nfailed++;
            failures.push_back(results[i]);
        }
    }
    json report{{"instances", instances.size()},
                {"workers", workers},
                {"failed", nfailed},
                {"failures", failures}};
    std::cout << report.dump(2) << "\n";
    for (const auto& e : errors) std::cerr << e << "\n";
    return nfailed == 0 ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-theoretic Littlewood-Richardson coefficients via set-valued tableaux"};
    app.require_subcommand(1);

    ShapeArgs expand_args, poset_args, classify_args, demolish_args, oracle_args;
    bool cohomology = false;
    auto* expand = app.add_subcommand("expand", "Buch expansion of G_lambda * G_mu in a box");
    expand_args.add_to(expand, true);
    expand->add_flag("--cohomology", cohomology, "restrict to the degree-preserving LR part");

    std::string format = "json";
    bool with_mobius = false;
    auto* poset = app.add_subcommand("poset", "content poset of the product");
    poset_args.add_to(poset, true);
    poset->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    poset->add_flag("--mobius", with_mobius, "annotate vertices with Moebius values");

    auto* classify = app.add_subcommand("classify", "multiplicity-freeness classifiers");
    classify_args.add_to(classify);

    auto* demolish = app.add_subcommand("demolish", "basic demolition transcript");
    demolish_args.add_to(demolish, true);

    auto* oracle = app.add_subcommand("oracle", "tableau rule vs polynomial arithmetic");
    oracle_args.add_to(oracle);

    CampaignSpec spec;
    auto* verify = app.add_subcommand("verify", "run the verification campaign");
    verify->add_option("--max-size", spec.max_partition_size, "maximum |lambda|, |mu|");
    std::string box_limits = "4x4";
    verify->add_option("--box", box_limits, "box limits RxC (all boxes up to this size)");
    verify->add_option("--workers", spec.parallelism, "worker count (0 = hardware)");
    verify->add_option("--case", spec.case_filter, "restrict to one Stembridge case tag");
    verify->add_option("--sabotage", spec.sabotage, "")->group(""); // test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) {
            expand_args.parse();
            return cmd_expand(expand_args, cohomology);
        }
        if (poset->parsed()) {
            poset_args.parse();
            return cmd_poset(poset_args, format, with_mobius);
        }
        if (classify->parsed()) {
            classify_args.parse();
            if (classify->count("--box") == 0) classify_args.box = classify_args.sufficient_box();
            return cmd_classify(classify_args);
        }
        if (demolish->parsed()) {
            demolish_args.parse();
            return cmd_demolish(demolish_args);
        }
        if (oracle->parsed()) {
            oracle_args.parse();
            if (oracle->count("--box") == 0) oracle_args.box = oracle_args.sufficient_box();
            return cmd_oracle(oracle_args);
        }
        if (verify->parsed()) {
            spec.box_limits = parse_box(box_limits);
            return cmd_verify(spec);
        }
    } catch (const EmptyProduct& e) {
        std::cerr << "error: empty product: " << e.what() << "\n";
        return kExitEmptyProduct;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
